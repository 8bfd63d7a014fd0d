#include <algorithm>
#include <bit>

#include "softtop/error.hpp"
#include "softtop/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace softtop::kernels {

FamilyMask close_with(FamilyMask family, unsigned extra) {
  if (family & member(extra)) return family;
  unsigned queue[64];
  int head = 0;
  int tail = 0;
  queue[tail++] = extra;
  family |= member(extra);
  while (head < tail) {
    unsigned x = queue[head++];
    for (FamilyMask rest = family; rest; rest &= rest - 1) {
      auto m = static_cast<unsigned>(std::countr_zero(rest));
      for (unsigned c : {x & m, x | m}) {
        if (!(family & member(c))) {
          family |= member(c);
          queue[tail++] = c;
        }
      }
    }
  }
  return family;
}

FamilyMask close_family(FamilyMask family, std::size_t cells) {
  const auto full = static_cast<unsigned>((1u << cells) - 1);
  FamilyMask closed = member(0) | member(full);
  for (FamilyMask rest = family; rest; rest &= rest - 1) {
    closed = close_with(closed, static_cast<unsigned>(std::countr_zero(rest)));
  }
  return closed;
}

CellMask scatter(unsigned compressed, CellMask carrier) {
  CellMask out = 0;
  for (CellMask rest = carrier; rest && compressed; rest &= rest - 1, compressed >>= 1) {
    if (compressed & 1) out |= rest & (~rest + 1);
  }
  return out;
}

unsigned gather(CellMask cells, CellMask carrier) {
  unsigned out = 0;
  unsigned bit = 0;
  for (CellMask rest = carrier; rest; rest &= rest - 1, ++bit) {
    if (cells & rest & (~rest + 1)) out |= 1u << bit;
  }
  return out;
}

std::vector<CellMask> family_to_opens(FamilyMask family, CellMask carrier) {
  std::vector<CellMask> out;
  out.reserve(static_cast<std::size_t>(std::popcount(family)));
  for (FamilyMask rest = family; rest; rest &= rest - 1) {
    out.push_back(scatter(static_cast<unsigned>(std::countr_zero(rest)), carrier));
  }
  return out;
}

FamilyMask opens_to_family(const std::vector<CellMask>& opens, CellMask carrier) {
  if (static_cast<std::size_t>(std::popcount(carrier)) > kMaxKernelCells) {
    throw CapacityError("family masks cover at most 6 cells");
  }
  FamilyMask out = 0;
  for (auto g : opens) out |= member(gather(g, carrier));
  return out;
}

int effective_threads(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace softtop::kernels
