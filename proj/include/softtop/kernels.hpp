#pragma once

#include <cstdint>
#include <vector>

#include "softtop/soft_set.hpp"

// Enumeration kernels over a compressed cell space of k <= 6 cells. A family
// of soft sets is a FamilyMask with bit s set when the set with compressed
// encoding s is a member. Each kernel has a serial reference and an OpenMP
// version that must return the same list.
namespace softtop::kernels {

using FamilyMask = std::uint64_t;

inline constexpr std::size_t kMaxKernelCells = 6;

inline constexpr FamilyMask member(unsigned set) { return FamilyMask{1} << set; }

// Smallest union- and intersection-closed family containing `family` and
// `extra`. `family` must already be closed.
FamilyMask close_with(FamilyMask family, unsigned extra);

// Closure of an arbitrary family (plus null and full sets) on k cells.
FamilyMask close_family(FamilyMask family, std::size_t cells);

// Every topology on k cells that contains `base` (a closed family holding the
// null and full sets), ascending by family mask.
std::vector<FamilyMask> enumerate_serial(std::size_t cells, FamilyMask base);
std::vector<FamilyMask> enumerate_parallel(std::size_t cells, FamilyMask base, int threads = 0);

// Spread compressed bits onto the set bits of `carrier` and back.
CellMask scatter(unsigned compressed, CellMask carrier);
unsigned gather(CellMask cells, CellMask carrier);

// Opens of a family, scattered onto `carrier`, ascending.
std::vector<CellMask> family_to_opens(FamilyMask family, CellMask carrier);
FamilyMask opens_to_family(const std::vector<CellMask>& opens, CellMask carrier);

// 0 keeps the OpenMP default.
int effective_threads(int requested);

}  // namespace softtop::kernels
