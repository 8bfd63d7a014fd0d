#include <algorithm>

#include "enumerate_state.hpp"
#include "softtop/kernels.hpp"

namespace softtop::kernels {

namespace detail {

void expand(std::size_t cells, const SearchNode& node, std::vector<FamilyMask>& out) {
  const unsigned full = (1u << cells) - 1;
  unsigned next = node.next;
  while (next < full && (node.family & member(next))) ++next;
  if (next >= full) {
    out.push_back(node.family);
    return;
  }
  expand(cells, SearchNode{node.family, node.excluded | member(next), next + 1}, out);
  FamilyMask grown = close_with(node.family, next);
  if ((grown & node.excluded) == 0) expand(cells, SearchNode{grown, node.excluded, next + 1}, out);
}

}  // namespace detail

// Depth-first over the sets in ascending order, deciding for each non-member
// whether it is excluded or added (with closure). A branch dies as soon as
// the closure swallows an excluded set, so every leaf is a distinct topology.
std::vector<FamilyMask> enumerate_serial(std::size_t cells, FamilyMask base) {
  std::vector<FamilyMask> out;
  detail::expand(cells, detail::SearchNode{base, 0, 1}, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace softtop::kernels
