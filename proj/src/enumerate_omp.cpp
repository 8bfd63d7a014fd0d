#include <algorithm>
#include <deque>

#include "enumerate_state.hpp"
#include "softtop/kernels.hpp"

namespace softtop::kernels {

namespace {

constexpr std::size_t kFrontierTarget = 256;

// Breadth-first split of the search tree into independent subtrees. The
// split depends only on `cells` and `base`, never on the thread count.
std::vector<detail::SearchNode> split(std::size_t cells, FamilyMask base,
                                      std::vector<FamilyMask>& finished) {
  const unsigned full = (1u << cells) - 1;
  std::deque<detail::SearchNode> open{detail::SearchNode{base, 0, 1}};
  std::vector<detail::SearchNode> frontier;
  while (!open.empty() && open.size() + frontier.size() < kFrontierTarget) {
    detail::SearchNode node = open.front();
    open.pop_front();
    while (node.next < full && (node.family & member(node.next))) ++node.next;
    if (node.next >= full) {
      finished.push_back(node.family);
      continue;
    }
    open.push_back({node.family, node.excluded | member(node.next), node.next + 1});
    FamilyMask grown = close_with(node.family, node.next);
    if ((grown & node.excluded) == 0) open.push_back({grown, node.excluded, node.next + 1});
  }
  frontier.insert(frontier.end(), open.begin(), open.end());
  return frontier;
}

}  // namespace

std::vector<FamilyMask> enumerate_parallel(std::size_t cells, FamilyMask base, int threads) {
  std::vector<FamilyMask> out;
  const auto frontier = split(cells, base, out);
  std::vector<std::vector<FamilyMask>> parts(frontier.size());
  const auto n = static_cast<long>(frontier.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(effective_threads(threads))
  for (long i = 0; i < n; ++i) {
    detail::expand(cells, frontier[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(i)]);
  }

  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace softtop::kernels
