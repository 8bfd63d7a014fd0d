#pragma once

#include <vector>

#include "softtop/kernels.hpp"

namespace softtop::kernels::detail {

struct SearchNode {
  FamilyMask family;
  FamilyMask excluded;
  unsigned next;
};

void expand(std::size_t cells, const SearchNode& node, std::vector<FamilyMask>& out);

}  // namespace softtop::kernels::detail
