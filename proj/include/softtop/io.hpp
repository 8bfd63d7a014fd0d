#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace softtop {

// Text form of a family of soft sets:
//
//   ground Z=a,b E=e1,e2
//   carrier {e1:{a}; e2:{a,b}}     (optional; defaults to the whole grid)
//   {e1:{}; e2:{}}
//   {e1:{a}; e2:{b}}
//   ...
//
// Blank lines and lines starting with '#' are skipped.
struct FamilyFile {
  GroundPtr ground;
  CellMask carrier = 0;
  std::vector<SoftSet> sets;
};

GroundPtr parse_ground_header(std::string_view line, int line_number = 1);

FamilyFile parse_family_file(std::string_view text);
FamilyFile load_family_file(const std::string& path);

// Parses and validates; axiom violations surface as TopologyError.
SoftTopology load_topology_file(const std::string& path);
SoftTopology parse_topology_text(std::string_view text);

std::string format_topology(const SoftTopology& t);

// `[{e1:{}}, {e1:{a}}, ...]` on one line.
std::string format_topology_inline(const SoftTopology& t);
std::vector<SoftSet> parse_family_inline(std::string_view text, const GroundPtr& ground,
                                         int line = 1);

// Splits on `sep` outside braces and brackets.
std::vector<std::string_view> split_top_level(std::string_view text, char sep);

}  // namespace softtop
