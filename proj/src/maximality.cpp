#include "softtop/maximality.hpp"

#include <bit>

#include "softtop/io.hpp"
#include "softtop/properties.hpp"

namespace softtop {

std::string_view to_string(Property p) {
  return p == Property::compact ? "compact" : "connected";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::brute:
      return "brute";
    case Method::extension:
      return "extension";
    case Method::characterization:
      return "characterization";
    case Method::all:
      return "all";
  }
  return "?";
}

bool has_property(const SoftTopology& t, Property p) {
  return p == Property::compact ? is_compact(t) : is_connected(t);
}

std::vector<SoftTopology> finer_topologies(const SoftTopology& t, const EnumerateOptions& options) {
  auto all = enumerate_refinements(t, options);
  std::erase(all, t);
  return all;
}

bool maximal_by_brute(const SoftTopology& t, Property p, const EnumerateOptions& options) {
  if (!has_property(t, p)) return false;
  for (const auto& finer : finer_topologies(t, options)) {
    if (has_property(finer, p)) return false;
  }
  return true;
}

// Sound because both properties pass down to coarser topologies: a finer
// topology with the property contains some non-open Y, and then so does the
// coarser t[Y].
bool maximal_by_extension(const SoftTopology& t, Property p) {
  if (!has_property(t, p)) return false;
  if (std::popcount(t.carrier()) > 24) throw CapacityError("too many cells for extension search");
  for (auto y : subsets_of(t.carrier())) {
    if (t.contains(y)) continue;
    if (has_property(s_extension_cells(t, y), p)) return false;
  }
  return true;
}

bool maximal_by_characterization(const SoftTopology& t) {
  if (!is_compact(t)) return false;
  if (std::popcount(t.carrier()) > 24) throw CapacityError("too many cells for subset search");
  for (auto y : subsets_of(t.carrier())) {
    const bool closed = t.contains(t.carrier() & ~y);
    if (closed != is_compact_subset_cells(t, y)) return false;
  }
  return true;
}

bool is_maximal(const SoftTopology& t, Property p, Method method,
                const EnumerateOptions& options) {
  if (!has_property(t, p)) {
    throw InputError("topology is not " + std::string(to_string(p)) +
                     ", so maximality is undefined");
  }
  if (method == Method::characterization && p != Property::compact) {
    throw InputError("the characterization route only decides compactness");
  }
  switch (method) {
    case Method::brute:
      return maximal_by_brute(t, p, options);
    case Method::extension:
      return maximal_by_extension(t, p);
    case Method::characterization:
      return maximal_by_characterization(t);
    case Method::all:
      break;
  }
  const bool brute = maximal_by_brute(t, p, options);
  const bool extension = maximal_by_extension(t, p);
  bool agree = brute == extension;
  if (p == Property::compact) agree = agree && brute == maximal_by_characterization(t);
  if (!agree) {
    throw ConsistencyError("maximality methods disagree for " + std::string(to_string(p)),
                           format_topology_inline(t));
  }
  return brute;
}

}  // namespace softtop
