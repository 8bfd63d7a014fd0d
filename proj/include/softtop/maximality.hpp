#pragma once

#include <string_view>
#include <vector>

#include "softtop/lattice.hpp"
#include "softtop/topology.hpp"

namespace softtop {

enum class Property { compact, connected };
enum class Method { brute, extension, characterization, all };

std::string_view to_string(Property p);
std::string_view to_string(Method m);

bool has_property(const SoftTopology& t, Property p);

// Strictly finer topologies on the same carrier, canonical order.
std::vector<SoftTopology> finer_topologies(const SoftTopology& t,
                                           const EnumerateOptions& options = {});

// Single-route deciders. Each returns false when t lacks the property.
//   brute:            no strictly finer topology has the property.
//   extension:        no s-extension by a non-open set has the property.
//   characterization: (compact only) closed sets == compact subsets.
bool maximal_by_brute(const SoftTopology& t, Property p, const EnumerateOptions& options = {});
bool maximal_by_extension(const SoftTopology& t, Property p);
bool maximal_by_characterization(const SoftTopology& t);

// Requires t to have the property (InputError otherwise). Method::all runs
// every route that applies and throws ConsistencyError, carrying t, if any
// two disagree. The characterization route only applies to compactness.
bool is_maximal(const SoftTopology& t, Property p, Method method = Method::all,
                const EnumerateOptions& options = {});

}  // namespace softtop
