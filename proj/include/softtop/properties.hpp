#pragma once

#include <string_view>

#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace softtop {

// No two disjoint non-null opens cover the carrier.
bool is_connected(const SoftTopology& t);
// The relative topology on Y is connected. Y must be non-null.
bool is_connected_subset(const SoftTopology& t, const SoftSet& y);
bool is_connected_subset_cells(const SoftTopology& t, CellMask y);

// Every cover of Y by opens of t has a finite subcover. Decided by the
// exhaustive search below; on a finite ground that search always succeeds.
bool is_compact_subset(const SoftTopology& t, const SoftSet& y);
bool is_compact_subset_cells(const SoftTopology& t, CellMask y);
bool is_compact(const SoftTopology& t);

// Reference search: walks every subfamily of opens that covers Y and
// extracts a subcover with at most one member per cell of Y. Returns false
// only if some cover admits no such subcover. Exponential in the number of
// opens; refuses families with more than `max_opens` members.
bool compact_by_cover_search(const SoftTopology& t, CellMask y, std::size_t max_opens = 20);

enum class Separation { t0, t1, t2 };

std::string_view to_string(Separation level);

// T0: distinct soft points are told apart by some open.
// T1: every singleton soft point set is closed.
// T2: distinct soft points have disjoint open neighbourhoods.
bool separation_axiom(const SoftTopology& t, Separation level);

// T1 in point-separation form: for distinct points u, v there is an open
// containing u but not v. Kept alongside the singleton-closed form so the two
// can be compared.
bool t1_by_point_separation(const SoftTopology& t);

// Every dense soft set is open.
bool is_submaximal(const SoftTopology& t);

// Every open has the same component under every parameter.
bool is_stable_space(const SoftTopology& t);

enum class MapProperty { continuous, open, homeomorphism };

bool map_property(const SoftFunction& f, const SoftTopology& src, const SoftTopology& dst,
                  MapProperty which);

}  // namespace softtop
