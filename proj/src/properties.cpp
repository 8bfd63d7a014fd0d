#include "softtop/properties.hpp"

#include <bit>

namespace softtop {

namespace {

std::vector<std::size_t> cells_in(CellMask m) {
  std::vector<std::size_t> out;
  for (; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

bool has_split(const SoftTopology& t) {
  for (auto g : t.opens()) {
    if (g == 0 || g == t.carrier()) continue;
    if (t.contains(t.carrier() & ~g)) return true;
  }
  return false;
}

}  // namespace

bool is_connected(const SoftTopology& t) { return !has_split(t); }

bool is_connected_subset_cells(const SoftTopology& t, CellMask y) {
  return is_connected(relative_topology(t, SoftSet(t.ground(), y)));
}

bool is_connected_subset(const SoftTopology& t, const SoftSet& y) {
  return is_connected(relative_topology(t, y));
}

bool compact_by_cover_search(const SoftTopology& t, CellMask y, std::size_t max_opens) {
  const auto& opens = t.opens();
  if (opens.size() > max_opens) {
    throw CapacityError("cover search over " + std::to_string(opens.size()) + " opens");
  }
  const auto y_cells = cells_in(y);
  const std::uint64_t families = std::uint64_t{1} << opens.size();
  for (std::uint64_t pick = 0; pick < families; ++pick) {
    CellMask covered = 0;
    for (std::uint64_t rest = pick; rest; rest &= rest - 1) covered |= opens[std::countr_zero(rest)];
    if ((y & ~covered) != 0) continue;
    // One member per cell of Y.
    std::uint64_t sub = 0;
    for (auto cell : y_cells) {
      for (std::uint64_t rest = pick; rest; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        if (opens[i] >> cell & 1) {
          sub |= std::uint64_t{1} << i;
          break;
        }
      }
    }
    CellMask sub_cover = 0;
    for (std::uint64_t rest = sub; rest; rest &= rest - 1) sub_cover |= opens[std::countr_zero(rest)];
    if ((y & ~sub_cover) != 0 || static_cast<std::size_t>(std::popcount(sub)) > y_cells.size()) {
      return false;
    }
  }
  return true;
}

// The ground is finite, so every open cover is itself a finite subcover.
// Agreement with compact_by_cover_search is checked by the unit tests.
bool is_compact_subset_cells(const SoftTopology& t, CellMask y) {
  if (y & ~t.carrier()) throw InputError("soft set is not inside the space");
  return true;
}

bool is_compact_subset(const SoftTopology& t, const SoftSet& y) {
  require_same_ground(t.ground(), y.ground());
  return is_compact_subset_cells(t, y.cells());
}

bool is_compact(const SoftTopology& t) { return is_compact_subset_cells(t, t.carrier()); }

std::string_view to_string(Separation level) {
  switch (level) {
    case Separation::t0:
      return "t0";
    case Separation::t1:
      return "t1";
    case Separation::t2:
      return "t2";
  }
  return "?";
}

bool separation_axiom(const SoftTopology& t, Separation level) {
  const auto cells = cells_in(t.carrier());
  switch (level) {
    case Separation::t0:
      for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
          bool told_apart = false;
          for (auto g : t.opens()) {
            if ((g >> cells[i] & 1) != (g >> cells[j] & 1)) {
              told_apart = true;
              break;
            }
          }
          if (!told_apart) return false;
        }
      }
      return true;
    case Separation::t1:
      for (auto c : cells) {
        if (!t.contains(t.carrier() & ~(CellMask{1} << c))) return false;
      }
      return true;
    case Separation::t2:
      for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
          bool separated = false;
          for (auto g : t.opens()) {
            if (!(g >> cells[i] & 1) || (g >> cells[j] & 1)) continue;
            for (auto h : t.opens()) {
              if ((h >> cells[j] & 1) && (g & h) == 0) {
                separated = true;
                break;
              }
            }
            if (separated) break;
          }
          if (!separated) return false;
        }
      }
      return true;
  }
  return false;
}

bool t1_by_point_separation(const SoftTopology& t) {
  const auto cells = cells_in(t.carrier());
  for (auto u : cells) {
    for (auto v : cells) {
      if (u == v) continue;
      bool found = false;
      for (auto g : t.opens()) {
        if ((g >> u & 1) && !(g >> v & 1)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_submaximal(const SoftTopology& t) {
  if (std::popcount(t.carrier()) > 24) throw CapacityError("too many cells for dense-set search");
  for (auto y : subsets_of(t.carrier())) {
    if (is_dense_cells(t, y) && !t.contains(y)) return false;
  }
  return true;
}

bool is_stable_space(const SoftTopology& t) {
  for (auto g : t.opens()) {
    if (!is_stable_mask(*t.ground(), g)) return false;
  }
  return true;
}

bool map_property(const SoftFunction& f, const SoftTopology& src, const SoftTopology& dst,
                  MapProperty which) {
  require_same_ground(f.src(), src.ground());
  require_same_ground(f.dst(), dst.ground());
  if (!src.is_whole_ground() || !dst.is_whole_ground()) {
    throw InputError("map properties need topologies on whole grounds");
  }
  auto continuous = [&] {
    for (auto h : dst.opens()) {
      if (!src.contains(f.preimage_cells(h))) return false;
    }
    return true;
  };
  auto open = [&] {
    for (auto g : src.opens()) {
      if (!dst.contains(f.image_cells(g))) return false;
    }
    return true;
  };
  switch (which) {
    case MapProperty::continuous:
      return continuous();
    case MapProperty::open:
      return open();
    case MapProperty::homeomorphism:
      return f.is_bijective() && continuous() && open();
  }
  return false;
}

}  // namespace softtop
