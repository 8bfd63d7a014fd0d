#include "softtop/topology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace softtop {

namespace {

std::vector<CellMask> canonical(std::vector<CellMask> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

bool sorted_contains(const std::vector<CellMask>& sorted, CellMask cells) {
  return std::binary_search(sorted.begin(), sorted.end(), cells);
}

std::vector<CellMask> cells_of(const GroundPtr& ground, std::span<const SoftSet> family) {
  std::vector<CellMask> out;
  out.reserve(family.size());
  for (const auto& s : family) {
    require_same_ground(ground, s.ground());
    out.push_back(s.cells());
  }
  return out;
}

void require_inside(const SoftTopology& t, CellMask y) {
  if (y & ~t.carrier()) throw InputError("soft set is not inside the space");
}

void require_compatible(const SoftTopology& a, const SoftTopology& b) {
  require_same_ground(a.ground(), b.ground());
  if (a.carrier() != b.carrier()) throw InputError("topologies live on different carriers");
}

std::string describe(const Ground& g, const std::vector<CellMask>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ", ";
    out += format_cells(g, sets[i]);
  }
  return out;
}

}  // namespace

std::strong_ordering operator<=>(const SoftTopology& a, const SoftTopology& b) {
  if (auto c = a.opens_.size() <=> b.opens_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.opens_.begin(), a.opens_.end(),
                                                b.opens_.begin(), b.opens_.end());
}

SoftTopology SoftTopology::indiscrete(const GroundPtr& ground) {
  return indiscrete(ground, ground->full_mask());
}

SoftTopology SoftTopology::indiscrete(const GroundPtr& ground, CellMask carrier) {
  return from_canonical(ground, carrier, canonical({0, carrier}));
}

SoftTopology SoftTopology::discrete(const GroundPtr& ground) {
  return discrete(ground, ground->full_mask());
}

SoftTopology SoftTopology::discrete(const GroundPtr& ground, CellMask carrier) {
  if (std::popcount(carrier) > 24) throw CapacityError("discrete topology too large to list");
  return from_canonical(ground, carrier, subsets_of(carrier));
}

SoftTopology SoftTopology::from_canonical(GroundPtr ground, CellMask carrier,
                                          std::vector<CellMask> opens) {
  if (carrier & ~ground->full_mask()) throw InputError("carrier outside the ground");
  return SoftTopology(std::move(ground), carrier, std::move(opens));
}

bool SoftTopology::contains(CellMask cells) const { return sorted_contains(opens_, cells); }

bool SoftTopology::is_open(const SoftSet& set) const {
  require_same_ground(ground_, set.ground());
  return contains(set.cells());
}

bool SoftTopology::is_closed(const SoftSet& set) const {
  require_same_ground(ground_, set.ground());
  if (set.cells() & ~carrier_) return false;
  return contains(carrier_ & ~set.cells());
}

std::vector<SoftSet> SoftTopology::open_sets() const {
  std::vector<SoftSet> out;
  out.reserve(opens_.size());
  for (auto g : opens_) out.emplace_back(ground_, g);
  return out;
}

std::vector<CellMask> SoftTopology::closed_cells() const {
  std::vector<CellMask> out;
  out.reserve(opens_.size());
  for (auto g : opens_) out.push_back(carrier_ & ~g);
  std::sort(out.begin(), out.end());
  return out;
}

bool SoftTopology::is_subfamily_of(const SoftTopology& other) const {
  return std::includes(other.opens_.begin(), other.opens_.end(), opens_.begin(), opens_.end());
}

std::optional<AxiomViolation> find_axiom_violation(std::span<const CellMask> family,
                                                   CellMask carrier) {
  std::vector<CellMask> sets = canonical({family.begin(), family.end()});
  for (auto s : sets) {
    if (s & ~carrier) return AxiomViolation{"subset", {s}};
  }
  if (!sorted_contains(sets, 0)) return AxiomViolation{"i", {0}};
  if (!sorted_contains(sets, carrier)) return AxiomViolation{"i", {carrier}};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!sorted_contains(sets, sets[i] & sets[j])) {
        return AxiomViolation{"ii", {sets[i], sets[j]}};
      }
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!sorted_contains(sets, sets[i] | sets[j])) {
        return AxiomViolation{"iii", {sets[i], sets[j]}};
      }
    }
  }
  return std::nullopt;
}

SoftTopology validate_topology(std::span<const SoftSet> family) {
  if (family.empty()) {
    throw TopologyError("axiom (i) violated: the family is empty", AxiomViolation{"i", {}});
  }
  const GroundPtr& ground = family.front().ground();
  return validate_topology(ground, ground->full_mask(), family);
}

SoftTopology validate_topology(const GroundPtr& ground, CellMask carrier,
                               std::span<const SoftSet> family) {
  std::vector<CellMask> cells = cells_of(ground, family);
  if (auto v = find_axiom_violation(cells, carrier)) {
    std::string what;
    if (v->axiom == "subset") {
      what = "member outside the carrier: ";
    } else if (v->axiom == "i") {
      what = "axiom (i) violated, missing ";
    } else if (v->axiom == "ii") {
      what = "axiom (ii) violated, intersection not open for ";
    } else {
      what = "axiom (iii) violated, union not open for ";
    }
    throw TopologyError(what + describe(*ground, v->witness), *v);
  }
  return SoftTopology::from_canonical(ground, carrier, canonical(std::move(cells)));
}

std::vector<CellMask> generate_cells(std::span<const CellMask> collection, CellMask carrier,
                                     GenerateStrategy strategy) {
  for (auto s : collection) {
    if (s & ~carrier) throw InputError("generating set is not inside the carrier");
  }
  std::vector<CellMask> members{0, carrier};
  members.insert(members.end(), collection.begin(), collection.end());
  members = canonical(std::move(members));

  if (strategy == GenerateStrategy::fixpoint) {
    // Each pass adds all pairwise intersections, then all pairwise unions;
    // stop when a full round adds nothing.
    std::unordered_set<CellMask> seen(members.begin(), members.end());
    for (bool changed = true; changed;) {
      changed = false;
      for (int op = 0; op < 2; ++op) {
        const std::size_t n = members.size();
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            CellMask c = op == 0 ? (members[i] & members[j]) : (members[i] | members[j]);
            if (seen.insert(c).second) {
              members.push_back(c);
              changed = true;
            }
          }
        }
      }
    }
    return canonical(std::move(members));
  }

  // Finite intersections of the generators form a base.
  std::unordered_set<CellMask> base_seen(members.begin(), members.end());
  std::vector<CellMask> base = members;
  for (std::size_t k = 0; k < base.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      CellMask c = base[k] & base[j];
      if (base_seen.insert(c).second) base.push_back(c);
    }
  }
  std::unordered_set<CellMask> seen(base.begin(), base.end());
  std::vector<CellMask> opens = base;
  for (std::size_t k = 0; k < opens.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      CellMask c = opens[k] | opens[j];
      if (seen.insert(c).second) opens.push_back(c);
    }
  }
  return canonical(std::move(opens));
}

SoftTopology generate(const GroundPtr& ground, std::span<const SoftSet> collection,
                      GenerateStrategy strategy) {
  return generate(ground, ground->full_mask(), collection, strategy);
}

SoftTopology generate(const GroundPtr& ground, CellMask carrier,
                      std::span<const SoftSet> collection, GenerateStrategy strategy) {
  auto cells = cells_of(ground, collection);
  return SoftTopology::from_canonical(ground, carrier, generate_cells(cells, carrier, strategy));
}

SoftTopology meet(const SoftTopology& a, const SoftTopology& b) {
  require_compatible(a, b);
  std::vector<CellMask> common;
  std::set_intersection(a.opens().begin(), a.opens().end(), b.opens().begin(), b.opens().end(),
                        std::back_inserter(common));
  return SoftTopology::from_canonical(a.ground(), a.carrier(), std::move(common));
}

SoftTopology join_by_union(const SoftTopology& a, const SoftTopology& b) {
  require_compatible(a, b);
  std::vector<CellMask> both = a.opens();
  both.insert(both.end(), b.opens().begin(), b.opens().end());
  return SoftTopology::from_canonical(a.ground(), a.carrier(), generate_cells(both, a.carrier()));
}

SoftTopology join_by_intersections(const SoftTopology& a, const SoftTopology& b) {
  require_compatible(a, b);
  std::vector<CellMask> pairwise;
  pairwise.reserve(a.size() * b.size());
  for (auto g1 : a.opens()) {
    for (auto g2 : b.opens()) pairwise.push_back(g1 & g2);
  }
  return SoftTopology::from_canonical(a.ground(), a.carrier(),
                                      generate_cells(canonical(std::move(pairwise)), a.carrier()));
}

SoftTopology join(const SoftTopology& a, const SoftTopology& b) {
  SoftTopology by_union = join_by_union(a, b);
  SoftTopology by_pairs = join_by_intersections(a, b);
  if (by_union != by_pairs) {
    throw ConsistencyError("join routes disagree",
                           describe(*a.ground(), a.opens()) + " | " +
                               describe(*b.ground(), b.opens()));
  }
  return by_union;
}

SoftTopology meet_all(std::span<const SoftTopology> family) {
  if (family.empty()) throw InputError("meet of an empty family needs a ground");
  SoftTopology acc = family.front();
  for (const auto& t : family.subspan(1)) acc = meet(acc, t);
  return acc;
}

SoftTopology join_all(std::span<const SoftTopology> family) {
  if (family.empty()) throw InputError("join of an empty family needs a ground");
  std::vector<CellMask> all;
  for (const auto& t : family) {
    require_compatible(family.front(), t);
    all.insert(all.end(), t.opens().begin(), t.opens().end());
  }
  const auto& first = family.front();
  return SoftTopology::from_canonical(first.ground(), first.carrier(),
                                      generate_cells(canonical(std::move(all)), first.carrier()));
}

SoftTopology relative_topology(const SoftTopology& t, const SoftSet& y) {
  require_same_ground(t.ground(), y.ground());
  if (y.is_null()) throw InputError("relative topology over the null soft set");
  require_inside(t, y.cells());
  std::vector<CellMask> opens;
  opens.reserve(t.size());
  for (auto g : t.opens()) opens.push_back(g & y.cells());
  return SoftTopology::from_canonical(t.ground(), y.cells(), canonical(std::move(opens)));
}

CellMask interior_cells(const SoftTopology& t, CellMask y) {
  CellMask acc = 0;
  for (auto g : t.opens()) {
    if ((g & ~y) == 0) acc |= g;
  }
  return acc;
}

CellMask closure_cells(const SoftTopology& t, CellMask y) {
  CellMask acc = t.carrier();
  for (auto g : t.opens()) {
    CellMask closed = t.carrier() & ~g;
    if ((y & ~closed) == 0) acc &= closed;
  }
  return acc;
}

SoftSet interior(const SoftTopology& t, const SoftSet& y) {
  require_same_ground(t.ground(), y.ground());
  require_inside(t, y.cells());
  return SoftSet(t.ground(), interior_cells(t, y.cells()));
}

SoftSet closure(const SoftTopology& t, const SoftSet& y) {
  require_same_ground(t.ground(), y.ground());
  require_inside(t, y.cells());
  return SoftSet(t.ground(), closure_cells(t, y.cells()));
}

bool is_dense_cells(const SoftTopology& t, CellMask y) { return closure_cells(t, y) == t.carrier(); }

bool is_dense(const SoftTopology& t, const SoftSet& y) {
  return closure(t, y).cells() == t.carrier();
}

SoftTopology s_extension_cells(const SoftTopology& t, CellMask y) {
  require_inside(t, y);
  if (t.contains(y)) throw InputError("not a proper extension: the set is already open");
  std::vector<CellMask> family = t.opens();
  family.push_back(y);
  return SoftTopology::from_canonical(t.ground(), t.carrier(),
                                      generate_cells(canonical(std::move(family)), t.carrier()));
}

SoftTopology s_extension(const SoftTopology& t, const SoftSet& y) {
  require_same_ground(t.ground(), y.ground());
  return s_extension_cells(t, y.cells());
}

bool is_base(const SoftTopology& t, std::span<const SoftSet> base) {
  for (const auto& b : base) {
    if (!t.is_open(b)) throw InputError("base member " + format_soft_set(b) + " is not open");
  }
  for (auto g : t.opens()) {
    CellMask acc = 0;
    for (const auto& b : base) {
      if ((b.cells() & ~g) == 0) acc |= b.cells();
    }
    if (acc != g) return false;
  }
  return true;
}

std::vector<CellMask> subsets_of(CellMask carrier) {
  std::vector<CellMask> out;
  out.reserve(std::size_t{1} << std::popcount(carrier));
  CellMask s = 0;
  do {
    out.push_back(s);
    s = (s - carrier) & carrier;
  } while (s != 0);
  return out;
}

}  // namespace softtop
