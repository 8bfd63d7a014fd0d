#pragma once

// Deliberately naive reference implementations used only by the tests. None
// of them calls into the library code they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

// A family over k cells: bit s set when the subset with encoding s belongs.
using Family = std::uint64_t;

inline bool in(Family f, Mask s) { return (f >> s) & 1U; }

// Pairwise union and intersection closed, contains null and full.
inline bool is_topology(Family f, unsigned cells) {
  const Mask full = (Mask{1} << cells) - 1;
  if (!in(f, 0) || !in(f, full)) return false;
  for (Mask a = 0; a <= full; ++a) {
    if (!in(f, a)) continue;
    for (Mask b = a; b <= full; ++b) {
      if (!in(f, b)) continue;
      if (!in(f, a | b) || !in(f, a & b)) return false;
    }
  }
  return true;
}

// Every family containing null and full sets, filtered by the axioms.
inline std::vector<Family> naive_topologies(unsigned cells) {
  const Mask full = (Mask{1} << cells) - 1;
  const unsigned free_sets = (1U << cells) - 2;  // everything except null and full
  std::vector<Family> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free_sets); ++pick) {
    Family f = 1 | (Family{1} << full);
    for (unsigned i = 0; i < free_sets; ++i) {
      if ((pick >> i) & 1U) f |= Family{1} << (i + 1);
    }
    if (cells == 0 || is_topology(f, cells)) out.push_back(f);
  }
  return out;
}

inline std::vector<Mask> members(Family f, unsigned cells) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << cells); ++s) {
    if (in(f, s)) out.push_back(s);
  }
  return out;
}

// Smallest topology containing `sets`: intersection of every topology that
// contains them.
inline Family naive_generate(const std::vector<Family>& all, Family sets) {
  Family out = ~Family{0};
  for (auto f : all) {
    if ((f & sets) == sets) out &= f;
  }
  return out;
}

inline Mask naive_interior(Family f, unsigned cells, Mask y) {
  Mask out = 0;
  for (auto g : members(f, cells)) {
    if ((g & ~y) == 0) out |= g;
  }
  return out;
}

inline Mask naive_closure(Family f, unsigned cells, Mask y) {
  const Mask full = (Mask{1} << cells) - 1;
  Mask out = full;
  for (auto g : members(f, cells)) {
    const Mask closed = full & ~g;
    if ((y & ~closed) == 0) out &= closed;
  }
  return out;
}

inline bool naive_connected(Family f, unsigned cells) {
  const Mask full = (Mask{1} << cells) - 1;
  for (auto g : members(f, cells)) {
    if (g != 0 && g != full && in(f, full & ~g)) return false;
  }
  return true;
}

// Covering pairs of strict inclusion by definition: i below j with nothing
// strictly between.
inline std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    const std::vector<Family>& nodes) {
  auto below = [](Family a, Family b) { return a != b && (a & b) == a; };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (!below(nodes[i], nodes[j])) continue;
      bool covered = true;
      for (std::size_t k = 0; k < nodes.size() && covered; ++k) {
        if (below(nodes[i], nodes[k]) && below(nodes[k], nodes[j])) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- finite truncations of the symbolic families ---------------------------
//
// Per parameter the naturals 0..n-1 are kept as cells and the rest
// {n, n+1, ...} is one extra tail cell. A symbolic set with every listed
// number below n is exactly a union of these cells, and the three families
// are invariant under permutations of each tail, so open, closed and dense
// are decided exactly on the finite model. Compactness is not (every finite
// space is compact); it is decided with a fresh tail point, see
// `tail_compact`.

enum class Kind { fort, particular_point, excluded_point };

struct Model {
  unsigned n;       // explicit naturals per parameter
  unsigned params;  // |E|
  unsigned anchor_elem;
  unsigned anchor_param;

  unsigned width() const { return n + 1; }
  unsigned cells() const { return width() * params; }
  Mask full() const { return (Mask{1} << cells()) - 1; }
  unsigned cell(unsigned param, unsigned i) const { return param * width() + i; }
  unsigned tail(unsigned param) const { return cell(param, n); }
  Mask anchor_bit() const { return Mask{1} << cell(anchor_param, anchor_elem); }
  Mask tails() const {
    Mask out = 0;
    for (unsigned e = 0; e < params; ++e) out |= Mask{1} << tail(e);
    return out;
  }
};

// Membership read off the definitions of the three families.
inline bool model_open(Kind kind, const Model& m, Mask y) {
  const bool anchored = (y & m.anchor_bit()) != 0;
  switch (kind) {
    case Kind::fort: {
      // Sets avoiding the anchor, and anchor sets whose complement is finite
      // in every component (no tail cell in the complement).
      const Mask rest = m.full() & ~y;
      return !anchored || (rest & m.tails()) == 0;
    }
    case Kind::particular_point: return y == 0 || anchored;
    case Kind::excluded_point: return y == m.full() || !anchored;
  }
  return false;
}

inline std::vector<Mask> model_opens(Kind kind, const Model& m) {
  std::vector<Mask> out;
  for (Mask y = 0; y <= m.full(); ++y) {
    if (model_open(kind, m, y)) out.push_back(y);
  }
  return out;
}

inline bool model_is_topology(Kind kind, const Model& m) {
  auto opens = model_opens(kind, m);
  std::set<Mask> s(opens.begin(), opens.end());
  if (!s.count(0) || !s.count(m.full())) return false;
  for (auto a : opens) {
    for (auto b : opens) {
      if (!s.count(a | b) || !s.count(a & b)) return false;
    }
  }
  return true;
}

inline bool model_closed(Kind kind, const Model& m, Mask y) {
  return model_open(kind, m, m.full() & ~y);
}

inline bool model_dense(Kind kind, const Model& m, Mask y) {
  Mask closure = m.full();
  for (auto g : model_opens(kind, m)) {
    const Mask closed = m.full() & ~g;
    if ((y & ~closed) == 0) closure &= closed;
  }
  return closure == m.full();
}

// Y is non-compact iff for some parameter e whose tail lies in Y, one tail
// point can be put in an open that misses the rest of the tail, and every
// other cell of Y has an open missing the rest of that tail. Then each member
// of the resulting cover holds finitely many tail points of e. Otherwise some
// chosen member swallows a cofinite part of each tail and finitely many more
// members finish the cover. The test is run in the model with one more
// explicit natural, where the fresh cell n stands for a generic tail point.
inline bool tail_compact(Kind kind, const Model& m, Mask y) {
  const Model big{m.n + 1, m.params, m.anchor_elem, m.anchor_param};
  Mask lifted = 0;
  for (unsigned e = 0; e < m.params; ++e) {
    for (unsigned i = 0; i < m.n; ++i) {
      if ((y >> m.cell(e, i)) & 1U) lifted |= Mask{1} << big.cell(e, i);
    }
    if ((y >> m.tail(e)) & 1U) {
      lifted |= Mask{1} << big.cell(e, m.n);
      lifted |= Mask{1} << big.tail(e);
    }
  }
  const auto opens = model_opens(kind, big);
  for (unsigned e = 0; e < m.params; ++e) {
    if (!((y >> m.tail(e)) & 1U)) continue;
    const Mask rest_of_tail = Mask{1} << big.tail(e);
    const Mask fresh = Mask{1} << big.cell(e, m.n);
    auto separable = [&](Mask cell) {
      return std::any_of(opens.begin(), opens.end(), [&](Mask g) {
        return (g & cell) != 0 && (g & rest_of_tail) == 0;
      });
    };
    if (!separable(fresh)) continue;
    bool all = true;
    for (unsigned c = 0; c < big.cells() && all; ++c) {
      const Mask bit = Mask{1} << c;
      if ((lifted & bit) && bit != rest_of_tail && !separable(bit)) all = false;
    }
    if (all) return false;
  }
  return true;
}

}  // namespace oracle
