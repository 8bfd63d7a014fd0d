#include <doctest.h>

#include "oracles.hpp"
#include "softtop/io.hpp"
#include "softtop/lattice.hpp"
#include "softtop/topology.hpp"

using namespace softtop;

namespace {

oracle::Family family_of(const SoftTopology& t) {
  oracle::Family f = 0;
  for (auto g : t.opens()) f |= oracle::Family{1} << g;
  return f;
}

SoftTopology from_family(const GroundPtr& g, oracle::Family f) {
  std::vector<SoftSet> sets;
  for (auto m : oracle::members(f, static_cast<unsigned>(g->cells()))) sets.emplace_back(g, m);
  return validate_topology(g, g->full_mask(), sets);
}

std::vector<GroundPtr> grounds_with_cells(std::size_t cells) {
  std::vector<GroundPtr> out;
  for (std::size_t e = 1; e <= cells; ++e) {
    if (cells % e == 0) out.push_back(make_ground(cells / e, e));
  }
  return out;
}

std::vector<SoftSet> sets_of(const GroundPtr& g, std::initializer_list<const char*> lits) {
  std::vector<SoftSet> out;
  for (auto l : lits) out.push_back(parse_soft_set(l, g));
  return out;
}

}  // namespace

TEST_CASE("validation reports the violated axiom") {
  auto g = make_ground({"a", "b", "c"}, {"e"});
  auto check_axiom = [&](std::initializer_list<const char*> lits, const char* axiom) {
    auto sets = sets_of(g, lits);
    try {
      validate_topology(g, g->full_mask(), sets);
      FAIL("expected a violation");
    } catch (const TopologyError& e) {
      CHECK(e.violation().axiom == axiom);
    }
  };
  check_axiom({"{e:{a}}", "{e:{a,b,c}}"}, "i");
  check_axiom({"{}", "{e:{a}}"}, "i");
  check_axiom({"{}", "{e:{a,b}}", "{e:{b,c}}", "{e:{a,b,c}}"}, "ii");
  check_axiom({"{}", "{e:{a}}", "{e:{b}}", "{e:{a,b,c}}"}, "iii");

  auto sets = sets_of(g, {"{}", "{e:{a}}", "{e:{b}}", "{e:{a,b,c}}"});
  std::vector<CellMask> cells;
  for (auto& s : sets) cells.push_back(s.cells());
  auto v = find_axiom_violation(cells, g->full_mask());
  REQUIRE(v);
  CHECK(v->witness == std::vector<CellMask>{0b001, 0b010});

  auto ok = sets_of(g, {"{e:{a,b,c}}", "{}", "{e:{a}}", "{e:{a}}"});
  auto t = validate_topology(g, g->full_mask(), ok);
  CHECK(t.size() == 3);
  CHECK(t.opens() == std::vector<CellMask>{0, 0b001, 0b111});
}

TEST_CASE("indiscrete and discrete") {
  auto g = make_ground(2, 1);
  CHECK(SoftTopology::indiscrete(g).size() == 2);
  CHECK(SoftTopology::discrete(g).size() == 4);
  CHECK(SoftTopology::indiscrete(g) < SoftTopology::discrete(g));
  CHECK(SoftTopology::indiscrete(g).is_subfamily_of(SoftTopology::discrete(g)));
}

TEST_CASE("generate matches the smallest enclosing topology, both strategies") {
  for (unsigned cells = 1; cells <= 3; ++cells) {
    const auto all = oracle::naive_topologies(cells);
    const unsigned sets = 1U << cells;
    for (const auto& g : grounds_with_cells(cells)) {
      for (oracle::Family pick = 0; pick < (oracle::Family{1} << sets); ++pick) {
        std::vector<CellMask> collection = oracle::members(pick, cells);
        auto fix = generate_cells(collection, g->full_mask(), GenerateStrategy::fixpoint);
        auto two = generate_cells(collection, g->full_mask(), GenerateStrategy::two_phase);
        oracle::Family expected = oracle::naive_generate(all, pick);
        CHECK(fix == oracle::members(expected, cells));
        CHECK(two == fix);
      }
    }
  }
}

TEST_CASE("generated topology on a worked example") {
  auto g = make_ground({"a", "b", "c"}, {"e1", "e2"});
  auto c = sets_of(g, {"{e1:{a}; e2:{a}}", "{e1:{a,b}; e2:{}}"});
  auto t = generate(g, c);
  CHECK(format_topology_inline(t) ==
        "[{e1:{}; e2:{}}, {e1:{a}; e2:{}}, {e1:{a,b}; e2:{}}, {e1:{a}; e2:{a}}, "
        "{e1:{a,b}; e2:{a}}, {e1:{a,b,c}; e2:{a,b,c}}]");
}

TEST_CASE("meet and join agree with the naive lattice on three cells") {
  const unsigned cells = 3;
  const auto all = oracle::naive_topologies(cells);
  for (const auto& g : grounds_with_cells(cells)) {
    std::vector<SoftTopology> ts;
    for (auto f : all) ts.push_back(from_family(g, f));
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = 0; j < ts.size(); ++j) {
        CHECK(family_of(meet(ts[i], ts[j])) == (all[i] & all[j]));
        CHECK(family_of(join(ts[i], ts[j])) == oracle::naive_generate(all, all[i] | all[j]));
        CHECK(join_by_union(ts[i], ts[j]) == join_by_intersections(ts[i], ts[j]));
      }
    }
  }
}

TEST_CASE("relative topologies") {
  auto g = make_ground(2, 2);
  const auto all = enumerate_topologies(g);
  for (const auto& t : all) {
    for (CellMask y = 1; y <= g->full_mask(); ++y) {
      auto rel = relative_topology(t, SoftSet(g, y));
      CHECK(rel.carrier() == y);
      for (auto h : rel.opens()) {
        bool traced = false;
        for (auto o : t.opens()) traced = traced || (o & y) == h;
        CHECK(traced);
      }
      for (CellMask w = 1; w <= y; ++w) {
        if ((w & ~y) != 0) continue;
        CHECK(relative_topology(rel, SoftSet(g, w)) == relative_topology(t, SoftSet(g, w)));
      }
    }
  }
  CHECK_THROWS_AS(relative_topology(all.front(), SoftSet::null(g)), InputError);
}

TEST_CASE("s-extensions have the form G union (H intersect Y)") {
  for (const auto& g : grounds_with_cells(3)) {
    for (const auto& t : enumerate_topologies(g)) {
      for (CellMask y = 0; y <= g->full_mask(); ++y) {
        if (t.contains(y)) {
          CHECK_THROWS_AS(s_extension_cells(t, y), InputError);
          continue;
        }
        std::vector<CellMask> expected;
        for (auto gg : t.opens()) {
          for (auto h : t.opens()) expected.push_back(gg | (h & y));
        }
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        auto ext = s_extension_cells(t, y);
        CHECK(ext.opens() == expected);
        CHECK(ext.contains(y));
        CHECK(t.is_subfamily_of(ext));
      }
    }
  }
}

TEST_CASE("interior and closure") {
  std::size_t instances = 0;
  for (unsigned cells = 1; cells <= 3; ++cells) {
    for (const auto& g : grounds_with_cells(cells)) {
      for (const auto& t : enumerate_topologies(g)) {
        const auto f = family_of(t);
        const CellMask full = g->full_mask();
        for (CellMask y = 0; y <= full; ++y) {
          const CellMask in = interior_cells(t, y);
          const CellMask cl = closure_cells(t, y);
          CHECK(in == oracle::naive_interior(f, cells, y));
          CHECK(cl == oracle::naive_closure(f, cells, y));
          CHECK((in & ~y) == 0);
          CHECK((y & ~cl) == 0);
          CHECK(interior_cells(t, in) == in);
          CHECK(closure_cells(t, cl) == cl);
          CHECK(interior_cells(t, full & ~y) == (full & ~cl));
          CHECK(closure_cells(t, full & ~y) == (full & ~in));
          CHECK(is_dense_cells(t, y) == (cl == full));
          ++instances;
        }
      }
    }
  }
  CHECK(instances > 400);
}

TEST_CASE("bases") {
  auto g = make_ground({"a", "b", "c"}, {"e"});
  auto t = generate(g, sets_of(g, {"{e:{a}}", "{e:{b}}"}));
  CHECK(is_base(t, t.open_sets()));
  CHECK(is_base(t, sets_of(g, {"{e:{a}}", "{e:{b}}", "{e:{a,b,c}}"})));
  CHECK_FALSE(is_base(t, sets_of(g, {"{e:{a}}", "{e:{a,b,c}}"})));
  CHECK_THROWS_AS(is_base(t, sets_of(g, {"{e:{c}}"})), InputError);
}

TEST_CASE("subsets of a carrier") {
  auto subs = subsets_of(0b1010);
  CHECK(subs == std::vector<CellMask>{0, 0b0010, 0b1000, 0b1010});
}
