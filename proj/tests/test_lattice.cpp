#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "softtop/kernels.hpp"
#include "softtop/lattice.hpp"
#include "softtop/maximality.hpp"
#include "softtop/properties.hpp"

using namespace softtop;

namespace {

oracle::Family family_of(const SoftTopology& t) {
  oracle::Family f = 0;
  for (auto g : t.opens()) f |= oracle::Family{1} << g;
  return f;
}

}  // namespace

TEST_CASE("counts agree with the naive filter on every shape up to four cells") {
  const std::size_t expected[] = {0, 1, 4, 29, 355};
  for (unsigned cells = 1; cells <= 4; ++cells) {
    auto naive = oracle::naive_topologies(cells);
    CHECK(naive.size() == expected[cells]);
    std::sort(naive.begin(), naive.end());
    for (std::size_t e = 1; e <= cells; ++e) {
      if (cells % e != 0) continue;
      auto g = make_ground(cells / e, e);
      auto all = enumerate_topologies(g);
      CHECK(all.size() == expected[cells]);
      CHECK(std::is_sorted(all.begin(), all.end()));
      std::vector<oracle::Family> got;
      for (const auto& t : all) got.push_back(family_of(t));
      std::sort(got.begin(), got.end());
      CHECK(got == naive);
    }
  }
}

TEST_CASE("serial and parallel kernels return the same list") {
  for (std::size_t cells = 1; cells <= 5; ++cells) {
    const kernels::FamilyMask base = kernels::close_family(0, cells);
    auto serial = kernels::enumerate_serial(cells, base);
    for (int threads : {0, 1, 2, 4}) {
      CHECK(kernels::enumerate_parallel(cells, base, threads) == serial);
    }
  }
  CHECK(kernels::enumerate_serial(5, kernels::close_family(0, 5)).size() == 6942);
}

TEST_CASE("counts do not depend on names or shape") {
  auto renamed = make_ground({"x", "y"}, {"p", "q"});
  CHECK(enumerate_topologies(renamed).size() == 355);
  auto carrier_count = enumerate_topologies(make_ground(2, 2), 0b0111).size();
  CHECK(carrier_count == 29);
}

TEST_CASE("cell guard") {
  auto g = make_ground(5, 1);
  CHECK_THROWS_AS(enumerate_topologies(g), CapacityError);
  CHECK(enumerate_topologies(g, {5, 0}).size() == 6942);
  CHECK_THROWS_AS(enumerate_topologies(make_ground(7, 1), {7, 0}), CapacityError);
}

TEST_CASE("refinements") {
  auto g = make_ground(3, 1);
  for (const auto& t : enumerate_topologies(g)) {
    std::size_t expected = 0;
    for (const auto& u : enumerate_topologies(g)) expected += t.is_subfamily_of(u) ? 1 : 0;
    auto refinements = enumerate_refinements(t);
    CHECK(refinements.size() == expected);
    CHECK(refinements.front() == t);
  }
}

TEST_CASE("Hasse diagram is the transitive reduction") {
  for (std::size_t cells = 2; cells <= 4; ++cells) {
    auto g = make_ground(cells, 1);
    LatticeOptions options;
    options.random_subsets = cells == 4 ? 200 : 1000;
    auto lattice = build_lattice(g, options);
    std::vector<oracle::Family> fams;
    for (const auto& t : lattice.nodes) fams.push_back(family_of(t));
    CHECK(lattice.hasse_edges == oracle::transitive_reduction(fams));
    CHECK(lattice.check.failures == 0);
    CHECK(lattice.nodes[lattice.bottom()] == SoftTopology::indiscrete(g));
    CHECK(lattice.nodes[lattice.top()] == SoftTopology::discrete(g));
  }
}

TEST_CASE("glb and lub checks reject a family that is not a lattice") {
  auto g = make_ground(2, 1);
  auto all = enumerate_topologies(g);
  // Drop the top: the two Sierpinski spaces lose their join.
  std::vector<SoftTopology> partial(all.begin(), all.end() - 1);
  CHECK(verify_lattice_bounds(partial, 0, 1).failures > 0);
  CHECK(verify_lattice_bounds(all, 0, 1).failures == 0);
}

TEST_CASE("badges agree with the checkers") {
  for (std::size_t cells = 2; cells <= 4; ++cells) {
    auto g = make_ground(cells, 1);
    auto lattice = build_lattice(g, {{}, false});
    auto badges = lattice_badges(lattice);
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
      const auto& t = lattice.nodes[i];
      CHECK(badges[i].connected == is_connected(t));
      CHECK(badges[i].t0 == separation_axiom(t, Separation::t0));
      CHECK(badges[i].t1 == separation_axiom(t, Separation::t1));
      CHECK(badges[i].maximal_connected == maximal_by_brute(t, Property::connected));
    }
  }
}

TEST_CASE("DOT output is deterministic across worker counts") {
  auto g = make_ground(3, 1);
  LatticeOptions serial;
  serial.enumerate.threads = 1;
  LatticeOptions parallel;
  parallel.enumerate.threads = 4;
  const std::string a = to_dot(build_lattice(g, serial));
  const std::string b = to_dot(build_lattice(g, parallel));
  CHECK(a == b);
  CHECK(a.find("digraph soft_topologies {") == 0);
  CHECK(a.find("cells=3 topologies=29") != std::string::npos);
  CHECK(a.find("n0 -> ") != std::string::npos);
  CHECK(counts_line(2, 4) == "cells=2 topologies=4");
}
