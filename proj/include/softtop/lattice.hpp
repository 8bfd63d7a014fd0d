#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "softtop/kernels.hpp"
#include "softtop/topology.hpp"

namespace softtop {

inline constexpr std::size_t kDefaultCellGuard = 4;

struct EnumerateOptions {
  // Largest carrier enumerated without complaint. Raising it past 4 is meant
  // for experiments; 6 is the hard ceiling of the kernels.
  std::size_t cell_guard = kDefaultCellGuard;
  // Worker count for the OpenMP kernels; 0 keeps the runtime default, 1 runs
  // the serial reference.
  int threads = 0;
};

void check_cell_guard(std::size_t cells, const EnumerateOptions& options);

// Every soft topology on the ground (or on a carrier inside it), in
// canonical order.
std::vector<SoftTopology> enumerate_topologies(const GroundPtr& ground,
                                               const EnumerateOptions& options = {});
std::vector<SoftTopology> enumerate_topologies(const GroundPtr& ground, CellMask carrier,
                                               const EnumerateOptions& options = {});

// Every topology that contains t (t itself included), canonical order.
std::vector<SoftTopology> enumerate_refinements(const SoftTopology& t,
                                                const EnumerateOptions& options = {});

struct LatticeCheck {
  std::uint64_t subsets_checked = 0;
  std::uint64_t random_subsets_checked = 0;
  std::uint64_t failures = 0;
};

struct TopologyLattice {
  GroundPtr ground;
  std::vector<SoftTopology> nodes;
  // (coarser index, finer index) for every covering pair, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
  LatticeCheck check;

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return nodes.size() - 1; }
};

struct LatticeOptions {
  EnumerateOptions enumerate;
  // Check glb/lub for every subfamily of up to three nodes plus this many
  // random larger subfamilies.
  bool verify = true;
  std::size_t random_subsets = 1000;
  std::uint64_t seed = 20240611;
};

TopologyLattice build_lattice(const GroundPtr& ground, const LatticeOptions& options = {});

// Covering pairs of strict inclusion over a list of topologies on one
// carrier (indices into `nodes`).
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(
    const std::vector<SoftTopology>& nodes, int threads = 0);

// glb/lub existence inside `nodes` for all subfamilies of size <= 3 and for
// `random_subsets` random larger ones.
LatticeCheck verify_lattice_bounds(const std::vector<SoftTopology>& nodes,
                                   std::size_t random_subsets, std::uint64_t seed,
                                   int threads = 0);

struct NodeBadges {
  bool connected = false;
  bool maximal_connected = false;
  bool t0 = false;
  bool t1 = false;
};

// Maximal-connected is read off the Hasse diagram: connected with every
// cover disconnected.
std::vector<NodeBadges> lattice_badges(const TopologyLattice& lattice);

std::string to_dot(const TopologyLattice& lattice);
void export_dot(const TopologyLattice& lattice, const std::string& path);

// `cells=<n> topologies=<k>`
std::string counts_line(std::size_t cells, std::size_t topologies);

}  // namespace softtop
