#include "softtop/lattice.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "softtop/properties.hpp"

namespace softtop {

namespace {

using kernels::FamilyMask;

struct NodeIndex {
  std::vector<FamilyMask> masks;
  std::unordered_map<FamilyMask, std::size_t> position;
  std::size_t cells = 0;
};

NodeIndex index_nodes(const std::vector<SoftTopology>& nodes) {
  NodeIndex idx;
  if (nodes.empty()) return idx;
  const CellMask carrier = nodes.front().carrier();
  idx.cells = static_cast<std::size_t>(std::popcount(carrier));
  idx.masks.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].carrier() != carrier) throw InputError("lattice nodes on different carriers");
    idx.masks.push_back(kernels::opens_to_family(nodes[i].opens(), carrier));
    idx.position.emplace(idx.masks.back(), i);
  }
  return idx;
}

bool strictly_below(FamilyMask a, FamilyMask b) { return a != b && (a & ~b) == 0; }

class NodeSet {
 public:
  explicit NodeSet(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void and_with(const NodeSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  }
  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

void check_cell_guard(std::size_t cells, const EnumerateOptions& options) {
  const std::size_t limit = std::min(options.cell_guard, kernels::kMaxKernelCells);
  if (cells > limit) {
    throw CapacityError("enumeration over " + std::to_string(cells) + " cells exceeds the guard of " +
                        std::to_string(limit));
  }
}

std::vector<SoftTopology> enumerate_topologies(const GroundPtr& ground,
                                               const EnumerateOptions& options) {
  return enumerate_topologies(ground, ground->full_mask(), options);
}

std::vector<SoftTopology> enumerate_topologies(const GroundPtr& ground, CellMask carrier,
                                               const EnumerateOptions& options) {
  return enumerate_refinements(SoftTopology::indiscrete(ground, carrier), options);
}

std::vector<SoftTopology> enumerate_refinements(const SoftTopology& t,
                                                const EnumerateOptions& options) {
  const auto cells = static_cast<std::size_t>(std::popcount(t.carrier()));
  check_cell_guard(cells, options);
  const FamilyMask base = kernels::opens_to_family(t.opens(), t.carrier());
  const auto families = options.threads == 1
                            ? kernels::enumerate_serial(cells, base)
                            : kernels::enumerate_parallel(cells, base, options.threads);
  std::vector<SoftTopology> out;
  out.reserve(families.size());
  for (auto f : families) {
    out.push_back(SoftTopology::from_canonical(t.ground(), t.carrier(),
                                               kernels::family_to_opens(f, t.carrier())));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(
    const std::vector<SoftTopology>& nodes, int threads) {
  const NodeIndex idx = index_nodes(nodes);
  const auto n = static_cast<long>(nodes.size());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> per_node(nodes.size());

#pragma omp parallel for schedule(dynamic, 4) num_threads(kernels::effective_threads(threads))
  for (long i = 0; i < n; ++i) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < idx.masks.size(); ++j) {
      if (strictly_below(idx.masks[static_cast<std::size_t>(i)], idx.masks[j])) above.push_back(j);
    }
    for (auto j : above) {
      bool covered = true;
      for (auto k : above) {
        if (strictly_below(idx.masks[k], idx.masks[j])) {
          covered = false;
          break;
        }
      }
      if (covered) per_node[static_cast<std::size_t>(i)].emplace_back(i, j);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto& v : per_node) edges.insert(edges.end(), v.begin(), v.end());
  std::sort(edges.begin(), edges.end());
  return edges;
}

LatticeCheck verify_lattice_bounds(const std::vector<SoftTopology>& nodes,
                                   std::size_t random_subsets, std::uint64_t seed, int threads) {
  LatticeCheck result;
  if (nodes.empty()) return result;
  const NodeIndex idx = index_nodes(nodes);
  const std::size_t n = nodes.size();

  std::vector<NodeSet> down(n, NodeSet(n));
  std::vector<NodeSet> up(n, NodeSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if ((idx.masks[y] & ~idx.masks[x]) == 0) down[x].set(y);
      if ((idx.masks[x] & ~idx.masks[y]) == 0) up[x].set(y);
    }
  }

  // A subfamily passes when its meet and join are nodes whose down-set and
  // up-set equal the common lower and upper bounds of the subfamily.
  auto check = [&](const std::vector<std::size_t>& members) {
    FamilyMask meet = ~FamilyMask{0};
    FamilyMask unite = 0;
    NodeSet lower = down[members.front()];
    NodeSet upper = up[members.front()];
    for (auto m : members) {
      meet &= idx.masks[m];
      unite |= idx.masks[m];
      lower.and_with(down[m]);
      upper.and_with(up[m]);
    }
    const FamilyMask join = kernels::close_family(unite, idx.cells);
    auto glb = idx.position.find(meet);
    auto lub = idx.position.find(join);
    if (glb == idx.position.end() || lub == idx.position.end()) return false;
    return down[glb->second] == lower && up[lub->second] == upper;
  };

  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : checked, failures) \
    num_threads(kernels::effective_threads(threads))
  for (long i = 0; i < count; ++i) {
    const auto a = static_cast<std::size_t>(i);
    std::vector<std::size_t> members{a};
    ++checked;
    if (!check(members)) ++failures;
    for (std::size_t b = a + 1; b < n; ++b) {
      members = {a, b};
      ++checked;
      if (!check(members)) ++failures;
      for (std::size_t c = b + 1; c < n; ++c) {
        members = {a, b, c};
        ++checked;
        if (!check(members)) ++failures;
      }
    }
  }
  result.subsets_checked = checked;

  if (n >= 4) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::size_t>> samples;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t s = 0; s < random_subsets; ++s) {
      std::uniform_int_distribution<std::size_t> size_dist(4, n);
      const std::size_t size = size_dist(rng);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<std::size_t> pick(order.begin(), order.begin() + static_cast<long>(size));
      std::sort(pick.begin(), pick.end());
      samples.push_back(std::move(pick));
    }
    std::uint64_t random_failures = 0;
    const auto m = static_cast<long>(samples.size());
#pragma omp parallel for reduction(+ : random_failures) num_threads(kernels::effective_threads(threads))
    for (long s = 0; s < m; ++s) {
      if (!check(samples[static_cast<std::size_t>(s)])) ++random_failures;
    }
    result.random_subsets_checked = samples.size();
    failures += random_failures;
  }
  result.failures = failures;
  return result;
}

TopologyLattice build_lattice(const GroundPtr& ground, const LatticeOptions& options) {
  TopologyLattice lattice;
  lattice.ground = ground;
  lattice.nodes = enumerate_topologies(ground, options.enumerate);
  lattice.hasse_edges = covering_pairs(lattice.nodes, options.enumerate.threads);
  if (options.verify) {
    lattice.check = verify_lattice_bounds(lattice.nodes, options.random_subsets, options.seed,
                                          options.enumerate.threads);
    if (lattice.check.failures != 0) {
      throw ConsistencyError("lattice bound check failed",
                             std::to_string(lattice.check.failures) + " subfamilies");
    }
  }
  return lattice;
}

std::vector<NodeBadges> lattice_badges(const TopologyLattice& lattice) {
  std::vector<NodeBadges> badges(lattice.nodes.size());
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    const auto& t = lattice.nodes[i];
    badges[i].connected = is_connected(t);
    badges[i].t0 = separation_axiom(t, Separation::t0);
    badges[i].t1 = separation_axiom(t, Separation::t1);
  }
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    if (!badges[i].connected) continue;
    bool all_covers_disconnected = true;
    for (const auto& [lo, hi] : lattice.hasse_edges) {
      if (lo == i && badges[hi].connected) {
        all_covers_disconnected = false;
        break;
      }
    }
    badges[i].maximal_connected = all_covers_disconnected;
  }
  return badges;
}

std::string to_dot(const TopologyLattice& lattice) {
  const auto badges = lattice_badges(lattice);
  std::ostringstream out;
  out << "digraph soft_topologies {\n";
  out << "  graph [label=\""
      << counts_line(lattice.ground ? lattice.ground->cells() : 0, lattice.nodes.size())
      << "\"];\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    std::vector<std::string> tags;
    if (badges[i].connected) tags.emplace_back("connected");
    if (badges[i].maximal_connected) tags.emplace_back("maximal-connected");
    if (badges[i].t0) tags.emplace_back("T0");
    if (badges[i].t1) tags.emplace_back("T1");
    out << "  n" << i << " [label=\"" << lattice.nodes[i].size() << " opens";
    if (!tags.empty()) {
      out << "\\n";
      for (std::size_t k = 0; k < tags.size(); ++k) out << (k ? ", " : "") << tags[k];
    }
    out << "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.hasse_edges) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

void export_dot(const TopologyLattice& lattice, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << to_dot(lattice);
  if (!file) throw InputError("failed writing " + path);
}

std::string counts_line(std::size_t cells, std::size_t topologies) {
  return "cells=" + std::to_string(cells) + " topologies=" + std::to_string(topologies);
}

}  // namespace softtop
