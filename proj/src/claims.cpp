#include "softtop/claims.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <sstream>

#include "softtop/io.hpp"
#include "softtop/kernels.hpp"
#include "softtop/lattice.hpp"
#include "softtop/maximality.hpp"
#include "softtop/properties.hpp"

namespace softtop {

namespace {

const EnumerateOptions kInner{kDefaultCellGuard, 1};

// ---- instance predicates ---------------------------------------------------
// Each returns true when the claim holds on the instance. They only use the
// public checkers so that a witness can be replayed through them.

bool lat1_holds(const std::vector<SoftTopology>& family, const std::vector<SoftTopology>& all) {
  const SoftTopology lower = meet_all(family);
  const SoftTopology upper = join_all(family);
  if (!std::binary_search(all.begin(), all.end(), lower)) return false;
  if (!std::binary_search(all.begin(), all.end(), upper)) return false;
  if (family.size() == 2) {
    const SoftTopology by_union = join_by_union(family[0], family[1]);
    if (by_union != join_by_intersections(family[0], family[1]) || by_union != upper) return false;
  }
  for (const auto& x : all) {
    bool below_all = true;
    bool above_all = true;
    for (const auto& t : family) {
      below_all = below_all && x.is_subfamily_of(t);
      above_all = above_all && t.is_subfamily_of(x);
    }
    if (below_all != x.is_subfamily_of(lower)) return false;
    if (above_all != upper.is_subfamily_of(x)) return false;
  }
  return true;
}

bool dual1_holds(const SoftTopology& t, CellMask y) {
  const CellMask c = t.carrier();
  return interior_cells(t, c & ~y) == (c & ~closure_cells(t, y)) &&
         closure_cells(t, c & ~y) == (c & ~interior_cells(t, y));
}

bool ext1_holds(const SoftTopology& t, CellMask y) {
  if (!is_compact(t) || t.contains(y)) return true;
  return is_compact(s_extension_cells(t, y)) == is_compact_subset_cells(t, t.carrier() & ~y);
}

bool max_compact(const SoftTopology& t) { return maximal_by_brute(t, Property::compact, kInner); }
bool max_connected(const SoftTopology& t) {
  return maximal_by_brute(t, Property::connected, kInner);
}

bool mc1_holds(const SoftTopology& t) {
  if (!is_compact(t)) return true;
  return max_compact(t) == maximal_by_characterization(t);
}

bool mc2_holds(const SoftTopology& t) {
  return !max_compact(t) || separation_axiom(t, Separation::t1);
}

// Every continuous bijection from a compact space on the same ground shape
// onto t is a homeomorphism. Reports the first failing (source, map).
bool homeomorphism_side(const SoftTopology& t, const std::vector<SoftTopology>& sources,
                        Witness* failure) {
  const auto maps = bijections(t.ground());
  for (const auto& src : sources) {
    if (!is_compact(src)) continue;
    for (const auto& f : maps) {
      if (map_property(f, src, t, MapProperty::continuous) &&
          !map_property(f, src, t, MapProperty::homeomorphism)) {
        if (failure) {
          failure->topologies.push_back(src);
          failure->map = f;
        }
        return false;
      }
    }
  }
  return true;
}

bool mc3_holds(const SoftTopology& t, const std::vector<SoftTopology>& all, Witness* failure) {
  return max_compact(t) == homeomorphism_side(t, all, failure);
}

bool mc4_holds(const SoftTopology& t) {
  const bool premise =
      is_stable_space(t) && is_compact(t) && separation_axiom(t, Separation::t2);
  return !premise || max_compact(t);
}

bool cn1_holds(const SoftTopology& t) {
  return !max_connected(t) || separation_axiom(t, Separation::t0);
}

bool cn2_holds(const SoftTopology& t) { return !max_connected(t) || is_submaximal(t); }

bool cn3_holds(const SoftTopology& t, CellMask y) {
  if (y == 0 || !max_connected(t) || !is_connected_subset_cells(t, y)) return true;
  return maximal_by_brute(relative_topology(t, SoftSet(t.ground(), y)), Property::connected,
                          kInner);
}

bool cn4_holds(const SoftTopology& t, CellMask y) {
  if (!is_connected(t) || t.contains(y) || !is_dense_cells(t, y)) return true;
  return is_connected(s_extension_cells(t, y));
}

bool fun1_holds(const SoftFunction& f, CellMask a) {
  if (!f.is_bijective()) return true;
  const CellMask src_full = f.src()->full_mask();
  const CellMask dst_full = f.dst()->full_mask();
  return f.image_cells(src_full & ~a) == (dst_full & ~f.image_cells(a));
}

// The split theorem under three readings. index 0: as stated (either of
// Y, Y^c open); 1: as the proof assumes (neither open); 2: as stated, with t
// also required to be connected.
constexpr std::array<const char*, 3> kCn5Readings{"literal", "neither-open", "connected-space"};

std::array<int, 3> cn5_status(const SoftTopology& t, CellMask y) {
  // -1: hypothesis fails, 0: holds, 1: violated
  std::array<int, 3> status{-1, -1, -1};
  const CellMask rest = t.carrier() & ~y;
  if (y == 0 || rest == 0) return status;
  if (!is_connected_subset_cells(t, y) || !is_connected_subset_cells(t, rest)) return status;
  const bool either_open = t.contains(y) || t.contains(rest);
  const bool maximal = max_connected(t);
  if (either_open) status[0] = maximal ? 0 : 1;
  if (!t.contains(y) && !t.contains(rest)) status[1] = maximal ? 0 : 1;
  if (either_open && is_connected(t)) status[2] = maximal ? 0 : 1;
  return status;
}

// ---- scan driver -------------------------------------------------------------

struct GroundScan {
  GroundPtr ground;
  std::vector<SoftTopology> all;
};

struct TopologyResult {
  std::uint64_t instances = 0;
  std::optional<Witness> witness;
  // CN5 only.
  std::array<std::uint64_t, 3> hypothesis_hits{};
  std::array<std::uint64_t, 3> violations{};
  std::array<std::optional<Witness>, 3> first{};
};

Witness witness_of(const SoftTopology& t, std::vector<CellMask> sets = {}) {
  return Witness{t.ground(), {t}, std::move(sets), std::nullopt};
}

std::vector<GroundPtr> grounds_up_to(std::size_t bound) {
  std::vector<GroundPtr> out;
  for (std::size_t cells = 1; cells <= bound; ++cells) {
    for (std::size_t params = 1; params <= cells; ++params) {
      if (cells % params == 0) out.push_back(make_ground(cells / params, params));
    }
  }
  return out;
}

TopologyResult scan_topology(const std::string& id, const GroundScan& scan, std::size_t index) {
  TopologyResult r;
  const SoftTopology& t = scan.all[index];
  auto each_subset = [&](auto&& body) {
    for (auto y : subsets_of(t.carrier())) {
      ++r.instances;
      if (!body(y)) {
        r.witness = witness_of(t, {y});
        return;
      }
    }
  };
  auto single = [&](bool holds) {
    ++r.instances;
    if (!holds) r.witness = witness_of(t);
  };

  if (id == "LAT1") {
    const auto& all = scan.all;
    auto check = [&](std::vector<SoftTopology> family) {
      ++r.instances;
      if (!r.witness && !lat1_holds(family, all)) {
        r.witness = Witness{t.ground(), std::move(family), {}, std::nullopt};
      }
    };
    for (std::size_t j = index; j < all.size() && !r.witness; ++j) {
      if (j == index) {
        check({t});
        continue;
      }
      check({t, all[j]});
      if (all.size() <= 64) {
        for (std::size_t k = j + 1; k < all.size() && !r.witness; ++k) check({t, all[j], all[k]});
      }
    }
    if (index == 0 && !r.witness) {
      check(all);
      std::mt19937_64 rng(0x5eedULL + all.size());
      std::vector<SoftTopology> pool = all;
      for (int s = 0; s < 200 && !r.witness && all.size() >= 4; ++s) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::uniform_int_distribution<std::size_t> size(4, pool.size());
        std::vector<SoftTopology> pick(pool.begin(), pool.begin() + static_cast<long>(size(rng)));
        std::sort(pick.begin(), pick.end());
        check(std::move(pick));
      }
    }
  } else if (id == "DUAL1") {
    each_subset([&](CellMask y) { return dual1_holds(t, y); });
  } else if (id == "EXT1") {
    each_subset([&](CellMask y) { return ext1_holds(t, y); });
  } else if (id == "MC1") {
    single(mc1_holds(t));
  } else if (id == "MC2") {
    single(mc2_holds(t));
  } else if (id == "MC3") {
    ++r.instances;
    Witness w = witness_of(t);
    if (!mc3_holds(t, scan.all, &w)) r.witness = std::move(w);
  } else if (id == "MC4") {
    single(mc4_holds(t));
  } else if (id == "CN1") {
    single(cn1_holds(t));
  } else if (id == "CN2") {
    single(cn2_holds(t));
  } else if (id == "CN3") {
    each_subset([&](CellMask y) { return cn3_holds(t, y); });
  } else if (id == "CN4") {
    each_subset([&](CellMask y) { return cn4_holds(t, y); });
  } else if (id == "CN5") {
    for (auto y : subsets_of(t.carrier())) {
      const auto status = cn5_status(t, y);
      for (std::size_t k = 0; k < 3; ++k) {
        if (status[k] < 0) continue;
        ++r.hypothesis_hits[k];
        if (status[k] == 1) {
          ++r.violations[k];
          if (!r.first[k]) r.first[k] = witness_of(t, {y});
        }
      }
    }
    r.instances = r.hypothesis_hits[0];
    r.witness = r.first[0];
  }
  return r;
}

std::optional<Witness> scan_fun1(const GroundPtr& ground, std::uint64_t& instances) {
  for (const auto& f : bijections(ground)) {
    for (auto a : subsets_of(ground->full_mask())) {
      ++instances;
      if (!fun1_holds(f, a)) return Witness{ground, {}, {a}, f};
    }
  }
  return std::nullopt;
}

std::string describe_ground(const Ground& g) {
  return g.header().substr(7);  // drop "ground "
}

const ClaimInfo& find_claim(std::string_view id) {
  for (const auto& c : claim_catalog()) {
    if (c.id == id) return c;
  }
  throw InputError("unknown claim '" + std::string(id) + "'");
}

}  // namespace

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> catalog{
      {"LAT1", "meet and join of any subfamily are its glb and lub", false},
      {"DUAL1", "Int(Y^c) = Cl(Y)^c and Cl(Y^c) = Int(Y)^c", false},
      {"EXT1", "t[Y] compact iff Y^c compact in t", false},
      {"MC1", "maximal compact iff closed sets = compact sets", false},
      {"MC2", "maximal compact implies T1", false},
      {"MC3", "maximal compact iff continuous bijections from compact spaces are homeomorphisms",
       false},
      {"MC4", "stable compact T2 implies maximal compact", false},
      {"CN1", "maximal connected implies T0", false},
      {"CN2", "maximal connected implies submaximal", false},
      {"CN3", "connected subspaces of maximal connected spaces are maximal connected", false},
      {"CN4", "a dense s-extension of a connected space is connected", false},
      {"CN5", "Y, Y^c connected and one of them open implies maximal connected", true},
      {"FUN1", "bijections commute with complement", false},
  };
  return catalog;
}

ClaimReport verify_claim(std::string_view claim_id, std::size_t bound,
                         const VerifyOptions& options) {
  const ClaimInfo& info = find_claim(claim_id);
  if (bound < 1) throw InputError("bound must be at least 1");
  if (bound > kMaxClaimBound) {
    throw CapacityError("claim bound " + std::to_string(bound) + " exceeds " +
                        std::to_string(kMaxClaimBound));
  }
  ClaimReport report;
  report.claim_id = info.id;
  report.bound = bound;
  report.observe = info.observe;

  std::array<std::uint64_t, 3> hits{};
  std::array<std::uint64_t, 3> violations{};
  std::array<std::optional<Witness>, 3> first{};

  for (const auto& ground : grounds_up_to(bound)) {
    if (info.id == "FUN1") {
      if (auto w = scan_fun1(ground, report.instances)) {
        report.witness = std::move(w);
        break;
      }
      continue;
    }
    GroundScan scan{ground, enumerate_topologies(ground, {kDefaultCellGuard, options.threads})};
    std::vector<TopologyResult> results(scan.all.size());
    const auto n = static_cast<long>(scan.all.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::effective_threads(options.threads))
    for (long i = 0; i < n; ++i) {
      results[static_cast<std::size_t>(i)] = scan_topology(info.id, scan, static_cast<std::size_t>(i));
    }

    std::size_t max_compact_count = 0;
    bool only_discrete = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
      auto& r = results[i];
      report.instances += r.instances;
      for (std::size_t k = 0; k < 3; ++k) {
        hits[k] += r.hypothesis_hits[k];
        violations[k] += r.violations[k];
        if (!first[k] && r.first[k]) first[k] = r.first[k];
      }
      if (!report.witness && r.witness) report.witness = r.witness;
      if (info.id == "MC1" && max_compact(scan.all[i])) {
        ++max_compact_count;
        only_discrete = only_discrete && scan.all[i] == SoftTopology::discrete(ground);
      }
    }
    if (info.id == "MC1") {
      report.findings.push_back("maximal-compact on " + describe_ground(*ground) + ": " +
                                std::to_string(max_compact_count) +
                                (only_discrete && max_compact_count == 1 ? " (discrete only)"
                                                                         : " (not only discrete)"));
    }
    if (report.witness && !info.observe) break;
  }

  if (info.id == "CN5") {
    for (std::size_t k = 0; k < 3; ++k) {
      report.findings.push_back(std::string("reading=") + kCn5Readings[k] +
                                " instances=" + std::to_string(hits[k]) +
                                " counterexamples=" + std::to_string(violations[k]) +
                                " first=" + (first[k] ? format_witness(*first[k]) : "-"));
    }
  }
  report.verdict = report.witness ? Verdict::counterexample : Verdict::pass;
  return report;
}

std::vector<ClaimReport> verify_all(std::size_t bound, const VerifyOptions& options) {
  std::vector<ClaimReport> out;
  for (const auto& c : claim_catalog()) out.push_back(verify_claim(c.id, bound, options));
  return out;
}

std::string format_report(const ClaimReport& report) {
  std::string out = "claim=" + report.claim_id + " bound=" + std::to_string(report.bound) +
                    " verdict=" + (report.verdict == Verdict::pass ? "PASS" : "CE") +
                    " witness=" + (report.witness ? format_witness(*report.witness) : "-") + "\n";
  out += "  instances: " + std::to_string(report.instances) + "\n";
  if (report.observe) out += "  mode: observe\n";
  for (const auto& f : report.findings) out += "  finding: " + f + "\n";
  return out;
}

std::string format_witness(const Witness& w) {
  std::string out = w.ground->header();
  for (const auto& t : w.topologies) out += " | T " + format_topology_inline(t);
  for (auto y : w.sets) out += " | Y " + format_cells(*w.ground, y);
  if (w.map) {
    out += " | f p=";
    for (std::size_t i = 0; i < w.map->elem_map().size(); ++i) {
      out += (i ? "," : "") + std::to_string(w.map->elem_map()[i]);
    }
    out += " q=";
    for (std::size_t i = 0; i < w.map->param_map().size(); ++i) {
      out += (i ? "," : "") + std::to_string(w.map->param_map()[i]);
    }
  }
  return out;
}

Witness parse_witness(std::string_view text) {
  auto parts = split_top_level(text, '|');
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  Witness w;
  w.ground = parse_ground_header(trim(parts.front()));
  auto indices = [](std::string_view list) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos < list.size()) {
      std::size_t comma = list.find(',', pos);
      if (comma == std::string_view::npos) comma = list.size();
      out.push_back(std::stoul(std::string(list.substr(pos, comma - pos))));
      pos = comma + 1;
    }
    return out;
  };
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::string_view part = trim(parts[i]);
    if (part.starts_with("T ")) {
      auto sets = parse_family_inline(part.substr(2), w.ground);
      w.topologies.push_back(validate_topology(w.ground, w.ground->full_mask(), sets));
    } else if (part.starts_with("Y ")) {
      w.sets.push_back(parse_soft_set(trim(part.substr(2)), w.ground).cells());
    } else if (part.starts_with("f ")) {
      std::string_view body = part.substr(2);
      auto p_at = body.find("p=");
      auto q_at = body.find(" q=");
      if (p_at == std::string_view::npos || q_at == std::string_view::npos) {
        throw InputError("malformed map in witness");
      }
      auto p = indices(body.substr(p_at + 2, q_at - p_at - 2));
      auto q = indices(body.substr(q_at + 3));
      w.map = SoftFunction(w.ground, w.ground, std::move(p), std::move(q));
    } else {
      throw InputError("unknown witness field '" + std::string(part) + "'");
    }
  }
  return w;
}

bool replay_witness(std::string_view claim_id, const Witness& w) {
  const std::string id = find_claim(claim_id).id;
  auto topology = [&](std::size_t i) -> const SoftTopology& {
    if (w.topologies.size() <= i) throw InputError("witness lacks a topology");
    return w.topologies[i];
  };
  auto set = [&](std::size_t i) {
    if (w.sets.size() <= i) throw InputError("witness lacks a soft set");
    return w.sets[i];
  };
  if (id == "LAT1") {
    return !lat1_holds(w.topologies, enumerate_topologies(w.ground, kInner));
  }
  if (id == "DUAL1") return !dual1_holds(topology(0), set(0));
  if (id == "EXT1") return !ext1_holds(topology(0), set(0));
  if (id == "MC1") return !mc1_holds(topology(0));
  if (id == "MC2") return !mc2_holds(topology(0));
  if (id == "MC3") {
    return !mc3_holds(topology(0), enumerate_topologies(w.ground, kInner), nullptr);
  }
  if (id == "MC4") return !mc4_holds(topology(0));
  if (id == "CN1") return !cn1_holds(topology(0));
  if (id == "CN2") return !cn2_holds(topology(0));
  if (id == "CN3") return !cn3_holds(topology(0), set(0));
  if (id == "CN4") return !cn4_holds(topology(0), set(0));
  if (id == "CN5") return cn5_status(topology(0), set(0))[0] == 1;
  if (id == "FUN1") {
    if (!w.map) throw InputError("witness lacks a map");
    return !fun1_holds(*w.map, set(0));
  }
  return false;
}

}  // namespace softtop
