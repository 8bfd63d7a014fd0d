// softtop: command-line front end for the soft topology workbench.
//
// Exit status: 0 success / PASS, 1 property false or counterexample,
// 2 input error, 3 capacity error, 4 two internal routes disagreed.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "softtop/claims.hpp"
#include "softtop/io.hpp"
#include "softtop/lattice.hpp"
#include "softtop/maximality.hpp"
#include "softtop/properties.hpp"
#include "softtop/symbolic.hpp"

namespace {

using namespace softtop;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kCapacityError = 3;
constexpr int kConsistencyError = 4;

int print_bool(bool value, const std::string& note = "") {
  std::cout << (value ? "true" : "false") << note << "\n";
  return value ? kOk : kFalse;
}

int cmd_validate(const std::string& path) {
  FamilyFile file = load_family_file(path);
  std::vector<CellMask> cells;
  for (const auto& s : file.sets) cells.push_back(s.cells());
  if (auto v = find_axiom_violation(cells, file.carrier)) {
    std::cout << "invalid: axiom " << v->axiom;
    for (std::size_t i = 0; i < v->witness.size(); ++i) {
      std::cout << (i ? ", " : " witness ") << format_cells(*file.ground, v->witness[i]);
    }
    std::cout << "\n";
    return kFalse;
  }
  std::cout << format_topology(validate_topology(file.ground, file.carrier, file.sets));
  return kOk;
}

int cmd_generate(const std::string& path) {
  FamilyFile file = load_family_file(path);
  std::cout << format_topology(generate(file.ground, file.carrier, file.sets));
  return kOk;
}

int cmd_op(const std::string& which, const std::string& a, const std::string& b) {
  SoftTopology ta = load_topology_file(a);
  SoftTopology tb = load_topology_file(b);
  std::cout << format_topology(which == "meet" ? meet(ta, tb) : join(ta, tb));
  return kOk;
}

int cmd_subspace(const std::string& path, const std::string& literal) {
  SoftTopology t = load_topology_file(path);
  std::cout << format_topology(relative_topology(t, parse_soft_set(literal, t.ground())));
  return kOk;
}

int cmd_check(const std::string& path, const std::string& prop,
              const std::optional<std::string>& literal) {
  SoftTopology t = load_topology_file(path);
  std::optional<CellMask> y;
  if (literal) y = parse_soft_set(*literal, t.ground()).cells();
  auto no_set = [&] {
    if (y) throw InputError("--prop " + prop + " takes no --set");
  };
  if (prop == "connected") {
    return print_bool(y ? is_connected_subset_cells(t, *y) : is_connected(t));
  }
  if (prop == "compact") return print_bool(y ? is_compact_subset_cells(t, *y) : is_compact(t));
  if (prop == "dense") {
    if (!y) throw InputError("--prop dense needs --set");
    return print_bool(is_dense_cells(t, *y));
  }
  no_set();
  if (prop == "t0") return print_bool(separation_axiom(t, Separation::t0));
  if (prop == "t1") return print_bool(separation_axiom(t, Separation::t1));
  if (prop == "t2") return print_bool(separation_axiom(t, Separation::t2));
  if (prop == "submaximal") return print_bool(is_submaximal(t));
  return print_bool(is_stable_space(t));  // stable
}

int cmd_maximal(const std::string& path, const std::string& prop, const std::string& method) {
  SoftTopology t = load_topology_file(path);
  const Property p = prop == "compact" ? Property::compact : Property::connected;
  if (!has_property(t, p)) return print_bool(false, " (not " + prop + ")");
  static const std::map<std::string, Method> methods{{"brute", Method::brute},
                                                     {"extension", Method::extension},
                                                     {"characterization", Method::characterization},
                                                     {"all", Method::all}};
  return print_bool(is_maximal(t, p, methods.at(method)));
}

int cmd_enumerate(std::size_t cells, std::size_t params, const std::optional<std::string>& dot,
                  bool counts, int threads, std::size_t guard) {
  if (params == 0 || cells % params != 0) {
    throw InputError("--cells must be a multiple of --params");
  }
  GroundPtr ground = make_ground(cells / params, params);
  EnumerateOptions options{guard, threads};
  if (dot) {
    LatticeOptions lopts;
    lopts.enumerate = options;
    TopologyLattice lattice = build_lattice(ground, lopts);
    if (lattice.check.failures != 0) {
      throw ConsistencyError("lattice bound check failed", std::to_string(lattice.check.failures) +
                                                               " subfamilies");
    }
    export_dot(lattice, *dot);
    std::cout << counts_line(cells, lattice.nodes.size()) << "\n";
    return kOk;
  }
  auto all = enumerate_topologies(ground, options);
  if (!counts) {
    std::cout << ground->header() << "\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::cout << i << " " << format_topology_inline(all[i]) << "\n";
    }
  }
  std::cout << counts_line(cells, all.size()) << "\n";
  return kOk;
}

int cmd_verify(const std::string& id, std::size_t bound, int threads) {
  VerifyOptions options{threads};
  std::vector<ClaimReport> reports;
  if (id == "all") {
    reports = verify_all(bound, options);
  } else {
    reports.push_back(verify_claim(id, bound, options));
  }
  bool failed = false;
  for (const auto& r : reports) {
    std::cout << format_report(r);
    failed = failed || (r.verdict == Verdict::counterexample && !r.observe);
  }
  return failed ? kFalse : kOk;
}

int cmd_symbolic(const std::string& family, const std::string& anchor_text,
                 const std::string& query, const std::optional<std::string>& literal,
                 const std::vector<std::string>& param_list) {
  std::vector<std::string> params = param_list;
  if (params.empty()) {
    // Anchor's parameter first, then any others the set mentions.
    auto open = anchor_text.find('(');
    auto close = anchor_text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      throw ParseError("expected an anchor like 1(e)", 1, 1);
    }
    std::string name = anchor_text.substr(open + 1, close - open - 1);
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    params.push_back(name);
    if (literal) {
      for (auto& p : symbolic_set_params(*literal)) {
        if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
      }
    }
  }
  SymbolicTopology t{parse_sym_family(family), params, parse_anchor(anchor_text, params)};
  if (query == "maximal") {
    if (literal) throw InputError("--query maximal takes no --set");
    const Property p = t.family == SymFamily::fort ? Property::compact : Property::connected;
    SymCertificate cert = sym_is_maximal(t, p);
    std::cout << cert.text;
    return cert.maximal ? kOk : kFalse;
  }
  const SymQuery q = parse_sym_query(query);
  if (q == SymQuery::connected_space) {
    if (literal) throw InputError("--query connected_space takes no --set");
    return print_bool(sym_query(t, SymbolicSoftSet::absolute(params), q));
  }
  if (!literal) throw InputError("--query " + query + " needs --set");
  return print_bool(sym_query(t, parse_symbolic_set(*literal, params), q));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft set algebra and soft topology workbench"};
  app.require_subcommand(1);

  std::string file;
  std::string file_b;
  std::string which;
  std::optional<std::string> set_literal;
  std::string prop;
  std::string method = "all";
  std::size_t cells = 0;
  std::size_t params = 1;
  std::optional<std::string> dot_path;
  bool counts = false;
  int threads = 0;
  std::size_t guard = kDefaultCellGuard;
  std::string claim;
  std::size_t bound = 3;
  std::string family;
  std::string anchor;
  std::string query;
  std::vector<std::string> sym_params;

  auto* validate = app.add_subcommand("validate", "Check the topology axioms");
  validate->add_option("file", file, "Topology file")->required();

  auto* gen = app.add_subcommand("generate", "Print the topology generated by a family");
  gen->add_option("file", file, "Family file")->required();

  auto* op = app.add_subcommand("op", "Meet or join of two topologies");
  op->add_option("which", which)->required()->check(CLI::IsMember({"meet", "join"}));
  op->add_option("a", file)->required();
  op->add_option("b", file_b)->required();

  auto* sub = app.add_subcommand("subspace", "Relative topology on a soft set");
  sub->add_option("file", file)->required();
  sub->add_option("--set", set_literal, "Soft set literal")->required();

  auto* check = app.add_subcommand("check", "Decide a property of a topology or soft set");
  check->add_option("file", file)->required();
  check->add_option("--prop", prop)
      ->required()
      ->check(CLI::IsMember(
          {"connected", "compact", "t0", "t1", "t2", "submaximal", "stable", "dense"}));
  check->add_option("--set", set_literal, "Soft set literal");

  auto* maximal = app.add_subcommand("maximal", "Maximal compact/connected test");
  maximal->add_option("file", file)->required();
  maximal->add_option("--prop", prop)->required()->check(CLI::IsMember({"compact", "connected"}));
  maximal->add_option("--method", method)
      ->check(CLI::IsMember({"brute", "extension", "characterization", "all"}));

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all topologies on a small ground");
  enumerate->add_option("--cells", cells, "Number of cells |E x Z|")->required();
  enumerate->add_option("--params", params, "Number of parameters (default 1)");
  enumerate->add_option("--dot", dot_path, "Write the Hasse diagram as DOT");
  enumerate->add_flag("--counts", counts, "Print only the count line");
  enumerate->add_option("--threads", threads, "Worker threads (1 = serial reference)");
  enumerate->add_option("--guard", guard, "Largest ground enumerated (default 4, at most 6)");

  auto* verify = app.add_subcommand("verify", "Exhaustively check a claim");
  verify->add_option("claim", claim, "Claim id or 'all'")->required();
  verify->add_option("--bound", bound, "Largest ground in cells")->required();
  verify->add_option("--threads", threads, "Worker threads (1 = serial reference)");

  auto* symbolic = app.add_subcommand("symbolic", "Queries on the infinite named topologies");
  symbolic->add_option("--family", family)->required()->check(CLI::IsMember({"fort", "pp", "ep"}));
  symbolic->add_option("--anchor", anchor, "Anchor soft point, e.g. 1(e)")->required();
  symbolic->add_option("--query", query)
      ->required()
      ->check(CLI::IsMember({"open", "closed", "compact", "dense", "connected_space", "maximal"}));
  symbolic->add_option("--set", set_literal, "Symbolic soft set literal");
  symbolic->add_option("--params", sym_params, "Parameter list (default: from anchor and set)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*gen) return cmd_generate(file);
    if (*op) return cmd_op(which, file, file_b);
    if (*sub) return cmd_subspace(file, *set_literal);
    if (*check) return cmd_check(file, prop, set_literal);
    if (*maximal) return cmd_maximal(file, prop, method);
    if (*enumerate) return cmd_enumerate(cells, params, dot_path, counts, threads, guard);
    if (*verify) return cmd_verify(claim, bound, threads);
    if (*symbolic) return cmd_symbolic(family, anchor, query, set_literal, sym_params);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacityError;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal disagreement: " << e.what() << "\n  witness: " << e.witness() << "\n";
    return kConsistencyError;
  }
  return kInputError;
}
