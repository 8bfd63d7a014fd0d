#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace softtop {

// A concrete instance a claim was checked on. Printed on one line as
//   ground Z=a,b E=e1 | T [{e1:{}}, ...] | Y {e1:{a}} | f p=1,0 q=0
// with T repeated per topology and Y per soft set.
struct Witness {
  GroundPtr ground;
  std::vector<SoftTopology> topologies;
  std::vector<CellMask> sets;
  std::optional<SoftFunction> map;
};

std::string format_witness(const Witness& w);
Witness parse_witness(std::string_view text);

enum class Verdict { pass, counterexample };

struct ClaimReport {
  std::string claim_id;
  std::size_t bound = 0;
  Verdict verdict = Verdict::pass;
  std::optional<Witness> witness;
  std::uint64_t instances = 0;
  // Extra report lines (observations, per-reading results).
  std::vector<std::string> findings;
  // Observe-mode claims never count as failures.
  bool observe = false;
};

// `claim=<id> bound=<n> verdict=<PASS|CE> witness=<literal or ->` followed by
// indented `instances:` and `finding:` lines.
std::string format_report(const ClaimReport& report);

struct ClaimInfo {
  std::string id;
  std::string statement;
  bool observe;
};

const std::vector<ClaimInfo>& claim_catalog();

struct VerifyOptions {
  int threads = 0;
};

inline constexpr std::size_t kMaxClaimBound = 4;

// Exhaustive scan over every ground with at most `bound` cells (all
// |E| x |Z| shapes), every topology on it, and whatever sets or maps the
// claim quantifies over. The first counterexample in canonical scan order
// becomes the witness, independent of the worker count.
ClaimReport verify_claim(std::string_view claim_id, std::size_t bound,
                         const VerifyOptions& options = {});
std::vector<ClaimReport> verify_all(std::size_t bound, const VerifyOptions& options = {});

// Re-checks a witness through the public checkers. True when the instance
// really violates the claim (for CN5, its literal reading).
bool replay_witness(std::string_view claim_id, const Witness& witness);

}  // namespace softtop
