#pragma once
// Brute-force oracle: exhaustive enumeration of rule-valid chains and
// exhaustive optimality checking of the construction algorithm, at desk
// scale.  Searches are bounded by explicit caps; whenever a cap actually
// constrained a result, the result carries an honesty flag instead of being
// silently truncated.

#include <optional>
#include <vector>

#include <json.hpp>

#include "adjoint/builder.hpp"
#include "adjoint/chain.hpp"
#include "adjoint/errors.hpp"
#include "adjoint/ints.hpp"

namespace adjoint {

struct SearchCaps {
  Int max_l = 20;           // deepest chain level explored
  Int max_n_per_step = 6;   // largest n(i) branch per step
  Int max_abs_gamma0 = 10;  // |gamma(0)| range for the root states

  friend bool operator==(const SearchCaps&, const SearchCaps&) = default;
};

// Which caps actually constrained a search result.  Flags are conservative:
// they may over-report (claim a cap might have mattered when it did not) but
// never under-report.
//   depth      - a node at level max_l still had an admissible child, or
//                allowing one extra level raised the tightness maximum;
//   n_per_step - some step's rule-admissible n range extended beyond the
//                cap (for p = 0 the terminal-jump direction is unbounded,
//                so this flag fires on most searches);
//   gamma0     - a returned chain or a successful root sits on the
//                +-max_abs_gamma0 boundary, so widening it may add chains.
struct CapsHit {
  bool depth = false;
  bool n_per_step = false;
  bool gamma0 = false;

  bool any() const { return depth || n_per_step || gamma0; }

  friend bool operator==(const CapsHit&, const CapsHit&) = default;
};

struct EnumerationResult {
  std::vector<AdjointChain> chains;  // deterministic order: gamma(0)
                                     // ascending, then prefix (pre-)order
                                     // with n ascending
  CapsHit caps_hit;

  // Largest level among the enumerated chains; -1 when none were found.
  Int max_length() const;
};

// Every rule-valid chain with start data (h0, beta0) and genus p whose
// level, per-step n, and gamma(0) fit within `caps`.  Each returned chain
// passes validate_chain (rule P included, so every chain ends validly).
EnumerationResult enumerate_chains(Int h0, Int beta0, Int p,
                                   const SearchCaps& caps = {});

struct TightnessResult {
  Int max_found = -1;
  AdjointChain witness;
  CapsHit caps_hit;
};

// Longest rule-valid chain within caps, with a witness attaining it.  The
// witness is reconstructed deterministically: the largest value-optimal
// gamma(0), then the smallest value-optimal n at every step.  Asserts
// max_found <= theorem_bound (a violation would falsify the bound and is
// reported as InternalError).  Throws NoValidChain when no rule-valid chain
// exists within caps.
TightnessResult verify_tightness(Int h0, Int beta0, Int p,
                                 const SearchCaps& caps = {});

// Report of one optimality check of construct_adjoint_chain against the
// exhaustive candidate class {m : alpha0_from(l, end, m) = c}.  The level
// bound ltilde of a candidate m is theorem_bound(c, beta0_from(l, end, m),
// p); candidates whose h(0) < 2 fall outside the bound's domain and are
// excluded.  mismatch is set when some candidate has a strictly smaller
// ltilde than the algorithm's output (then better_n holds one such vector,
// chosen with maximal weighted sum among the best).
struct OptimalityReport {
  Int l = 0;
  EndPair end;
  Int c = 0;
  Int p = 0;
  bool feasible = false;  // construct_adjoint_chain returned a vector

  ContractionVector algorithm_n;             // empty unless feasible
  std::optional<Int> algorithm_l_tilde;      // unset when h(0) < 2
  std::optional<Int> best_l_tilde;           // min over candidates
  bool mismatch = false;
  std::optional<ContractionVector> better_n;

  // Diagnostics over the candidate class (all with alpha(0) = c):
  Int algorithm_sum_n = 0;
  Int algorithm_weighted_sum = 0;  // sum (i+1) n(i)
  Int min_sum_n = 0;
  Int min_weighted_sum = 0;
  Int max_weighted_sum = 0;

  CapsHit caps_hit;
};

// Exhaustively compares the algorithm's output on (l, end, c) against every
// n-vector with the same start degree.  Entries are bounded by the weight
// budget itself (n(i) <= (C - c)/(i+1)^2 where C is the degree at n = 0),
// not by caps.max_n_per_step — the algorithm's own output may exceed that
// cap.  caps.max_l still gates l.
OptimalityReport verify_algorithm_optimality(Int l, const EndPair& end, Int c,
                                             const SearchCaps& caps = {});

//// Serialization ////

nlohmann::json caps_hit_json(const CapsHit& hit);

// {"grid": {...}, "count": ..., "max_length": ..., "chains": [...],
//  "caps_hit": {...}}
nlohmann::json enumeration_result_json(Int h0, Int beta0, Int p,
                                       const EnumerationResult& result);

// {"grid": {...}, "max_found": ..., "theorem_bound": ..., "witness": {...},
//  "mismatches": [...], "caps_hit": {...}} where mismatches compares
// max_found against max_level on the same start data.
nlohmann::json tightness_report_json(Int h0, Int beta0, Int p,
                                     const TightnessResult& result);

// {"grid": {...}, "feasible": ..., "algorithm_n": ..., "best_l_tilde": ...,
//  "mismatches": [...], "diagnostics": {...}, "caps_hit": {...}}
nlohmann::json optimality_report_json(const OptimalityReport& report);

}  // namespace adjoint
