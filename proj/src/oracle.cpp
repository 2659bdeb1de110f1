#include "adjoint/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>

#include "adjoint/bounds.hpp"

namespace adjoint {

namespace {

constexpr Int kNoEnd = std::numeric_limits<Int>::min() / 4;
constexpr Int kUnbounded = std::numeric_limits<Int>::max() / 4;

// Resource guards: the oracle is a desk-scale instrument, not a prover.
constexpr Int kMaxOracleDepth = 10000;
constexpr std::size_t kThetaBits = 1200;

void check_caps(const SearchCaps& caps) {
  if (caps.max_l < 1 || caps.max_n_per_step < 1 || caps.max_abs_gamma0 < 1) {
    throw DomainError("oracle: search caps must all be positive");
  }
  if (caps.max_l > kMaxOracleDepth) {
    throw DomainError("oracle: caps.max_l exceeds the supported depth " +
                      std::to_string(kMaxOracleDepth));
  }
}

void check_start(Int h0, Int p) {
  if (h0 < 2) {
    throw DomainError("oracle: start requires h(0) >= 2, got " +
                      std::to_string(h0));
  }
  if (p > 0) {
    throw DomainError("oracle: genus must satisfy p <= 0, got " +
                      std::to_string(p));
  }
}

// End value of gamma for p <= -1; unused for p = 0 (any gamma > 0 ends).
Int end_gamma_target(Int p) { return checked_mul(8, checked_add(p, 1)); }

bool gamma_ends(Int p, Int t, Int gamma) {
  return p == 0 ? gamma > 0 : gamma == t;
}

// Largest gamma' the rules admit for a child with the given beta'.
// gamma is nondecreasing, so for p <= -1 it may never exceed the end value.
Int gamma_upper_rule(Int p, Int t, Int child_beta) {
  if (p <= -1) {
    return child_beta >= 0 ? std::min<Int>(-1, t) : t;
  }
  return child_beta >= 0 ? -1 : kUnbounded;
}

struct ChildRange {
  Int child_h = 0;
  Int child_beta = 0;
  Int n_max = -1;  // -1: no admissible child
};

// Admissible n range for expanding `step` one level, clamped by the caps.
// Sets hit.n_per_step when the rule-admissible room extends past the cap.
ChildRange child_range(const StepInvariants& step, Int p, Int t,
                       const SearchCaps& caps, CapsHit& hit) {
  ChildRange range;
  range.child_h = checked_add(step.h, checked_mul(2, step.beta));
  if (range.child_h < 2) return range;
  range.child_beta = checked_add(step.beta, step.gamma);
  const Int upper = gamma_upper_rule(p, t, range.child_beta);
  if (upper == kUnbounded) {
    hit.n_per_step = true;
    range.n_max = caps.max_n_per_step;
    return range;
  }
  const Int room = checked_sub(upper, step.gamma);
  if (room < 0) {
    range.n_max = -1;
    return range;
  }
  if (room > caps.max_n_per_step) hit.n_per_step = true;
  range.n_max = std::min(room, caps.max_n_per_step);
  return range;
}

// Admissible gamma(0) interval [lo, hi] for the given start, clamped by the
// caps; upper_capped reports whether the state-admissible range continued
// past hi.
struct RootRange {
  Int lo = 0;
  Int hi = -1;
  bool upper_capped = false;
};

RootRange root_range(Int beta0, Int p, Int t, const SearchCaps& caps) {
  RootRange range;
  Int upper_state;
  if (beta0 >= 0) {
    upper_state = p <= -1 ? std::min<Int>(-1, t) : -1;
  } else {
    upper_state = p <= -1 ? t : kUnbounded;
  }
  range.lo = -caps.max_abs_gamma0;
  range.hi = std::min(upper_state, caps.max_abs_gamma0);
  range.upper_capped = upper_state > caps.max_abs_gamma0;
  return range;
}

class ChainEnumerator {
 public:
  ChainEnumerator(Int p, const SearchCaps& caps) : p_(p), caps_(caps) {
    t_ = p_ <= -1 ? end_gamma_target(p_) : 0;
  }

  EnumerationResult run(Int h0, Int beta0) {
    EnumerationResult result;
    const RootRange roots = root_range(beta0, p_, t_, caps_);
    const Int alpha0 = checked_add(h0, beta0);
    for (Int g0 = roots.lo; g0 <= roots.hi; ++g0) {
      prefix_.clear();
      dfs(make_step(alpha0, beta0, g0), 0, result);
    }
    for (const AdjointChain& chain : result.chains) {
      const Int g0 = chain.steps.front().gamma;
      if (g0 == roots.lo || (roots.upper_capped && g0 == roots.hi)) {
        result.caps_hit.gamma0 = true;
      }
    }
    return result;
  }

 private:
  void dfs(const StepInvariants& step, Int depth, EnumerationResult& result) {
    prefix_.push_back(step);
    if (gamma_ends(p_, t_, step.gamma)) {
      AdjointChain chain{prefix_, p_};
      const ValidationReport report = validate_chain(chain);
      if (!report.ok) {
        throw InternalError(
            "oracle: enumerated a chain that fails validation");
      }
      result.chains.push_back(std::move(chain));
    }
    const ChildRange range =
        child_range(step, p_, t_, caps_, result.caps_hit);
    if (range.n_max >= 0) {
      if (depth < caps_.max_l) {
        for (Int n = 0; n <= range.n_max; ++n) {
          prefix_.back().n = n;
          dfs(advance(prefix_.back()), depth + 1, result);
        }
        prefix_.back().n = 0;
      } else {
        result.caps_hit.depth = true;
      }
    }
    prefix_.pop_back();
  }

  Int p_;
  SearchCaps caps_;
  Int t_ = 0;
  std::vector<StepInvariants> prefix_;
};

struct SearchNode {
  Int h = 0;
  Int beta = 0;
  Int gamma = 0;
  Int depth_left = 0;

  friend bool operator==(const SearchNode&, const SearchNode&) = default;
};

struct SearchNodeHash {
  std::size_t operator()(const SearchNode& node) const {
    std::size_t seed = 0;
    for (Int v : {node.h, node.beta, node.gamma, node.depth_left}) {
      seed ^= std::hash<Int>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
              (seed >> 2);
    }
    return seed;
  }
};

// Depth-capped longest-completion search over the same transition system as
// ChainEnumerator.  value() counts the further levels reachable from a node
// with the given depth budget, or kNoEnd when no valid end is reachable.
class CappedLevelSearch {
 public:
  CappedLevelSearch(Int p, const SearchCaps& caps) : p_(p), caps_(caps) {
    t_ = p_ <= -1 ? end_gamma_target(p_) : 0;
  }

  Int value(const StepInvariants& step, Int depth_left) {
    // Once beta < 0, h drops by at least 2 per level, so no completion can
    // use more than (h - 2)/2 further steps; clamping the budget there
    // collapses equivalent memo entries.
    if (step.beta < 0) {
      depth_left = std::min(depth_left, (step.h - 2) / 2 + 1);
    }
    const SearchNode key{step.h, step.beta, step.gamma, depth_left};
    if (const auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    Int best = gamma_ends(p_, t_, step.gamma) ? 0 : kNoEnd;
    const ChildRange range = child_range(step, p_, t_, caps_, hit_);
    if (depth_left > 0 && range.n_max >= 0) {
      for (Int n = 0; n <= range.n_max; ++n) {
        StepInvariants cur = step;
        cur.n = n;
        const Int v = value(advance(cur), depth_left - 1);
        if (v != kNoEnd) best = std::max(best, v + 1);
      }
    }
    memo_.emplace(key, best);
    return best;
  }

  const CapsHit& hit() const { return hit_; }
  Int end_target() const { return t_; }

 private:
  Int p_;
  SearchCaps caps_;
  Int t_ = 0;
  CapsHit hit_;
  std::unordered_map<SearchNode, Int, SearchNodeHash> memo_;
};

nlohmann::json grid_json(Int h0, Int beta0, Int p) {
  return {{"h0", h0}, {"beta0", beta0}, {"p", p}};
}

}  // namespace

Int EnumerationResult::max_length() const {
  Int best = -1;
  for (const AdjointChain& chain : chains) {
    best = std::max(best, chain.level());
  }
  return best;
}

EnumerationResult enumerate_chains(Int h0, Int beta0, Int p,
                                   const SearchCaps& caps) {
  check_caps(caps);
  check_start(h0, p);
  return ChainEnumerator(p, caps).run(h0, beta0);
}

TightnessResult verify_tightness(Int h0, Int beta0, Int p,
                                 const SearchCaps& caps) {
  check_caps(caps);
  check_start(h0, p);
  CappedLevelSearch search(p, caps);
  const RootRange roots = root_range(beta0, p, search.end_target(), caps);
  const Int alpha0 = checked_add(h0, beta0);

  Int best = kNoEnd;
  Int best_plus = kNoEnd;  // with one extra level, for the depth flag
  bool boundary_root_ends = false;
  for (Int g0 = roots.lo; g0 <= roots.hi; ++g0) {
    const StepInvariants root = make_step(alpha0, beta0, g0);
    const Int v = search.value(root, caps.max_l);
    best = std::max(best, v);
    best_plus = std::max(best_plus, search.value(root, caps.max_l + 1));
    if (v != kNoEnd &&
        (g0 == roots.lo || (roots.upper_capped && g0 == roots.hi))) {
      boundary_root_ends = true;
    }
  }
  if (best == kNoEnd) {
    throw NoValidChain("no rule-valid chain within the search caps from (" +
                       std::to_string(h0) + ", " + std::to_string(beta0) +
                       "), p = " + std::to_string(p));
  }

  TightnessResult result;
  result.max_found = best;
  result.caps_hit = search.hit();
  result.caps_hit.depth = best_plus > best;
  result.caps_hit.gamma0 = boundary_root_ends;

  // Witness: largest value-optimal root, then smallest value-optimal n.
  CapsHit scratch;
  Int root_gamma = roots.lo;
  for (Int g0 = roots.hi; g0 >= roots.lo; --g0) {
    if (search.value(make_step(alpha0, beta0, g0), caps.max_l) == best) {
      root_gamma = g0;
      break;
    }
  }
  std::vector<StepInvariants> steps;
  steps.push_back(make_step(alpha0, beta0, root_gamma));
  Int remaining = best;
  Int depth_left = caps.max_l;
  while (remaining > 0) {
    const ChildRange range = child_range(steps.back(), p,
                                         search.end_target(), caps, scratch);
    bool advanced = false;
    for (Int n = 0; n <= range.n_max && !advanced; ++n) {
      steps.back().n = n;
      const StepInvariants child = advance(steps.back());
      if (search.value(child, depth_left - 1) == remaining - 1) {
        steps.push_back(child);
        advanced = true;
      }
    }
    if (!advanced) {
      throw InternalError("oracle: witness reconstruction lost the optimum");
    }
    --remaining;
    --depth_left;
  }
  result.witness = AdjointChain{std::move(steps), p};
  if (!validate_chain(result.witness).ok) {
    throw InternalError("oracle: tightness witness fails validation");
  }

  const Int bound = theorem_bound(alpha0, beta0, p);
  if (result.max_found > bound) {
    throw InternalError("oracle: found a chain of length " +
                        std::to_string(result.max_found) +
                        " exceeding theorem_bound = " + std::to_string(bound));
  }
  return result;
}

namespace {

using ThetaSet = std::bitset<kThetaBits>;

// Smallest count backtrack through the per-item reachability stages:
// stages[i] covers items 0..i-1; find n with weight exactly w and weighted
// sum exactly theta.
ContractionVector backtrack_vector(
    const std::vector<std::vector<ThetaSet>>& stages, Int l, Int w,
    Int theta) {
  ContractionVector n(static_cast<std::size_t>(l), 0);
  for (Int j = l - 1; j >= 0; --j) {
    const Int s = checked_mul(j + 1, j + 1);
    const Int v = j + 1;
    bool found = false;
    for (Int k = 0; !found && k * s <= w && k * v <= theta; ++k) {
      if (stages[static_cast<std::size_t>(j)]
                [static_cast<std::size_t>(w - k * s)]
                    .test(static_cast<std::size_t>(theta - k * v))) {
        n[static_cast<std::size_t>(j)] = k;
        w -= k * s;
        theta -= k * v;
        found = true;
      }
    }
    if (!found) {
      throw InternalError("oracle: optimality backtrack lost reachability");
    }
  }
  if (w != 0 || theta != 0) {
    throw InternalError("oracle: optimality backtrack did not zero out");
  }
  return n;
}

}  // namespace

OptimalityReport verify_algorithm_optimality(Int l, const EndPair& end, Int c,
                                             const SearchCaps& caps) {
  check_caps(caps);
  if (l < 1) {
    throw DomainError("verify_algorithm_optimality requires l >= 1, got " +
                      std::to_string(l));
  }
  if (c < 1) {
    throw DomainError("verify_algorithm_optimality requires c >= 1, got " +
                      std::to_string(c));
  }
  if (l > caps.max_l) {
    throw DomainError("verify_algorithm_optimality: l exceeds caps.max_l");
  }

  OptimalityReport report;
  report.l = l;
  report.end = end;
  report.c = c;
  report.p = genus_from_end(end.gamma_l);

  const ContractionVector zero(static_cast<std::size_t>(l), 0);
  const Int big_c = alpha0_from(l, end, zero);
  const Int budget = checked_sub(big_c, c);  // weight that must be removed

  const auto algorithm = construct_adjoint_chain(l, end, c);
  report.feasible = algorithm.has_value();
  if (!report.feasible) {
    if (budget >= 0) {
      throw InternalError(
          "oracle: algorithm reported infeasible despite a nonnegative "
          "weight budget");
    }
    return report;  // candidate class is empty as well
  }
  if (budget < 0) {
    throw InternalError("oracle: algorithm produced a vector with no budget");
  }
  if (budget >= static_cast<Int>(kThetaBits)) {
    throw DomainError("verify_algorithm_optimality: weight budget " +
                      std::to_string(budget) +
                      " exceeds the supported table size");
  }

  report.algorithm_n = *algorithm;
  for (Int j = 0; j < l; ++j) {
    const Int nj = (*algorithm)[static_cast<std::size_t>(j)];
    report.algorithm_sum_n = checked_add(report.algorithm_sum_n, nj);
    report.algorithm_weighted_sum =
        checked_add(report.algorithm_weighted_sum, checked_mul(j + 1, nj));
  }

  // stages[i][w]: weighted sums theta achievable with items 0..i-1 (item j
  // has weight (j+1)^2 and value j+1, unbounded count) at weight exactly w.
  const auto W = static_cast<std::size_t>(budget);
  std::vector<std::vector<ThetaSet>> stages(
      static_cast<std::size_t>(l) + 1, std::vector<ThetaSet>(W + 1));
  stages[0][0].set(0);
  for (std::size_t i = 1; i <= static_cast<std::size_t>(l); ++i) {
    const auto s = static_cast<std::size_t>(i * i);
    for (std::size_t w = 0; w <= W; ++w) {
      stages[i][w] = stages[i - 1][w];
      if (w >= s) stages[i][w] |= stages[i][w - s] << i;
    }
  }
  const ThetaSet& reachable = stages[static_cast<std::size_t>(l)][W];
  if (!reachable.test(
          static_cast<std::size_t>(report.algorithm_weighted_sum))) {
    throw InternalError(
        "oracle: algorithm output missing from the reachability table");
  }

  // Minimal total count at each exact weight (theta-agnostic diagnostic).
  std::vector<Int> min_count(W + 1, kUnbounded);
  min_count[0] = 0;
  for (Int j = 0; j < l; ++j) {
    const auto s = static_cast<std::size_t>((j + 1) * (j + 1));
    for (std::size_t w = s; w <= W; ++w) {
      if (min_count[w - s] != kUnbounded) {
        min_count[w] = std::min(min_count[w], min_count[w - s] + 1);
      }
    }
  }
  report.min_sum_n = min_count[W];

  const Int beta_base =
      checked_sub(end.beta_l, checked_mul(end.gamma_l, l));
  bool have_theta = false;
  Int best_ltilde = kUnbounded;
  Int best_theta = -1;  // maximal theta among the ltilde-minimal candidates
  for (std::size_t theta = 0; theta <= W; ++theta) {
    if (!reachable.test(theta)) continue;
    const Int th = static_cast<Int>(theta);
    if (!have_theta) {
      report.min_weighted_sum = th;
      have_theta = true;
    }
    report.max_weighted_sum = th;
    const Int beta0 = checked_add(beta_base, th);
    if (checked_sub(c, beta0) < 2) continue;  // outside the bound's domain
    const Int lt = theorem_bound(c, beta0, report.p);
    if (lt < best_ltilde || (lt == best_ltilde && th > best_theta)) {
      best_ltilde = lt;
      best_theta = th;
    }
  }

  const Int algo_beta0 = checked_add(beta_base, report.algorithm_weighted_sum);
  if (checked_sub(c, algo_beta0) >= 2) {
    report.algorithm_l_tilde = theorem_bound(c, algo_beta0, report.p);
  }
  if (best_theta >= 0) report.best_l_tilde = best_ltilde;

  if (report.algorithm_l_tilde && report.best_l_tilde &&
      *report.best_l_tilde < *report.algorithm_l_tilde) {
    report.mismatch = true;
    report.better_n = backtrack_vector(stages, l, budget, best_theta);
  }
  return report;
}

nlohmann::json caps_hit_json(const CapsHit& hit) {
  return {{"depth", hit.depth},
          {"n_per_step", hit.n_per_step},
          {"gamma0", hit.gamma0}};
}

nlohmann::json enumeration_result_json(Int h0, Int beta0, Int p,
                                       const EnumerationResult& result) {
  nlohmann::json chains = nlohmann::json::array();
  for (const AdjointChain& chain : result.chains) {
    chains.push_back(chain_to_json(chain));
  }
  return {{"grid", grid_json(h0, beta0, p)},
          {"count", result.chains.size()},
          {"max_length", result.max_length()},
          {"chains", std::move(chains)},
          {"caps_hit", caps_hit_json(result.caps_hit)}};
}

nlohmann::json tightness_report_json(Int h0, Int beta0, Int p,
                                     const TightnessResult& result) {
  nlohmann::json mismatches = nlohmann::json::array();
  const Int exact = max_level(h0, beta0, p);
  if (exact != result.max_found) {
    mismatches.push_back(
        {{"max_found", result.max_found}, {"max_level", exact}});
  }
  return {{"grid", grid_json(h0, beta0, p)},
          {"max_found", result.max_found},
          {"theorem_bound",
           theorem_bound(checked_add(h0, beta0), beta0, p)},
          {"witness", chain_to_json(result.witness)},
          {"mismatches", std::move(mismatches)},
          {"caps_hit", caps_hit_json(result.caps_hit)}};
}

nlohmann::json optimality_report_json(const OptimalityReport& report) {
  nlohmann::json j;
  j["grid"] = {{"l", report.l},
               {"alpha_l", report.end.alpha_l},
               {"beta_l", report.end.beta_l},
               {"gamma_l", report.end.gamma_l},
               {"c", report.c},
               {"p", report.p}};
  j["feasible"] = report.feasible;
  j["algorithm_n"] = report.feasible
                         ? nlohmann::json(report.algorithm_n)
                         : nlohmann::json(nullptr);
  j["algorithm_l_tilde"] = report.algorithm_l_tilde
                               ? nlohmann::json(*report.algorithm_l_tilde)
                               : nlohmann::json(nullptr);
  j["best_l_tilde"] = report.best_l_tilde
                          ? nlohmann::json(*report.best_l_tilde)
                          : nlohmann::json(nullptr);
  nlohmann::json mismatches = nlohmann::json::array();
  if (report.mismatch) {
    mismatches.push_back({{"algorithm_n", report.algorithm_n},
                          {"algorithm_l_tilde", *report.algorithm_l_tilde},
                          {"better_n", *report.better_n},
                          {"better_l_tilde", *report.best_l_tilde}});
  }
  j["mismatches"] = std::move(mismatches);
  if (report.feasible) {
    j["diagnostics"] = {
        {"algorithm_sum_n", report.algorithm_sum_n},
        {"algorithm_weighted_sum", report.algorithm_weighted_sum},
        {"min_sum_n", report.min_sum_n},
        {"min_weighted_sum", report.min_weighted_sum},
        {"max_weighted_sum", report.max_weighted_sum}};
  }
  j["caps_hit"] = caps_hit_json(report.caps_hit);
  return j;
}

}  // namespace adjoint
