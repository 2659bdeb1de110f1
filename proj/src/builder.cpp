#include "adjoint/builder.hpp"

#include <cstddef>
#include <utility>

namespace adjoint {

namespace {

void require_length(Int l, const ContractionVector& n, const char* who) {
  if (l < 0) throw DomainError(std::string(who) + ": l must be >= 0");
  if (static_cast<Int>(n.size()) != l) {
    throw LengthMismatch(std::string(who) + ": n must have exactly l entries");
  }
}

}  // namespace

Int alpha0_from(Int l, const EndPair& end, const ContractionVector& n) {
  require_length(l, n, "alpha0_from");
  // gamma(l) l^2 - 2 beta(l) l + alpha(l) - sum (i+1)^2 n(i)
  Int value = checked_mul(end.gamma_l, checked_mul(l, l));
  value = checked_sub(value, checked_mul(checked_mul(2, end.beta_l), l));
  value = checked_add(value, end.alpha_l);
  for (std::size_t i = 0; i < n.size(); ++i) {
    const Int weight = static_cast<Int>(i) + 1;
    value = checked_sub(value, checked_mul(checked_mul(weight, weight), n[i]));
  }
  return value;
}

Int beta0_from(Int l, const EndPair& end, const ContractionVector& n) {
  require_length(l, n, "beta0_from");
  // -gamma(l) l + beta(l) + sum (i+1) n(i)
  Int value = checked_sub(end.beta_l, checked_mul(end.gamma_l, l));
  for (std::size_t i = 0; i < n.size(); ++i) {
    const Int weight = static_cast<Int>(i) + 1;
    value = checked_add(value, checked_mul(weight, n[i]));
  }
  return value;
}

Int gamma0_from(const EndPair& end, const ContractionVector& n) {
  Int value = end.gamma_l;
  for (const Int entry : n) value = checked_sub(value, entry);
  return value;
}

std::optional<ContractionVector> construct_adjoint_chain(Int l,
                                                         const EndPair& end,
                                                         Int c) {
  if (l < 1) throw DomainError("construct_adjoint_chain: l must be >= 1");
  if (c < 1) throw DomainError("construct_adjoint_chain: c must be >= 1");
  ContractionVector n(static_cast<std::size_t>(l), 0);
  for (;;) {
    // Find the maximal index j <= l-1 such that alpha(0) stays >= c when
    // n(j) is incremented; alpha(0) loses (j+1)^2 per increment, so the
    // admissible j form a prefix and a linear scan suffices.
    Int j = -1;
    ContractionVector m = n;
    while (alpha0_from(l, end, m) >= c && j <= l - 2) {
      ++j;
      m = n;
      ++m[static_cast<std::size_t>(j)];
    }
    if (alpha0_from(l, end, m) < c) --j;

    if (j >= 0) {
      ++n[static_cast<std::size_t>(j)];
    } else if (alpha0_from(l, end, n) >= c) {
      // No index is incrementable, so alpha(0) - 1 < c <= alpha(0): the
      // start degree is exactly c.
      if (alpha0_from(l, end, n) != c) {
        throw InternalError(
            "construct_adjoint_chain: terminated with alpha(0) != c");
      }
      return n;
    } else {
      return std::nullopt;
    }
  }
}

AdjointChain realize_chain(Int l, const EndPair& end,
                           const ContractionVector& n, bool strict_parity,
                           bool validate) {
  require_length(l, n, "realize_chain");
  AdjointChain chain;
  chain.p = genus_from_end(end.gamma_l);
  StepInvariants step =
      make_step(alpha0_from(l, end, n), beta0_from(l, end, n),
                gamma0_from(end, n), l > 0 ? n[0] : 0);
  chain.steps.push_back(step);
  for (Int i = 1; i <= l; ++i) {
    step = advance(step);
    step.n = i < l ? n[static_cast<std::size_t>(i)] : 0;
    chain.steps.push_back(step);
  }
  const StepInvariants& last = chain.steps.back();
  if (last.alpha != end.alpha_l || last.beta != end.beta_l ||
      last.gamma != end.gamma_l) {
    throw EndMismatch(
        "realize_chain: the forward roll does not reproduce the end pair");
  }
  if (validate) {
    ValidationReport report = validate_chain(chain, strict_parity);
    if (!report.ok) throw RuleViolation(std::move(report));
  }
  return chain;
}

std::string pair_kind_name(const MinimalPairKind& kind) {
  if (kind.family == PairFamily::WeakDelPezzo) {
    std::string lambda = std::to_string(kind.lambda_num);
    if (kind.lambda_den != 1) {
      lambda += "/" + std::to_string(kind.lambda_den);
    }
    return "weak Del Pezzo (lambda = " + lambda + ")";
  }
  const char* relation =
      kind.variant == RuledVariant::DEqualsKF ? "D = kF" : "2D+K = kF";
  return std::string("geometrically ruled (") + relation +
         ", k = " + std::to_string(kind.k) + ", p = " + std::to_string(kind.p) +
         ")";
}

MinimalPairKind classify_end_pair(const EndPair& end) {
  const Int a = end.alpha_l;
  const Int b = end.beta_l;
  const Int g = end.gamma_l;

  // Weak Del Pezzo profiles (lambda^2 g, -lambda g, g) with 1 <= g <= 9.
  if (g >= 1 && g <= 9) {
    MinimalPairKind kind;
    kind.family = PairFamily::WeakDelPezzo;
    if (a == g && b == -g) {
      kind.lambda_num = 1;
      kind.lambda_den = 1;
      return kind;
    }
    if (g == 8 && a == 2 && b == -4) {
      kind.lambda_num = 1;
      kind.lambda_den = 2;
      return kind;
    }
    if (g == 9 && a == 1 && b == -3) {
      kind.lambda_num = 1;
      kind.lambda_den = 3;
      return kind;
    }
    if (g == 9 && a == 4 && b == -6) {
      kind.lambda_num = 2;
      kind.lambda_den = 3;
      return kind;
    }
  }

  // Geometrically ruled profiles need gamma(l) = 8(p+1) with p <= 0.
  if (g <= 8 && g % 8 == 0) {
    const Int p = g / 8 - 1;
    if (a == 0 && b <= -2 && b % 2 == 0) {
      MinimalPairKind kind;
      kind.family = PairFamily::GeomRuled;
      kind.variant = RuledVariant::DEqualsKF;
      kind.k = -b / 2;
      kind.p = p;
      return kind;
    }
    // 2D+K = kF: squaring the relation gives 4 alpha + 4 beta + gamma = 0,
    // and k = -(2 beta + gamma)/2 (integral since gamma is even here).
    const Int square =
        checked_add(checked_mul(4, checked_add(a, b)), g);
    const Int two_k = checked_sub(0, checked_add(checked_mul(2, b), g));
    if (square == 0 && two_k >= 2) {
      MinimalPairKind kind;
      kind.family = PairFamily::GeomRuled;
      kind.variant = RuledVariant::TwoDPlusKEqualsKF;
      kind.k = two_k / 2;
      kind.p = p;
      return kind;
    }
  }
  throw Unclassifiable("classify_end_pair: (" + std::to_string(a) + ", " +
                       std::to_string(b) + ", " + std::to_string(g) +
                       ") matches no minimal-pair profile");
}

Int keel_of_chain(const AdjointChain& chain) {
  if (chain.steps.empty()) {
    throw DomainError("keel_of_chain: the chain has no steps");
  }
  const StepInvariants& last = chain.steps.back();
  const MinimalPairKind kind =
      classify_end_pair({last.alpha, last.beta, last.gamma});
  if (kind.family == PairFamily::WeakDelPezzo) return 0;
  if (chain.level() >= 1) {
    // Cross-check against the penultimate step; rule B makes the two
    // routes agree on any consistent chain, so a mismatch is a bug.
    const StepInvariants& pen = chain.steps[chain.steps.size() - 2];
    const Int base = checked_add(pen.beta, pen.gamma);
    const Int expected = kind.variant == RuledVariant::DEqualsKF
                             ? base
                             : checked_add(checked_mul(2, base), last.gamma);
    if (checked_mul(-2, kind.k) != expected) {
      throw InternalError(
          "keel_of_chain: end-profile and penultimate-step routes disagree");
    }
  }
  return kind.k;
}

nlohmann::json construct_case_to_json(const ConstructCase& c) {
  nlohmann::json j;
  j["l"] = c.l;
  j["alpha_l"] = c.end.alpha_l;
  j["beta_l"] = c.end.beta_l;
  j["gamma_l"] = c.end.gamma_l;
  j["c"] = c.c;
  if (c.n) {
    j["n"] = *c.n;
  } else {
    j["n"] = nullptr;
  }
  return j;
}

ConstructCase construct_case_from_json(const nlohmann::json& j) {
  ConstructCase c;
  c.l = j.at("l").get<Int>();
  c.end.alpha_l = j.at("alpha_l").get<Int>();
  c.end.beta_l = j.at("beta_l").get<Int>();
  c.end.gamma_l = j.at("gamma_l").get<Int>();
  c.c = j.at("c").get<Int>();
  if (j.contains("n") && !j.at("n").is_null()) {
    c.n = j.at("n").get<ContractionVector>();
  }
  return c;
}

}  // namespace adjoint
