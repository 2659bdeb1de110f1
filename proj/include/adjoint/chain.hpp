#pragma once
// Adjoint-chain core: the per-step invariant tuple, the recurrence that
// advances a chain one step, the S1..S4 state machine, and whole-chain
// validation against the five chain rules.
//
// Conventions: alpha(i) is the degree D_i^2, beta(i) = D_i.K_i, gamma(i) =
// K_i^2, h(i) = alpha(i) - beta(i), and n(i) is the number of curves
// contracted when passing from step i to step i+1.  A chain of level l
// stores l+1 steps indexed 0..l; n at the last step has no successor, is
// stored as 0 and ignored by validation.

#include <string>
#include <vector>

#include <json.hpp>

#include "adjoint/errors.hpp"
#include "adjoint/ints.hpp"

namespace adjoint {

struct StepInvariants {
  Int alpha = 0;
  Int beta = 0;
  Int gamma = 0;
  Int h = 0;  // alpha - beta on consistent data
  Int n = 0;  // contracted-curve count, >= 0

  friend bool operator==(const StepInvariants&, const StepInvariants&) = default;
};

// Builds a step with h filled in as alpha - beta.
StepInvariants make_step(Int alpha, Int beta, Int gamma, Int n = 0);

// Sign classes of (gamma, beta).  gamma >= 0 with beta >= 0 is not a state
// of any chain; classify_state rejects those combinations.
//   S1: gamma < 0, beta >= 0      S2: gamma < 0, beta < 0
//   S3: gamma = 0, beta < 0       S4: gamma > 0, beta < 0
enum class AdjointState { S1 = 1, S2 = 2, S3 = 3, S4 = 4 };

AdjointState classify_state(Int gamma, Int beta);
int state_index(AdjointState s);
std::string state_name(AdjointState s);

// One step of the adjoint recurrence:
//   alpha' = alpha + 2*beta + gamma      beta'  = beta + gamma
//   gamma' = gamma + n                   h'     = h + 2*beta
// The returned step has n = 0, to be filled by the caller when known.
StepInvariants advance(const StepInvariants& cur);

struct AdjointChain {
  std::vector<StepInvariants> steps;  // nonempty, indexed 0..l
  Int p = 0;                          // arithmetic genus of the end pair, <= 0

  Int level() const { return static_cast<Int>(steps.size()) - 1; }
};

enum class RuleTag { H, B, Z, S, P, PARITY };
std::string rule_name(RuleTag t);

struct Violation {
  RuleTag tag;
  Int index;  // step the violation is reported at
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  bool has(RuleTag tag, Int index) const;
};

// Checks a chain against the five rules plus bookkeeping:
//   H  h(i+1) = h(i) + 2*beta(i), and h = alpha - beta at every step
//      (the alpha recurrence follows from these together with B);
//   B  beta(i+1) = beta(i) + gamma(i), reported at index i+1;
//   Z  h(i) >= 2 for 1 <= i <= l;
//   S  (gamma, beta) is a valid state at every step, state indices are
//      nondecreasing, gamma(i+1) = gamma(i) + n(i), and n(i) >= 0;
//   P  p <= 0, and gamma(l) > 0 when p = 0, gamma(l) = 8(p+1) when p < 0;
//   PARITY (strict mode only)  every h(i) is even.
// A single-step chain (l = 0) is valid when P holds; Z is vacuous there.
ValidationReport validate_chain(const AdjointChain& chain,
                                bool strict_parity = false);

// Thrown by callers that demand a valid chain (see realize_chain).
struct RuleViolation : DomainError {
  explicit RuleViolation(ValidationReport r);
  ValidationReport report;
};

// Arithmetic genus of the minimal pair a chain ends on:
// p = min(0, ceil(gamma_l / 8 - 1)).
Int genus_from_end(Int gamma_l);

// (alpha0 + beta0)/2 + 1; the sum must be even.
Int sectional_genus(Int alpha0, Int beta0);

// Ambient projective dimension (alpha0 - beta0)/2 + p; the difference must
// be even.
Int embedding_dim(Int alpha0, Int beta0, Int p);

//// Serialization ////

// {"p": ..., "steps": [{"n":..,"gamma":..,"beta":..,"h":..,"alpha":..}, ...]}
nlohmann::json chain_to_json(const AdjointChain& chain);
AdjointChain chain_from_json(const nlohmann::json& j);

// Transposed table layout, one row per quantity, in the order
// i / n / gamma / beta / h / alpha.  The final n cell is left blank.
std::string chain_to_markdown(const AdjointChain& chain);
std::string chain_to_csv(const AdjointChain& chain);

}  // namespace adjoint
