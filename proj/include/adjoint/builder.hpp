#pragma once
// Chain construction: the backward formulas from an end pair and a
// contraction vector to the start invariants, the greedy algorithm that
// picks a contraction vector for a prescribed start degree, realization of
// the full chain, end-pair classification, and the keel.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adjoint/chain.hpp"
#include "adjoint/errors.hpp"
#include "adjoint/ints.hpp"

namespace adjoint {

// Invariants (alpha(l), beta(l), gamma(l)) of the minimal pair a chain
// ends on.
struct EndPair {
  Int alpha_l = 0;
  Int beta_l = 0;
  Int gamma_l = 0;

  friend bool operator==(const EndPair&, const EndPair&) = default;
};

// Contraction counts n(0)..n(l-1); all entries >= 0.
using ContractionVector = std::vector<Int>;

// alpha(0) = gamma(l) l^2 - 2 beta(l) l + alpha(l) - sum (i+1)^2 n(i).
Int alpha0_from(Int l, const EndPair& end, const ContractionVector& n);

// beta(0) = -gamma(l) l + beta(l) + sum (i+1) n(i).
Int beta0_from(Int l, const EndPair& end, const ContractionVector& n);

// gamma(0) = gamma(l) - sum n(i).
Int gamma0_from(const EndPair& end, const ContractionVector& n);

// Greedy construction of the contraction vector for a level-l chain down to
// `end` whose start degree is c: repeatedly increment n(j) at the largest
// index j <= l-1 that keeps alpha(0) >= c.  Returns the vector once no index
// is incrementable (alpha(0) is then exactly c), or nullopt when even
// n = [0,...,0] gives alpha(0) < c.
std::optional<ContractionVector> construct_adjoint_chain(Int l,
                                                         const EndPair& end,
                                                         Int c);

// Rolls a chain forward from the start invariants implied by (l, end, n),
// cross-checks that the final step reproduces `end` (EndMismatch otherwise;
// that would be a bug, not bad input), and validates the chain against the
// chain rules (RuleViolation).  With validate = false the chain is returned
// unvalidated, which lets deliberately broken vectors through for testing.
AdjointChain realize_chain(Int l, const EndPair& end,
                           const ContractionVector& n,
                           bool strict_parity = false, bool validate = true);

enum class PairFamily { WeakDelPezzo, GeomRuled };

// Which relation a geometrically ruled end satisfies: D = kF, or
// 2D + K = kF.
enum class RuledVariant { DEqualsKF, TwoDPlusKEqualsKF };

struct MinimalPairKind {
  PairFamily family = PairFamily::WeakDelPezzo;
  // Weak Del Pezzo: lambda = lambda_num / lambda_den in {1, 1/2, 1/3, 2/3}.
  Int lambda_num = 1;
  Int lambda_den = 1;
  // Geometrically ruled: the relation variant, the keel k >= 1, and the
  // arithmetic genus p <= 0.
  RuledVariant variant = RuledVariant::DEqualsKF;
  Int k = 0;
  Int p = 0;

  friend bool operator==(const MinimalPairKind&, const MinimalPairKind&) =
      default;
};

// One-line human-readable description, e.g. "weak Del Pezzo (lambda = 2/3)"
// or "geometrically ruled (2D+K = kF, k = 1, p = -1)".
std::string pair_kind_name(const MinimalPairKind& kind);

// Matches `end` against the minimal-pair profiles, trying weak Del Pezzo
// first: (lambda^2 g, -lambda g, g) with 1 <= g <= 9 for lambda in
// {1, 1/2, 1/3, 2/3} (1/2 only at g = 8; 1/3 and 2/3 only at g = 9, where
// lambda^2 g and lambda g are integral).  Then the ruled profiles, which
// need gamma(l) = 8(p+1): D = kF is (0, -2k, gamma) with k >= 1, and
// 2D+K = kF needs 4 alpha + 4 beta + gamma = 0 with k = -(2 beta + gamma)/2
// >= 1.  Throws Unclassifiable when nothing matches.
MinimalPairKind classify_end_pair(const EndPair& end);

// 0 for a weak Del Pezzo end, the classified k otherwise.  For ruled ends
// of a chain with l >= 1 the value is cross-checked through the penultimate
// step: D = kF gives -2k = beta(l-1) + gamma(l-1), and 2D+K = kF gives
// -2k = 2(beta(l-1) + gamma(l-1)) + gamma(l).
Int keel_of_chain(const AdjointChain& chain);

//// Serialization ////

// One algorithm run: the inputs and, after construction, the resulting
// vector (nullopt = infeasible).
struct ConstructCase {
  Int l = 0;
  EndPair end;
  Int c = 0;
  std::optional<ContractionVector> n;

  friend bool operator==(const ConstructCase&, const ConstructCase&) = default;
};

// {"l":..., "alpha_l":..., "beta_l":..., "gamma_l":..., "c":..., "n":[...]}
// with "n" null when the case is infeasible.
nlohmann::json construct_case_to_json(const ConstructCase& c);
ConstructCase construct_case_from_json(const nlohmann::json& j);

}  // namespace adjoint
