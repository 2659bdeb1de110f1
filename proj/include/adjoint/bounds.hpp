#pragma once
// Closed-form upper bounds for the level of an adjoint chain, one per start
// state, the combined upper-bound theorem, the exact maximum level by
// search, and the minimal-family-degree corollary.

#include "adjoint/errors.hpp"
#include "adjoint/ints.hpp"

namespace adjoint {

struct BoundInput {
  Int alpha0 = 0;
  Int beta0 = 0;
  Int p = 0;  // arithmetic genus, <= 0

  Int h0() const { return checked_sub(alpha0, beta0); }
};

// The initial S1 segment of a chain with beta0 >= 0: the state can stay S1
// for at most j_max steps, with t = min(8(p+1), -1) the most negative value
// gamma is forced to average, and h at the segment's end bounded by
// h_j_max = t*j_max^2 + (2*beta0 - t)*j_max + h0 (= beta0^2 + alpha0 when
// p >= -1).
struct S1Segment {
  Int j_max = 0;
  Int h_j_max = 0;
  Int t = 0;
};

// Level bound for a chain starting in S4: l <= -beta0 - 1.  beta0 < 0.
Int bound_S4(Int beta0);

// Level bound for a chain starting in S3: l <= floor((h0-2)/2).  h0 >= 2.
Int bound_S3(Int h0);

// Level bound for a chain starting in S2 with p >= -1, in terms of the
// total drop s = beta0 - beta_l > 0:
//   l <= s + floor((-s^2 + (2*beta0+1)*s + h0 - 2) / (-2*beta_l)).
Int bound_S2a(Int h0, Int beta0, Int beta_l);

// Level bound for a chain starting in S2 with p <= -2; t = 8(p+1):
//   l <= floor((-(2*beta0-t) - sqrt(Delta)) / (2t)),
//   Delta = (2*beta0-t)^2 - 4t(h0-2).
// Exact integer arithmetic throughout; Delta < 0 raises
// NegativeDiscriminant (impossible once h0 >= 2, since t < 0).
Int bound_S2b(Int h0, Int beta0, Int p);

// The S1-segment data for beta0 >= 0 (see S1Segment).
S1Segment bound_S1_segment(Int h0, Int beta0, Int p);

// The combined upper bound for the level in terms of (alpha0, beta0, p):
//   p in {0,-1}:  beta0 >= 0 -> floor((beta0^2 + alpha0)/2) + beta0
//                 beta0 <  0 -> floor((alpha0 - beta0 - 2)/2)
//   p <= -2:      beta0 >= 0 -> j_max + floor((-t - sqrt(t^2-4t(Y-2)))/(2t))
//                               with t = 8(p+1), Y = h at the S1 segment end
//                 beta0 <  0 -> bound_S2b.
// Requires p <= 0 and h0 = alpha0 - beta0 >= 2.
Int theorem_bound(const BoundInput& in);
Int theorem_bound(Int alpha0, Int beta0, Int p);

// Exact maximum level over all rule-valid chains with the given h(0),
// beta(0) and p, with gamma(0) ranging over every admissible value for the
// possible initial states.  Computed by memoized depth-first search over
// (h, beta, gamma) nodes; this can be strictly tighter than theorem_bound
// when beta0 < -1.  Throws NoValidChain if no rule-valid chain exists
// (possible only for degenerate inputs) and DomainError for h0 < 2, p > 0,
// or inputs too large for exact search.
Int max_level(Int h0, Int beta0, Int p);

// Upper bound for the degree of a minimal family: 2*l_tilde + 2 when p = 0,
// 2*l_tilde + 1 when p <= -1.
Int family_degree_bound(Int l_tilde, Int p);

}  // namespace adjoint
