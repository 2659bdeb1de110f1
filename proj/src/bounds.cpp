#include "adjoint/bounds.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <unordered_map>
#include <vector>

#include "adjoint/errors.hpp"
#include "adjoint/ints.hpp"

namespace adjoint {

namespace {

// One search state (h(i), beta(i), gamma(i)); the genus p is fixed per search.
struct SearchNode {
  Int h = 0;
  Int beta = 0;
  Int gamma = 0;

  bool operator==(const SearchNode&) const = default;
};

struct SearchNodeHash {
  std::size_t operator()(const SearchNode& node) const noexcept {
    std::size_t seed = std::hash<Int>{}(node.h);
    seed ^= std::hash<Int>{}(node.beta) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
            (seed >> 2);
    seed ^= std::hash<Int>{}(node.gamma) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
            (seed >> 2);
    return seed;
  }
};

// Sentinel value: no rule-valid end state is reachable from here.
constexpr Int kNoEnd = std::numeric_limits<Int>::min() / 4;

// Resource guards for the exact search. The peak h reachable from the start
// data bounds every quantity the search touches, so capping it keeps all
// arithmetic far from overflow and the memo table at a sane size.
constexpr Int kMaxSearchH = 100000;
constexpr Int kMaxSearchBeta0 = 400;
constexpr std::size_t kMaxSearchNodes = 1000000;

// Memoized longest-completion search over states (h, beta, gamma) under the
// chain rules for p in {0, -1}. Transitions follow h' = h + 2*beta and
// beta' = beta + gamma; the child's gamma ranges over [gamma, upper] where
// upper keeps the child state classifiable and the end condition reachable.
//
// The transition graph is acyclic: while beta >= 0 it strictly decreases
// (gamma <= -1 is forced there), and once beta < 0 it stays negative and h
// strictly decreases. The walk is therefore a plain DFS with an explicit
// stack and a value memo; no depth issues, no cycles.
class LevelSearch {
 public:
  explicit LevelSearch(Int p) : p_(p) {}

  // Length of the longest rule-valid completion starting at `root`
  // (0 = the chain may end right at the root); kNoEnd if no valid end is
  // reachable at all.
  Int value(const SearchNode& root) {
    if (const auto it = memo_.find(root); it != memo_.end()) return it->second;
    std::vector<Frame> stack;
    push_frame(stack, root);
    Int result = kNoEnd;
    while (!stack.empty()) {
      Frame& frame = stack.back();
      if (frame.next_gamma > frame.last_gamma) {
        const Int finished = frame.best;
        memo_.emplace(frame.node, finished);
        stack.pop_back();
        if (stack.empty()) {
          result = finished;
        } else {
          fold_child(stack.back(), finished);
        }
        continue;
      }
      const SearchNode child{frame.child_h, frame.child_beta,
                             frame.next_gamma};
      ++frame.next_gamma;  // advance before push_frame may reallocate `stack`
      if (const auto it = memo_.find(child); it != memo_.end()) {
        fold_child(frame, it->second);
      } else {
        push_frame(stack, child);
      }
    }
    return result;
  }

 private:
  struct Frame {
    SearchNode node;
    Int child_h = 0;
    Int child_beta = 0;
    Int next_gamma = 0;
    Int last_gamma = -1;  // inclusive; next_gamma > last_gamma = exhausted
    Int best = kNoEnd;
  };

  bool end_ok(Int gamma) const {
    if (p_ == 0) return gamma > 0;
    if (p_ == -1) return gamma == 0;
    return true;  // p <= -2: gamma is pinned to 8(p+1) throughout
  }

  static void fold_child(Frame& frame, Int child_value) {
    if (child_value != kNoEnd && child_value + 1 > frame.best) {
      frame.best = child_value + 1;
    }
  }

  // Inclusive upper end of the child's gamma range (the lower end is the
  // parent's gamma); an upper below the parent's gamma means no children.
  Int child_gamma_upper(Int child_beta, Int gamma) const {
    if (p_ <= -2) return gamma;            // n(i) = 0 is forced
    if (child_beta >= 0) return -1;        // the child must keep gamma < 0
    if (p_ == -1) return 0;                // gamma may never exceed 0
    // p == 0: every gamma' >= -child_beta makes the child a final state (its
    // own children would need beta >= 0 with gamma > 0, which is invalid),
    // and all such children share value 0, so one representative suffices.
    // In non-leaf positions -child_beta <= (child_h - 2)/2 by rule Z, which
    // keeps the range width bounded.
    return std::max<Int>(gamma, -child_beta);
  }

  // True if some gamma' in [lo, hi] is a valid final value. Only called with
  // lo <= hi.
  bool leaf_range_has_end(Int lo, Int hi) const {
    if (p_ == 0) return hi >= 1;
    if (p_ == -1) return lo <= 0 && 0 <= hi;
    return true;
  }

  void push_frame(std::vector<Frame>& stack, const SearchNode& node) {
    if (memo_.size() + stack.size() >= kMaxSearchNodes) {
      throw DomainError(
          "max_level: search state space exceeds the supported size");
    }
    Frame frame;
    frame.node = node;
    frame.best = end_ok(node.gamma) ? 0 : kNoEnd;
    // The entry guards in max_level keep |h| and |beta| small, so the step
    // arithmetic below cannot overflow.
    const Int child_h = node.h + 2 * node.beta;
    if (child_h >= 2) {
      const Int child_beta = node.beta + node.gamma;
      const Int upper = child_gamma_upper(child_beta, node.gamma);
      if (upper >= node.gamma) {
        if (child_h + 2 * child_beta < 2) {
          // Grandchild h depends only on (child_h, child_beta), so every
          // child in the range is a leaf; fold the whole range at once.
          if (leaf_range_has_end(node.gamma, upper) && frame.best < 1) {
            frame.best = 1;
          }
        } else {
          frame.child_h = child_h;
          frame.child_beta = child_beta;
          frame.next_gamma = node.gamma;
          frame.last_gamma = upper;
        }
      }
    }
    stack.push_back(frame);
  }

  Int p_;
  std::unordered_map<SearchNode, Int, SearchNodeHash> memo_;
};

}  // namespace

Int bound_S4(Int beta0) {
  if (beta0 >= 0) throw DomainError("bound_S4: beta(0) must be negative");
  return checked_sub(checked_sub(0, beta0), 1);
}

Int bound_S3(Int h0) {
  if (h0 < 2) throw DomainError("bound_S3: h(0) must be >= 2");
  return floor_div(checked_sub(h0, 2), 2);
}

Int bound_S2a(Int h0, Int beta0, Int beta_l) {
  if (h0 < 2) throw DomainError("bound_S2a: h(0) must be >= 2");
  if (beta0 >= 0) throw DomainError("bound_S2a: beta(0) must be negative");
  const Int s = checked_sub(beta0, beta_l);
  if (s <= 0) {
    throw DomainError("bound_S2a: beta(l) must be smaller than beta(0)");
  }
  // s + floor((-s^2 + (2*beta0 + 1)*s + h0 - 2) / (-2*beta_l))
  const Int quad = checked_mul(checked_sub(0, s), s);
  const Int linear = checked_mul(checked_add(checked_mul(2, beta0), 1), s);
  const Int numerator =
      checked_add(checked_add(quad, linear), checked_sub(h0, 2));
  const Int denominator = checked_mul(-2, beta_l);
  return checked_add(s, floor_div(numerator, denominator));
}

Int bound_S2b(Int h0, Int beta0, Int p) {
  if (p > -2) throw DomainError("bound_S2b: p must be <= -2");
  if (h0 < 2) throw DomainError("bound_S2b: h(0) must be >= 2");
  if (beta0 >= 0) throw DomainError("bound_S2b: beta(0) must be negative");
  const Int t = checked_mul(8, checked_add(p, 1));
  const Int a = checked_sub(checked_mul(2, beta0), t);
  const Int delta = checked_sub(checked_mul(a, a),
                                checked_mul(checked_mul(4, t), checked_sub(h0, 2)));
  if (delta < 0) {
    throw NegativeDiscriminant("bound_S2b: negative discriminant");
  }
  // floor of the larger quadratic root (-a - sqrt(delta)) / (2t), t < 0.
  return floor_sub_sqrt_div(checked_sub(0, a), delta, checked_mul(2, t));
}

S1Segment bound_S1_segment(Int h0, Int beta0, Int p) {
  if (p > 0) throw DomainError("bound_S1_segment: p must be <= 0");
  if (h0 < 2) throw DomainError("bound_S1_segment: h(0) must be >= 2");
  if (beta0 < 0) {
    throw DomainError("bound_S1_segment: beta(0) must be >= 0");
  }
  const Int t = std::min<Int>(checked_mul(8, checked_add(p, 1)), -1);
  S1Segment segment;
  segment.t = t;
  segment.j_max = checked_add(floor_div(beta0, checked_sub(0, t)), 1);
  // h(j) = t*j^2 + (2*beta0 - t)*j + h0 at j = j_max.
  const Int quad = checked_mul(t, checked_mul(segment.j_max, segment.j_max));
  const Int linear =
      checked_mul(checked_sub(checked_mul(2, beta0), t), segment.j_max);
  segment.h_j_max = checked_add(checked_add(quad, linear), h0);
  return segment;
}

Int theorem_bound(const BoundInput& in) {
  if (in.p > 0) throw DomainError("theorem_bound: p must be <= 0");
  const Int h0 = in.h0();
  if (h0 < 2) {
    throw DomainError("theorem_bound: h(0) = alpha(0) - beta(0) must be >= 2");
  }
  if (in.p >= -1) {
    if (in.beta0 >= 0) {
      const Int plateau =
          floor_div(checked_add(checked_mul(in.beta0, in.beta0), in.alpha0), 2);
      return checked_add(plateau, in.beta0);
    }
    return bound_S3(h0);
  }
  // p <= -2
  if (in.beta0 < 0) return bound_S2b(h0, in.beta0, in.p);
  const S1Segment segment = bound_S1_segment(h0, in.beta0, in.p);
  const Int t = segment.t;  // = 8(p+1) <= -8 here
  const Int delta =
      checked_sub(checked_mul(t, t),
                  checked_mul(checked_mul(4, t), checked_sub(segment.h_j_max, 2)));
  if (delta < 0) {
    throw NegativeDiscriminant("theorem_bound: negative discriminant");
  }
  const Int tail = floor_sub_sqrt_div(checked_sub(0, t), delta, checked_mul(2, t));
  return checked_add(segment.j_max, tail);
}

Int theorem_bound(Int alpha0, Int beta0, Int p) {
  return theorem_bound(BoundInput{alpha0, beta0, p});
}

Int max_level(Int h0, Int beta0, Int p) {
  if (p > 0) throw DomainError("max_level: p must be <= 0");
  if (h0 < 2) {
    throw DomainError("max_level: h(0) = alpha(0) - beta(0) must be >= 2");
  }
  if (beta0 > kMaxSearchBeta0) {
    throw DomainError("max_level: beta(0) exceeds the supported search size");
  }
  // Peak reachable h: while beta stays >= 0 the chain climbs by 2*beta per
  // step and beta steps down by one, adding at most beta0^2 + beta0 overall.
  const Int peak_h = beta0 >= 0 ? h0 + beta0 * (beta0 + 1) : h0;
  if (peak_h > kMaxSearchH) {
    throw DomainError("max_level: h(0) exceeds the supported search size");
  }
  // Rule Z blocks every step when h(1) = h0 + 2*beta0 < 2 (h(1) depends on
  // neither gamma(0) nor n). This can only fire with beta0 < 0, and then a
  // single valid end state always exists, so the answer is 0.
  if (beta0 <= floor_div(1 - h0, 2)) return 0;

  if (p <= -2) {
    // gamma is pinned to 8(p+1) < 0 and every n(i) must be 0, so the whole
    // chain is one forced walk; count how many steps keep h >= 2.
    const Int t = checked_mul(8, checked_add(p, 1));
    Int steps = 0;
    Int h = h0;
    Int beta = beta0;
    for (;;) {
      const Int next_h = checked_add(h, checked_mul(2, beta));
      if (next_h < 2) break;
      h = next_h;
      beta = checked_add(beta, t);
      ++steps;
    }
    return steps;
  }

  LevelSearch search(p);
  std::vector<Int> root_gammas;
  if (beta0 >= 0) {
    root_gammas.push_back(-1);
  } else if (p == 0) {
    root_gammas.push_back(-1);
    for (Int g = 0; g <= -beta0 - 1; ++g) root_gammas.push_back(g);
  } else {
    root_gammas.push_back(0);
  }
  Int best = kNoEnd;
  for (const Int g : root_gammas) {
    best = std::max(best, search.value({h0, beta0, g}));
  }
  if (p == 0 && beta0 < 0) {
    // l = 0 with gamma(0) = 1 is always a valid one-state chain here.
    best = std::max<Int>(best, 0);
  }
  if (best == kNoEnd) {
    throw NoValidChain("max_level: no rule-valid chain exists");
  }
  return best;
}

Int family_degree_bound(Int l_tilde, Int p) {
  if (p > 0) throw DomainError("family_degree_bound: p must be <= 0");
  if (l_tilde < 0) {
    throw DomainError("family_degree_bound: the level bound must be >= 0");
  }
  const Int doubled = checked_mul(2, l_tilde);
  return checked_add(doubled, p == 0 ? 2 : 1);
}

}  // namespace adjoint
