#include "adjoint/chain.hpp"

#include <sstream>

namespace adjoint {

StepInvariants make_step(Int alpha, Int beta, Int gamma, Int n) {
  return StepInvariants{alpha, beta, gamma, checked_sub(alpha, beta), n};
}

AdjointState classify_state(Int gamma, Int beta) {
  if (gamma < 0) return beta >= 0 ? AdjointState::S1 : AdjointState::S2;
  if (beta < 0) return gamma == 0 ? AdjointState::S3 : AdjointState::S4;
  throw InvalidState("no adjoint state has gamma = " + std::to_string(gamma) +
                     " >= 0 and beta = " + std::to_string(beta) + " >= 0");
}

int state_index(AdjointState s) { return static_cast<int>(s); }

std::string state_name(AdjointState s) {
  switch (s) {
    case AdjointState::S1: return "S1";
    case AdjointState::S2: return "S2";
    case AdjointState::S3: return "S3";
    case AdjointState::S4: return "S4";
  }
  throw InternalError("state_name: bad enum value");
}

StepInvariants advance(const StepInvariants& cur) {
  StepInvariants next;
  // alpha' = alpha + 2 beta + gamma
  next.alpha = checked_add(checked_add(cur.alpha, checked_mul(2, cur.beta)),
                           cur.gamma);
  next.beta = checked_add(cur.beta, cur.gamma);
  next.gamma = checked_add(cur.gamma, cur.n);
  next.h = checked_add(cur.h, checked_mul(2, cur.beta));
  next.n = 0;
  return next;
}

bool ValidationReport::has(RuleTag tag, Int index) const {
  for (const auto& v : violations)
    if (v.tag == tag && v.index == index) return true;
  return false;
}

std::string rule_name(RuleTag t) {
  switch (t) {
    case RuleTag::H: return "H";
    case RuleTag::B: return "B";
    case RuleTag::Z: return "Z";
    case RuleTag::S: return "S";
    case RuleTag::P: return "P";
    case RuleTag::PARITY: return "PARITY";
  }
  throw InternalError("rule_name: bad enum value");
}

RuleViolation::RuleViolation(ValidationReport r)
    : DomainError([&r] {
        std::string what = "chain violates rules:";
        for (const auto& v : r.violations)
          what += " (" + rule_name(v.tag) + "," + std::to_string(v.index) + ")";
        return what;
      }()),
      report(std::move(r)) {}

namespace {

std::string step_str(Int i, const StepInvariants& s) {
  std::ostringstream os;
  os << "step " << i << " (alpha=" << s.alpha << ", beta=" << s.beta
     << ", gamma=" << s.gamma << ", h=" << s.h << ", n=" << s.n << ")";
  return os.str();
}

}  // namespace

ValidationReport validate_chain(const AdjointChain& chain, bool strict_parity) {
  if (chain.steps.empty())
    throw DomainError("validate_chain: chain must be nonempty");

  ValidationReport report;
  auto violate = [&](RuleTag tag, Int index, std::string message) {
    report.violations.push_back({tag, index, std::move(message)});
  };

  const Int l = chain.level();

  // Per-step checks: field consistency, state validity, n sign, parity.
  for (Int i = 0; i <= l; ++i) {
    const StepInvariants& s = chain.steps[static_cast<size_t>(i)];
    if (s.h != checked_sub(s.alpha, s.beta))
      violate(RuleTag::H, i, "h != alpha - beta at " + step_str(i, s));
    if (i < l && s.n < 0)
      violate(RuleTag::S, i, "n < 0 at " + step_str(i, s));
    try {
      (void)classify_state(s.gamma, s.beta);
    } catch (const InvalidState&) {
      violate(RuleTag::S, i, "invalid state at " + step_str(i, s));
    }
    if (strict_parity && (((s.h % 2) + 2) % 2) != 0)
      violate(RuleTag::PARITY, i, "h is odd at " + step_str(i, s));
  }

  // Consecutive-step checks: the recurrences, gamma bookkeeping, and state
  // monotonicity.  Violations are reported at the later index.
  for (Int i = 0; i < l; ++i) {
    const StepInvariants& cur = chain.steps[static_cast<size_t>(i)];
    const StepInvariants& nxt = chain.steps[static_cast<size_t>(i + 1)];
    if (nxt.beta != checked_add(cur.beta, cur.gamma))
      violate(RuleTag::B, i + 1,
              "beta(i+1) != beta(i) + gamma(i) between steps " +
                  std::to_string(i) + " and " + std::to_string(i + 1));
    if (nxt.h != checked_add(cur.h, checked_mul(2, cur.beta)))
      violate(RuleTag::H, i + 1,
              "h(i+1) != h(i) + 2*beta(i) between steps " + std::to_string(i) +
                  " and " + std::to_string(i + 1));
    if (nxt.gamma != checked_add(cur.gamma, cur.n))
      violate(RuleTag::S, i + 1,
              "gamma(i+1) != gamma(i) + n(i) between steps " +
                  std::to_string(i) + " and " + std::to_string(i + 1));
    try {
      AdjointState a = classify_state(cur.gamma, cur.beta);
      AdjointState b = classify_state(nxt.gamma, nxt.beta);
      if (state_index(b) < state_index(a))
        violate(RuleTag::S, i + 1,
                "state regression " + state_name(a) + " -> " + state_name(b) +
                    " at step " + std::to_string(i + 1));
    } catch (const InvalidState&) {
      // Already reported by the per-step pass.
    }
  }

  // Rule Z: h(i) >= 2 for 1 <= i <= l (vacuous for a single-step chain).
  for (Int i = 1; i <= l; ++i) {
    const StepInvariants& s = chain.steps[static_cast<size_t>(i)];
    if (s.h < 2)
      violate(RuleTag::Z, i, "h(" + std::to_string(i) + ") = " +
                                 std::to_string(s.h) + " < 2");
  }

  // Rule P: the end condition.
  const StepInvariants& last = chain.steps.back();
  if (chain.p > 0) {
    violate(RuleTag::P, l, "p = " + std::to_string(chain.p) + " must be <= 0");
  } else if (chain.p == 0) {
    if (last.gamma <= 0)
      violate(RuleTag::P, l, "p = 0 requires gamma(l) > 0, got " +
                                 std::to_string(last.gamma));
  } else {
    const Int want = checked_mul(8, checked_add(chain.p, 1));
    if (last.gamma != want)
      violate(RuleTag::P, l, "p = " + std::to_string(chain.p) +
                                 " requires gamma(l) = " + std::to_string(want) +
                                 ", got " + std::to_string(last.gamma));
  }

  report.ok = report.violations.empty();
  return report;
}

Int genus_from_end(Int gamma_l) {
  // min(0, ceil(gamma_l/8 - 1)) = min(0, ceil_div(gamma_l, 8) - 1)
  Int p = checked_sub(ceil_div(gamma_l, 8), 1);
  return p < 0 ? p : 0;
}

Int sectional_genus(Int alpha0, Int beta0) {
  Int sum = checked_add(alpha0, beta0);
  if (((sum % 2) + 2) % 2 != 0)
    throw OddSum("sectional_genus: alpha0 + beta0 = " + std::to_string(sum) +
                 " is odd");
  return checked_add(sum / 2, 1);
}

Int embedding_dim(Int alpha0, Int beta0, Int p) {
  Int diff = checked_sub(alpha0, beta0);
  if (((diff % 2) + 2) % 2 != 0)
    throw OddSum("embedding_dim: alpha0 - beta0 = " + std::to_string(diff) +
                 " is odd");
  return checked_add(diff / 2, p);
}

//// Serialization ////

nlohmann::json chain_to_json(const AdjointChain& chain) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : chain.steps)
    steps.push_back({{"n", s.n},
                     {"gamma", s.gamma},
                     {"beta", s.beta},
                     {"h", s.h},
                     {"alpha", s.alpha}});
  return nlohmann::json{{"p", chain.p}, {"steps", std::move(steps)}};
}

AdjointChain chain_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("steps") ||
      !j.at("steps").is_array() || j.at("steps").empty())
    throw DomainError("chain_from_json: expected {\"p\":int, \"steps\":[...]}");
  AdjointChain chain;
  chain.p = j.at("p").get<Int>();
  for (const auto& js : j.at("steps")) {
    if (!js.is_object())
      throw DomainError("chain_from_json: each step must be an object");
    StepInvariants s;
    try {
      s.n = js.at("n").get<Int>();
      s.gamma = js.at("gamma").get<Int>();
      s.beta = js.at("beta").get<Int>();
      s.h = js.at("h").get<Int>();
      s.alpha = js.at("alpha").get<Int>();
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("chain_from_json: bad step: ") + e.what());
    }
    chain.steps.push_back(s);
  }
  return chain;
}

namespace {

// Shared transposed-table writer.  Each row is a label followed by one cell
// per step; the final n cell is blank because it has no successor step.
std::vector<std::vector<std::string>> chain_rows(const AdjointChain& chain) {
  const Int l = chain.level();
  std::vector<std::vector<std::string>> rows(6);
  rows[0].push_back("i");
  rows[1].push_back("n");
  rows[2].push_back("gamma");
  rows[3].push_back("beta");
  rows[4].push_back("h");
  rows[5].push_back("alpha");
  for (Int i = 0; i <= l; ++i) {
    const auto& s = chain.steps[static_cast<size_t>(i)];
    rows[0].push_back(std::to_string(i));
    rows[1].push_back(i == l ? "" : std::to_string(s.n));
    rows[2].push_back(std::to_string(s.gamma));
    rows[3].push_back(std::to_string(s.beta));
    rows[4].push_back(std::to_string(s.h));
    rows[5].push_back(std::to_string(s.alpha));
  }
  return rows;
}

}  // namespace

std::string chain_to_markdown(const AdjointChain& chain) {
  auto rows = chain_rows(chain);
  std::ostringstream os;
  bool header = true;
  for (const auto& row : rows) {
    os << "|";
    for (const auto& cell : row) os << " " << cell << " |";
    os << "\n";
    if (header) {
      os << "|";
      for (size_t k = 0; k < row.size(); ++k) os << " --- |";
      os << "\n";
      header = false;
    }
  }
  return os.str();
}

std::string chain_to_csv(const AdjointChain& chain) {
  auto rows = chain_rows(chain);
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t k = 0; k < row.size(); ++k) {
      if (k) os << ",";
      os << row[k];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace adjoint
