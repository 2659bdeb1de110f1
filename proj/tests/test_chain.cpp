#include <doctest.h>

#include <vector>

#include "adjoint/chain.hpp"

using namespace adjoint;

namespace {

// Walks a chain forward from a start tuple, filling in the given
// contraction counts.
AdjointChain walk(Int alpha0, Int beta0, Int gamma0, std::vector<Int> n,
                  Int p) {
  AdjointChain chain;
  chain.p = p;
  StepInvariants s = make_step(alpha0, beta0, gamma0);
  for (Int count : n) {
    s.n = count;
    chain.steps.push_back(s);
    s = advance(s);
  }
  chain.steps.push_back(s);
  return chain;
}

AdjointChain first_example() {
  return walk(8, 2, -1, {0, 0, 1, 0, 0, 0, 0, 1}, 0);
}

}  // namespace

TEST_CASE("make_step fills h") {
  const StepInvariants s = make_step(8, 2, -1, 5);
  CHECK(s.alpha == 8);
  CHECK(s.beta == 2);
  CHECK(s.gamma == -1);
  CHECK(s.h == 6);
  CHECK(s.n == 5);
}

TEST_CASE("state classification") {
  CHECK(classify_state(-1, 2) == AdjointState::S1);
  CHECK(classify_state(-1, 0) == AdjointState::S1);
  CHECK(classify_state(-8, -3) == AdjointState::S2);
  CHECK(classify_state(0, -1) == AdjointState::S3);
  CHECK(classify_state(3, -3) == AdjointState::S4);
  CHECK_THROWS_AS(classify_state(0, 0), InvalidState);
  CHECK_THROWS_AS(classify_state(1, 0), InvalidState);
  CHECK_THROWS_AS(classify_state(8, 2), InvalidState);
  CHECK(state_index(AdjointState::S1) == 1);
  CHECK(state_index(AdjointState::S4) == 4);
  CHECK(state_name(AdjointState::S2) == "S2");
}

TEST_CASE("advance applies the recurrence") {
  const StepInvariants next = advance(make_step(8, 2, -1, 0));
  CHECK(next == make_step(11, 1, -1));
  const StepInvariants jump = advance(make_step(9, 0, -1, 3));
  CHECK(jump.alpha == 8);
  CHECK(jump.beta == -1);
  CHECK(jump.gamma == 2);
  CHECK(jump.h == 9 + 2 * 0);
  CHECK(jump.n == 0);
}

TEST_CASE("the first example chain validates") {
  const AdjointChain chain = first_example();
  REQUIRE(chain.level() == 8);
  const StepInvariants& last = chain.steps.back();
  CHECK(last.alpha == 1);
  CHECK(last.beta == -1);
  CHECK(last.gamma == 1);
  const ValidationReport report = validate_chain(chain);
  CHECK(report.ok);
  CHECK(report.violations.empty());
  // Every h in the chain is even, so strict parity also passes.
  CHECK(validate_chain(chain, true).ok);
}

TEST_CASE("validation reports the broken rule") {
  AdjointChain chain = first_example();

  SUBCASE("h inconsistent with alpha - beta") {
    chain.steps[3].h += 1;
    const ValidationReport report = validate_chain(chain);
    CHECK_FALSE(report.ok);
    CHECK(report.has(RuleTag::H, 3));
  }
  SUBCASE("beta recurrence broken") {
    chain.steps[4].beta += 1;
    chain.steps[4].h -= 1;  // keep h = alpha - beta
    const ValidationReport report = validate_chain(chain);
    CHECK_FALSE(report.ok);
    CHECK(report.has(RuleTag::B, 4));
  }
  SUBCASE("negative contraction count") {
    chain.steps[2].n = -1;
    const ValidationReport report = validate_chain(chain);
    CHECK_FALSE(report.ok);
    CHECK(report.has(RuleTag::S, 2));
  }
  SUBCASE("wrong genus sign") {
    chain.p = 1;
    const ValidationReport report = validate_chain(chain);
    CHECK_FALSE(report.ok);
    CHECK(report.has(RuleTag::P, 8));
  }
  SUBCASE("p = 0 needs positive end gamma") {
    chain.steps.pop_back();  // now ends at gamma = 0
    chain.steps.back().n = 0;
    const ValidationReport report = validate_chain(chain);
    CHECK_FALSE(report.ok);
    CHECK(report.has(RuleTag::P, 7));
  }
}

TEST_CASE("rule Z catches a collapsing h") {
  // (1, -1, 0) -> (-1, -1, 0): h drops from 2 to 0.
  const AdjointChain chain = walk(1, -1, 0, {0}, -1);
  const ValidationReport report = validate_chain(chain);
  CHECK_FALSE(report.ok);
  CHECK(report.has(RuleTag::Z, 1));
  CHECK_FALSE(report.has(RuleTag::Z, 0));
}

TEST_CASE("state regression and gamma bookkeeping are rule S") {
  AdjointChain chain;
  chain.p = 0;
  chain.steps.push_back(make_step(4, -1, 1, 0));   // S4
  chain.steps.push_back(make_step(3, 0, -1, 0));   // S1: regression
  chain.steps.push_back(make_step(2, -1, 1, 0));   // back to S4, end
  // beta and h recurrences hold by construction: -1 + 1 = 0, 0 + (-1) = -1.
  const ValidationReport report = validate_chain(chain);
  CHECK_FALSE(report.ok);
  CHECK(report.has(RuleTag::S, 1));  // gamma(1) != gamma(0) + n(0)
  CHECK(report.has(RuleTag::S, 2));  // S1 -> S4 is fine; S4 -> S1 is not
}

TEST_CASE("strict parity flags odd h") {
  const AdjointChain chain = walk(5, 2, -8, {}, -2);
  CHECK(validate_chain(chain).ok);
  const ValidationReport strict = validate_chain(chain, true);
  CHECK_FALSE(strict.ok);
  CHECK(strict.has(RuleTag::PARITY, 0));
}

TEST_CASE("single-step chains") {
  CHECK(validate_chain(walk(1, -1, 1, {}, 0)).ok);
  CHECK(validate_chain(walk(0, -2, -8, {}, -2)).ok);
  CHECK_FALSE(validate_chain(walk(0, -2, -8, {}, -1)).ok);
  AdjointChain empty;
  CHECK_THROWS_AS(validate_chain(empty), DomainError);
}

TEST_CASE("RuleViolation lists the broken rules") {
  AdjointChain chain = first_example();
  chain.steps[4].beta += 1;
  chain.steps[4].h -= 1;
  const ValidationReport report = validate_chain(chain);
  const RuleViolation error(report);
  CHECK(std::string(error.what()).find("(B,4)") != std::string::npos);
  CHECK(error.report.has(RuleTag::B, 4));
}

TEST_CASE("genus from the end gamma") {
  CHECK(genus_from_end(1) == 0);
  CHECK(genus_from_end(3) == 0);
  CHECK(genus_from_end(8) == 0);
  CHECK(genus_from_end(9) == 0);
  CHECK(genus_from_end(0) == -1);
  CHECK(genus_from_end(-1) == -1);
  CHECK(genus_from_end(-7) == -1);
  CHECK(genus_from_end(-8) == -2);
  CHECK(genus_from_end(-16) == -3);
}

TEST_CASE("sectional genus and embedding dimension") {
  CHECK(sectional_genus(8, 2) == 6);
  CHECK(sectional_genus(11, 5) == 9);
  CHECK(sectional_genus(72, 32) == 53);
  CHECK_THROWS_AS(sectional_genus(8, 1), OddSum);
  CHECK(embedding_dim(8, 2, 0) == 3);
  CHECK(embedding_dim(72, 32, -2) == 18);
  CHECK_THROWS_AS(embedding_dim(8, 1, 0), OddSum);
}

TEST_CASE("json roundtrip") {
  const AdjointChain chain = first_example();
  const nlohmann::json j = chain_to_json(chain);
  CHECK(j["p"] == 0);
  CHECK(j["steps"].size() == 9);
  CHECK(j["steps"][0]["alpha"] == 8);
  const AdjointChain back = chain_from_json(j);
  CHECK(back.p == chain.p);
  REQUIRE(back.steps.size() == chain.steps.size());
  for (size_t i = 0; i < chain.steps.size(); ++i)
    CHECK(back.steps[i] == chain.steps[i]);
  CHECK_THROWS_AS(chain_from_json(nlohmann::json::array()), DomainError);
  CHECK_THROWS_AS(chain_from_json(nlohmann::json{{"p", 0}}), DomainError);
  nlohmann::json bad = j;
  bad["steps"][2].erase("beta");
  CHECK_THROWS_AS(chain_from_json(bad), DomainError);
}

TEST_CASE("markdown and csv renderers") {
  const AdjointChain chain = walk(5, 1, -1, {2}, 0);
  CHECK(chain_to_markdown(chain) ==
        "| i | 0 | 1 |\n"
        "| --- | --- | --- |\n"
        "| n | 2 |  |\n"
        "| gamma | -1 | 1 |\n"
        "| beta | 1 | 0 |\n"
        "| h | 4 | 6 |\n"
        "| alpha | 5 | 6 |\n");
  CHECK(chain_to_csv(chain) ==
        "i,0,1\n"
        "n,2,\n"
        "gamma,-1,1\n"
        "beta,1,0\n"
        "h,4,6\n"
        "alpha,5,6\n");
}
