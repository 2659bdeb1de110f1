#include <doctest.h>

#include <optional>
#include <vector>

#include "adjoint/builder.hpp"
#include "adjoint/chain.hpp"

using namespace adjoint;

namespace {

const EndPair kWdp1{1, -1, 1};     // weak Del Pezzo, g = 1
const EndPair kWdp3{3, -3, 3};     // weak Del Pezzo, g = 3
const EndPair kRuled2DK{1, -1, 0}; // 2D+K = kF with k = 1
const EndPair kRuledDF{0, -40, -8};  // D = kF with k = 20

}  // namespace

TEST_CASE("backward formulas") {
  const ContractionVector n = {0, 0, 1, 0, 0, 0, 0, 1};
  CHECK(alpha0_from(8, kWdp1, n) == 8);
  CHECK(beta0_from(8, kWdp1, n) == 2);
  CHECK(gamma0_from(kWdp1, n) == -1);

  const ContractionVector zeros9(9, 0);
  CHECK(alpha0_from(9, kRuledDF, zeros9) == 72);
  CHECK(beta0_from(9, kRuledDF, zeros9) == 32);
  CHECK(gamma0_from(kRuledDF, zeros9) == -8);

  CHECK_THROWS_AS(alpha0_from(-1, kWdp1, {}), DomainError);
  CHECK_THROWS_AS(alpha0_from(3, kWdp1, n), LengthMismatch);
  CHECK_THROWS_AS(beta0_from(3, kWdp1, n), LengthMismatch);
}

TEST_CASE("greedy construction reproduces the example tables") {
  const auto n1 = construct_adjoint_chain(8, kWdp1, 8);
  REQUIRE(n1.has_value());
  CHECK(*n1 == ContractionVector{0, 0, 1, 0, 0, 0, 0, 1});

  const auto n2 = construct_adjoint_chain(12, kWdp3, 11);
  REQUIRE(n2.has_value());
  CHECK(*n2 == ContractionVector{0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 3});

  const auto n3 = construct_adjoint_chain(8, kRuled2DK, 8);
  REQUIRE(n3.has_value());
  CHECK(*n3 == ContractionVector{0, 0, 1, 0, 0, 0, 0, 0});

  // alpha(0) with n = 0 is exactly 72, so nothing gets contracted.
  const auto n4 = construct_adjoint_chain(9, kRuledDF, 72);
  REQUIRE(n4.has_value());
  CHECK(*n4 == ContractionVector(9, 0));
}

TEST_CASE("construction edge cases") {
  // Even the zero vector cannot reach degree 99 from level 3.
  CHECK_FALSE(construct_adjoint_chain(3, kWdp1, 99).has_value());
  CHECK(construct_adjoint_chain(3, kWdp1, 16).has_value());  // boundary C = c

  CHECK_THROWS_AS(construct_adjoint_chain(0, kWdp1, 8), DomainError);
  CHECK_THROWS_AS(construct_adjoint_chain(8, kWdp1, 0), DomainError);
}

TEST_CASE("realize_chain rolls the first example table forward") {
  const AdjointChain chain =
      realize_chain(8, kWdp1, {0, 0, 1, 0, 0, 0, 0, 1});
  REQUIRE(chain.level() == 8);
  CHECK(chain.p == 0);

  const std::vector<Int> alpha = {8, 11, 12, 11, 9, 7, 5, 3, 1};
  const std::vector<Int> beta = {2, 1, 0, -1, -1, -1, -1, -1, -1};
  const std::vector<Int> gamma = {-1, -1, -1, 0, 0, 0, 0, 0, 1};
  const std::vector<Int> h = {6, 10, 12, 12, 10, 8, 6, 4, 2};
  const std::vector<Int> n = {0, 0, 1, 0, 0, 0, 0, 1, 0};
  for (size_t i = 0; i <= 8; ++i) {
    CAPTURE(i);
    CHECK(chain.steps[i].alpha == alpha[i]);
    CHECK(chain.steps[i].beta == beta[i]);
    CHECK(chain.steps[i].gamma == gamma[i]);
    CHECK(chain.steps[i].h == h[i]);
    CHECK(chain.steps[i].n == n[i]);
  }
}

TEST_CASE("realize_chain validation") {
  CHECK_THROWS_AS(realize_chain(8, kWdp1, {0, 0, 1}), LengthMismatch);

  // This vector drives h(1) to 0, breaking the h >= 2 rule.
  CHECK_THROWS_AS(realize_chain(2, kWdp1, {0, 3}), RuleViolation);
  const AdjointChain broken =
      realize_chain(2, kWdp1, {0, 3}, false, false);
  CHECK(broken.level() == 2);
  CHECK_FALSE(validate_chain(broken).ok);

  // A short valid chain ending on a ruled pair.
  const AdjointChain ok = realize_chain(1, EndPair{0, -2, 8}, {4});
  CHECK(ok.steps[0].alpha == 8);
  CHECK(ok.steps[0].beta == -6);
  CHECK(ok.steps[0].gamma == 4);
  CHECK(validate_chain(ok).ok);
}

TEST_CASE("end-pair classification") {
  MinimalPairKind kind = classify_end_pair(kWdp1);
  CHECK(kind.family == PairFamily::WeakDelPezzo);
  CHECK(kind.lambda_num == 1);
  CHECK(kind.lambda_den == 1);
  CHECK(pair_kind_name(kind) == "weak Del Pezzo (lambda = 1)");

  kind = classify_end_pair(EndPair{9, -9, 9});
  CHECK(kind.family == PairFamily::WeakDelPezzo);
  CHECK(kind.lambda_den == 1);

  kind = classify_end_pair(EndPair{2, -4, 8});
  CHECK(kind.lambda_num == 1);
  CHECK(kind.lambda_den == 2);

  kind = classify_end_pair(EndPair{1, -3, 9});
  CHECK(kind.lambda_num == 1);
  CHECK(kind.lambda_den == 3);

  kind = classify_end_pair(EndPair{4, -6, 9});
  CHECK(pair_kind_name(kind) == "weak Del Pezzo (lambda = 2/3)");

  kind = classify_end_pair(EndPair{0, -2, 8});
  CHECK(kind.family == PairFamily::GeomRuled);
  CHECK(kind.variant == RuledVariant::DEqualsKF);
  CHECK(kind.k == 1);
  CHECK(kind.p == 0);

  kind = classify_end_pair(kRuledDF);
  CHECK(kind.variant == RuledVariant::DEqualsKF);
  CHECK(kind.k == 20);
  CHECK(kind.p == -2);
  CHECK(pair_kind_name(kind) == "geometrically ruled (D = kF, k = 20, p = -2)");

  kind = classify_end_pair(kRuled2DK);
  CHECK(kind.family == PairFamily::GeomRuled);
  CHECK(kind.variant == RuledVariant::TwoDPlusKEqualsKF);
  CHECK(kind.k == 1);
  CHECK(kind.p == -1);
  CHECK(pair_kind_name(kind) ==
        "geometrically ruled (2D+K = kF, k = 1, p = -1)");

  kind = classify_end_pair(EndPair{3, -1, -8});
  CHECK(kind.variant == RuledVariant::TwoDPlusKEqualsKF);
  CHECK(kind.k == 5);
  CHECK(kind.p == -2);

  CHECK_THROWS_AS(classify_end_pair(EndPair{5, -1, 1}), Unclassifiable);
}

TEST_CASE("keel") {
  CHECK(keel_of_chain(realize_chain(8, kWdp1, {0, 0, 1, 0, 0, 0, 0, 1})) == 0);
  CHECK(keel_of_chain(realize_chain(8, kRuled2DK, {0, 0, 1, 0, 0, 0, 0, 0})) ==
        1);
  CHECK(keel_of_chain(realize_chain(9, kRuledDF, ContractionVector(9, 0))) ==
        20);
  CHECK_THROWS_AS(keel_of_chain(AdjointChain{}), DomainError);
}

TEST_CASE("construct-case serialization") {
  ConstructCase feasible{8, kWdp1, 8,
                         ContractionVector{0, 0, 1, 0, 0, 0, 0, 1}};
  nlohmann::json j = construct_case_to_json(feasible);
  CHECK(j["l"] == 8);
  CHECK(j["alpha_l"] == 1);
  CHECK(j["beta_l"] == -1);
  CHECK(j["gamma_l"] == 1);
  CHECK(j["c"] == 8);
  CHECK(j["n"].is_array());
  CHECK(construct_case_from_json(j) == feasible);

  ConstructCase infeasible{3, kWdp1, 99, std::nullopt};
  j = construct_case_to_json(infeasible);
  CHECK(j["n"].is_null());
  CHECK(construct_case_from_json(j) == infeasible);
}
