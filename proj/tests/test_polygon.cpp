#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "adjoint/polygon.hpp"

using namespace adjoint;

namespace {

LatticePolygon unit_triangle() {
  return make_polygon({{0, 0}, {1, 0}, {0, 1}});
}
LatticePolygon triangle3() {
  return make_polygon({{0, 0}, {3, 0}, {0, 3}});
}
LatticePolygon triangle4() {
  return make_polygon({{0, 0}, {4, 0}, {0, 4}});
}
LatticePolygon square3() {
  return make_polygon({{0, 0}, {3, 0}, {3, 3}, {0, 3}});
}
LatticePolygon unit_square() {
  return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

}  // namespace

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(make_polygon({{0, 0}, {0, 1}, {1, 0}}), DomainError);  // CW
  CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}),
                  DomainError);  // collinear triple
  CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 0}, {1, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(make_polygon({{0, 0}, {2, 0}, {2, 2}, {1, -1}}),
                  DomainError);  // reflex turn
  CHECK_NOTHROW(make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK_NOTHROW(make_polygon({{5, 7}, {6, 7}, {5, 8}}));
}

TEST_CASE("area, boundary, interior") {
  CHECK(area2(unit_triangle()) == 1);
  CHECK(area2(triangle4()) == 16);
  CHECK(area2(square3()) == 18);
  CHECK(boundary_points(unit_triangle()) == 3);
  CHECK(boundary_points(triangle4()) == 12);
  CHECK(boundary_points(square3()) == 12);
  CHECK(interior_points(unit_triangle()).empty());
  CHECK(interior_points(triangle3()) == std::vector<LatticePoint>{{1, 1}});
  CHECK(interior_points(triangle4()) ==
        std::vector<LatticePoint>{{1, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("adjoint variants") {
  CHECK(adjoint::adjoint(unit_triangle()).variant == AdjointVariant::Empty);

  const AdjointResult point = adjoint::adjoint(triangle3());
  CHECK(point.variant == AdjointVariant::Point);
  CHECK(point.points == std::vector<LatticePoint>{{1, 1}});
  CHECK_THROWS_AS(point.polygon(), InvalidState);

  const AdjointResult hull = adjoint::adjoint(triangle4());
  CHECK(hull.variant == AdjointVariant::Polygon);
  CHECK(hull.points == std::vector<LatticePoint>{{1, 1}, {2, 1}, {1, 2}});

  // A long thin box has a segment of interior points.
  const LatticePolygon slab = make_polygon({{0, 0}, {5, 0}, {5, 2}, {0, 2}});
  const AdjointResult segment = adjoint::adjoint(slab);
  CHECK(segment.variant == AdjointVariant::Segment);
  CHECK(segment.points == std::vector<LatticePoint>{{1, 1}, {4, 1}});
}

TEST_CASE("polygon level") {
  CHECK(level(unit_triangle()) == 0);
  CHECK(level(triangle3()) == 0);
  CHECK(level(triangle4()) == 1);
  CHECK(level(square3()) == 1);
  CHECK(level(make_polygon({{0, 0}, {6, 0}, {0, 6}})) == 1);
  CHECK(level(make_polygon({{0, 0}, {7, 0}, {0, 7}})) == 2);
}

TEST_CASE("surface invariants from a polygon") {
  CHECK(surface_invariants(triangle4()) ==
        PolygonInvariants{16, 12, 3, 1, 16, -12});
  CHECK(surface_invariants(unit_square()) ==
        PolygonInvariants{2, 4, 4, 0, 2, -4});
  CHECK(surface_invariants(triangle3()) ==
        PolygonInvariants{9, 9, 3, 0, 9, -9});
}

TEST_CASE("inequality reports") {
  const InequalityReport t4 = check_inequalities(triangle4());
  CHECK(t4.lhs == 1);
  CHECK(t4.corollary_rhs == -8);
  CHECK(t4.corollary_pass);
  CHECK(t4.eq2_pass);
  CHECK(t4.level_in_range);

  const InequalityReport s3 = check_inequalities(square3());
  CHECK(s3.lhs == 3);
  CHECK(s3.corollary_rhs == -7);
  CHECK(s3.corollary_pass);

  // Level 0 is outside the corollary's range; the report says so rather
  // than granting a vacuous pass.
  const InequalityReport unit = check_inequalities(unit_triangle());
  CHECK(unit.lhs == 1);
  CHECK(unit.corollary_rhs == 8);
  CHECK_FALSE(unit.corollary_pass);
  CHECK(unit.eq2_pass);
  CHECK_FALSE(unit.level_in_range);
}

TEST_CASE("unimodular invariance") {
  const std::array<std::array<Int, 4>, 6> maps = {{{1, 1, 0, 1},
                                                   {1, 0, 1, 1},
                                                   {0, 1, 1, 0},
                                                   {2, 1, 1, 1},
                                                   {1, -1, 0, -1},
                                                   {3, 2, 1, 1}}};
  const std::array<LatticePolygon, 4> bases = {
      unit_triangle(), triangle4(), square3(),
      make_polygon({{0, 0}, {2, 0}, {3, 1}, {1, 3}, {0, 2}})};
  for (const LatticePolygon& base : bases) {
    const PolygonInvariants inv = surface_invariants(base);
    const LatticePolygon canon = canonical_form(base);
    CHECK(canonical_form(canon) == canon);
    for (const auto& m : maps) {
      const LatticePolygon image =
          unimodular_image(base, m[0], m[1], m[2], m[3]);
      CHECK(surface_invariants(image) == inv);
      CHECK(canonical_form(image) == canon);
    }
  }
  CHECK_THROWS_AS(unimodular_image(unit_triangle(), 2, 0, 0, 1), DomainError);
}

TEST_CASE("adjoint tower shrinks through interior points") {
  LatticePolygon current = make_polygon({{0, 0}, {8, 0}, {8, 8}, {0, 8}});
  Int steps = 0;
  while (true) {
    const AdjointResult next = adjoint::adjoint(current);
    if (next.minimal()) break;
    const LatticePolygon inner = next.polygon();
    CHECK(area2(inner) < area2(current));
    const std::vector<LatticePoint> inside = interior_points(current);
    for (const LatticePoint& v : inner.vertices) {
      CHECK(std::find(inside.begin(), inside.end(), v) != inside.end());
    }
    current = inner;
    ++steps;
    REQUIRE(steps <= 8);
  }
  CHECK(steps == level(make_polygon({{0, 0}, {8, 0}, {8, 8}, {0, 8}})));
}

TEST_CASE("enumeration of equivalence classes in small boxes") {
  const std::vector<LatticePolygon> box1 = enumerate_polygons(1, 0);
  CHECK(box1.size() == 2);  // unit triangle and unit square
  for (const LatticePolygon& p : box1) {
    CHECK(p == canonical_form(p));
  }

  CHECK(enumerate_polygons(2, 0).size() == 17);
  CHECK(enumerate_polygons(2, 1).empty());
  CHECK(enumerate_polygons(3, 0).size() == 148);
  CHECK(enumerate_polygons(3, 1).size() == 89);
  CHECK(enumerate_polygons(4, 0).size() == 1517);

  const std::vector<LatticePolygon> box4 = enumerate_polygons(4, 1);
  CHECK(box4.size() == 1387);
  CHECK(std::is_sorted(box4.begin(), box4.end()));
  const LatticePolygon target = canonical_form(triangle4());
  CHECK(std::find(box4.begin(), box4.end(), target) != box4.end());

  CHECK_THROWS_AS(enumerate_polygons(0, 0), DomainError);
  CHECK_THROWS_AS(enumerate_polygons(9, 0), DomainError);
  CHECK_THROWS_AS(enumerate_polygons(4, -1), DomainError);
}

TEST_CASE("polygon serialization") {
  const LatticePolygon p =
      make_polygon({{0, 0}, {2, 0}, {3, 1}, {1, 3}, {0, 2}});
  CHECK(polygon_from_json(polygon_to_json(p)) == p);
  CHECK_THROWS_AS(polygon_from_json(nlohmann::json{{"x", 1}}), DomainError);
  CHECK_THROWS_AS(polygon_from_json(nlohmann::json::array({{0, 0}, {1}})),
                  DomainError);

  const nlohmann::json report =
      inequality_report_json(check_inequalities(triangle4()));
  CHECK(report["area2"] == 16);
  CHECK(report["level"] == 1);
  CHECK(report["lhs"] == 1);
  CHECK(report["corollary_rhs"] == -8);
  CHECK(report["corollary_pass"] == true);
  CHECK(report["eq2_pass"] == true);
}
