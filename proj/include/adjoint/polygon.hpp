#pragma once
// Convex lattice polygons: exact invariants (doubled area, boundary count,
// vertex count), the adjoint tower and its level, the two surface
// inequalities evaluated through the polygon dictionary, and a desk-scale
// exhaustive enumerator of unimodular classes.

#include <vector>

#include <json.hpp>

#include "adjoint/errors.hpp"
#include "adjoint/ints.hpp"

namespace adjoint {

struct LatticePoint {
  Int x = 0;
  Int y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Strictly convex, counterclockwise, at least 3 vertices, no three
// consecutive vertices collinear.  Build through make_polygon to validate.
struct LatticePolygon {
  std::vector<LatticePoint> vertices;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) =
      default;
  friend auto operator<=>(const LatticePolygon&, const LatticePolygon&) =
      default;
};

// Validates strict convexity (counterclockwise, simple, no collinear
// triple); throws DomainError otherwise.
LatticePolygon make_polygon(std::vector<LatticePoint> vertices);

enum class AdjointVariant { Empty, Point, Segment, Polygon };

// Convex hull of the strictly interior lattice points.  `points` holds the
// lattice data per variant: nothing, the point, the two distinct segment
// endpoints, or the hull vertices (counterclockwise).
struct AdjointResult {
  AdjointVariant variant = AdjointVariant::Empty;
  std::vector<LatticePoint> points;

  bool minimal() const { return variant != AdjointVariant::Polygon; }
  // The hull as a polygon; throws InvalidState unless variant == Polygon.
  LatticePolygon polygon() const;
};

Int area2(const LatticePolygon& p);            // twice the area, exact
Int boundary_points(const LatticePolygon& p);  // sum of edge gcds
std::vector<LatticePoint> interior_points(const LatticePolygon& p);

// Interior count is cross-checked against Pick's theorem; disagreement is
// an InternalError.
AdjointResult adjoint(const LatticePolygon& p);

// Number of adjoint steps until a minimal polygon (one whose adjoint is
// empty, a point, or a segment).  A minimal polygon has level 0.
Int level(const LatticePolygon& p);

struct PolygonInvariants {
  Int area2 = 0;   // = alpha0
  Int b = 0;       // boundary lattice points, = -beta0
  Int v = 0;       // vertex count
  Int level = 0;
  Int alpha0 = 0;
  Int beta0 = 0;

  friend bool operator==(const PolygonInvariants&, const PolygonInvariants&) =
      default;
};

PolygonInvariants surface_invariants(const LatticePolygon& p);

// Both inequalities share the left side 2a - 2lb + 9l^2 (the surface form
// alpha0 + 2 l beta0 + 9 l^2 under the dictionary).  The vertex-count
// inequality is only meaningful for level >= 1: at l = 0 the factor 2l - 1
// is negative and the bound points the wrong way, so level_in_range flags
// such polygons instead of asserting them.
struct InequalityReport {
  PolygonInvariants invariants;
  Int lhs = 0;
  Int corollary_rhs = 0;  // (2l - 1)(v - 11)
  bool corollary_pass = false;
  bool eq2_pass = false;  // lhs >= 0
  bool level_in_range = false;
};

InequalityReport check_inequalities(const LatticePolygon& p);

// Every strictly convex lattice polygon with vertices in [0, box]^2 and
// level >= min_level, one representative per class under unimodular
// transformation + translation, in canonical form, sorted.  Desk scale:
// box <= 8.
std::vector<LatticePolygon> enumerate_polygons(Int box, Int min_level);

// Canonical representative of the unimodular + translation class.  For
// each orientation and each choice of starting edge there is exactly one
// map sending the start vertex to the origin and the start edge onto the
// positive x-axis with the following edge shear-reduced; the canonical
// form is the lexicographically smallest of these normalized vertex
// lists.  Exact: two polygons are equivalent iff their canonical forms
// are equal.
LatticePolygon canonical_form(const LatticePolygon& p);

// Image under the unimodular map [[a, b], [c, d]] (|det| = 1 required),
// reoriented counterclockwise.  Used by the invariance tests.
LatticePolygon unimodular_image(const LatticePolygon& p, Int a, Int b, Int c,
                                Int d);

nlohmann::json polygon_to_json(const LatticePolygon& p);
LatticePolygon polygon_from_json(const nlohmann::json& j);
nlohmann::json inequality_report_json(const InequalityReport& report);

}  // namespace adjoint
