#include "adjoint/polygon.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace adjoint {

namespace {

// Interior enumeration walks the bounding box; keep it desk-scale.
constexpr Int kMaxBoxExtent = 10000;
constexpr Int kMaxEnumerationBox = 8;

Int cross(const LatticePoint& o, const LatticePoint& a,
          const LatticePoint& b) {
  return checked_sub(
      checked_mul(checked_sub(a.x, o.x), checked_sub(b.y, o.y)),
      checked_mul(checked_sub(a.y, o.y), checked_sub(b.x, o.x)));
}

Int cross(const LatticePoint& a, const LatticePoint& b) {
  return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
}

LatticePoint edge_vector(const LatticePolygon& p, std::size_t i) {
  const LatticePoint& from = p.vertices[i];
  const LatticePoint& to = p.vertices[(i + 1) % p.vertices.size()];
  return {checked_sub(to.x, from.x), checked_sub(to.y, from.y)};
}

// Angular half-plane of a direction: [0, pi) -> 0, [pi, 2pi) -> 1.
int angle_half(const LatticePoint& v) {
  return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
}

bool angle_less(const LatticePoint& a, const LatticePoint& b) {
  const int ha = angle_half(a);
  const int hb = angle_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Bezout coefficients: returns (x, y) with a x + b y = gcd(a, b).
std::pair<Int, Int> bezout(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_x = std::exchange(x, old_x - q * x);
    old_y = std::exchange(y, old_y - q * y);
  }
  if (old_r < 0) {
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_x, old_y};
}

// The unique normalized image of `vertices` (counterclockwise) that starts
// at vertex `start`: the start vertex goes to the origin, the start edge
// onto the positive x-axis, and the residual shear freedom is fixed by
// reducing the next edge's x-component modulo its (positive) y-component.
std::vector<LatticePoint> normalized_from(
    const std::vector<LatticePoint>& vertices, std::size_t start) {
  const std::size_t n = vertices.size();
  const LatticePoint& base = vertices[start];
  const LatticePoint& succ = vertices[(start + 1) % n];
  const Int ex = checked_sub(succ.x, base.x);
  const Int ey = checked_sub(succ.y, base.y);
  const Int g = std::gcd(ex, ey);
  const Int px = ex / g;
  const Int py = ey / g;
  // Rows of the unimodular map sending (px, py) to (1, 0).
  const auto [bx, by] = bezout(px, py);
  Int a = bx, b = by;
  Int c = checked_mul(py, -1), d = px;
  // Shear rows so the second edge's x-component lands in [0, its y).
  const LatticePoint& next = vertices[(start + 2) % n];
  const Int fx = checked_sub(next.x, succ.x);
  const Int fy = checked_sub(next.y, succ.y);
  const Int sx = checked_add(checked_mul(a, fx), checked_mul(b, fy));
  const Int sy = checked_add(checked_mul(c, fx), checked_mul(d, fy));
  const Int k = checked_mul(floor_div(sx, sy), -1);
  a = checked_add(a, checked_mul(k, c));
  b = checked_add(b, checked_mul(k, d));

  std::vector<LatticePoint> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const LatticePoint& v = vertices[(start + j) % n];
    const Int vx = checked_sub(v.x, base.x);
    const Int vy = checked_sub(v.y, base.y);
    out.push_back({checked_add(checked_mul(a, vx), checked_mul(b, vy)),
                   checked_add(checked_mul(c, vx), checked_mul(d, vy))});
  }
  return out;
}

// Strict-turn convex hull (Andrew's monotone chain) of lexicographically
// sorted distinct points; returns counterclockwise vertices.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  std::vector<LatticePoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point equals the first
  return hull;
}

struct BoundingBox {
  Int min_x = 0;
  Int max_x = 0;
  Int min_y = 0;
  Int max_y = 0;
};

BoundingBox bounding_box(const LatticePolygon& p) {
  BoundingBox box{p.vertices.front().x, p.vertices.front().x,
                  p.vertices.front().y, p.vertices.front().y};
  for (const LatticePoint& v : p.vertices) {
    box.min_x = std::min(box.min_x, v.x);
    box.max_x = std::max(box.max_x, v.x);
    box.min_y = std::min(box.min_y, v.y);
    box.max_y = std::max(box.max_y, v.y);
  }
  return box;
}

}  // namespace

LatticePolygon make_polygon(std::vector<LatticePoint> vertices) {
  if (vertices.size() < 3) {
    throw DomainError("polygon needs at least 3 vertices, got " +
                      std::to_string(vertices.size()));
  }
  LatticePolygon p{std::move(vertices)};
  const std::size_t n = p.vertices.size();
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint e = edge_vector(p, i);
    const LatticePoint f = edge_vector(p, (i + 1) % n);
    if (cross(e, f) <= 0) {
      throw DomainError(
          "polygon must be strictly convex and counterclockwise (bad turn "
          "at vertex " +
          std::to_string((i + 1) % n) + ")");
    }
    if (!angle_less(e, f)) ++wraps;
  }
  if (wraps != 1) {
    throw DomainError("polygon winds around more than once");
  }
  return p;
}

LatticePolygon AdjointResult::polygon() const {
  if (variant != AdjointVariant::Polygon) {
    throw InvalidState("adjoint is not a polygon");
  }
  return LatticePolygon{points};
}

Int area2(const LatticePolygon& p) {
  Int twice = 0;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const LatticePoint& a = p.vertices[i];
    const LatticePoint& b = p.vertices[(i + 1) % p.vertices.size()];
    twice = checked_add(twice, cross(a, b));
  }
  return twice;
}

Int boundary_points(const LatticePolygon& p) {
  Int count = 0;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const LatticePoint e = edge_vector(p, i);
    count = checked_add(count, std::gcd(e.x, e.y));
  }
  return count;
}

std::vector<LatticePoint> interior_points(const LatticePolygon& p) {
  const BoundingBox box = bounding_box(p);
  if (checked_sub(box.max_x, box.min_x) > kMaxBoxExtent ||
      checked_sub(box.max_y, box.min_y) > kMaxBoxExtent) {
    throw DomainError("polygon bounding box exceeds the supported extent " +
                      std::to_string(kMaxBoxExtent));
  }
  std::vector<LatticePoint> inside;
  for (Int x = box.min_x + 1; x < box.max_x; ++x) {
    for (Int y = box.min_y + 1; y < box.max_y; ++y) {
      const LatticePoint q{x, y};
      bool strict = true;
      for (std::size_t i = 0; strict && i < p.vertices.size(); ++i) {
        const LatticePoint& a = p.vertices[i];
        const LatticePoint& b = p.vertices[(i + 1) % p.vertices.size()];
        if (cross(a, b, q) <= 0) strict = false;
      }
      if (strict) inside.push_back(q);
    }
  }
  return inside;  // lexicographically sorted by construction
}

AdjointResult adjoint(const LatticePolygon& p) {
  const std::vector<LatticePoint> inside = interior_points(p);
  const Int pick_interior =
      checked_sub(checked_add(area2(p), 2), boundary_points(p)) / 2;
  if (pick_interior != static_cast<Int>(inside.size())) {
    throw InternalError("interior count disagrees with Pick's theorem: " +
                        std::to_string(inside.size()) + " enumerated vs " +
                        std::to_string(pick_interior));
  }

  AdjointResult result;
  if (inside.empty()) {
    result.variant = AdjointVariant::Empty;
    return result;
  }
  if (inside.size() == 1) {
    result.variant = AdjointVariant::Point;
    result.points = inside;
    return result;
  }
  bool collinear = true;
  for (std::size_t i = 2; collinear && i < inside.size(); ++i) {
    if (cross(inside[0], inside[1], inside[i]) != 0) collinear = false;
  }
  if (collinear) {
    result.variant = AdjointVariant::Segment;
    result.points = {inside.front(), inside.back()};
    return result;
  }
  result.variant = AdjointVariant::Polygon;
  result.points = convex_hull(inside);
  return result;
}

Int level(const LatticePolygon& p) {
  Int depth = 0;
  LatticePolygon current = p;
  while (true) {
    const AdjointResult next = adjoint(current);
    if (next.minimal()) return depth;
    current = next.polygon();
    ++depth;
  }
}

PolygonInvariants surface_invariants(const LatticePolygon& p) {
  PolygonInvariants inv;
  inv.area2 = area2(p);
  inv.b = boundary_points(p);
  inv.v = static_cast<Int>(p.vertices.size());
  inv.level = level(p);
  inv.alpha0 = inv.area2;
  inv.beta0 = checked_mul(inv.b, -1);
  return inv;
}

InequalityReport check_inequalities(const LatticePolygon& p) {
  InequalityReport report;
  report.invariants = surface_invariants(p);
  const Int l = report.invariants.level;
  report.lhs = checked_add(
      checked_add(report.invariants.alpha0,
                  checked_mul(checked_mul(2, l), report.invariants.beta0)),
      checked_mul(9, checked_mul(l, l)));
  report.corollary_rhs = checked_mul(checked_sub(checked_mul(2, l), 1),
                                     checked_sub(report.invariants.v, 11));
  report.corollary_pass = report.lhs >= report.corollary_rhs;
  report.eq2_pass = report.lhs >= 0;
  report.level_in_range = l >= 1;
  return report;
}

LatticePolygon unimodular_image(const LatticePolygon& p, Int a, Int b, Int c,
                                Int d) {
  const Int det = checked_sub(checked_mul(a, d), checked_mul(b, c));
  if (det != 1 && det != -1) {
    throw DomainError("unimodular map needs determinant +-1, got " +
                      std::to_string(det));
  }
  LatticePolygon image;
  image.vertices.reserve(p.vertices.size());
  for (const LatticePoint& v : p.vertices) {
    image.vertices.push_back(
        {checked_add(checked_mul(a, v.x), checked_mul(b, v.y)),
         checked_add(checked_mul(c, v.x), checked_mul(d, v.y))});
  }
  if (det < 0) {
    std::reverse(image.vertices.begin(), image.vertices.end());
  }
  return image;
}

LatticePolygon canonical_form(const LatticePolygon& p) {
  // Mirror image, order reversed to stay counterclockwise.
  std::vector<LatticePoint> mirrored;
  mirrored.reserve(p.vertices.size());
  for (auto it = p.vertices.rbegin(); it != p.vertices.rend(); ++it) {
    mirrored.push_back({it->x, checked_mul(it->y, -1)});
  }

  bool have = false;
  std::vector<LatticePoint> best;
  const std::array<const std::vector<LatticePoint>*, 2> orientations = {
      &p.vertices, &mirrored};
  for (const std::vector<LatticePoint>* orientation : orientations) {
    for (std::size_t start = 0; start < orientation->size(); ++start) {
      std::vector<LatticePoint> candidate =
          normalized_from(*orientation, start);
      if (!have || candidate < best) {
        best = std::move(candidate);
        have = true;
      }
    }
  }
  return LatticePolygon{std::move(best)};
}

namespace {

// Whether level(p) >= min_level, organized to reject cheaply: fewer than
// three interior points (counted through Pick's theorem) means level 0.
bool level_at_least(const LatticePolygon& p, Int min_level) {
  if (min_level <= 0) return true;
  const Int interior =
      checked_sub(checked_add(area2(p), 2), boundary_points(p)) / 2;
  if (interior < 3) return false;
  LatticePolygon current = p;
  for (Int step = 0; step < min_level; ++step) {
    const AdjointResult next = adjoint(current);
    if (next.minimal()) return false;
    current = next.polygon();
  }
  return true;
}

// One positive multiple per primitive direction, directions sorted by
// angle; the enumerator picks at most one magnitude per direction, which is
// exactly strict convexity.
struct DirectionClass {
  LatticePoint primitive;
  Int max_multiple = 0;
};

std::vector<DirectionClass> direction_classes(Int box) {
  std::vector<DirectionClass> classes;
  for (Int dx = -box; dx <= box; ++dx) {
    for (Int dy = -box; dy <= box; ++dy) {
      if (dx == 0 && dy == 0) continue;
      if (std::gcd(dx, dy) != 1) continue;
      Int m = 1;
      while (std::abs((m + 1) * dx) <= box && std::abs((m + 1) * dy) <= box) {
        ++m;
      }
      classes.push_back({{dx, dy}, m});
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const DirectionClass& a, const DirectionClass& b) {
              return angle_less(a.primitive, b.primitive);
            });
  return classes;
}

class PolygonEnumerator {
 public:
  PolygonEnumerator(Int box, Int min_level)
      : box_(box), min_level_(min_level), classes_(direction_classes(box)) {}

  std::vector<LatticePolygon> run() {
    path_.push_back({0, 0});
    descend(0, BoundingBox{});
    path_.clear();
    return {seen_.begin(), seen_.end()};
  }

 private:
  void descend(std::size_t idx, const BoundingBox& box) {
    const LatticePoint pos = path_.back();  // by value: path_ reallocates
    if (path_.size() >= 2 && pos.x == 0 && pos.y == 0) {
      // A closed angular cycle admits no further extension; with fewer than
      // three edges it is degenerate and discarded.
      if (path_.size() >= 4) emit();
      return;
    }
    if (idx == classes_.size()) return;
    descend(idx + 1, box);  // skip this direction
    const DirectionClass& dir = classes_[idx];
    for (Int m = 1; m <= dir.max_multiple; ++m) {
      const LatticePoint next{pos.x + m * dir.primitive.x,
                              pos.y + m * dir.primitive.y};
      BoundingBox grown = box;
      grown.min_x = std::min(grown.min_x, next.x);
      grown.max_x = std::max(grown.max_x, next.x);
      grown.min_y = std::min(grown.min_y, next.y);
      grown.max_y = std::max(grown.max_y, next.y);
      if (grown.max_x - grown.min_x > box_ || grown.max_y - grown.min_y > box_) {
        continue;
      }
      path_.push_back(next);
      descend(idx + 1, grown);
      path_.pop_back();
    }
  }

  void emit() {
    const LatticePolygon polygon{{path_.begin(), path_.end() - 1}};
    if (!level_at_least(polygon, min_level_)) return;
    seen_.insert(canonical_form(polygon));
  }

  Int box_;
  Int min_level_;
  std::vector<DirectionClass> classes_;
  std::vector<LatticePoint> path_;
  std::set<LatticePolygon> seen_;
};

}  // namespace

std::vector<LatticePolygon> enumerate_polygons(Int box, Int min_level) {
  if (box < 1 || box > kMaxEnumerationBox) {
    throw DomainError("enumeration box must be in [1, " +
                      std::to_string(kMaxEnumerationBox) + "], got " +
                      std::to_string(box));
  }
  if (min_level < 0) {
    throw DomainError("min_level must be nonnegative");
  }
  return PolygonEnumerator(box, min_level).run();
}

nlohmann::json polygon_to_json(const LatticePolygon& p) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const LatticePoint& v : p.vertices) {
    vertices.push_back({v.x, v.y});
  }
  return vertices;
}

LatticePolygon polygon_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw DomainError("polygon JSON must be an array of [x, y] pairs");
  }
  std::vector<LatticePoint> vertices;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
      throw DomainError("polygon JSON vertex must be an [x, y] integer pair");
    }
    vertices.push_back({entry[0].get<Int>(), entry[1].get<Int>()});
  }
  return make_polygon(std::move(vertices));
}

nlohmann::json inequality_report_json(const InequalityReport& report) {
  return {{"area2", report.invariants.area2},
          {"b", report.invariants.b},
          {"v", report.invariants.v},
          {"level", report.invariants.level},
          {"alpha0", report.invariants.alpha0},
          {"beta0", report.invariants.beta0},
          {"lhs", report.lhs},
          {"corollary_rhs", report.corollary_rhs},
          {"corollary_pass", report.corollary_pass},
          {"eq2_pass", report.eq2_pass},
          {"level_in_range", report.level_in_range}};
}

}  // namespace adjoint
