#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "toric_deform/errors.hpp"
#include "toric_deform/rational.hpp"

namespace toric_deform::geometry {

struct LatticeVector2 {
  BigInt x = 0;
  BigInt y = 0;

  LatticeVector2() = default;
  LatticeVector2(BigInt x_, BigInt y_) : x(std::move(x_)), y(std::move(y_)) {}
  LatticeVector2(long x_, long y_) : x(x_), y(y_) {}

  friend LatticeVector2 operator+(const LatticeVector2& a, const LatticeVector2& b) { return {a.x + b.x, a.y + b.y}; }
  friend LatticeVector2 operator-(const LatticeVector2& a, const LatticeVector2& b) { return {a.x - b.x, a.y - b.y}; }
  friend LatticeVector2 operator-(const LatticeVector2& a) { return {-a.x, -a.y}; }
  friend LatticeVector2 operator*(const BigInt& k, const LatticeVector2& a) { return {k * a.x, k * a.y}; }
  LatticeVector2& operator+=(const LatticeVector2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }

  friend bool operator==(const LatticeVector2& a, const LatticeVector2& b) { return a.x == b.x && a.y == b.y; }
  /// Lexicographic: x first, then y.
  friend std::strong_ordering operator<=>(const LatticeVector2& a, const LatticeVector2& b) {
    if (int c = cmp(a.x, b.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(a.y, b.y); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return x == 0 && y == 0; }
  /// gcd(|x|, |y|); zero for the zero vector.
  BigInt lattice_length() const { return big_gcd(x, y); }
  bool is_primitive() const { return lattice_length() == 1; }
  LatticeVector2 primitive() const {
    BigInt g = lattice_length();
    if (g == 0) throw InvalidArgument("the zero vector has no primitive direction");
    return {BigInt(x / g), BigInt(y / g)};
  }

  std::string to_string() const { return "(" + toric_deform::to_string(x) + "," + toric_deform::to_string(y) + ")"; }
  friend std::ostream& operator<<(std::ostream& os, const LatticeVector2& v) { return os << v.to_string(); }
};

inline BigInt cross(const LatticeVector2& a, const LatticeVector2& b) { return a.x * b.y - a.y * b.x; }
inline BigInt dot(const LatticeVector2& a, const LatticeVector2& b) { return a.x * b.x + a.y * b.y; }

/// Strict angular order on non-zero vectors, starting at the positive x axis.
inline bool angle_less(const LatticeVector2& a, const LatticeVector2& b) {
  auto half = [](const LatticeVector2& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

/// Vertices of the convex hull of a finite point set, CCW from the
/// lexicographically smallest point, no collinear vertices. Degenerate
/// inputs yield one point or the two endpoints of a segment.
inline std::vector<LatticeVector2> convex_hull(std::vector<LatticeVector2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<LatticeVector2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

class LatticePolygon {
 public:
  /// Convex hull of the points; throws unless it is two-dimensional.
  static LatticePolygon from_points(std::vector<LatticeVector2> points) {
    auto hull = convex_hull(std::move(points));
    if (hull.size() < 3) throw InvalidPolygon("points do not span a two-dimensional polygon");
    return LatticePolygon(std::move(hull));
  }

  const std::vector<LatticeVector2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const LatticeVector2& vertex(std::size_t i) const { return vertices_.at(i); }

  friend bool operator==(const LatticePolygon& a, const LatticePolygon& b) { return a.vertices_ == b.vertices_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) s += (i ? "," : "") + vertices_[i].to_string();
    return s + "]";
  }

 private:
  explicit LatticePolygon(std::vector<LatticeVector2> v) : vertices_(std::move(v)) {}
  std::vector<LatticeVector2> vertices_;
};

inline LatticePolygon polygon_from_points(std::vector<LatticeVector2> points) {
  return LatticePolygon::from_points(std::move(points));
}

/// Polygon with the given CCW edge vectors, first vertex at the origin.
/// Edges must sum to zero and turn strictly left at every vertex.
inline LatticePolygon polygon_from_edges(const std::vector<LatticeVector2>& edges) {
  if (edges.size() < 3) throw InvalidPolygon("a polygon needs at least three edges");
  LatticeVector2 sum;
  for (const auto& e : edges) {
    if (e.is_zero()) throw InvalidPolygon("zero edge vector");
    sum += e;
  }
  if (!sum.is_zero()) throw InvalidPolygon("edge vectors do not close up");
  BigInt winding = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (cross(edges[i], edges[(i + 1) % edges.size()]) <= 0)
      throw InvalidPolygon("edge vectors are not in strictly convex CCW order");
    if (angle_less(edges[(i + 1) % edges.size()], edges[i])) winding += 1;
  }
  if (winding != 1) throw InvalidPolygon("edge vectors wind more than once");
  std::vector<LatticeVector2> pts;
  LatticeVector2 p;
  for (const auto& e : edges) {
    pts.push_back(p);
    p += e;
  }
  return LatticePolygon::from_points(std::move(pts));
}

struct EdgeVectorList {
  std::vector<LatticeVector2> edges;
  std::vector<BigInt> lengths;

  std::vector<LatticeVector2> directions() const {
    std::vector<LatticeVector2> d;
    for (const auto& e : edges) d.push_back(e.primitive());
    return d;
  }
};

/// Edge i runs from vertex i to vertex i+1.
inline EdgeVectorList edge_vectors(const LatticePolygon& f) {
  EdgeVectorList out;
  const auto& v = f.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.edges.push_back(v[(i + 1) % v.size()] - v[i]);
    out.lengths.push_back(out.edges.back().lattice_length());
  }
  return out;
}

inline bool is_unit_edge(const LatticePolygon& f) {
  const auto ev = edge_vectors(f);
  return std::all_of(ev.lengths.begin(), ev.lengths.end(), [](const BigInt& l) { return l == 1; });
}

/// Twice the centre of symmetry when the polygon is centrally symmetric.
inline std::optional<LatticeVector2> doubled_center(const std::vector<LatticeVector2>& vertices) {
  if (vertices.empty()) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(vertices.begin(), vertices.end());
  const LatticeVector2 s = *lo + *hi;
  std::vector<LatticeVector2> a = vertices, b;
  for (const auto& v : vertices) b.push_back(s - v);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  return s;
}

inline std::optional<LatticeVector2> doubled_center(const LatticePolygon& f) { return doubled_center(f.vertices()); }

inline bool is_centrally_symmetric(const LatticePolygon& f) { return doubled_center(f).has_value(); }

/// p -> M p + t with det M = ±1.
struct UnimodularMap {
  BigInt a = 1, b = 0, c = 0, d = 1;
  LatticeVector2 t;

  UnimodularMap() = default;
  UnimodularMap(BigInt a_, BigInt b_, BigInt c_, BigInt d_, LatticeVector2 t_ = {})
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), t(std::move(t_)) {
    validate();
  }

  BigInt det() const { return a * d - b * c; }
  void validate() const {
    const BigInt dt = det();
    if (dt != 1 && dt != -1) throw InvalidArgument("matrix is not unimodular (det = " + to_string(dt) + ")");
  }

  LatticeVector2 linear(const LatticeVector2& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  LatticeVector2 operator()(const LatticeVector2& p) const { return linear(p) + t; }

  /// Linear part only, composed: (this ∘ o).
  UnimodularMap compose(const UnimodularMap& o) const {
    return UnimodularMap(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d, (*this)(o.t));
  }
};

inline LatticePolygon apply_unimodular(const UnimodularMap& m, const LatticePolygon& f) {
  m.validate();
  std::vector<LatticeVector2> pts;
  for (const auto& v : f.vertices()) pts.push_back(m(v));
  return LatticePolygon::from_points(std::move(pts));
}

inline LatticePolygon translate(const LatticePolygon& f, const LatticeVector2& t) {
  std::vector<LatticeVector2> pts;
  for (const auto& v : f.vertices()) pts.push_back(v + t);
  return LatticePolygon::from_points(std::move(pts));
}

/// Translate so that the lexicographically smallest vertex is the origin.
inline LatticePolygon normalize_translation(const LatticePolygon& f) { return translate(f, -f.vertex(0)); }

/// Number of lattice points in the polygon (Pick).
inline BigInt lattice_point_count(const LatticePolygon& f) {
  const auto& v = f.vertices();
  BigInt twice_area = 0, boundary = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    twice_area += cross(v[i], v[(i + 1) % v.size()]);
    boundary += (v[(i + 1) % v.size()] - v[i]).lattice_length();
  }
  // A = I + B/2 - 1, so I + B = A + B/2 + 1.
  return (twice_area + boundary) / 2 + 1;
}

}  // namespace toric_deform::geometry
