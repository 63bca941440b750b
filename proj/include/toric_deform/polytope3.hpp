#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "toric_deform/errors.hpp"
#include "toric_deform/lattice.hpp"
#include "toric_deform/rational.hpp"

namespace toric_deform::fano {

struct LatticeVector3 {
  BigInt x = 0, y = 0, z = 0;

  LatticeVector3() = default;
  LatticeVector3(BigInt x_, BigInt y_, BigInt z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  LatticeVector3(long x_, long y_, long z_) : x(x_), y(y_), z(z_) {}

  friend LatticeVector3 operator+(const LatticeVector3& a, const LatticeVector3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend LatticeVector3 operator-(const LatticeVector3& a, const LatticeVector3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend LatticeVector3 operator-(const LatticeVector3& a) { return {-a.x, -a.y, -a.z}; }
  friend bool operator==(const LatticeVector3& a, const LatticeVector3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend std::strong_ordering operator<=>(const LatticeVector3& a, const LatticeVector3& b) {
    for (auto [p, q] : {std::pair{&a.x, &b.x}, std::pair{&a.y, &b.y}, std::pair{&a.z, &b.z}})
      if (int c = cmp(*p, *q); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  BigInt content() const { return big_gcd(big_gcd(x, y), z); }
  bool is_primitive() const { return content() == 1; }
  bool is_zero() const { return x == 0 && y == 0 && z == 0; }

  std::string to_string() const {
    return "(" + toric_deform::to_string(x) + "," + toric_deform::to_string(y) + "," + toric_deform::to_string(z) + ")";
  }
};

inline BigInt dot(const LatticeVector3& a, const LatticeVector3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline LatticeVector3 cross(const LatticeVector3& a, const LatticeVector3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// normal · p <= offset on the polytope, with equality on the facet.
struct Facet {
  LatticeVector3 normal;
  BigInt offset;

  friend bool operator==(const Facet& a, const Facet& b) { return a.normal == b.normal && a.offset == b.offset; }
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

class LatticePolytope3 {
 public:
  /// Exact hull of a full-dimensional point set. Every plane through three
  /// input points is tested as a supporting plane; fine for a few dozen points.
  static LatticePolytope3 from_points(std::vector<LatticeVector3> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    std::vector<Facet> facets;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          LatticeVector3 nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
          if (nrm.is_zero()) continue;
          const BigInt g = nrm.content();
          nrm = {BigInt(nrm.x / g), BigInt(nrm.y / g), BigInt(nrm.z / g)};
          const BigInt off = dot(nrm, pts[i]);
          bool below = true, above = true;
          for (const auto& p : pts) {
            const int s = cmp(dot(nrm, p), off);
            below &= s <= 0;
            above &= s >= 0;
            if (!below && !above) break;
          }
          if (below && above) throw InvalidArgument("points do not span a three-dimensional polytope");
          if (below) facets.push_back({nrm, off});
          if (above) facets.push_back({-nrm, BigInt(-off)});
        }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    if (facets.size() < 4) throw InvalidArgument("points do not span a three-dimensional polytope");

    std::vector<LatticeVector3> vertices;
    for (const auto& p : pts) {
      std::size_t tight = 0;
      for (const auto& f : facets) tight += dot(f.normal, p) == f.offset;
      if (tight >= 3) vertices.push_back(p);
    }
    return LatticePolytope3(std::move(vertices), std::move(facets));
  }

  const std::vector<LatticeVector3>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const LatticeVector3& p) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return dot(f.normal, p) <= f.offset; });
  }

  LatticePolytope3 translated(const LatticeVector3& t) const {
    std::vector<LatticeVector3> pts;
    for (const auto& v : vertices_) pts.push_back(v + t);
    return from_points(std::move(pts));
  }

  LatticePolytope3 negated() const {
    std::vector<LatticeVector3> pts;
    for (const auto& v : vertices_) pts.push_back(-v);
    return from_points(std::move(pts));
  }

  friend bool operator==(const LatticePolytope3& a, const LatticePolytope3& b) { return a.vertices_ == b.vertices_; }

 private:
  LatticePolytope3(std::vector<LatticeVector3> v, std::vector<Facet> f)
      : vertices_(std::move(v)), facets_(std::move(f)) {}
  std::vector<LatticeVector3> vertices_;
  std::vector<Facet> facets_;
};

/// conv((F x {1}) ∪ (-F x {-1})).
inline LatticePolytope3 build_P_F(const geometry::LatticePolygon& f) {
  std::vector<LatticeVector3> pts;
  for (const auto& v : f.vertices()) {
    pts.emplace_back(v.x, v.y, BigInt(1));
    pts.emplace_back(BigInt(-v.x), BigInt(-v.y), BigInt(-1));
  }
  return LatticePolytope3::from_points(std::move(pts));
}

/// Origin strictly inside and every vertex primitive.
inline bool is_fano(const LatticePolytope3& p) {
  const bool interior =
      std::all_of(p.facets().begin(), p.facets().end(), [](const Facet& f) { return f.offset > 0; });
  const bool primitive =
      std::all_of(p.vertices().begin(), p.vertices().end(), [](const LatticeVector3& v) { return v.is_primitive(); });
  return interior && primitive;
}

/// Every facet at lattice distance one from the origin.
inline bool is_reflexive(const LatticePolytope3& p) {
  return std::all_of(p.facets().begin(), p.facets().end(), [](const Facet& f) { return f.offset == 1; });
}

inline bool is_centrally_symmetric(const LatticePolytope3& p) { return p.negated() == p; }

/// P has vertex set F' x {1, -1} after the shear (u, z) -> (u - z c, z),
/// where c is the centre of the centrally symmetric F and F' = F - c.
/// Computed in doubled coordinates so half-integral centres stay exact.
inline bool is_prism_over(const LatticePolytope3& p, const geometry::LatticePolygon& f) {
  const auto s = geometry::doubled_center(f);
  if (!s) return false;
  std::vector<LatticeVector3> got, expected;
  for (const auto& v : p.vertices()) {
    if (v.z != 1 && v.z != -1) return false;
    got.emplace_back(BigInt(2 * v.x - v.z * s->x), BigInt(2 * v.y - v.z * s->y), v.z);
  }
  for (const auto& v : f.vertices())
    for (long z : {1L, -1L}) expected.emplace_back(BigInt(2 * v.x - s->x), BigInt(2 * v.y - s->y), BigInt(z));
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

}  // namespace toric_deform::fano
