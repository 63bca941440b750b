#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "toric_deform/errors.hpp"
#include "toric_deform/lattice.hpp"

namespace toric_deform::geometry {

inline constexpr std::size_t kDefaultCopyCap = 30;

/// Vertices of {a + b}; both inputs may be points, segments or polygons.
inline std::vector<LatticeVector2> minkowski_sum_points(const std::vector<LatticeVector2>& a,
                                                        const std::vector<LatticeVector2>& b) {
  std::vector<LatticeVector2> pts;
  pts.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) pts.push_back(p + q);
  return convex_hull(std::move(pts));
}

inline LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b) {
  return LatticePolygon::from_points(minkowski_sum_points(a.vertices(), b.vertices()));
}

inline LatticePolygon minkowski_sum(const LatticePolygon& a, const std::vector<LatticeVector2>& b) {
  if (b.empty()) throw InvalidArgument("empty Minkowski summand");
  return LatticePolygon::from_points(minkowski_sum_points(a.vertices(), b));
}

/// One summand of a decomposition: its primitive edge copies in angular
/// order and its vertices, lexicographically smallest vertex at the origin.
/// Segments have two vertices.
struct Summand {
  std::vector<LatticeVector2> edges;
  std::vector<LatticeVector2> vertices;

  bool is_segment() const { return vertices.size() == 2; }
  friend bool operator==(const Summand&, const Summand&) = default;
  friend bool operator<(const Summand& a, const Summand& b) {
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end());
  }
};

struct MinkowskiDecomposition {
  std::vector<Summand> summands;

  /// Dimension of the matching component of the reduced versal base space.
  std::size_t component_dimension() const { return summands.size() - 1; }
  friend bool operator==(const MinkowskiDecomposition&, const MinkowskiDecomposition&) = default;
};

namespace detail {

using Counts = std::vector<std::uint32_t>;

// All non-zero count vectors n <= caps with sum n_i dirs_i = 0, by
// meet in the middle over the two halves of the direction list.
inline std::vector<Counts> zero_sum_counts(const std::vector<LatticeVector2>& dirs, const Counts& caps) {
  const std::size_t k = dirs.size(), half = k / 2;
  auto expand = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::pair<LatticeVector2, Counts>> out;
    Counts n(k, 0);
    auto rec = [&](auto&& self, std::size_t i, const LatticeVector2& s) -> void {
      if (i == hi) {
        out.emplace_back(s, n);
        return;
      }
      LatticeVector2 acc = s;
      for (std::uint32_t c = 0; c <= caps[i]; ++c) {
        n[i] = c;
        self(self, i + 1, acc);
        acc += dirs[i];
      }
      n[i] = 0;
    };
    rec(rec, lo, LatticeVector2{});
    return out;
  };
  auto left = expand(0, half);
  auto right = expand(half, k);
  std::map<LatticeVector2, std::vector<const Counts*>> by_sum;
  for (const auto& [s, n] : right) by_sum[s].push_back(&n);
  std::vector<Counts> result;
  for (const auto& [s, n] : left) {
    auto it = by_sum.find(-s);
    if (it == by_sum.end()) continue;
    for (const Counts* m : it->second) {
      Counts total = n;
      for (std::size_t i = half; i < k; ++i) total[i] = (*m)[i];
      if (std::any_of(total.begin(), total.end(), [](std::uint32_t c) { return c != 0; })) result.push_back(total);
    }
  }
  return result;
}

inline std::uint32_t count_size(const Counts& n) {
  std::uint32_t s = 0;
  for (auto c : n) s += c;
  return s;
}

inline bool counts_leq(const Counts& a, const Counts& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Zero-sum count vectors with no proper non-empty zero-sum sub-vector.
inline std::vector<Counts> minimal_zero_sums(std::vector<Counts> all) {
  std::stable_sort(all.begin(), all.end(),
                   [](const Counts& a, const Counts& b) { return count_size(a) < count_size(b); });
  std::vector<Counts> minimal;
  for (auto& z : all)
    if (std::none_of(minimal.begin(), minimal.end(), [&](const Counts& m) { return counts_leq(m, z); }))
      minimal.push_back(std::move(z));
  std::sort(minimal.begin(), minimal.end(), std::greater<>());
  return minimal;
}

inline Summand build_summand(const std::vector<LatticeVector2>& dirs, const Counts& n) {
  Summand s;
  std::vector<LatticeVector2> pts;
  LatticeVector2 p;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::uint32_t c = 0; c < n[i]; ++c) {
      pts.push_back(p);
      p += dirs[i];
    }
  auto hull = convex_hull(std::move(pts));
  const LatticeVector2 origin = hull.front();
  for (auto& v : hull) v = v - origin;
  s.vertices = std::move(hull);
  // Edge copies in angular order, starting from the lexicographically smallest vertex.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    if (n[i] != 0) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto key = [&](const LatticeVector2& d) { return (d.x < 0 || (d.x == 0 && d.y < 0)) ? 1 : 0; };
    const int ka = key(dirs[a]), kb = key(dirs[b]);
    if (ka != kb) return ka < kb;
    return cross(dirs[a], dirs[b]) > 0;
  });
  for (auto i : order)
    for (std::uint32_t c = 0; c < n[i]; ++c) s.edges.push_back(dirs[i]);
  return s;
}

}  // namespace detail

/// Every maximal Minkowski decomposition, with each edge of lattice length l
/// split into l primitive copies. Canonically sorted.
inline std::vector<MinkowskiDecomposition> enumerate_maximal_decompositions(const LatticePolygon& f,
                                                                           std::size_t cap = kDefaultCopyCap) {
  const auto ev = edge_vectors(f);
  std::vector<LatticeVector2> dirs = ev.directions();
  detail::Counts caps;
  std::size_t copies = 0;
  for (const auto& l : ev.lengths) {
    if (!l.fits_ulong_p() || l > cap) throw EnumerationCapExceeded(cap + 1, cap);
    caps.push_back(static_cast<std::uint32_t>(l.get_ui()));
    copies += caps.back();
  }
  if (copies > cap) throw EnumerationCapExceeded(copies, cap);

  const auto parts = detail::minimal_zero_sums(detail::zero_sum_counts(dirs, caps));
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> chosen;
  detail::Counts rem = caps;
  // Parts are taken for the first remaining direction; when that direction
  // repeats, part indices must not decrease so each multiset appears once.
  auto rec = [&](auto&& self, std::size_t last_dir, std::size_t last_part) -> void {
    std::size_t first = 0;
    while (first < rem.size() && rem[first] == 0) ++first;
    if (first == rem.size()) {
      found.push_back(chosen);
      return;
    }
    const std::size_t start = first == last_dir ? last_part : 0;
    for (std::size_t p = start; p < parts.size(); ++p) {
      const auto& part = parts[p];
      if (part[first] == 0 || !detail::counts_leq(part, rem)) continue;
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= part[i];
      chosen.push_back(p);
      self(self, first, p);
      chosen.pop_back();
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += part[i];
    }
  };
  rec(rec, rem.size(), 0);

  std::vector<MinkowskiDecomposition> out;
  for (const auto& choice : found) {
    MinkowskiDecomposition d;
    for (auto p : choice) d.summands.push_back(detail::build_summand(dirs, parts[p]));
    std::sort(d.summands.begin(), d.summands.end());
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const MinkowskiDecomposition& a, const MinkowskiDecomposition& b) {
    return std::lexicographical_compare(a.summands.begin(), a.summands.end(), b.summands.begin(), b.summands.end());
  });
  return out;
}

/// The hexagon conv{(1,0),(1,1),(0,1),(-1,0),(-1,-1),(0,-1)}.
inline LatticePolygon hexagon_h() {
  return LatticePolygon::from_points({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
}

/// L = [[5,2],[2,1]].
inline UnimodularMap family_matrix() { return UnimodularMap(5, 2, 2, 1); }

/// H + L H + ... + L^r H.
inline LatticePolygon build_hexagon_family(unsigned r) {
  const auto l = family_matrix();
  LatticePolygon term = hexagon_h();
  LatticePolygon sum = term;
  for (unsigned k = 1; k <= r; ++k) {
    term = apply_unimodular(l, term);
    sum = minkowski_sum(sum, term);
  }
  return sum;
}

struct DisjointnessReport {
  bool disjoint = true;
  bool l_is_identity_mod_2 = true;
  /// First (m, n) with intersecting direction sets, if any.
  std::optional<std::pair<unsigned, unsigned>> witness;
};

/// Checks that the sets {±L^n e1, ±L^n e2, ±L^n (e1+e2)} are pairwise
/// disjoint for 0 <= m < n <= n_max, and that L^n ≡ I mod 2.
inline DisjointnessReport check_iterate_disjointness(unsigned n_max) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  const auto l = family_matrix();
  std::vector<std::vector<LatticeVector2>> sets;
  UnimodularMap power;
  DisjointnessReport report;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0) power = l.compose(power);
    const BigInt entries[] = {power.a - 1, power.b, power.c, power.d - 1};
    for (const auto& e : entries)
      if (mpz_odd_p(e.get_mpz_t())) report.l_is_identity_mod_2 = false;
    std::vector<LatticeVector2> s;
    for (const LatticeVector2& e : {LatticeVector2(1, 0), LatticeVector2(0, 1), LatticeVector2(1, 1)}) {
      s.push_back(power.linear(e));
      s.push_back(-power.linear(e));
    }
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
  }
  for (unsigned m = 0; m <= n_max && report.disjoint; ++m)
    for (unsigned n = m + 1; n <= n_max; ++n) {
      std::vector<LatticeVector2> common;
      std::set_intersection(sets[m].begin(), sets[m].end(), sets[n].begin(), sets[n].end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        report.disjoint = false;
        report.witness = {m, n};
        break;
      }
    }
  return report;
}

}  // namespace toric_deform::geometry
