#pragma once

// Test-only reference computations. Nothing here calls into the Groebner
// engine, the Bareiss rank or the decomposition enumerator; these are the
// independent routes the unit tests compare against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "toric_deform/rational.hpp"

namespace oracle {

using toric_deform::BigInt;
using toric_deform::BigRational;

using Exponents = std::vector<std::uint32_t>;

// Dense univariate polynomial over Q, index = degree, no trailing zeros.
using Univariate = std::vector<BigRational>;

inline void trim(Univariate& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Univariate uni_mul(const Univariate& a, const Univariate& b) {
  if (a.empty() || b.empty()) return {};
  Univariate r(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Univariate uni_mod(Univariate a, const Univariate& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    BigRational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  return a;
}

inline Univariate uni_div_exact(Univariate a, const Univariate& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Univariate q(a.size() - b.size() + 1, BigRational(0));
  while (a.size() >= b.size() && !a.empty()) {
    BigRational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return q;
}

inline Univariate uni_monic(Univariate a) {
  trim(a);
  if (a.empty()) return a;
  BigRational inv = BigRational(1) / a.back();
  for (auto& c : a) c *= inv;
  return a;
}

// Euclid over Q.
inline Univariate uni_gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return uni_monic(a);
}

inline Univariate uni_lcm(const Univariate& a, const Univariate& b) {
  return uni_monic(uni_div_exact(uni_mul(a, b), uni_gcd(a, b)));
}

// Binary quadric a x^2 + b xy + c y^2. Two such forms share a root in P^1
// over the algebraic closure iff they are proportional, or both vanish at
// [1:0], or their dehomogenisations at y = 1 have a non-constant gcd.
struct BinaryQuadric {
  BigRational a, b, c;
};

inline bool quadrics_share_projective_root(const BinaryQuadric& f, const BinaryQuadric& g) {
  if (f.a.is_zero() && g.a.is_zero()) return true;  // both vanish at [1:0]
  Univariate uf{f.c, f.b, f.a}, ug{g.c, g.b, g.a};
  trim(uf);
  trim(ug);
  return uni_gcd(uf, ug).size() > 1;
}

// Monomials of degree d in n variables (lexicographic enumeration).
inline std::vector<Exponents> monomials(std::size_t n, unsigned d) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Hilbert function of a monomial ideal by counting standard monomials.
inline std::vector<long> monomial_ideal_hilbert(std::size_t n, const std::vector<Exponents>& gens, unsigned d_max) {
  std::vector<long> h;
  for (unsigned d = 0; d <= d_max; ++d) {
    long count = 0;
    for (const auto& m : monomials(n, d))
      if (std::none_of(gens.begin(), gens.end(), [&](const Exponents& g) { return divides(g, m); })) ++count;
    h.push_back(count);
  }
  return h;
}

// dim of the degree-d part of a monomial ideal: distinct multiples.
inline std::size_t monomial_ideal_piece(std::size_t n, const std::vector<Exponents>& gens, unsigned d) {
  std::set<Exponents> seen;
  for (const auto& m : monomials(n, d))
    for (const auto& g : gens)
      if (divides(g, m)) seen.insert(m);
  return seen.size();
}

// Continued fraction a_0 - 1/(a_1 - 1/(...)) evaluated exactly.
inline BigRational evaluate_hj(const std::vector<BigInt>& entries) {
  BigRational v(entries.back());
  for (std::size_t i = entries.size() - 1; i-- > 0;) v = BigRational(entries[i]) - BigRational(1) / v;
  return v;
}

// Minimal zero-sum partitions of a list of vectors, by brute force over
// bitmasks. Used to count maximal Minkowski decompositions of small
// polygons whose edges are all primitive.
inline std::size_t count_zero_sum_partitions(const std::vector<std::pair<long, long>>& vs) {
  const std::size_t n = vs.size();
  std::vector<std::uint64_t> zero;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    long sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) {
        sx += vs[i].first;
        sy += vs[i].second;
      }
    if (sx == 0 && sy == 0) zero.push_back(mask);
  }
  std::sort(zero.begin(), zero.end(),
            [](std::uint64_t a, std::uint64_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  std::vector<std::uint64_t> minimal;
  for (auto z : zero)
    if (std::none_of(minimal.begin(), minimal.end(), [&](std::uint64_t m) { return (m & z) == m; }))
      minimal.push_back(z);
  std::size_t count = 0;
  auto rec = [&](auto&& self, std::uint64_t rem) -> void {
    if (rem == 0) {
      ++count;
      return;
    }
    std::uint64_t low = rem & (~rem + 1);
    for (auto m : minimal)
      if ((m & low) && (m & rem) == m) self(self, rem & ~m);
  };
  rec(rec, (std::uint64_t{1} << n) - 1);
  return count;
}

// Extreme points of a finite planar set: points not lying in a closed
// triangle or segment spanned by the other points. Quartic, small inputs only.
inline std::vector<std::pair<long, long>> extreme_points(std::vector<std::pair<long, long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto cr = [](std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  auto on_segment = [&](std::pair<long, long> p, std::pair<long, long> a, std::pair<long, long> b) {
    return cr(a, b, p) == 0 && std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
  };
  auto in_triangle = [&](std::pair<long, long> p, std::pair<long, long> a, std::pair<long, long> b,
                         std::pair<long, long> c) {
    long d1 = cr(a, b, p), d2 = cr(b, c, p), d3 = cr(c, a, p);
    bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(neg && pos);
  };
  std::vector<std::pair<long, long>> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool inside = false;
    for (std::size_t a = 0; a < n && !inside; ++a)
      for (std::size_t b = a + 1; b < n && !inside; ++b) {
        if (a == i || b == i) continue;
        if (on_segment(pts[i], pts[a], pts[b])) inside = true;
        for (std::size_t c = b + 1; c < n && !inside; ++c)
          if (c != i && cr(pts[a], pts[b], pts[c]) != 0 && in_triangle(pts[i], pts[a], pts[b], pts[c])) inside = true;
      }
    if (!inside) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace oracle
