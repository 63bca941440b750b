#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric_deform/errors.hpp"
#include "toric_deform/graded.hpp"
#include "toric_deform/groebner.hpp"
#include "toric_deform/lattice.hpp"
#include "toric_deform/polynomial.hpp"

namespace toric_deform::hulls {

using algebra::Ideal;
using algebra::Polynomial;
using algebra::RingPtr;
using geometry::LatticePolygon;
using geometry::LatticeVector2;

/// The homogeneous presentation of A_F for one choice of dropped edge.
/// Variable k of the ring belongs to edge edge_of_variable[k].
struct AltmannPresentation {
  std::vector<LatticeVector2> edges;
  std::size_t dropped = 0;
  unsigned k_max = 0;
  RingPtr ring;
  std::vector<std::size_t> edge_of_variable;
  /// alpha[k-1] = sum a_i x_i^k, beta[k-1] = sum b_i x_i^k over i != dropped.
  std::vector<Polynomial> alpha;
  std::vector<Polynomial> beta;

  /// Generators alpha_1, beta_1, alpha_2, beta_2, ...
  Ideal ideal() const {
    std::vector<Polynomial> gens;
    for (unsigned k = 0; k < k_max; ++k) {
      gens.push_back(alpha[k]);
      gens.push_back(beta[k]);
    }
    return Ideal(ring, std::move(gens));
  }

  std::size_t edge_count() const { return edges.size(); }
};

/// Default variable name for edge i (0-based): x1, x2, ...
inline std::string edge_variable_name(std::size_t i) { return "x" + std::to_string(i + 1); }

inline Polynomial power_sum(const RingPtr& ring, const std::vector<BigInt>& coeffs, unsigned k) {
  std::vector<algebra::Term> terms;
  for (std::size_t v = 0; v < coeffs.size(); ++v)
    if (coeffs[v] != 0) terms.push_back({algebra::Monomial::variable(coeffs.size(), v, k), BigRational(coeffs[v])});
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Presentation from an explicit edge list, in the given order. `names`
/// labels all edges (the dropped one's name is unused); defaults to x1..xm.
inline AltmannPresentation altmann_from_edges(const std::vector<LatticeVector2>& edges, std::size_t dropped,
                                              std::optional<unsigned> k_max = std::nullopt,
                                              std::optional<std::vector<std::string>> names = std::nullopt) {
  const std::size_t m = edges.size();
  if (m < 3) throw InvalidPolygon("a polygon has at least three edges");
  if (dropped >= m) throw InvalidArgument("dropped edge index out of range");
  if (names && names->size() != m) throw InvalidArgument("need one variable name per edge");
  LatticeVector2 sum;
  for (const auto& e : edges) sum += e;
  if (!sum.is_zero()) throw InvalidPolygon("edge vectors do not sum to zero");

  AltmannPresentation p;
  p.edges = edges;
  p.dropped = dropped;
  p.k_max = k_max.value_or(static_cast<unsigned>(m - 2));
  if (p.k_max < 1) throw InvalidArgument("k_max must be at least 1");
  std::vector<std::string> vars;
  std::vector<BigInt> a, b;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == dropped) continue;
    vars.push_back(names ? (*names)[i] : edge_variable_name(i));
    p.edge_of_variable.push_back(i);
    a.push_back(edges[i].x);
    b.push_back(edges[i].y);
  }
  // The remaining edges must span the plane.
  bool rank2 = false;
  for (std::size_t i = 0; i < a.size() && !rank2; ++i)
    for (std::size_t j = i + 1; j < a.size() && !rank2; ++j) rank2 = a[i] * b[j] - a[j] * b[i] != 0;
  if (!rank2) throw InvalidPolygon("linear generators have rank < 2");

  p.ring = algebra::make_ring(std::move(vars));
  for (unsigned k = 1; k <= p.k_max; ++k) {
    p.alpha.push_back(power_sum(p.ring, a, k));
    p.beta.push_back(power_sum(p.ring, b, k));
  }
  return p;
}

/// Presentation of A_F from the canonical CCW edges; drops the last edge
/// unless told otherwise.
inline AltmannPresentation build_altmann_ideal(const LatticePolygon& f, std::optional<std::size_t> dropped = std::nullopt,
                                               std::optional<unsigned> k_max = std::nullopt) {
  const auto edges = geometry::edge_vectors(f).edges;
  return altmann_from_edges(edges, dropped.value_or(edges.size() - 1), k_max);
}

/// Checks alpha_k + s_1 alpha_{k-1} + ... + s_n alpha_{k-n} = 0 where
/// alpha_j = sum c_i x_i^j and s_r = (-1)^r e_r(x_1..x_n).
inline bool verify_newton_recurrence(const std::vector<BigRational>& coeffs, unsigned k) {
  const std::size_t n = coeffs.size();
  if (n == 0) throw InvalidArgument("need at least one variable");
  if (k <= n) throw InvalidArgument("the recurrence needs k > n");
  auto ring = algebra::make_indexed_ring("x", n);
  auto alpha = [&](unsigned j) {
    Polynomial s(ring);
    for (std::size_t i = 0; i < n; ++i)
      s += Polynomial::monomial(ring, algebra::Monomial::variable(n, i, j), coeffs[i]);
    return s;
  };
  // e[r] = elementary symmetric polynomial of degree r, built by the
  // product prod (1 + x_i t).
  std::vector<Polynomial> e(n + 1, Polynomial(ring));
  e[0] = Polynomial::constant(ring, BigRational(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = i + 1; r >= 1; --r) e[r] += e[r - 1] * Polynomial::variable(ring, i);
  Polynomial total = alpha(k);
  for (std::size_t r = 1; r <= n; ++r) {
    Polynomial term = e[r] * alpha(k - static_cast<unsigned>(r));
    if (r % 2 == 1) total -= term;
    else total += term;
  }
  return total.is_zero();
}

/// alpha_k and beta_k lie in I_F for k = m-1 .. m-2+k_extra.
inline bool verify_truncation(const LatticePolygon& f, unsigned k_extra) {
  const auto base = build_altmann_ideal(f);
  const unsigned top = base.k_max + k_extra;
  const auto full = build_altmann_ideal(f, base.dropped, top);
  const auto gb = algebra::buchberger(base.ideal(), algebra::MonomialOrder::grevlex(), static_cast<int>(top));
  for (unsigned k = base.k_max + 1; k <= top; ++k)
    if (!algebra::is_member(full.alpha[k - 1], gb) || !algebra::is_member(full.beta[k - 1], gb)) return false;
  return true;
}

/// The linear map from the ring of I_{drop a} to the ring of I_{drop b}:
/// x_i -> y_i - y_a for i != a, b and x_b -> -y_a.
inline algebra::LinearSubstitution drop_edge_map(const AltmannPresentation& from, const AltmannPresentation& to) {
  if (from.edges != to.edges) throw InvalidArgument("presentations of different edge lists");
  if (from.dropped == to.dropped) throw InvalidArgument("dropped edges must differ");
  algebra::LinearSubstitution s{from.ring, to.ring, {}};
  auto var_of_edge = [&](std::size_t edge) {
    for (std::size_t v = 0; v < to.edge_of_variable.size(); ++v)
      if (to.edge_of_variable[v] == edge) return v;
    throw InvalidArgument("edge has no variable");
  };
  const auto ya = Polynomial::variable(to.ring, var_of_edge(from.dropped));
  for (std::size_t edge : from.edge_of_variable) {
    if (edge == to.dropped) s.images.push_back(-ya);
    else s.images.push_back(Polynomial::variable(to.ring, var_of_edge(edge)) - ya);
  }
  s.validate();
  return s;
}

/// For every dropped edge j, the image of I_first under drop_edge_map
/// equals I_j. Restricted to m <= 7.
inline bool verify_drop_edge_invariance(const LatticePolygon& f, std::size_t first = 0) {
  const auto edges = geometry::edge_vectors(f).edges;
  if (edges.size() > 7) throw InvalidArgument("drop-edge check is limited to polygons with at most 7 edges");
  const auto base = altmann_from_edges(edges, first);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (j == first) continue;
    const auto other = altmann_from_edges(edges, j);
    if (!algebra::ideal_equal(algebra::linear_substitute(base.ideal(), drop_edge_map(base, other)), other.ideal()))
      return false;
  }
  return true;
}

/// A_F with the two linear generators solved away: an ideal in m-3
/// variables generated by forms of degree 2..k_max. Pivot variables are
/// the first two with independent coefficient columns.
struct ReducedPresentation {
  RingPtr ring;
  Ideal ideal;
  /// Images of the degree-k generators, k >= 2.
  std::vector<Polynomial> alpha;
  std::vector<Polynomial> beta;
  algebra::LinearSubstitution substitution;
};

inline ReducedPresentation reduce_linear_part(const AltmannPresentation& p) {
  const std::size_t n = p.ring->size();
  std::vector<BigRational> a(n, BigRational(0)), b(n, BigRational(0));
  for (std::size_t v = 0; v < n; ++v) {
    a[v] = p.alpha[0].coefficient(algebra::Monomial::variable(n, v));
    b[v] = p.beta[0].coefficient(algebra::Monomial::variable(n, v));
  }
  std::size_t piv1 = n, piv2 = n;
  for (std::size_t i = 0; i < n && piv2 == n; ++i) {
    if (piv1 == n) {
      if (!a[i].is_zero() || !b[i].is_zero()) piv1 = i;
    } else if (!(a[piv1] * b[i] - a[i] * b[piv1]).is_zero()) {
      piv2 = i;
    }
  }
  if (piv2 == n) throw InvalidPolygon("linear generators have rank < 2");

  std::vector<std::string> free_names;
  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < n; ++v)
    if (v != piv1 && v != piv2) {
      free_names.push_back(p.ring->name(v));
      free_vars.push_back(v);
    }
  auto target = algebra::make_ring(free_names);
  // Solve [a1 a2; b1 b2] (x_p1, x_p2)^T = -(sum over free vars) by Cramer.
  const BigRational det = a[piv1] * b[piv2] - a[piv2] * b[piv1];
  Polynomial rest_a(target), rest_b(target);
  for (std::size_t k = 0; k < free_vars.size(); ++k) {
    const auto xv = Polynomial::variable(target, k);
    rest_a += xv * a[free_vars[k]];
    rest_b += xv * b[free_vars[k]];
  }
  const BigRational inv = BigRational(1) / det;
  const Polynomial x1 = (rest_b * a[piv2] - rest_a * b[piv2]) * inv;
  const Polynomial x2 = (rest_a * b[piv1] - rest_b * a[piv1]) * inv;

  algebra::LinearSubstitution s{p.ring, target, {}};
  for (std::size_t v = 0; v < n; ++v) {
    if (v == piv1) s.images.push_back(x1);
    else if (v == piv2) s.images.push_back(x2);
    else s.images.push_back(Polynomial::variable(target, p.ring->name(v)));
  }
  s.validate();

  ReducedPresentation r{target, Ideal(target), {}, {}, s};
  std::vector<Polynomial> gens;
  for (unsigned k = 2; k <= p.k_max; ++k) {
    r.alpha.push_back(algebra::linear_substitute(p.alpha[k - 1], s));
    r.beta.push_back(algebra::linear_substitute(p.beta[k - 1], s));
    gens.push_back(r.alpha.back());
    gens.push_back(r.beta.back());
  }
  r.ideal = Ideal(target, std::move(gens));
  return r;
}

}  // namespace toric_deform::hulls
