#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric_deform/altmann.hpp"
#include "toric_deform/errors.hpp"
#include "toric_deform/graded.hpp"
#include "toric_deform/lattice.hpp"
#include "toric_deform/minkowski.hpp"

namespace toric_deform::hulls {

enum class CaseTag { Case0, Case1a, Case1b, Case2a, Case2b, Case2c, Case2d, HigherEmbeddingDim };

/// Isomorphism class of the hull; `embedding_dimension` is set for every
/// tag and is the payload of HigherEmbeddingDim.
struct Classification {
  CaseTag tag = CaseTag::Case0;
  unsigned embedding_dimension = 0;

  static Classification of(CaseTag t) {
    switch (t) {
      case CaseTag::Case0: return {t, 0};
      case CaseTag::Case1a:
      case CaseTag::Case1b: return {t, 1};
      default: return {t, 2};
    }
  }
  static Classification higher(unsigned d) { return {CaseTag::HigherEmbeddingDim, d}; }

  std::string to_string() const {
    switch (tag) {
      case CaseTag::Case0: return "Case0";
      case CaseTag::Case1a: return "Case1a";
      case CaseTag::Case1b: return "Case1b";
      case CaseTag::Case2a: return "Case2a";
      case CaseTag::Case2b: return "Case2b";
      case CaseTag::Case2c: return "Case2c";
      case CaseTag::Case2d: return "Case2d";
      case CaseTag::HigherEmbeddingDim: return "HigherEmbeddingDim(" + std::to_string(embedding_dimension) + ")";
    }
    return "?";
  }

  /// The normal form of the hull as a C-algebra.
  std::string algebra() const {
    switch (tag) {
      case CaseTag::Case0: return "C";
      case CaseTag::Case1a: return "C[x]/(x^2)";
      case CaseTag::Case1b: return "C[[x]]";
      case CaseTag::Case2a: return "C[x,y]/(x^2, y^2)";
      case CaseTag::Case2b: return "C[x,y]/(x^2, xy, y^3)";
      case CaseTag::Case2c: return "C[[x,y]]/(x^2, xy)";
      case CaseTag::Case2d: return "C[[x,y]]";
      case CaseTag::HigherEmbeddingDim: return "embedding dimension " + std::to_string(embedding_dimension);
    }
    return "?";
  }

  friend bool operator==(const Classification&, const Classification&) = default;
};

inline void require_unit_edge(const LatticePolygon& f) {
  if (!geometry::is_unit_edge(f)) throw NotUnitEdge();
}

inline bool is_parallelogram(const LatticePolygon& f) {
  const auto e = geometry::edge_vectors(f).edges;
  return e.size() == 4 && e[0] == -e[2] && e[1] == -e[3];
}

inline Classification classify(const LatticePolygon& f) {
  require_unit_edge(f);
  const std::size_t m = f.size();
  if (m == 3) return Classification::of(CaseTag::Case0);
  if (m == 4) return Classification::of(is_parallelogram(f) ? CaseTag::Case1b : CaseTag::Case1a);
  if (m >= 6) return Classification::higher(static_cast<unsigned>(m - 3));

  const auto reduced = reduce_linear_part(build_altmann_ideal(f));
  const auto& q1 = reduced.alpha[0];
  const auto& q2 = reduced.beta[0];
  if (!q1.is_zero() && !q2.is_zero() && algebra::contains_cube_of_maximal_ideal(q1, q2))
    return Classification::of(CaseTag::Case2a);
  const auto h = algebra::hilbert_function(reduced.ideal, 3);
  return Classification::of(h[3] == 0 ? CaseTag::Case2b : CaseTag::Case2c);
}

struct HullComponent {
  geometry::MinkowskiDecomposition decomposition;
  std::size_t dimension = 0;
};

struct HullReport {
  LatticePolygon polygon;
  std::size_t edge_count = 0;
  std::size_t embedding_dimension = 0;
  std::vector<BigInt> hilbert;
  std::vector<HullComponent> components;
  Classification classification;
  bool artinian = false;
  /// H(1) = m - 3.
  bool h1_check = false;
  /// H(2) = (m^2 - 5m + 2)/2 when m >= 5.
  std::optional<bool> h2_check;
  /// H(2) = (d^2 + d - 4)/2 for d = embedding dimension >= 2.
  std::optional<bool> obstruction_check;
};

inline unsigned default_hilbert_depth(std::size_t m) {
  return std::max<unsigned>(4, static_cast<unsigned>(m >= 2 ? m - 2 : 0));
}

/// Hilbert function of A_F up to d_max, from the presentation with the
/// linear generators solved away (same graded algebra, fewer variables).
inline std::vector<BigInt> altmann_hilbert(const LatticePolygon& f, unsigned d_max) {
  return algebra::hilbert_function(reduce_linear_part(build_altmann_ideal(f)).ideal, d_max);
}

inline HullReport hull_report(const LatticePolygon& f, std::optional<unsigned> d_max = std::nullopt,
                              std::size_t cap = geometry::kDefaultCopyCap) {
  require_unit_edge(f);
  HullReport r{f, f.size(), f.size() - 3, {}, {}, {}, false, false, std::nullopt, std::nullopt};
  const std::size_t m = r.edge_count;
  r.hilbert = altmann_hilbert(f, d_max.value_or(default_hilbert_depth(m)));
  for (auto& d : geometry::enumerate_maximal_decompositions(f, cap)) {
    const std::size_t dim = d.component_dimension();
    r.components.push_back({std::move(d), dim});
  }
  r.classification = classify(f);
  r.artinian = r.components.size() == 1 && r.components[0].dimension == 0;
  r.h1_check = r.hilbert.size() > 1 && r.hilbert[1] == BigInt(static_cast<unsigned long>(m - 3));
  if (m >= 5 && r.hilbert.size() > 2) {
    const long mm = static_cast<long>(m);
    r.h2_check = r.hilbert[2] == BigInt((mm * mm - 5 * mm + 2) / 2);
  }
  if (r.embedding_dimension >= 2 && r.hilbert.size() > 2) {
    const long d = static_cast<long>(r.embedding_dimension);
    r.obstruction_check = r.hilbert[2] == BigInt((d * d + d - 4) / 2);
  }
  return r;
}

struct MurphyWitness {
  unsigned d = 0;
  /// (d^2 + d - 4)/2: H(2) of every hull of embedding dimension d >= 2.
  BigInt required_h2;
  /// H(2) of C[[x_1..x_d]]/(x_1^3), computed from the ideal.
  BigInt cube_quotient_h2;
  bool mismatch = false;
};

inline MurphyWitness verify_murphy_obstruction(unsigned d) {
  if (d < 2) throw InvalidArgument("the obstruction needs d >= 2");
  MurphyWitness w;
  w.d = d;
  w.required_h2 = BigInt((static_cast<long>(d) * d + d - 4) / 2);
  auto ring = algebra::make_indexed_ring("x", d);
  algebra::Ideal cube(ring, {algebra::Polynomial::variable(ring, std::size_t{0}).pow(3)});
  w.cube_quotient_h2 = algebra::hilbert_function(cube, 2)[2];
  w.mismatch = w.required_h2 != w.cube_quotient_h2;
  return w;
}

/// Entries a_i >= 2 with n/d = a_1 - 1/(a_2 - 1/(...)).
inline std::vector<BigInt> hj_expansion(const BigInt& n, const BigInt& d) {
  if (d < 1 || n <= d) throw InvalidArgument("need n > d >= 1");
  if (big_gcd(n, d) != 1) throw InvalidArgument("n and d must be coprime");
  std::vector<BigInt> out;
  BigInt num = n, den = d;
  while (den != 0) {
    BigInt a;
    mpz_cdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(a);
    BigInt next = a * den - num;
    num = den;
    den = next;
  }
  return out;
}

/// dim T^1 of the surface singularity 1/n(1,q).
inline BigInt cyclic_quotient_t1(const BigInt& n, const BigInt& q) {
  if (n < 2 || q < 1 || q >= n) throw InvalidArgument("need 1 <= q <= n-1");
  if (big_gcd(n, q) != 1) throw InvalidArgument("n and q must be coprime");
  if (q == n - 1) return n - 1;
  BigInt sum = 0;
  for (const auto& a : hj_expansion(n, n - q)) sum += a;
  return sum - 2;
}

/// The hull of 1/n(1,q) is smooth of dimension dim T^1.
inline Classification classify_cyclic_quotient(const BigInt& n, const BigInt& q) {
  const BigInt t = cyclic_quotient_t1(n, q);
  if (t == 0) return Classification::of(CaseTag::Case0);
  if (t == 1) return Classification::of(CaseTag::Case1b);
  if (t == 2) return Classification::of(CaseTag::Case2d);
  return Classification::higher(static_cast<unsigned>(t.get_ui()));
}

/// Rigidity of an isolated Q-Gorenstein toric singularity.
inline bool rigidity_oracle(unsigned dim, bool gorenstein) {
  if (dim < 2) throw InvalidArgument("dimension must be at least 2");
  return dim >= 4 || (dim == 3 && !gorenstein);
}

}  // namespace toric_deform::hulls
