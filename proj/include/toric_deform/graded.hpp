#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toric_deform/groebner.hpp"
#include "toric_deform/polynomial.hpp"

namespace toric_deform::algebra {

/// All monomials of total degree d in n variables, descending grevlex.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<std::uint32_t>{});
    return out;
  }
  std::vector<std::uint32_t> e(n, 0);
  // Recursive fill: first n-1 exponents chosen freely, last takes the rest.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  const auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

/// Images of the source variables: entry k is the image of source variable k.
struct LinearSubstitution {
  RingPtr source;
  RingPtr target;
  std::vector<Polynomial> images;

  /// Builds from name -> text pairs. Source variables without an entry map to
  /// the same-named target variable.
  static LinearSubstitution from_text(RingPtr source, RingPtr target,
                                      const std::map<std::string, std::string>& images) {
    LinearSubstitution s{source, target, {}};
    for (std::size_t v = 0; v < source->size(); ++v) {
      const auto& name = source->name(v);
      auto it = images.find(name);
      if (it != images.end()) {
        s.images.push_back(Polynomial::parse(target, it->second));
      } else if (target->index_of(name)) {
        s.images.push_back(Polynomial::variable(target, name));
      } else {
        throw InvalidArgument("no image for variable '" + name + "'");
      }
    }
    for (const auto& [name, _] : images)
      if (!source->index_of(name)) throw InvalidArgument("substitution for unknown variable '" + name + "'");
    s.validate();
    return s;
  }

  void validate() const {
    if (images.size() != source->size()) throw InvalidArgument("substitution must give one image per variable");
    for (const auto& img : images) {
      if (!same_ring(img.ring(), target)) throw RingMismatch("substitution image outside the target ring");
      if (!img.is_zero() && (img.degree() != 1 || !img.is_homogeneous()))
        throw InvalidArgument("substitution image '" + img.to_string() + "' is not a linear form");
    }
  }
};

inline Polynomial linear_substitute(const Polynomial& f, const LinearSubstitution& s) {
  if (!same_ring(f.ring(), s.source)) throw RingMismatch();
  s.validate();
  // Powers of each image, computed on demand.
  std::vector<std::vector<Polynomial>> powers(s.images.size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(s.target, BigRational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * s.images[v]);
    return cache[e];
  };
  Polynomial result(s.target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(s.target, t.coefficient);
    for (std::size_t v = 0; v < t.monomial.size(); ++v)
      if (t.monomial[v] != 0) term *= power(v, t.monomial[v]);
    result += term;
  }
  return result;
}

inline Ideal linear_substitute(const Ideal& i, const LinearSubstitution& s) {
  if (!same_ring(i.ring(), s.source)) throw RingMismatch();
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(linear_substitute(g, s));
  return Ideal(s.target, std::move(gens));
}

namespace detail {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<BigInt>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace detail

/// dim_k I_d for a homogeneous ideal, by exact rank of the degree-d
/// multiples of the generators.
inline std::size_t graded_piece_dimension(const Ideal& i, unsigned d) {
  if (!i.is_homogeneous()) throw InvalidArgument("graded pieces need a homogeneous ideal");
  const std::size_t n = i.ring()->size();
  const auto basis = monomials_of_degree(n, d);
  std::unordered_map<Monomial, std::size_t, detail::MonomialHash> column;
  for (std::size_t k = 0; k < basis.size(); ++k) column.emplace(basis[k], k);

  std::vector<std::vector<BigInt>> rows;
  for (const auto& g : i.generators()) {
    const int gd = g.degree();
    if (gd > static_cast<int>(d)) continue;
    BigInt den = 1;
    for (const auto& t : g.terms()) den = big_lcm(den, t.coefficient.denominator());
    for (const auto& m : monomials_of_degree(n, d - static_cast<unsigned>(gd))) {
      std::vector<BigInt> row(basis.size(), 0);
      for (const auto& t : g.terms()) {
        BigRational scaled = t.coefficient * BigRational(den);
        row[column.at(t.monomial * m)] = scaled.numerator();
      }
      rows.push_back(std::move(row));
    }
  }
  return detail::bareiss_rank(std::move(rows));
}

/// Number of degree-d monomials outside the ideal generated by `leads`.
inline BigInt count_standard_monomials(std::size_t n, unsigned d, const std::vector<Monomial>& leads) {
  BigInt count = 0;
  for (const auto& m : monomials_of_degree(n, d)) {
    bool divisible = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (!divisible) ++count;
  }
  return count;
}

/// H(0..d_max) of k[x]/i, read off the leading monomials of a degree-bounded
/// grevlex Groebner basis.
inline std::vector<BigInt> hilbert_function(const Ideal& i, unsigned d_max) {
  if (!i.is_homogeneous()) throw InvalidArgument("Hilbert functions need a homogeneous ideal");
  const std::size_t n = i.ring()->size();
  std::vector<BigInt> h;
  h.reserve(d_max + 1);
  std::vector<Monomial> leads;
  if (!i.is_zero()) leads = buchberger(i, MonomialOrder::grevlex(), static_cast<int>(d_max)).leading_monomials();
  for (unsigned d = 0; d <= d_max; ++d) h.push_back(count_standard_monomials(n, d, leads));
  return h;
}

/// Same values as hilbert_function, via graded_piece_dimension.
inline std::vector<BigInt> hilbert_function_by_rank(const Ideal& i, unsigned d_max) {
  const std::size_t n = i.ring()->size();
  std::vector<BigInt> h;
  for (unsigned d = 0; d <= d_max; ++d) {
    BigInt all = n == 0 ? BigInt(d == 0 ? 1 : 0) : binomial(n - 1 + d, d);
    h.push_back(all - BigInt(static_cast<unsigned long>(graded_piece_dimension(i, d))));
  }
  return h;
}

/// (x, y)^3 ⊆ (f, g) for two binary quadrics; equivalent to f and g being
/// coprime.
inline bool contains_cube_of_maximal_ideal(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
  if (f.ring()->size() != 2) throw InvalidArgument("expected a ring in exactly two variables");
  for (const auto* q : {&f, &g})
    if (q->is_zero() || q->degree() != 2 || !q->is_homogeneous())
      throw InvalidArgument("expected non-zero homogeneous quadrics");
  auto gb = buchberger(Ideal(f.ring(), {f, g}), MonomialOrder::grevlex(), 3);
  for (const auto& m : monomials_of_degree(2, 3))
    if (!normal_form(Polynomial::monomial(f.ring(), m), gb).is_zero()) return false;
  return true;
}

}  // namespace toric_deform::algebra
