#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toric_deform/polynomial.hpp"

namespace toric_deform::algebra {

namespace detail {

// Term list sorted in descending order under a fixed monomial order.
using TermList = std::vector<Term>;

inline TermList sorted_terms(const Polynomial& p, const MonomialOrder& order) {
  TermList t = p.terms();
  if (order.kind() != MonomialOrder::Kind::Grevlex)
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return t;
}

// f - c * m * g, both sorted descending.
inline TermList sub_scaled(std::span<const Term> f, const BigRational& c, const Monomial& m, const TermList& g,
                           const MonomialOrder& order) {
  TermList r;
  r.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  std::optional<Monomial> gm;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !gm) gm = m * g[j].monomial;
    int cmp = 0;
    if (i == f.size()) cmp = -1;
    else if (j == g.size()) cmp = 1;
    else cmp = order.compare(f[i].monomial, *gm);
    if (cmp > 0) {
      r.push_back(f[i++]);
    } else if (cmp < 0) {
      r.push_back({std::move(*gm), -(c * g[j].coefficient)});
      gm.reset();
      ++j;
    } else {
      BigRational s = f[i].coefficient - c * g[j].coefficient;
      if (!s.is_zero()) r.push_back({f[i].monomial, std::move(s)});
      gm.reset();
      ++i;
      ++j;
    }
  }
  return r;
}

inline void make_monic(TermList& t) {
  if (t.empty() || t.front().coefficient.is_one()) return;
  BigRational inv = BigRational(1) / t.front().coefficient;
  for (auto& term : t) term.coefficient *= inv;
}

// Full reduction of f by the (monic) reducers.
inline TermList reduce(TermList f, std::span<const TermList* const> reducers, const MonomialOrder& order) {
  TermList remainder;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term& lead = f[pos];
    const TermList* divisor = nullptr;
    for (const TermList* g : reducers) {
      if (g->front().monomial.divides(lead.monomial)) {
        divisor = g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(std::move(f[pos]));
      ++pos;
      continue;
    }
    Monomial q = quotient(lead.monomial, divisor->front().monomial);
    BigRational c = lead.coefficient;  // reducers are monic
    f = sub_scaled(std::span<const Term>(f).subspan(pos), c, q, *divisor, order);
    pos = 0;
  }
  return remainder;
}

inline Polynomial to_polynomial(const RingPtr& ring, TermList terms) {
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace detail

/// Reduced Groebner basis. When `truncated_at` is set the basis was computed
/// for a homogeneous ideal with S-pairs above that degree discarded; it is
/// then exact for every question about elements of degree <= truncated_at.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements,
                std::optional<int> truncated_at = std::nullopt)
      : ring_(std::move(ring)), order_(order), elements_(std::move(elements)), truncated_at_(truncated_at) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::optional<int> truncated_at() const { return truncated_at_; }
  std::size_t size() const { return elements_.size(); }

  Ideal ideal() const { return Ideal(ring_, elements_); }

  Monomial leading_monomial(std::size_t i) const {
    const auto t = detail::sorted_terms(elements_.at(i), order_);
    return t.front().monomial;
  }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) out.push_back(leading_monomial(i));
    return out;
  }

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::optional<int> truncated_at_;
};

namespace detail {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
};

struct BasisElement {
  TermList terms;
  unsigned sugar;
  bool active = true;
  const Monomial& lead() const { return terms.front().monomial; }
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, std::optional<int> degree_bound)
      : order_(order), bound_(degree_bound) {}

  std::vector<TermList> run(std::vector<TermList> input) {
    std::sort(input.begin(), input.end(), [&](const TermList& a, const TermList& b) {
      return order_.compare(a.front().monomial, b.front().monomial) < 0;
    });
    for (auto& f : input) {
      unsigned sugar = max_degree(f);
      // Homogeneous input: generators above the bound cannot contribute below it.
      if (bound_ && static_cast<int>(sugar) > *bound_) continue;
      TermList h = reduce(std::move(f), active_reducers(), order_);
      if (h.empty()) continue;
      make_monic(h);
      add(std::move(h), sugar);
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return order_.compare(a.lcm, b.lcm) < 0;
      });
      Pair p = std::move(*it);
      pairs_.erase(it);
      if (bound_ && static_cast<int>(p.lcm.degree()) > *bound_) continue;
      TermList s = s_polynomial(p);
      TermList h = reduce(std::move(s), active_reducers(), order_);
      if (h.empty()) continue;
      make_monic(h);
      add(std::move(h), p.sugar);
    }
    return finalize();
  }

 private:
  static unsigned max_degree(const TermList& f) {
    unsigned d = 0;
    for (const auto& t : f) d = std::max(d, t.monomial.degree());
    return d;
  }

  std::vector<const TermList*> active_reducers() const {
    std::vector<const TermList*> out;
    for (const auto& e : basis_)
      if (e.active) out.push_back(&e.terms);
    return out;
  }

  TermList s_polynomial(const Pair& p) const {
    const TermList& f = basis_[p.i].terms;
    const TermList& g = basis_[p.j].terms;
    Monomial mf = quotient(p.lcm, f.front().monomial);
    Monomial mg = quotient(p.lcm, g.front().monomial);
    TermList scaled_f;
    scaled_f.reserve(f.size());
    for (const auto& t : f) scaled_f.push_back({mf * t.monomial, t.coefficient});
    return sub_scaled(scaled_f, BigRational(1), mg, g, order_);
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const auto& a = basis_[i];
    const auto& b = basis_[j];
    unsigned sa = a.sugar + l.degree() - a.lead().degree();
    unsigned sb = b.sugar + l.degree() - b.lead().degree();
    return std::max(sa, sb);
  }

  // Gebauer-Moeller installation of a new basis element.
  void add(TermList h, unsigned sugar) {
    const std::size_t hi = basis_.size();
    basis_.push_back({std::move(h), sugar, true});
    const Monomial hl = basis_[hi].lead();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!basis_[g].active) continue;
      Monomial l = lcm(basis_[g].lead(), hl);
      candidates.push_back({g, hi, l, pair_sugar(g, hi, l)});
    }

    // Chain criterion among the new pairs: keep a pair unless another new
    // pair has an lcm properly dividing it; among equal lcms keep one.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool disjoint = basis_[p.i].lead().coprime_with(hl);
      bool dominated = false;
      if (!disjoint) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
          if (candidates[b].lcm.divides(p.lcm)) dominated = true;
        for (const Pair& q : kept)
          if (!dominated && q.lcm.divides(p.lcm)) dominated = true;
      }
      if (!dominated) kept.push_back(p);
    }
    // Product criterion: drop pairs with coprime leading monomials.
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!basis_[p.i].lead().coprime_with(hl)) fresh.push_back(std::move(p));

    // Old pairs made redundant by the new element.
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size());
    for (auto& p : pairs_) {
      bool redundant = hl.divides(p.lcm) && !(lcm(basis_[p.i].lead(), hl) == p.lcm) &&
                       !(lcm(basis_[p.j].lead(), hl) == p.lcm);
      if (!redundant) survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    for (std::size_t g = 0; g < hi; ++g)
      if (basis_[g].active && hl.divides(basis_[g].lead())) basis_[g].active = false;
  }

  std::vector<TermList> finalize() {
    // Minimal basis: active elements have pairwise non-dividing leads.
    std::vector<TermList> minimal;
    for (auto& e : basis_)
      if (e.active) minimal.push_back(std::move(e.terms));
    std::sort(minimal.begin(), minimal.end(), [&](const TermList& a, const TermList& b) {
      return order_.compare(a.front().monomial, b.front().monomial) < 0;
    });
    // Inter-reduce tails.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<const TermList*> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(&minimal[j]);
      TermList lead{minimal[i].front()};
      TermList tail(minimal[i].begin() + 1, minimal[i].end());
      TermList reduced_tail = reduce(std::move(tail), others, order_);
      lead.insert(lead.end(), reduced_tail.begin(), reduced_tail.end());
      minimal[i] = std::move(lead);
    }
    return minimal;
  }

  MonomialOrder order_;
  std::optional<int> bound_;
  std::vector<BasisElement> basis_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis of `gens` under `order`, sorted by increasing
/// leading monomial. With `degree_bound` the ideal must be homogeneous and
/// the result is a basis up to that degree.
inline GroebnerBasis buchberger(const Ideal& gens, const MonomialOrder& order = MonomialOrder::grevlex(),
                                std::optional<int> degree_bound = std::nullopt) {
  if (degree_bound && !gens.is_homogeneous())
    throw InvalidArgument("degree-truncated Groebner bases need a homogeneous ideal");
  std::vector<detail::TermList> input;
  for (const auto& g : gens.generators()) {
    if (!same_ring(g.ring(), gens.ring())) throw RingMismatch();
    input.push_back(detail::sorted_terms(g, order));
  }
  detail::Buchberger engine(order, degree_bound);
  auto basis = engine.run(std::move(input));
  std::vector<Polynomial> elements;
  elements.reserve(basis.size());
  for (auto& t : basis) elements.push_back(detail::to_polynomial(gens.ring(), std::move(t)));
  return GroebnerBasis(gens.ring(), order, std::move(elements), degree_bound);
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!same_ring(f.ring(), gb.ring())) throw RingMismatch();
  std::vector<detail::TermList> reducers;
  reducers.reserve(gb.size());
  for (const auto& g : gb.elements()) reducers.push_back(detail::sorted_terms(g, gb.order()));
  std::vector<const detail::TermList*> ptrs;
  for (const auto& r : reducers) ptrs.push_back(&r);
  auto rem = detail::reduce(detail::sorted_terms(f, gb.order()), ptrs, gb.order());
  return detail::to_polynomial(f.ring(), std::move(rem));
}

inline bool is_member(const Polynomial& f, const GroebnerBasis& gb) {
  if (auto t = gb.truncated_at(); t && f.degree() > *t)
    throw InvalidArgument("membership query above the truncation degree");
  return normal_form(f, gb).is_zero();
}

/// i ⊆ j via membership of i's generators in a basis of j.
inline bool ideal_contains(const Ideal& j, const Ideal& i) {
  if (!same_ring(i.ring(), j.ring())) throw RingMismatch();
  if (i.is_zero()) return true;
  std::optional<int> bound;
  if (i.is_homogeneous() && j.is_homogeneous()) bound = i.max_degree();
  auto gb = buchberger(j, MonomialOrder::grevlex(), bound);
  return std::all_of(i.generators().begin(), i.generators().end(),
                     [&](const Polynomial& g) { return normal_form(g, gb).is_zero(); });
}

inline bool ideal_equal(const Ideal& i, const Ideal& j) {
  if (!same_ring(i.ring(), j.ring())) throw RingMismatch();
  return ideal_contains(j, i) && ideal_contains(i, j);
}

namespace detail {

// Re-expresses p in `target`, whose variables are `mapping[k]` of p's ring.
inline Polynomial permute_variables(const Polynomial& p, const RingPtr& target,
                                    std::span<const std::size_t> mapping) {
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e(target->size(), 0);
    for (std::size_t k = 0; k < mapping.size(); ++k) e[mapping[k]] = t.monomial[k];
    terms.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace detail

/// i ∩ k[remaining variables], returned in the ring without `drop_vars`.
inline Ideal eliminate(const Ideal& i, std::span<const std::string> drop_vars) {
  const Ring& ring = *i.ring();
  std::vector<bool> dropped(ring.size(), false);
  for (const auto& name : drop_vars) {
    auto idx = ring.index_of(name);
    if (!idx) throw InvalidArgument("cannot eliminate unknown variable '" + name + "'");
    dropped[*idx] = true;
  }
  std::vector<std::string> block_names, kept_names;
  for (std::size_t v = 0; v < ring.size(); ++v)
    (dropped[v] ? block_names : kept_names).push_back(ring.name(v));
  const std::size_t split = block_names.size();
  std::vector<std::string> all = block_names;
  all.insert(all.end(), kept_names.begin(), kept_names.end());
  RingPtr work = make_ring(all);
  RingPtr sub = make_ring(kept_names);

  // Position of each original variable in the elimination ring.
  std::vector<std::size_t> to_work(ring.size());
  std::size_t b = 0, k = split;
  for (std::size_t v = 0; v < ring.size(); ++v) to_work[v] = dropped[v] ? b++ : k++;

  std::vector<Polynomial> moved;
  for (const auto& g : i.generators()) moved.push_back(detail::permute_variables(g, work, to_work));
  auto gb = buchberger(Ideal(work, std::move(moved)), MonomialOrder::block(split));

  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t v = 0; v < split; ++v)
        if (t.monomial[v] != 0) return false;
      return true;
    });
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      std::vector<std::uint32_t> e(t.monomial.exponents().begin() + static_cast<std::ptrdiff_t>(split),
                                   t.monomial.exponents().end());
      terms.push_back({Monomial(std::move(e)), t.coefficient});
    }
    out.push_back(Polynomial::from_terms(sub, std::move(terms)));
  }
  return Ideal(sub, std::move(out));
}

inline Ideal eliminate(const Ideal& i, std::initializer_list<std::string> drop_vars) {
  std::vector<std::string> v(drop_vars);
  return eliminate(i, std::span<const std::string>(v));
}

/// i ∩ j through t*i + (1-t)*j followed by elimination of t.
inline Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
  if (!same_ring(i.ring(), j.ring())) throw RingMismatch();
  const Ring& ring = *i.ring();
  if (i.is_zero() || j.is_zero()) return Ideal(i.ring());
  std::string t = "t";
  while (ring.index_of(t)) t += "_";
  std::vector<std::string> names = ring.names();
  names.push_back(t);
  RingPtr ext = make_ring(names);
  std::vector<std::size_t> embed(ring.size());
  for (std::size_t v = 0; v < ring.size(); ++v) embed[v] = v;

  Polynomial tv = Polynomial::variable(ext, ring.size());
  Polynomial one_minus_t = Polynomial::constant(ext, BigRational(1)) - tv;
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(tv * detail::permute_variables(g, ext, embed));
  for (const auto& g : j.generators()) gens.push_back(one_minus_t * detail::permute_variables(g, ext, embed));
  Ideal result = eliminate(Ideal(ext, std::move(gens)), {t});
  // The elimination ring has the original variable names and order.
  std::vector<Polynomial> back;
  for (const auto& g : result.generators()) back.push_back(Polynomial::from_terms(i.ring(), g.terms()));
  return Ideal(i.ring(), std::move(back));
}

}  // namespace toric_deform::algebra
