#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toric_deform/errors.hpp"
#include "toric_deform/rational.hpp"

namespace toric_deform::algebra {

/// Ordered list of variable names. Rings are compared by their names, so two
/// independently built rings with the same variables are interchangeable.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InvalidArgument("empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw InvalidArgument("duplicate variable '" + names_[i] + "'");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

/// x1, ..., xn style ring.
inline RingPtr make_indexed_ring(std::string_view prefix, std::size_t n, std::size_t first = 1) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(first + i));
  return make_ring(std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
  }

  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps_.at(i) = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      d += r.exps_[i];
    }
    r.degree_ = d;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison: <0, 0, >0.
inline int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Grevlex on the first `split` variables, ties broken by grevlex on the
  /// rest. Any monomial involving the first block beats every monomial that
  /// does not, so Groebner bases under this order eliminate the first block.
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::Block, split); }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Grevlex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
          if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
      case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
      case Kind::Block: {
        const std::size_t s = std::min(split_, a.size());
        if (int c = compare_grevlex(a, b, 0, s); c != 0) return c;
        return compare_grevlex(a, b, s, a.size());
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.split_ == b.split_;
  }

 private:
  MonomialOrder(Kind k, std::size_t split) : kind_(k), split_(split) {}

  Kind kind_;
  std::size_t split_;
};

struct Term {
  Monomial monomial;
  BigRational coefficient;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// in descending grevlex order with no zero coefficients, which makes equality
/// structural and the text form canonical.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const BigRational& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.ring_->size()), c});
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t i) {
    if (i >= ring->size()) throw InvalidArgument("variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->size(), i), BigRational(1)});
    return p;
  }

  static Polynomial variable(RingPtr ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
    return variable(std::move(ring), *idx);
  }

  static Polynomial monomial(RingPtr ring, Monomial m, const BigRational& c = BigRational(1)) {
    if (m.size() != ring->size()) throw RingMismatch("monomial arity differs from ring");
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
  }

  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const auto order = MonomialOrder::grevlex();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
    for (auto& t : terms) {
      if (t.monomial.size() != p.ring_->size()) throw RingMismatch("monomial arity differs from ring");
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
        if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      } else if (!t.coefficient.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Parses text such as "x^2 - 2*x*y + 1/2*y^2". Juxtaposition is not
  /// multiplication; products need '*'. Parentheses and integer powers of
  /// parenthesised expressions are accepted.
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.front().monomial.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.monomial.degree() == d; });
  }

  BigRational coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coefficient;
    return BigRational(0);
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = add(*this, o, BigRational(1)); }
  Polynomial& operator-=(const Polynomial& o) { return *this = add(*this, o, BigRational(-1)); }
  Polynomial& operator*=(const Polynomial& o) { return *this = multiply(*this, o); }
  Polynomial& operator*=(const BigRational& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coefficient *= c;
    }
    return *this;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b, BigRational(1)); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add(a, b, BigRational(-1)); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
  friend Polynomial operator*(const BigRational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, BigRational(1));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Same polynomial with leading coefficient (grevlex) equal to one.
  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return *this * (BigRational(1) / terms_.front().coefficient);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coefficient != b.terms_[i].coefficient)
        return false;
    return true;
  }

  /// Canonical text: descending grevlex, '*' products, '^' powers, rational
  /// coefficients written p/q, unit coefficients omitted.
  std::string to_string() const;

 private:
  static void check_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !b.ring_ || !same_ring(a.ring_, b.ring_)) throw RingMismatch();
  }

  static Polynomial add(const Polynomial& a, const Polynomial& b, const BigRational& scale) {
    check_ring(a, b);
    const auto order = MonomialOrder::grevlex();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c = 0;
      if (i == a.terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else c = order.compare(a.terms_[i].monomial, b.terms_[j].monomial);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back({b.terms_[j].monomial, b.terms_[j].coefficient * scale});
        ++j;
      } else {
        BigRational s = a.terms_[i].coefficient + b.terms_[j].coefficient * scale;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) acc.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    return from_terms(a.ring_, std::move(acc));
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    BigRational c = t.coefficient;
    if (first) {
      if (c.sign() < 0) {
        out += '-';
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    first = false;
    if (t.monomial.is_one()) {
      out += c.to_string();
    } else {
      if (!c.is_one()) out += c.to_string() + '*';
      out += monomial_to_string(*ring_, t.monomial);
    }
  }
  return out;
}

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Polynomial run() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse polynomial '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    skip_space();
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = product();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += product();
      else if (accept('-')) acc -= product();
      else break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (true) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        skip_space();
        BigInt d = integer();
        if (d == 0) fail("division by zero");
        acc *= BigRational(BigInt(1), d);
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      BigInt e = integer();
      if (e < 0 || !e.fits_uint_p()) fail("bad exponent");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, BigRational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  return detail::PolynomialParser(std::move(ring), text).run();
}

/// Finitely generated ideal. Zero generators are dropped on construction.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
      if (!g.ring() || !same_ring(g.ring(), ring_)) throw RingMismatch("generator outside the ideal's ring");
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
  }

  static Ideal parse(RingPtr ring, std::initializer_list<std::string_view> gens) {
    std::vector<Polynomial> ps;
    for (auto g : gens) ps.push_back(Polynomial::parse(ring, g));
    return Ideal(std::move(ring), std::move(ps));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  bool is_homogeneous() const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Polynomial& p) { return p.is_homogeneous(); });
  }

  int max_degree() const {
    int d = -1;
    for (const auto& g : generators_) d = std::max(d, g.degree());
    return d;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

}  // namespace toric_deform::algebra
