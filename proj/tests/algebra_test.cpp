#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toric_deform/graded.hpp"
#include "toric_deform/groebner.hpp"
#include "toric_deform/polynomial.hpp"

using namespace toric_deform;
using namespace toric_deform::algebra;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

// Multivariate division by a list of polynomials using only ring arithmetic
// and the grevlex-sorted term list. Independent of groebner.hpp.
Polynomial naive_remainder(Polynomial f, const std::vector<Polynomial>& divisors) {
  Polynomial rem(f.ring());
  while (!f.is_zero()) {
    const Term lead = f.terms().front();
    bool divided = false;
    for (const auto& g : divisors) {
      const Term& gl = g.terms().front();
      if (gl.monomial.divides(lead.monomial)) {
        auto q = Polynomial::monomial(f.ring(), quotient(lead.monomial, gl.monomial),
                                      lead.coefficient / gl.coefficient);
        f -= q * g;
        divided = true;
        break;
      }
    }
    if (!divided) {
      auto lt = Polynomial::monomial(f.ring(), lead.monomial, lead.coefficient);
      rem += lt;
      f -= lt;
    }
  }
  return rem;
}

Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
  const Term& a = f.terms().front();
  const Term& b = g.terms().front();
  Monomial l = lcm(a.monomial, b.monomial);
  auto ma = Polynomial::monomial(f.ring(), quotient(l, a.monomial), BigRational(1) / a.coefficient);
  auto mb = Polynomial::monomial(f.ring(), quotient(l, b.monomial), BigRational(1) / b.coefficient);
  return ma * f - mb * g;
}

BigRational random_rational(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return BigRational(BigInt(num(rng)), BigInt(den(rng)));
}

Polynomial random_poly(std::mt19937& rng, const RingPtr& ring, unsigned max_deg, int terms) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    auto ms = monomials_of_degree(ring->size(), deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
    ts.push_back({ms[pick(rng)], random_rational(rng, 5)});
  }
  return Polynomial::from_terms(ring, ts);
}

}  // namespace

TEST(BigRational, StaysReduced) {
  BigRational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(BigRational::parse("-10/4").to_string(), "-5/2");
  EXPECT_THROW(BigRational(BigInt(1), BigInt(0)), InvalidArgument);
  EXPECT_THROW(BigRational(1) / BigRational(0), InvalidArgument);
}

TEST(BigRational, ArithmeticIsExact) {
  std::mt19937 rng(1234);  // seed recorded: 1234
  for (int i = 0; i < 500; ++i) {
    BigRational a = random_rational(rng, 1000), b = random_rational(rng, 1000);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
  }
}

TEST(Polynomial, CanonicalTextRoundTrip) {
  auto r = make_ring({"x", "y"});
  auto f = P(r, "1/2*y^2 + x^2 - 2*x*y + 3");
  EXPECT_EQ(f.to_string(), "x^2 - 2*x*y + 1/2*y^2 + 3");
  EXPECT_EQ(P(r, f.to_string()), f);
  EXPECT_EQ(P(r, "(x+y)^2 - x^2 - y^2").to_string(), "2*x*y");
  EXPECT_EQ(P(r, "0").to_string(), "0");
  EXPECT_EQ(P(r, "-x").to_string(), "-x");
  EXPECT_THROW(P(r, "x + z"), InvalidArgument);
  EXPECT_THROW(P(r, "x +"), InvalidArgument);
}

TEST(Polynomial, RingMismatchIsAnError) {
  auto r = make_ring({"x", "y"});
  auto s = make_ring({"x", "z"});
  EXPECT_THROW(P(r, "x") + P(s, "x"), RingMismatch);
  EXPECT_THROW(Ideal(r, {P(r, "x"), P(s, "z")}), RingMismatch);
  // Rings with equal names are the same ring.
  auto r2 = make_ring({"x", "y"});
  EXPECT_EQ((P(r, "x") + P(r2, "y")).to_string(), "x + y");
}

TEST(Buchberger, MonomialIdealIsItsOwnBasis) {
  auto r = make_ring({"x", "y", "z"});
  auto gb = buchberger(Ideal::parse(r, {"x*y", "x*z"}));
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb.elements()[0].to_string(), "x*z");
  EXPECT_EQ(gb.elements()[1].to_string(), "x*y");
}

TEST(Buchberger, SingleGeneratorIsMadeMonic) {
  auto r = make_ring({"x"});
  auto gb = buchberger(Ideal::parse(r, {"3*x^2 - 3"}), MonomialOrder::lex());
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb.elements()[0].to_string(), "x^2 - 1");
}

TEST(Buchberger, SkewHexagonIdealIsClosedUnderSPairs) {
  auto r = make_ring({"u", "v", "w"});
  auto gb = buchberger(Ideal::parse(r, {"u*v", "u*w+v*w", "u^3", "v^2*w"}));
  std::vector<std::string> got;
  for (const auto& g : gb.elements()) got.push_back(g.to_string());
  // Ascending leading monomials: uw < uv < v^2w < u^3.
  EXPECT_EQ(got, (std::vector<std::string>{"u*w + v*w", "u*v", "v^2*w", "u^3"}));
  // Oracle: every S-polynomial has remainder 0 under naive division.
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j)
      EXPECT_TRUE(naive_remainder(s_poly(gb.elements()[i], gb.elements()[j]), gb.elements()).is_zero());
}

TEST(Buchberger, Idempotent) {
  std::mt19937 rng(77);  // seed recorded: 77
  auto r = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(rng, r, 2, 3));
    Ideal i(r, gens);
    if (i.is_zero()) continue;
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto gb = buchberger(i, order);
      auto again = buchberger(gb.ideal(), order);
      ASSERT_EQ(again.size(), gb.size());
      for (std::size_t k = 0; k < gb.size(); ++k) EXPECT_EQ(again.elements()[k], gb.elements()[k]);
      for (std::size_t a = 0; a < gb.size(); ++a)
        for (std::size_t b = a + 1; b < gb.size(); ++b) {
          auto s = s_poly(gb.elements()[a], gb.elements()[b]);
          EXPECT_TRUE(normal_form(s, gb).is_zero());
        }
    }
  }
}

TEST(NormalForm, Examples) {
  auto r = make_ring({"x", "y", "z"});
  auto gb = buchberger(Ideal::parse(r, {"x*y", "x*z"}));
  EXPECT_TRUE(normal_form(P(r, "x*y*z"), gb).is_zero());
  auto gb2 = buchberger(Ideal::parse(r, {"x^2", "x*y"}));
  EXPECT_EQ(normal_form(P(r, "y^3"), gb2).to_string(), "y^3");

  auto k = make_ring({"u", "v", "w"});
  auto gbk = buchberger(Ideal::parse(k, {"u*v", "u*w+v*w", "u^3", "v^2*w"}));
  EXPECT_TRUE(normal_form(P(k, "u^2*v"), gbk).is_zero());
  EXPECT_TRUE(naive_remainder(P(k, "u^2*v"), {P(k, "u*v")}).is_zero());
  EXPECT_THROW(normal_form(P(r, "x"), gbk), RingMismatch);
}

TEST(NormalForm, MembershipSoundness) {
  std::mt19937 rng(4242);  // seed recorded: 4242
  auto r = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(random_poly(rng, r, 2, 3));
    Ideal i(r, gens);
    if (i.is_zero()) continue;
    auto gb = buchberger(i);
    Polynomial f(r);
    for (const auto& g : i.generators()) f += random_poly(rng, r, 2, 3) * g;
    EXPECT_TRUE(normal_form(f, gb).is_zero()) << f.to_string();
  }
}

TEST(IdealEqual, Examples) {
  auto r = make_ring({"x", "y"});
  EXPECT_TRUE(ideal_equal(Ideal::parse(r, {"x"}), Ideal::parse(r, {"2*x"})));
  EXPECT_FALSE(ideal_equal(Ideal::parse(r, {"x^2", "x*y"}), Ideal::parse(r, {"x^2", "x*y", "y^3"})));
  EXPECT_THROW(ideal_equal(Ideal::parse(r, {"x"}), Ideal::parse(make_ring({"x"}), {"x"})), RingMismatch);
}

TEST(Eliminate, Examples) {
  auto r = make_ring({"x", "y"});
  EXPECT_TRUE(eliminate(Ideal::parse(r, {"x - y"}), {"x"}).is_zero());
  auto e = eliminate(Ideal::parse(r, {"x - y^2", "x"}), {"x"});
  ASSERT_EQ(e.generators().size(), 1u);
  EXPECT_EQ(e.generators()[0].to_string(), "y^2");
  EXPECT_EQ(e.ring()->names(), std::vector<std::string>{"y"});
  EXPECT_THROW(eliminate(Ideal::parse(r, {"x"}), {"q"}), InvalidArgument);

  auto s = make_ring({"t", "u", "v"});
  auto uv = eliminate(Ideal::parse(s, {"t*u", "(1-t)*v", "t^2 - t"}), {"t"});
  ASSERT_EQ(uv.generators().size(), 1u);
  EXPECT_EQ(uv.generators()[0].to_string(), "u*v");
  // Oracle: u*v = v*(t*u) + u*((1-t)*v) lies in the ideal, while neither u
  // nor v do (set t = 0 resp. t = 1 to get a point of the variety).
  auto t_ideal = Ideal::parse(s, {"t*u", "(1-t)*v", "t^2 - t"});
  EXPECT_EQ(P(s, "v*(t*u) + u*((1-t)*v)"), P(s, "u*v"));
}

TEST(Intersect, Examples) {
  auto r = make_ring({"x", "y"});
  auto xy = ideal_intersect(Ideal::parse(r, {"x"}), Ideal::parse(r, {"y"}));
  EXPECT_TRUE(ideal_equal(xy, Ideal::parse(r, {"x*y"})));
  EXPECT_TRUE(ideal_equal(ideal_intersect(Ideal::parse(r, {"x"}), Ideal::parse(r, {"x"})), Ideal::parse(r, {"x"})));

  auto k = make_ring({"u", "v", "w"});
  auto a = Ideal::parse(k, {"u+v", "v^2"});
  auto b = Ideal::parse(k, {"u", "w"});
  auto c = Ideal::parse(k, {"u^3", "v", "w"});
  auto kk = Ideal::parse(k, {"u*v", "u*w+v*w", "u^3", "v^2*w"});
  EXPECT_TRUE(ideal_equal(ideal_intersect(ideal_intersect(a, b), c), kk));
}

TEST(Intersect, PrincipalIdealsGiveLcm) {
  std::mt19937 rng(99);  // seed recorded: 99
  auto r = make_ring({"x"});
  std::uniform_int_distribution<int> root(-3, 3), mult(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    // Products of linear factors so that gcds are frequently non-trivial.
    oracle::Univariate fu{BigRational(1)}, gu{BigRational(1)};
    Polynomial f = P(r, "1"), g = P(r, "1");
    for (int k = 0; k < 3; ++k) {
      int a = root(rng), m = mult(rng);
      for (int e = 0; e < m; ++e) {
        fu = oracle::uni_mul(fu, {BigRational(-a), BigRational(1)});
        f *= P(r, "x - (" + std::to_string(a) + ")");
      }
      int b = root(rng), n = mult(rng);
      for (int e = 0; e < n; ++e) {
        gu = oracle::uni_mul(gu, {BigRational(-b), BigRational(1)});
        g *= P(r, "x - (" + std::to_string(b) + ")");
      }
    }
    auto l = oracle::uni_lcm(fu, gu);
    Polynomial lp(r);
    for (std::size_t d = 0; d < l.size(); ++d)
      lp += Polynomial::monomial(r, Monomial::variable(1, 0, static_cast<std::uint32_t>(d)), l[d]);
    auto meet = ideal_intersect(Ideal(r, {f}), Ideal(r, {g}));
    ASSERT_EQ(meet.generators().size(), 1u);
    EXPECT_EQ(meet.generators()[0], lp) << f.to_string() << " / " << g.to_string();
  }
}

TEST(LinearSubstitute, Expansion) {
  auto r = make_ring({"x", "y"});
  auto s = LinearSubstitution::from_text(r, r, {{"x", "y - x"}});
  EXPECT_EQ(linear_substitute(P(r, "x^2"), s).to_string(), "x^2 - 2*x*y + y^2");
  EXPECT_THROW(LinearSubstitution::from_text(r, r, {{"x", "y + 1"}}), InvalidArgument);
  EXPECT_THROW(LinearSubstitution::from_text(r, r, {{"x", "z"}}), InvalidArgument);
  auto target = make_ring({"u"});
  EXPECT_THROW(LinearSubstitution::from_text(r, target, {{"x", "u"}}), InvalidArgument);  // y has no image
}

TEST(GradedPiece, MonomialExamples) {
  auto r = make_ring({"x", "y", "z"});
  auto i = Ideal::parse(r, {"x*y", "x*z"});
  EXPECT_EQ(graded_piece_dimension(i, 2), 2u);
  // Oracle: distinct degree-3 multiples of xy and xz.
  const std::vector<oracle::Exponents> gens{{1, 1, 0}, {1, 0, 1}};
  EXPECT_EQ(oracle::monomial_ideal_piece(3, gens, 3), 5u);
  EXPECT_EQ(graded_piece_dimension(i, 3), 5u);
  EXPECT_THROW(graded_piece_dimension(Ideal::parse(r, {"x + 1"}), 1), InvalidArgument);
}

TEST(HilbertFunction, Examples) {
  auto one = make_ring({"x"});
  auto h0 = hilbert_function(Ideal(one), 5);
  for (const auto& v : h0) EXPECT_EQ(v, 1);

  auto r = make_ring({"x", "y"});
  auto h1 = hilbert_function(Ideal::parse(r, {"x^2", "y^2"}), 4);
  EXPECT_EQ(h1, (std::vector<BigInt>{1, 2, 1, 0, 0}));

  auto h2 = hilbert_function(Ideal::parse(r, {"x^2", "x*y"}), 5);
  auto oracle_h2 = oracle::monomial_ideal_hilbert(2, {{2, 0}, {1, 1}}, 5);
  ASSERT_EQ(h2.size(), oracle_h2.size());
  for (std::size_t d = 0; d < h2.size(); ++d) EXPECT_EQ(h2[d], oracle_h2[d]);
  EXPECT_EQ(oracle_h2, (std::vector<long>{1, 2, 1, 1, 1, 1}));
}

TEST(HilbertFunction, ZeroIdealGivesBinomials) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto r = make_indexed_ring("x", n);
    auto h = hilbert_function(Ideal(r), 6);
    for (unsigned d = 0; d <= 6; ++d) EXPECT_EQ(h[d], binomial(n - 1 + d, d));
  }
}

TEST(HilbertFunction, GroebnerAndRankRoutesAgree) {
  std::mt19937 rng(2024);  // seed recorded: 2024
  auto r = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      // Random homogeneous form of degree 2 or 3.
      std::uniform_int_distribution<unsigned> dd(2, 3);
      unsigned d = dd(rng);
      std::vector<Term> ts;
      for (const auto& m : monomials_of_degree(3, d))
        if (rng() % 2) ts.push_back({m, random_rational(rng, 4)});
      gens.push_back(Polynomial::from_terms(r, ts));
    }
    Ideal i(r, gens);
    EXPECT_EQ(hilbert_function(i, 5), hilbert_function_by_rank(i, 5));
  }
}

TEST(ContainsCube, Examples) {
  auto r = make_ring({"x", "y"});
  EXPECT_TRUE(contains_cube_of_maximal_ideal(P(r, "x^2"), P(r, "y^2")));
  EXPECT_FALSE(contains_cube_of_maximal_ideal(P(r, "x^2"), P(r, "x*y")));
  EXPECT_TRUE(contains_cube_of_maximal_ideal(P(r, "2*x*y + y^2"), P(r, "x^2 - x*y")));
  EXPECT_THROW(contains_cube_of_maximal_ideal(P(r, "x^3"), P(r, "y^2")), InvalidArgument);
  EXPECT_THROW(contains_cube_of_maximal_ideal(P(r, "0"), P(r, "y^2")), InvalidArgument);
  auto r3 = make_ring({"x", "y", "z"});
  EXPECT_THROW(contains_cube_of_maximal_ideal(P(r3, "x^2"), P(r3, "y^2")), InvalidArgument);
}

TEST(ContainsCube, AgreesWithFactorisationOracle) {
  auto r = make_ring({"x", "y"});
  std::mt19937 rng(31337);  // seed recorded: 31337
  std::uniform_int_distribution<int> c(-4, 4);
  int coprime = 0, shared = 0;
  for (int trial = 0; trial < 20; ++trial) {
    oracle::BinaryQuadric f, g;
    if (trial % 2 == 0) {
      // Shared linear factor (p x + q y).
      int p = c(rng), q = c(rng);
      if (p == 0 && q == 0) p = 1;
      int a = c(rng), b = c(rng), d = c(rng), e = c(rng);
      if (a == 0 && b == 0) a = 1;
      if (d == 0 && e == 0) e = 1;
      f = {BigRational(p * a), BigRational(p * b + q * a), BigRational(q * b)};
      g = {BigRational(p * d), BigRational(p * e + q * d), BigRational(q * e)};
    } else {
      do {
        f = {BigRational(c(rng)), BigRational(c(rng)), BigRational(c(rng))};
        g = {BigRational(c(rng)), BigRational(c(rng)), BigRational(c(rng))};
      } while ((f.a.is_zero() && f.b.is_zero() && f.c.is_zero()) || (g.a.is_zero() && g.b.is_zero() && g.c.is_zero()));
    }
    auto to_poly = [&](const oracle::BinaryQuadric& q) {
      return Polynomial::from_terms(r, {{Monomial({2, 0}), q.a}, {Monomial({1, 1}), q.b}, {Monomial({0, 2}), q.c}});
    };
    const bool expect_coprime = !oracle::quadrics_share_projective_root(f, g);
    expect_coprime ? ++coprime : ++shared;
    EXPECT_EQ(contains_cube_of_maximal_ideal(to_poly(f), to_poly(g)), expect_coprime)
        << to_poly(f).to_string() << " , " << to_poly(g).to_string();
  }
  EXPECT_GT(coprime, 0);
  EXPECT_GT(shared, 0);
}
