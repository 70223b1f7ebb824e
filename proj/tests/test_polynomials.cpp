#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hurwitz/polynomial.hpp"
#include "support/generators.hpp"

using namespace hurwitz;
using hurwitz::testing::Generator;

namespace {

ExactPolynomial P(std::initializer_list<Rational> c) { return ExactPolynomial(std::vector<Rational>(c)); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-1.25e-3") == Rational(-1, 800));
  CHECK(parse_rational("2.5E2") == Rational(250));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e"), ParseError);
  CHECK_THROWS_AS(parse_rational("-"), ParseError);

  Rational q(6, -4);
  CHECK(q.numerator() == "-3");
  CHECK(q.denominator() == "2");
  CHECK(Rational(0).to_fraction_string() == "0/1");
}

TEST_CASE("degree") {
  CHECK(make_exact({1, 3, 2, 1}).degree() == 3);
  CHECK(ExactPolynomial{}.degree() == -1);
  CHECK(make_exact({5}).degree() == 0);
  CHECK(make_exact({1, 2, 0, 0}).degree() == 1);
  CHECK(make_exact({0, 0}).is_zero());
}

TEST_CASE("eval") {
  CHECK(eval(make_exact({2, 0, 1}), Rational(3)) == Rational(11));
  CHECK(eval(ExactPolynomial{}, Rational(42)) == Rational(0));
  CHECK(eval(ExactPolynomial{}, ComplexRational::i()).is_zero());

  SUBCASE("primitive fifth root of unity") {
    ApproxPolynomial p = to_approx(make_exact({1, 1, 1, 1, 1}));
    for (int k = 1; k <= 4; ++k) {
      Complex x = std::polar(1.0, 2.0 * std::numbers::pi * k / 5.0);
      Complex reference = hurwitz::testing::power_sum(p, x);
      CHECK(std::abs(reference) < 1e-14);
      CHECK(std::abs(eval(p, x)) < 1e-14);
    }
  }

  SUBCASE("exact evaluation at a Gaussian rational") {
    // 1 + s^2 at s = i
    CHECK(eval(make_exact({1, 0, 1}), ComplexRational::i()).is_zero());
    ComplexRational x(Rational(1, 2), Rational(-3, 4));
    ExactPolynomial p = P({Rational(2), Rational(-1, 3), Rational(5, 7), Rational(1)});
    CHECK(eval(p, x) == hurwitz::testing::power_sum(p, x));
  }
}

TEST_CASE("ring operations") {
  CHECK(add(make_exact({1, 1}), make_exact({-1, -1})).is_zero());
  CHECK(mul(make_exact({1, 1}), make_exact({2, 1})) == make_exact({2, 3, 1}));
  CHECK(mul(make_exact({1, 2, 3}), ExactPolynomial{}).is_zero());
  CHECK(negate(make_exact({1, -2})) == make_exact({-1, 2}));
  CHECK(sub(make_exact({1, 2, 3}), make_exact({0, 0, 3})) == make_exact({1, 2}));
}

TEST_CASE("divmod") {
  SUBCASE("s^3 + 3s by 2s^2 + 1") {
    auto [q, r] = divmod(make_exact({0, 3, 0, 1}), make_exact({1, 0, 2}));
    CHECK(q == P({Rational(0), Rational(1, 2)}));
    CHECK(r == P({Rational(0), Rational(5, 2)}));
    CHECK(add(mul(make_exact({1, 0, 2}), q), r) == make_exact({0, 3, 0, 1}));
  }
  SUBCASE("exact factor") {
    auto [q, r] = divmod(make_exact({2, 3, 1}), make_exact({1, 1}));
    CHECK(q == make_exact({2, 1}));
    CHECK(r.is_zero());
  }
  SUBCASE("dividend of lower degree") {
    auto [q, r] = divmod(make_exact({1}), make_exact({0, 1}));
    CHECK(q.is_zero());
    CHECK(r == make_exact({1}));
  }
  CHECK_THROWS_AS(divmod(make_exact({1, 2}), ExactPolynomial{}), DivisionByZeroPolynomial);
}

TEST_CASE("even and odd parts") {
  CHECK(even_part(make_exact({1, 2, 3, 4})) == make_exact({1, 0, 3}));
  CHECK(odd_part(make_exact({1, 2, 3, 4})) == make_exact({0, 2, 0, 4}));
  CHECK(even_part(ExactPolynomial{}).is_zero());
  CHECK(odd_part(ExactPolynomial{}).is_zero());
  CHECK(even_part(make_exact({1, 3, 2, 1})) == make_exact({1, 0, 2}));
  CHECK(odd_part(make_exact({1, 3, 2, 1})) == make_exact({0, 3, 0, 1}));
  CHECK(is_even_polynomial(ExactPolynomial{}));
  CHECK(is_odd_polynomial(ExactPolynomial{}));
  CHECK(is_odd_polynomial(make_exact({0, 1, 0, 1})));
  CHECK_FALSE(is_odd_polynomial(make_exact({1, 1})));
}

TEST_CASE("coefficient predicates") {
  CHECK(is_real(to_approx(make_exact({1, 2, 3}))));
  CHECK_FALSE(is_real(ApproxPolynomial{Complex(1, 0), Complex(0, 1)}));
  CHECK(is_real(ApproxPolynomial{}));
  CHECK(is_real(ApproxPolynomial{Complex(1, 1e-12)}));

  CHECK(has_positive_coefficients(make_exact({1, 3, 2, 1})));
  CHECK_FALSE(has_positive_coefficients(make_exact({1, 0, 1})));
  CHECK_FALSE(has_positive_coefficients(make_exact({-1, 2})));
  CHECK_FALSE(has_positive_coefficients(ExactPolynomial{}));
  CHECK_FALSE(has_positive_coefficients(ApproxPolynomial{Complex(1, 0), Complex(1, 1)}));
  CHECK(has_positive_coefficients(ApproxPolynomial{Complex(1, 0), Complex(2, 0)}));
}

TEST_CASE("ring laws on random exact polynomials") {
  Generator gen(101);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = gen.any_polynomial(static_cast<int>(gen.integer(0, 8)));
    auto q = gen.any_polynomial(static_cast<int>(gen.integer(0, 8)));
    auto r = gen.any_polynomial(static_cast<int>(gen.integer(0, 8)));
    REQUIRE(add(p, q) == add(q, p));
    REQUIRE(mul(p, q) == mul(q, p));
    REQUIRE(add(add(p, q), r) == add(p, add(q, r)));
    REQUIRE(mul(mul(p, q), r) == mul(p, mul(q, r)));
    REQUIRE(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
    for (const auto& s : {add(p, q), mul(p, q), sub(p, p)}) {
      REQUIRE((s.is_zero() || !s.leading().is_zero()));
    }
  }
}

TEST_CASE("divmod round trip") {
  Generator gen(202);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = gen.any_polynomial(static_cast<int>(gen.integer(0, 10)));
    auto q = gen.any_polynomial(static_cast<int>(gen.integer(0, 6)));
    auto [quot, rem] = divmod(p, q);
    REQUIRE(add(mul(q, quot), rem) == p);
    REQUIRE(rem.degree() < q.degree());

    ApproxPolynomial pa = to_approx(p);
    ApproxPolynomial qa = to_approx(q);
    auto [qa_quot, qa_rem] = divmod(pa, qa);
    ApproxPolynomial back = add(mul(qa, qa_quot), qa_rem);
    // Forward error of q·quot + rem is bounded by the size of the products.
    auto cmax = [](const ApproxPolynomial& x) {
      double m = 0.0;
      for (const auto& c : x.coeffs()) m = std::max(m, std::abs(c));
      return m;
    };
    double scale = cmax(pa) + static_cast<double>(qa.coeffs().size()) * cmax(qa) * cmax(qa_quot);
    for (std::size_t i = 0; i < pa.coeffs().size(); ++i) {
      REQUIRE(std::abs(back[i] - pa[i]) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("parity identities") {
  Generator gen(303);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = gen.any_polynomial(static_cast<int>(gen.integer(0, 12)));
    REQUIRE(add(even_part(p), odd_part(p)) == p);

    Rational x(gen.integer(-50, 50), gen.integer(1, 7));
    REQUIRE(eval(even_part(p), -x) == eval(even_part(p), x));
    REQUIRE(eval(odd_part(p), -x) == -eval(odd_part(p), x));

    ComplexRational jw(Rational(0), x);
    REQUIRE(eval(odd_part(p), jw).re.is_zero());
    REQUIRE(eval(even_part(p), jw).im.is_zero());

    Complex xa(x.to_double(), 0.3);
    ApproxPolynomial ea = to_approx(even_part(p));
    ApproxPolynomial oa = to_approx(odd_part(p));
    double bound = 1e-10 * (1.0 + std::pow(std::abs(xa), std::max(p.degree(), 0)));
    REQUIRE(std::abs(eval(ea, -xa) - eval(ea, xa)) <= bound * 100.0);
    REQUIRE(std::abs(eval(oa, -xa) + eval(oa, xa)) <= bound * 100.0);
    Complex jwa(0.0, x.to_double());
    REQUIRE(std::abs(eval(oa, jwa).real()) <= bound);
  }
}
