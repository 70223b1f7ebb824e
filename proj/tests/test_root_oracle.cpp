#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hurwitz/root_oracle.hpp"
#include "support/generators.hpp"

using namespace hurwitz;
using hurwitz::testing::Generator;

namespace {

bool contains(const std::vector<Complex>& roots, Complex z, double tol = 1e-10) {
  return std::any_of(roots.begin(), roots.end(), [&](const Complex& r) { return std::abs(r - z) <= tol; });
}

}  // namespace

TEST_CASE("roots of small polynomials") {
  auto r = find_roots(make_exact({2, 3, 1}));
  REQUIRE(r.converged);
  REQUIRE(r.roots.size() == 2);
  CHECK(contains(r.roots, {-1, 0}));
  CHECK(contains(r.roots, {-2, 0}));

  auto zero = find_roots(make_exact({0, 1}));
  REQUIRE(zero.roots.size() == 1);
  CHECK(zero.roots[0] == Complex(0, 0));

  auto fifth = find_roots(make_exact({1, 1, 1, 1, 1}));
  REQUIRE(fifth.converged);
  REQUIRE(fifth.roots.size() == 4);
  for (int k : {1, 2, 3, 4}) {
    CHECK(contains(fifth.roots, std::polar(1.0, 2.0 * std::numbers::pi * k / 5.0)));
  }

  CHECK_THROWS_AS(find_roots(ExactPolynomial{}), PreconditionError);
  CHECK_THROWS_AS(find_roots(make_exact({3})), PreconditionError);
}

TEST_CASE("zero roots are split off exactly") {
  auto r = find_roots(make_exact({0, 0, 0, 2, 1}));
  REQUIRE(r.converged);
  CHECK(std::count(r.roots.begin(), r.roots.end(), Complex(0, 0)) == 3);
  CHECK(contains(r.roots, {-2, 0}));
}

TEST_CASE("degree cap") {
  std::vector<Rational> c(66, Rational(1));
  CHECK_THROWS_AS(find_roots(ExactPolynomial(c)), PreconditionError);
  std::vector<Rational> ok(65, Rational(1));
  auto r = find_roots(ExactPolynomial(ok));  // degree 64: 65th roots of unity minus 1
  CHECK(r.converged);
}

TEST_CASE("max real part and classification") {
  CHECK(max_real_part(make_exact({2, 3, 1})) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(max_real_part(make_exact({1, 1, 1, 1, 1})) ==
        doctest::Approx((std::sqrt(5.0) - 1.0) / 4.0).epsilon(1e-12));
  CHECK(std::abs(max_real_part(make_exact({1, 0, 1}))) < 1e-12);

  CHECK(is_hurwitz_oracle(make_exact({2, 3, 1})) == OracleVerdict::yes);
  CHECK(is_hurwitz_oracle(make_exact({1, 0, 1})) == OracleVerdict::marginal);
  CHECK(is_hurwitz_oracle(make_exact({1, 1, 1, 1, 1})) == OracleVerdict::no);

  auto half = ExactPolynomial({Rational(-1, 2), Rational(1)});
  CHECK(is_schur_oracle(half) == OracleVerdict::yes);
  CHECK(is_schur_oracle(make_exact({1, 1})) == OracleVerdict::marginal);
  CHECK(is_schur_oracle(make_exact({-2, 1})) == OracleVerdict::no);
}

TEST_CASE("non-convergence is reported, never a silent verdict") {
  RootFinderOptions opts;
  opts.max_sweeps = 1;
  auto p = make_exact({1, 3, 5, 7, 11, 13, 17});
  auto r = find_roots(p, opts);
  CHECK_FALSE(r.converged);
  CHECK_THROWS_AS(classify_hurwitz(r), IndeterminateError);
}

TEST_CASE("random roots: reconstruction, residual and conjugate symmetry") {
  Generator gen(4242);
  for (int trial = 0; trial < 200; ++trial) {
    int deg = static_cast<int>(gen.integer(1, 12));
    ExactPolynomial p = gen.any_polynomial(deg);
    ApproxPolynomial pa = to_approx(p);
    RootSet r = find_roots(p);
    REQUIRE(r.converged);
    REQUIRE(static_cast<int>(r.roots.size()) == deg);

    double cmax = 0.0;
    for (const auto& c : pa.coeffs()) cmax = std::max(cmax, std::abs(c));
    for (const auto& z : r.roots) {
      REQUIRE(std::abs(eval(pa, z)) <= 1e-9 * std::pow(1.0 + std::abs(z), deg) * cmax);
    }

    ApproxPolynomial rebuilt{pa.leading()};
    for (const auto& z : r.roots) rebuilt = mul(rebuilt, ApproxPolynomial{-z, Complex(1)});
    for (int i = 0; i <= deg; ++i) {
      REQUIRE(std::abs(rebuilt[static_cast<std::size_t>(i)] - pa[static_cast<std::size_t>(i)]) <= 1e-8 * cmax);
    }

    for (const auto& z : r.roots) {
      REQUIRE(contains(r.roots, std::conj(z), 1e-8 * std::max(1.0, std::abs(z))));
    }
  }
}
