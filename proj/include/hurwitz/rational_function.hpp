#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/polynomial.hpp"

namespace hurwitz {

/// A rational function kept as the unreduced pair (num, denom). No common
/// factor is ever cancelled; denom is never the zero polynomial.
template <CoefficientField T>
class RationalFunction {
 public:
  /// Throws ZeroDenominatorError when denom is zero.
  static RationalFunction make(Polynomial<T> num, Polynomial<T> denom) {
    if (denom.is_zero()) throw ZeroDenominatorError();
    return RationalFunction(std::move(num), std::move(denom));
  }

  const Polynomial<T>& num() const noexcept { return num_; }
  const Polynomial<T>& denom() const noexcept { return denom_; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  RationalFunction(Polynomial<T> num, Polynomial<T> denom)
      : num_(std::move(num)), denom_(std::move(denom)) {}

  Polynomial<T> num_;
  Polynomial<T> denom_;
};

using ExactRationalFunction = RationalFunction<Rational>;
using ApproxRationalFunction = RationalFunction<Complex>;

template <class T>
RationalFunction<T> make_rational_function(Polynomial<T> num, Polynomial<T> denom) {
  return RationalFunction<T>::make(std::move(num), std::move(denom));
}

namespace detail {

inline std::string point_string(const Complex& x) {
  return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
}
inline std::string point_string(const ComplexRational& x) { return to_string(x); }
inline std::string point_string(const Rational& x) { return x.to_string(); }

inline bool is_zero_value(const Complex& x) { return x == Complex{}; }
inline bool is_zero_value(const ComplexRational& x) { return x.is_zero(); }
inline bool is_zero_value(const Rational& x) { return x.is_zero(); }

}  // namespace detail

/// eval(num, x) / eval(denom, x). Throws PoleError when the denominator
/// vanishes exactly at x.
template <class T, class U>
U eval(const RationalFunction<T>& z, const U& x) {
  U d = eval(z.denom(), x);
  if (detail::is_zero_value(d)) throw PoleError(detail::point_string(x));
  return eval(z.num(), x) / d;
}

/// Network-theoretic degree: max(deg num, deg denom).
template <class T>
int degree(const RationalFunction<T>& z) {
  return std::max(z.num().degree(), z.denom().degree());
}

/// Swaps the pair. Throws ZeroDenominatorError for the zero function.
template <class T>
RationalFunction<T> reciprocal(const RationalFunction<T>& z) {
  return RationalFunction<T>::make(z.denom(), z.num());
}

/// Structural parity: (even/odd) or (odd/even). A zero numerator has both
/// parities.
template <class T>
bool is_odd(const RationalFunction<T>& z) {
  return (is_even_polynomial(z.num()) && is_odd_polynomial(z.denom())) ||
         (is_odd_polynomial(z.num()) && is_even_polynomial(z.denom()));
}

/// W = (num - denom) / (num + denom). Throws ZeroDenominatorError if num + denom
/// is the zero polynomial.
template <class T>
RationalFunction<T> w_transform(const RationalFunction<T>& z) {
  return RationalFunction<T>::make(sub(z.num(), z.denom()), add(z.num(), z.denom()));
}

/// num·denom' == num'·denom, i.e. equal as functions up to common factors.
template <class T>
bool cross_equal(const RationalFunction<T>& a, const RationalFunction<T>& b) {
  return mul(a.num(), b.denom()) == mul(b.num(), a.denom());
}

template <class T>
ApproxRationalFunction to_approx(const RationalFunction<T>& z) {
  return ApproxRationalFunction::make(to_approx(z.num()), to_approx(z.denom()));
}

/// Sample points for positivity checks: real parts log-uniform in
/// [re_min, re_max]; imaginary parts with a random sign and a magnitude
/// log-uniform in [im_min, im_max], so the neighbourhood of poles near the
/// imaginary axis at every scale gets sampled.
struct SampleConfig {
  int count = 512;
  double re_min = 1e-3;
  double re_max = 1e3;
  double im_min = 1e-3;
  double im_max = 1e3;
  std::uint64_t seed = 0x5EED;
};

/// Deterministic for a given config on every platform.
std::vector<Complex> sample_points(const SampleConfig& config);

struct PositivityResult {
  bool falsified = false;
  std::optional<Complex> witness;  ///< first x with Re(Z(x)) <= 0
  std::optional<Complex> value;    ///< Z(witness)
  int evaluated = 0;
  int skipped_poles = 0;
};

/// Falsification check for the positive-real property Re(x) > 0 ⇒ Re(Z(x)) > 0.
/// A `not falsified` result is evidence, not a proof. Points numerically on a
/// pole are skipped. Throws PreconditionError for non-real Z.
PositivityResult is_positive_sampled(const ApproxRationalFunction& z, const SampleConfig& config = {});

inline PositivityResult is_positive_sampled(const ExactRationalFunction& z, const SampleConfig& config = {}) {
  return is_positive_sampled(to_approx(z), config);
}

std::string to_string(const ExactRationalFunction& z);

}  // namespace hurwitz
