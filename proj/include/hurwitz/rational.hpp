#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hurwitz {

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double value);

  const mpq_class& get() const noexcept { return value_; }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  double to_double() const { return value_.get_d(); }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const { return value_.get_str(); }
  /// Always "n/d", including "3/1" for integers.
  std::string to_fraction_string() const { return numerator() + "/" + denominator(); }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);

/// Parses "7", "-3/2", "0.125", "1e-3", "2.5E2". Decimals are expanded
/// digit by digit, so "0.1" is exactly 1/10. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Gaussian rational a + b·i, used to evaluate exact polynomials off the real line.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  Rational norm() const { return re * re + im * im; }
  ComplexRational conj() const { return {re, -im}; }

  ComplexRational& operator+=(const ComplexRational& rhs);
  ComplexRational& operator-=(const ComplexRational& rhs);
  ComplexRational& operator*=(const ComplexRational& rhs);
  ComplexRational& operator/=(const ComplexRational& rhs);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& x) { return {-x.re, -x.im}; }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

std::string to_string(const Rational& x);
std::string to_string(const ComplexRational& z);

}  // namespace hurwitz
