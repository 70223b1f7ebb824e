#pragma once

#include <algorithm>
#include <complex>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

using Complex = std::complex<double>;

/// Absolute tolerance used by approximate-mode predicates (imaginary parts,
/// division remainders).
inline constexpr double kDefaultZeroTol = 1e-10;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Complex to_complex(const Rational& x) { return {x.to_double(), 0.0}; }
  static std::string to_string(const Rational& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static bool is_zero(const Complex& x) { return x == Complex{}; }
  static Complex to_complex(const Complex& x) { return x; }
  static std::string to_string(const Complex& x) {
    return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
  }
};

template <class T>
concept CoefficientField = requires(T a, T b) {
  { ScalarTraits<T>::exact } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
};

/// Dense univariate polynomial with ascending coefficients: coeffs()[i] is the
/// coefficient of x^i. Trailing zeros are trimmed on construction, so the zero
/// polynomial is the empty sequence and has degree -1.
///
/// The coefficient domain is the type parameter: Polynomial<Rational> is the
/// exact mode, Polynomial<Complex> the approximate mode. Mixing the two is a
/// compile-time error.
template <CoefficientField T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  /// c·x^power
  static Polynomial monomial(T c, int power) {
    std::vector<T> v(static_cast<std::size_t>(power) + 1, T(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of x^i; zero above the degree.
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const { return coeffs_.back(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && ScalarTraits<T>::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using ExactPolynomial = Polynomial<Rational>;
using ApproxPolynomial = Polynomial<Complex>;

template <class T>
int degree(const Polynomial<T>& p) {
  return p.degree();
}

/// Horner evaluation. The argument type may be wider than the coefficient
/// type, e.g. an exact polynomial at a Gaussian rational.
template <class T, class U>
U eval(const Polynomial<T>& p, const U& x) {
  U acc = U(T(0));
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * x + U(*it);
  }
  return acc;
}

template <class T>
Polynomial<T> add(const Polynomial<T>& p, const Polynomial<T>& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<T> out(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  return Polynomial<T>(std::move(out));
}

template <class T>
Polynomial<T> negate(const Polynomial<T>& p) {
  std::vector<T> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(-c);
  return Polynomial<T>(std::move(out));
}

template <class T>
Polynomial<T> sub(const Polynomial<T>& p, const Polynomial<T>& q) {
  return add(p, negate(q));
}

template <class T>
Polynomial<T> mul(const Polynomial<T>& p, const Polynomial<T>& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ScalarTraits<T>::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return Polynomial<T>(std::move(out));
}

template <class T>
Polynomial<T> scale(const Polynomial<T>& p, const T& c) {
  std::vector<T> out;
  out.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) out.push_back(x * c);
  return Polynomial<T>(std::move(out));
}

template <class T>
Polynomial<T> operator+(const Polynomial<T>& p, const Polynomial<T>& q) { return add(p, q); }
template <class T>
Polynomial<T> operator-(const Polynomial<T>& p, const Polynomial<T>& q) { return sub(p, q); }
template <class T>
Polynomial<T> operator*(const Polynomial<T>& p, const Polynomial<T>& q) { return mul(p, q); }
template <class T>
Polynomial<T> operator-(const Polynomial<T>& p) { return negate(p); }

template <class T>
struct DivMod {
  Polynomial<T> quotient;
  Polynomial<T> remainder;
};

/// Long division: p = q·quotient + remainder with degree(remainder) < degree(q).
/// In approximate mode remainder coefficients with |c| <= zero_tol are dropped
/// from the top.
template <class T>
DivMod<T> divmod(const Polynomial<T>& p, const Polynomial<T>& q, double zero_tol = kDefaultZeroTol) {
  if (q.is_zero()) throw DivisionByZeroPolynomial();
  if (p.degree() < q.degree()) return {Polynomial<T>{}, p};

  std::vector<T> rem = p.coeffs();
  const auto& d = q.coeffs();
  const int dq = q.degree();
  const int shift_max = p.degree() - dq;
  std::vector<T> quot(static_cast<std::size_t>(shift_max) + 1, T(0));
  const T& lead = q.leading();
  for (int k = shift_max; k >= 0; --k) {
    T c = rem[static_cast<std::size_t>(k + dq)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (ScalarTraits<T>::is_zero(c)) continue;
    for (int j = 0; j <= dq; ++j) {
      auto idx = static_cast<std::size_t>(k + j);
      rem[idx] = rem[idx] - c * d[static_cast<std::size_t>(j)];
    }
    rem[static_cast<std::size_t>(k + dq)] = T(0);
  }
  rem.resize(static_cast<std::size_t>(dq));
  if constexpr (!ScalarTraits<T>::exact) {
    while (!rem.empty() && std::abs(rem.back()) <= zero_tol) rem.pop_back();
  }
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

namespace detail {

template <class T>
Polynomial<T> keep_parity(const Polynomial<T>& p, std::size_t parity) {
  std::vector<T> out = p.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i % 2 != parity) out[i] = T(0);
  }
  return Polynomial<T>(std::move(out));
}

template <class T>
bool has_only_parity(const Polynomial<T>& p, std::size_t parity) {
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 != parity && !ScalarTraits<T>::is_zero(c[i])) return false;
  }
  return true;
}

}  // namespace detail

/// Coefficients at even indices; odd indices zeroed.
template <class T>
Polynomial<T> even_part(const Polynomial<T>& p) {
  return detail::keep_parity(p, 0);
}

/// Coefficients at odd indices; even indices zeroed.
template <class T>
Polynomial<T> odd_part(const Polynomial<T>& p) {
  return detail::keep_parity(p, 1);
}

/// True iff only even powers occur. The zero polynomial is both even and odd.
template <class T>
bool is_even_polynomial(const Polynomial<T>& p) {
  return detail::has_only_parity(p, 0);
}

template <class T>
bool is_odd_polynomial(const Polynomial<T>& p) {
  return detail::has_only_parity(p, 1);
}

inline bool is_real(const ExactPolynomial&) { return true; }

inline bool is_real(const ApproxPolynomial& p, double zero_tol = kDefaultZeroTol) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [zero_tol](const Complex& c) { return std::abs(c.imag()) <= zero_tol; });
}

/// Real, nonzero, and every coefficient 0..degree strictly positive. Internal
/// zeros are rejected.
inline bool has_positive_coefficients(const ExactPolynomial& p) {
  if (p.is_zero()) return false;
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Rational& c) { return c.sign() > 0; });
}

inline bool has_positive_coefficients(const ApproxPolynomial& p, double zero_tol = kDefaultZeroTol) {
  if (p.is_zero() || !is_real(p, zero_tol)) return false;
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Complex& c) { return c.real() > 0.0; });
}

template <class T>
ApproxPolynomial to_approx(const Polynomial<T>& p) {
  std::vector<Complex> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(ScalarTraits<T>::to_complex(c));
  return ApproxPolynomial(std::move(out));
}

/// Builds an exact polynomial from integer literals, e.g. make_exact({1, 3, 2, 1}).
inline ExactPolynomial make_exact(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return ExactPolynomial(std::move(v));
}

/// "[1, 3/2, 0, 1]"
std::string to_string(const ExactPolynomial& p);

}  // namespace hurwitz
