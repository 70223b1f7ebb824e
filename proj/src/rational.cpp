#include "hurwitz/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite double has no rational value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) throw ParseError("malformed number '" + std::string(whole) + "'");
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = mpq_class(num, den);
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) {
        throw ParseError("malformed exponent in '" + std::string(text) + "'");
      }
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = mantissa.substr(0, dot);
      std::string_view frac_part = mantissa.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) {
        throw ParseError("malformed number '" + std::string(text) + "'");
      }
      if ((!int_part.empty() && !all_digits(int_part)) ||
          (!frac_part.empty() && !all_digits(frac_part))) {
        throw ParseError("malformed number '" + std::string(text) + "'");
      }
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      parse_integer(mantissa, text);
      digits = std::string(mantissa);
    }
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale, 1);
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& rhs) {
  Rational r = re * rhs.re - im * rhs.im;
  Rational i = re * rhs.im + im * rhs.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& rhs) {
  Rational n = rhs.norm();
  if (n.is_zero()) throw std::domain_error("complex rational division by zero");
  *this *= rhs.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string to_string(const Rational& x) { return x.to_string(); }

std::string to_string(const ComplexRational& z) {
  if (z.im.is_zero()) return z.re.to_string();
  if (z.re.is_zero()) return z.im.to_string() + "i";
  std::string im = z.im.sign() < 0 ? " - " + (-z.im).to_string() : " + " + z.im.to_string();
  return z.re.to_string() + im + "i";
}

}  // namespace hurwitz
