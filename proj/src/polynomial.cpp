#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational_function.hpp"

#include <cmath>
#include <random>

namespace hurwitz {

std::string to_string(const ExactPolynomial& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) out += ", ";
    out += p.coeffs()[i].to_string();
  }
  return out + "]";
}

std::string to_string(const ExactRationalFunction& z) {
  return to_string(z.num()) + " / " + to_string(z.denom());
}

namespace {

// 53 random bits mapped onto [0, 1). Avoids the implementation-defined
// std::uniform_real_distribution so samples match across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Scale of the terms summed by Horner, used to tell a numerical pole apart
// from a genuinely small denominator.
double magnitude_bound(const ApproxPolynomial& p, const Complex& x) {
  double acc = 0.0;
  double ax = std::abs(x);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

}  // namespace

std::vector<Complex> sample_points(const SampleConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::vector<Complex> points;
  points.reserve(static_cast<std::size_t>(std::max(config.count, 0)));
  const double re_lo = std::log(config.re_min);
  const double re_hi = std::log(config.re_max);
  const double im_lo = std::log(config.im_min);
  const double im_hi = std::log(config.im_max);
  for (int k = 0; k < config.count; ++k) {
    double re = std::exp(re_lo + unit_uniform(rng) * (re_hi - re_lo));
    double im = std::exp(im_lo + unit_uniform(rng) * (im_hi - im_lo));
    if (rng() & 1u) im = -im;
    points.emplace_back(re, im);
  }
  return points;
}

PositivityResult is_positive_sampled(const ApproxRationalFunction& z, const SampleConfig& config) {
  if (!is_real(z.num()) || !is_real(z.denom())) {
    throw PreconditionError("positivity check needs a real rational function");
  }
  constexpr double kPoleRelTol = 1e-14;
  PositivityResult result;
  for (const Complex& x : sample_points(config)) {
    Complex d = eval(z.denom(), x);
    if (std::abs(d) <= kPoleRelTol * magnitude_bound(z.denom(), x)) {
      ++result.skipped_poles;
      continue;
    }
    Complex value = eval(z.num(), x) / d;
    ++result.evaluated;
    if (!(value.real() > 0.0)) {
      result.falsified = true;
      result.witness = x;
      result.value = value;
      break;
    }
  }
  return result;
}

}  // namespace hurwitz
