#include "hurwitz/root_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hurwitz {

namespace {

struct HornerResult {
  Complex value;
  Complex derivative;
  double bound;  // sum |c_k| |x|^k
};

HornerResult horner(const std::vector<Complex>& c, const Complex& x) {
  Complex p = c.back();
  Complex dp{};
  double bound = std::abs(c.back());
  const double ax = std::abs(x);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[k];
    bound = bound * ax + std::abs(c[k]);
  }
  return {p, dp, bound};
}

double clean_zero(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

RootSet find_roots(const ApproxPolynomial& p, const RootFinderOptions& options) {
  if (p.degree() < 1) throw PreconditionError("root finding needs degree >= 1");
  if (p.degree() > kOracleDegreeCap) {
    throw PreconditionError("root oracle degree cap is " + std::to_string(kOracleDegreeCap));
  }

  RootSet result;
  const auto& all = p.coeffs();
  std::size_t zeros = 0;
  while (all[zeros] == Complex{}) ++zeros;
  result.roots.assign(zeros, Complex{});
  std::vector<Complex> c(all.begin() + static_cast<std::ptrdiff_t>(zeros), all.end());
  const int n = static_cast<int>(c.size()) - 1;

  if (n == 1) {
    result.roots.push_back(-c[0] / c[1]);
  } else if (n > 1) {
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(k)] / c.back()));
    radius += 1.0;

    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      double theta = 2.0 * std::numbers::pi * k / n + 0.4;
      z[static_cast<std::size_t>(k)] = std::polar(radius, theta);
    }
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    const double eps = std::numeric_limits<double>::epsilon();

    int sweep = 0;
    for (; sweep < options.max_sweeps; ++sweep) {
      double zmax = 0.0;
      for (const auto& zi : z) zmax = std::max(zmax, std::abs(zi));
      bool all_done = true;
      for (int i = 0; i < n; ++i) {
        auto ui = static_cast<std::size_t>(i);
        if (done[ui]) continue;
        HornerResult h = horner(c, z[ui]);
        if (std::abs(h.value) <= 4.0 * n * eps * h.bound) {
          done[ui] = true;
          continue;
        }
        Complex sum{};
        for (int j = 0; j < n; ++j) {
          if (j != i) sum += 1.0 / (z[ui] - z[static_cast<std::size_t>(j)]);
        }
        Complex step;
        if (h.derivative == Complex{}) {
          step = Complex(radius * 1e-3, radius * 1e-3);
        } else {
          Complex ratio = h.value / h.derivative;
          step = ratio / (1.0 - ratio * sum);
        }
        z[ui] -= step;
        if (std::abs(step) < options.step_tol * (1.0 + zmax)) {
          done[ui] = true;
        } else {
          all_done = false;
        }
      }
      if (all_done && std::all_of(done.begin(), done.end(), [](bool b) { return b; })) {
        ++sweep;
        break;
      }
    }
    result.sweeps = sweep;
    bool finished = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
    result.roots.insert(result.roots.end(), z.begin(), z.end());
    result.converged = finished;
  }
  if (n <= 1) result.converged = true;

  double residual = 0.0;
  for (const auto& r : result.roots) {
    HornerResult h = horner(all, r);
    if (h.bound > 0.0) residual = std::max(residual, std::abs(h.value) / h.bound);
  }
  result.residual = residual;
  result.converged = result.converged && residual <= options.residual_tol;

  for (auto& r : result.roots) r = Complex(clean_zero(r.real()), clean_zero(r.imag()));
  std::sort(result.roots.begin(), result.roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return result;
}

RootSet find_roots(const ExactPolynomial& p, const RootFinderOptions& options) {
  return find_roots(to_approx(p), options);
}

double max_real_part(const RootSet& roots) {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& r : roots.roots) m = std::max(m, r.real());
  return m;
}

double max_modulus(const RootSet& roots) {
  double m = 0.0;
  for (const auto& r : roots.roots) m = std::max(m, std::abs(r));
  return m;
}

namespace {

const RootSet& require_converged(const RootSet& roots) {
  if (!roots.converged) {
    throw IndeterminateError("root iteration did not converge (residual " +
                             std::to_string(roots.residual) + ")");
  }
  return roots;
}

}  // namespace

double max_real_part(const ExactPolynomial& p) { return max_real_part(require_converged(find_roots(p))); }

OracleVerdict classify_hurwitz(const RootSet& roots) {
  double m = max_real_part(require_converged(roots));
  if (m < -kMarginalBand) return OracleVerdict::yes;
  if (m <= kMarginalBand) return OracleVerdict::marginal;
  return OracleVerdict::no;
}

OracleVerdict classify_schur(const RootSet& roots) {
  double m = max_modulus(require_converged(roots));
  if (m < 1.0 - kMarginalBand) return OracleVerdict::yes;
  if (m <= 1.0 + kMarginalBand) return OracleVerdict::marginal;
  return OracleVerdict::no;
}

OracleVerdict is_hurwitz_oracle(const ExactPolynomial& p) { return classify_hurwitz(find_roots(p)); }

OracleVerdict is_schur_oracle(const ExactPolynomial& d) { return classify_schur(find_roots(d)); }

const char* to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::yes: return "yes";
    case OracleVerdict::no: return "no";
    case OracleVerdict::marginal: return "marginal";
  }
  return "?";
}

}  // namespace hurwitz
