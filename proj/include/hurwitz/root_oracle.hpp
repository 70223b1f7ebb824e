#pragma once

#include <vector>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

/// Half-width of the band around the stability boundary (|Re| for Hurwitz,
/// ||z| - 1| for Schur) inside which the oracle answers `marginal`.
inline constexpr double kMarginalBand = 1e-8;

/// Largest degree the oracle accepts. It is a verification aid, not a
/// production root finder.
inline constexpr int kOracleDegreeCap = 64;

struct RootSet {
  std::vector<Complex> roots;  ///< sorted by (real, imag); size == degree
  double residual = 0.0;       ///< max_i |p(r_i)| / sum_k |c_k| |r_i|^k
  bool converged = false;
  int sweeps = 0;
};

struct RootFinderOptions {
  int max_sweeps = 1000;
  double step_tol = 1e-12;      ///< relative to 1 + max|root|
  double residual_tol = 1e-9;   ///< backward error required for `converged`
};

/// Aberth–Ehrlich simultaneous iteration. Exact zero roots are split off
/// first; the rest start on a ring of radius 1 + max|c_i / c_n| rotated off
/// the real axis. A root stops moving once its Newton–Aberth step is below
/// step_tol or its residual is at rounding level.
/// Throws PreconditionError for degree < 1 or degree > kOracleDegreeCap.
RootSet find_roots(const ApproxPolynomial& p, const RootFinderOptions& options = {});
RootSet find_roots(const ExactPolynomial& p, const RootFinderOptions& options = {});

/// Abscissa of the region of convergence: max Re over the roots.
/// Throws IndeterminateError if the iteration did not converge.
double max_real_part(const ExactPolynomial& p);
double max_real_part(const RootSet& roots);
double max_modulus(const RootSet& roots);

enum class OracleVerdict { yes, no, marginal };

OracleVerdict classify_hurwitz(const RootSet& roots);
OracleVerdict classify_schur(const RootSet& roots);

/// yes iff max Re(root) < -kMarginalBand, marginal within the band, else no.
/// Throws IndeterminateError on non-convergence.
OracleVerdict is_hurwitz_oracle(const ExactPolynomial& p);

/// yes iff max |root| < 1 - kMarginalBand, marginal within the band, else no.
OracleVerdict is_schur_oracle(const ExactPolynomial& d);

const char* to_string(OracleVerdict v);

}  // namespace hurwitz
