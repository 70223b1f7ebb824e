#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational_function.hpp"

namespace hurwitz {

enum class Verdict { hurwitz, not_hurwitz, marginal, not_applicable };

const char* to_string(Verdict v);

// ---------------------------------------------------------------------------
// Continued-fraction (Cauer) expansion at infinity and the reactance test
// ---------------------------------------------------------------------------

/// Z = c1·s + 1/(c2·s + 1/(c3·s + ...)).
struct CauerExpansion {
  enum class Status { complete, degenerate };

  std::vector<Rational> coefficients;
  Status status = Status::complete;
  int degenerate_step = 0;  ///< 1-based step that failed; 0 when complete

  bool complete() const noexcept { return status == Status::complete; }
  bool all_positive() const;
};

/// Repeated long division of num by denom. Each step must yield a pure c·s
/// quotient and a remainder exactly one degree below the divisor; the
/// expansion is complete when the remainder vanishes against a constant
/// divisor. Throws OrientationError unless deg(num) = deg(denom) + 1.
CauerExpansion cauer_expansion(const ExactRationalFunction& z);

enum class Orientation { direct, reciprocal };

const char* to_string(Orientation o);

/// Picks Z or 1/Z so that the numerator degree exceeds the denominator degree
/// by one. Empty when neither does.
std::optional<Orientation> orient(const ExactRationalFunction& z);

/// True iff the oriented Z has a complete Cauer expansion with exactly n
/// positive coefficients. Throws NotApplicableError unless Z is structurally odd.
bool is_reactance(const ExactRationalFunction& z, int n);

struct ReactanceTest {
  enum class Reason {
    none,
    non_positive_coefficients,
    degree_mismatch,
    degenerate_expansion,
    non_positive_cf_coefficient,
    constant_polynomial,
  };

  Verdict verdict = Verdict::not_applicable;
  Reason reason = Reason::none;
  bool sign_normalized = false;  ///< input was negated to make the leading coefficient positive
  std::optional<Orientation> orientation;
  std::optional<CauerExpansion> expansion;
};

const char* to_string(ReactanceTest::Reason r);

/// Hurwitz test through the reactance property of even_part(p)/odd_part(p).
/// A negative leading coefficient is normalized away first.
ReactanceTest hurwitz_by_reactance(const ExactPolynomial& p);

// ---------------------------------------------------------------------------
// Routh table
// ---------------------------------------------------------------------------

struct RouthResult {
  enum class Classification { hurwitz, not_hurwitz, singular };

  std::vector<Rational> first_column;
  Classification classification = Classification::singular;
  int singular_power = -1;  ///< power of s labelling the singular row, or -1
};

const char* to_string(RouthResult::Classification c);

/// Classical Routh table. A zero first-column entry or an all-zero row stops
/// the table with `singular`; nothing is perturbed.
/// Throws PreconditionError for degree < 1.
RouthResult routh_array(const ExactPolynomial& p);

// ---------------------------------------------------------------------------
// Positive-real boundary check
// ---------------------------------------------------------------------------

/// Points jω on the imaginary axis: ω = 0 (optional) plus `count` values
/// log-spaced in [omega_min, omega_max].
struct BoundaryGrid {
  int count = 1024;
  double omega_min = 1e-3;
  double omega_max = 1e3;
  bool include_zero = true;
  double tolerance = 1e-9;  ///< Re(Z(jω)) >= -tolerance passes
};

std::vector<double> grid_omegas(const BoundaryGrid& grid);

/// Two roots are identified when |a - b| <= kCommonRootTol · max(1, |a|, |b|).
inline constexpr double kCommonRootTol = 1e-7;

struct Theorem2Result {
  struct Premises {
    PositivityResult positive;
    bool no_common_roots = false;
  };

  Premises premises;
  bool boundary_ok = false;
  double boundary_min_re = 0.0;  ///< smallest Re(Z(jω)) seen (exact, then rounded)
  int boundary_points = 0;
  int boundary_skipped = 0;      ///< grid points on a root of odd_part(p)
  RouthResult hurwitz_claim;     ///< Routh table of even_part(p) + odd_part(p)
};

/// Premises and conclusions of the positive-real criterion for
/// Z = even_part(p)/odd_part(p). Boundary values are computed exactly.
/// Throws PreconditionError unless p has degree >= 1 and positive coefficients.
Theorem2Result theorem2_check(const ExactPolynomial& p, const BoundaryGrid& grid = {},
                              const SampleConfig& samples = {});

/// True when a and b have no common root. Root clustering at kCommonRootTol
/// screens candidates; a flagged pair is confirmed by an exact GCD, since
/// distinct interlacing roots can agree to far better than the tolerance.
bool share_no_roots(const ExactPolynomial& a, const ExactPolynomial& b);

/// Degree of gcd(a, b) by the Euclidean algorithm in exact arithmetic.
/// Returns -1 when both are zero.
int gcd_degree(const ExactPolynomial& a, const ExactPolynomial& b);

// ---------------------------------------------------------------------------
// Discrete time
// ---------------------------------------------------------------------------

/// (1 - s)^m · d((1 + s)/(1 - s)) for m = degree(d).
ExactPolynomial bilinear_substitute(const ExactPolynomial& d);

struct SchurTest {
  enum class Verdict { schur_stable, not_schur_stable, marginal };

  Verdict verdict = Verdict::marginal;
  std::string reason;
  ExactPolynomial image;             ///< bilinear_substitute(d), sign-normalized
  std::optional<RouthResult> routh;  ///< absent when the image lost degree
};

const char* to_string(SchurTest::Verdict v);

/// Schur test through the bilinear map and the Routh table of the image.
/// A degree drop means d(-1) = 0 and is reported as marginal.
SchurTest schur_stable_via_bilinear(const ExactPolynomial& d);

// ---------------------------------------------------------------------------
// LC ladder synthesis
// ---------------------------------------------------------------------------

enum class ElementKind { series_inductor, shunt_capacitor };

const char* to_string(ElementKind k);

struct LadderElement {
  ElementKind kind;
  Rational value;  ///< henry or farad, normalized

  friend bool operator==(const LadderElement&, const LadderElement&) = default;
};

/// Alternating chain of series inductors and shunt capacitors with positive
/// values. The first element is a series inductor when the chain realizes an
/// impedance and a shunt capacitor when it realizes an admittance.
class LCLadder {
 public:
  /// Throws SynthesisError if the kinds do not alternate or a value is not positive.
  explicit LCLadder(std::vector<LadderElement> elements);

  const std::vector<LadderElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  friend bool operator==(const LCLadder&, const LCLadder&) = default;

 private:
  std::vector<LadderElement> elements_;
};

/// Cauer-I synthesis. Throws SynthesisError unless Z is a reactance function
/// of its own degree.
LCLadder synthesize_lc_ladder(const ExactRationalFunction& z);

/// Driving-point impedance of the ladder, folded from the far end.
ExactRationalFunction ladder_to_impedance(const LCLadder& ladder);

}  // namespace hurwitz
