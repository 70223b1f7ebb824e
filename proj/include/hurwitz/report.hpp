#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/errors.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/stability.hpp"

namespace hurwitz::report {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

enum class Mode { continuous, discrete };
enum class Criterion { reactance, routh, theorem2, oracle, bilinear };
enum class OutputFormat { text, json };

const char* to_string(Mode m);
const char* to_string(Criterion c);

/// Mode-aware verdict name: hurwitz/not_hurwitz in continuous mode,
/// schur_stable/not_schur_stable in discrete mode.
std::string verdict_name(Verdict v, Mode m);

struct AnalysisRequest {
  Mode mode = Mode::continuous;
  std::vector<Rational> coefficients;  ///< ascending, constant term first
  std::vector<Criterion> criteria;     ///< canonical order, no duplicates
  std::uint64_t sample_seed = kDefaultSeed;
  OutputFormat output = OutputFormat::text;
  std::optional<std::string> batch_file;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Thrown by parse_request for --help; what() holds the help text.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

/// Parses a comma-separated ascending coefficient list ("1,0.5,3/2").
std::vector<Rational> parse_coefficients(std::string_view list);

/// Flags: --mode, --coeffs, --criteria, --seed, --json, --batch. The
/// HURWITZ_SEED environment variable overrides --seed. Throws UsageError.
AnalysisRequest parse_request(const std::vector<std::string>& args);
AnalysisRequest parse_request(int argc, const char* const* argv);

struct CriterionResult {
  Criterion criterion;
  Verdict verdict = Verdict::not_applicable;
  nlohmann::ordered_json evidence;
  std::string summary;  ///< one-line detail for the text table
};

struct StabilityReport {
  Mode mode = Mode::continuous;
  ExactPolynomial input;
  std::vector<CriterionResult> verdicts;
  /// Consensus. hurwitz only if no criterion reports not_hurwitz; a converged
  /// oracle decides marginal versus not_hurwitz.
  Verdict final = Verdict::not_applicable;
};

/// Runs every selected criterion. Discrete mode applies the symbolic tests to
/// the bilinear image and the oracle to the input itself.
/// Throws IndeterminateError when the root oracle does not converge.
StabilityReport run(const AnalysisRequest& request);

Verdict consensus(const std::vector<CriterionResult>& verdicts);

nlohmann::ordered_json to_json(const StabilityReport& report);

/// JSON is pretty-printed with two-space indent; text is a fixed-width table.
/// Output is a pure function of the report.
std::string render(const StabilityReport& report, OutputFormat format);

/// One compact JSON report per input line; blank lines and lines starting
/// with '#' are skipped. Throws UsageError on a malformed line.
void run_batch(const AnalysisRequest& request, std::istream& in, std::ostream& out);

/// Entry point shared by the CLI binary. Returns the process exit status:
/// 0 analysis completed, 2 usage error, 3 oracle indeterminate.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rounds to 15 significant digits so rendered floats are stable.
double round15(double x);

}  // namespace hurwitz::report
