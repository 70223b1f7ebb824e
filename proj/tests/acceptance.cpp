// Acceptance runner: one [PASS]/[FAIL] line per criterion, non-zero exit if
// any criterion fails. Every tolerance used below is pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "hurwitz/report.hpp"
#include "hurwitz/root_oracle.hpp"
#include "hurwitz/stability.hpp"
#include "support/generators.hpp"

#ifndef HURWITZ_GOLDEN_DIR
#error "HURWITZ_GOLDEN_DIR must be defined"
#endif

using namespace hurwitz;
using hurwitz::testing::Generator;

namespace {

constexpr int kAgreementCases = 500;
constexpr int kNegativeCases = 500;
constexpr int kBilinearCases = 500;
constexpr int kLadderCases = 100;
constexpr int kParityCases = 200;
constexpr int kMaxDegree = 12;
constexpr int kMaxCauerLength = 10;
constexpr double kAgreementBudgetSeconds = 10.0;
constexpr double kQuarticMaxRe = 0.3090170;  // cos(2π/5)
constexpr double kQuarticTol = 1e-6;
constexpr double kBoundaryFloor = -1e-9;
constexpr double kWBound = 1.0 + 1e-10;
constexpr std::size_t kWSamples = 512;

struct Outcome {
  bool pass;
  std::string detail;
};

int g_failures = 0;

void print_outcome(const char* id, const char* title, const Outcome& o) {
  std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++g_failures;
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

Outcome ac1_agreement() {
  Generator gen(0xAC1);
  auto start = std::chrono::steady_clock::now();
  int disagreements = 0;
  int banded = 0;
  for (int i = 0; i < kAgreementCases; ++i) {
    auto p = gen.hurwitz_product(static_cast<int>(gen.integer(1, kMaxDegree)));
    OracleVerdict ov = is_hurwitz_oracle(p);
    if (ov == OracleVerdict::marginal) {
      ++banded;
      continue;
    }
    bool reactance = hurwitz_by_reactance(p).verdict == Verdict::hurwitz;
    bool routh = routh_array(p).classification == RouthResult::Classification::hurwitz;
    bool oracle = ov == OracleVerdict::yes;
    if (!(reactance && routh && oracle)) ++disagreements;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << kAgreementCases << " cases, " << disagreements << " disagreements, " << banded
     << " in marginal band, " << secs << " s (budget " << kAgreementBudgetSeconds << " s)";
  return {disagreements == 0 && secs < kAgreementBudgetSeconds, os.str()};
}

Outcome ac2_negative() {
  Generator gen(0xAC2);
  int disagreements = 0;
  for (int i = 0; i < kNegativeCases; ++i) {
    auto p = gen.planted_unstable(static_cast<int>(gen.integer(1, kMaxDegree)));
    bool reactance = hurwitz_by_reactance(p).verdict == Verdict::not_hurwitz;
    bool routh = routh_array(p).classification != RouthResult::Classification::hurwitz;
    bool oracle = is_hurwitz_oracle(p) == OracleVerdict::no;
    if (!(reactance && routh && oracle)) ++disagreements;
  }
  return {disagreements == 0,
          std::to_string(kNegativeCases) + " planted cases, " + std::to_string(disagreements) + " disagreements"};
}

Outcome ac3_fixtures() {
  auto cubic = make_exact({1, 3, 2, 1});
  auto t = hurwitz_by_reactance(cubic);
  auto r = routh_array(cubic);
  const std::vector<Rational> cf{Rational(1, 2), Rational(4, 5), Rational(5, 2)};
  const std::vector<Rational> col{Rational(1), Rational(2), Rational(5, 2), Rational(1)};
  bool cubic_ok = t.verdict == Verdict::hurwitz && t.expansion && t.expansion->coefficients == cf &&
                  r.first_column == col && r.classification == RouthResult::Classification::hurwitz;

  auto quartic = make_exact({1, 1, 1, 1, 1});
  bool quartic_symbolic = hurwitz_by_reactance(quartic).verdict == Verdict::not_hurwitz;
  double m = max_real_part(quartic);
  // Independent value: the roots are the primitive 5th roots of unity.
  double closed_form = std::cos(2.0 * 3.14159265358979323846 / 5.0);
  bool quartic_ok = quartic_symbolic && std::abs(m - kQuarticMaxRe) <= kQuarticTol &&
                    std::abs(closed_form - kQuarticMaxRe) <= kQuarticTol;

  std::ostringstream os;
  os << "cubic CF " << (cubic_ok ? "exact" : "MISMATCH") << ", quartic max Re " << m;
  return {cubic_ok && quartic_ok, os.str()};
}

Outcome ac4_bilinear() {
  Generator gen(0xAC4);
  int disagreements = 0;
  int banded = 0;
  int stable = 0;
  for (int i = 0; i < kBilinearCases; ++i) {
    auto d = gen.discrete_product(static_cast<int>(gen.integer(1, kMaxDegree)));
    OracleVerdict ov = is_schur_oracle(d);
    if (ov == OracleVerdict::marginal) {
      ++banded;
      continue;
    }
    auto s = schur_stable_via_bilinear(d);
    bool agree = ov == OracleVerdict::yes ? s.verdict == SchurTest::Verdict::schur_stable
                                          : s.verdict != SchurTest::Verdict::schur_stable;
    if (ov == OracleVerdict::yes) ++stable;
    if (!agree) ++disagreements;
  }
  bool fixtures = schur_stable_via_bilinear(ExactPolynomial({Rational(-1, 2), Rational(1)})).verdict ==
                      SchurTest::Verdict::schur_stable &&
                  schur_stable_via_bilinear(make_exact({-2, 1})).verdict == SchurTest::Verdict::not_schur_stable &&
                  schur_stable_via_bilinear(make_exact({1, 1})).verdict == SchurTest::Verdict::marginal;
  std::ostringstream os;
  os << kBilinearCases << " cases (" << stable << " stable), " << disagreements << " disagreements, " << banded
     << " in band; fixtures " << (fixtures ? "ok" : "WRONG");
  return {disagreements == 0 && fixtures, os.str()};
}

std::vector<std::vector<Rational>> ladder_coefficients() {
  Generator gen(0xAC5);
  std::vector<std::vector<Rational>> out;
  for (int i = 0; i < kLadderCases; ++i) {
    out.push_back(gen.positive_coefficients(static_cast<int>(gen.integer(1, kMaxCauerLength))));
  }
  return out;
}

Outcome ac5_ladder() {
  int failures = 0;
  for (const auto& c : ladder_coefficients()) {
    auto z = hurwitz::testing::continued_fraction_function(c);
    auto ladder = synthesize_lc_ladder(z);
    if (!cross_equal(ladder_to_impedance(ladder), z)) ++failures;
  }
  return {failures == 0, std::to_string(kLadderCases) + " ladders, " + std::to_string(failures) + " mismatches"};
}

Outcome ac6_theorem2() {
  int failures = 0;
  int w_violations = 0;
  double worst_boundary = INFINITY;
  double worst_w = 0.0;
  SampleConfig w_samples;
  w_samples.count = kWSamples;
  for (const auto& c : ladder_coefficients()) {
    auto z = hurwitz::testing::continued_fraction_function(c);
    auto p = add(z.num(), z.denom());
    auto t = theorem2_check(p);
    worst_boundary = std::min(worst_boundary, t.boundary_min_re);
    if (!t.premises.no_common_roots || t.boundary_min_re < kBoundaryFloor ||
        t.hurwitz_claim.classification != RouthResult::Classification::hurwitz) {
      ++failures;
    }
    auto w = to_approx(w_transform(z));
    for (const Complex& x : sample_points(w_samples)) {
      double mag = std::abs(eval(w, x));
      worst_w = std::max(worst_w, mag);
      if (mag > kWBound) ++w_violations;
    }
  }
  std::ostringstream os;
  os << kLadderCases << " polynomials, " << failures << " failures, min boundary Re " << worst_boundary
     << ", max |W| " << worst_w << " over " << kWSamples << " points each";
  return {failures == 0 && w_violations == 0, os.str()};
}

Outcome ac7_parity() {
  Generator gen(0xAC7);
  int failures = 0;
  for (int i = 0; i < kParityCases; ++i) {
    auto p = gen.any_polynomial(static_cast<int>(gen.integer(0, kMaxDegree)));
    if (add(even_part(p), odd_part(p)) != p) ++failures;
    ComplexRational jw(Rational(0), Rational(gen.integer(-1000, 1000), gen.integer(1, 97)));
    if (!eval(odd_part(p), jw).re.is_zero()) ++failures;
  }
  return {failures == 0, std::to_string(kParityCases) + " polynomials, " + std::to_string(failures) + " failures"};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("missing golden file " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Outcome ac8_golden() {
  struct Fixture {
    const char* name;
    std::vector<std::string> args;
  };
  const std::vector<Fixture> fixtures{
      {"cubic", {"--mode", "continuous", "--coeffs", "1,3,2,1"}},
      {"quartic", {"--mode", "continuous", "--coeffs", "1,1,1,1,1"}},
      {"half", {"--mode", "discrete", "--coeffs", "-1/2,1"}},
  };
  unsetenv("HURWITZ_SEED");
  int mismatches = 0;
  int compared = 0;
  for (const auto& fx : fixtures) {
    for (bool as_json : {false, true}) {
      auto args = fx.args;
      if (as_json) args.push_back("--json");
      std::ostringstream out, err;
      int status = report::cli_main(args, out, err);
      std::string golden = slurp(std::string(HURWITZ_GOLDEN_DIR) + "/" + fx.name + (as_json ? ".json" : ".txt"));
      ++compared;
      if (status != 0 || out.str() != golden) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(compared) + " golden files, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  print_outcome("AC1", "continuous agreement suite", guarded(ac1_agreement));
  print_outcome("AC2", "negative suite", guarded(ac2_negative));
  print_outcome("AC3", "worked fixtures", guarded(ac3_fixtures));
  print_outcome("AC4", "bilinear suite", guarded(ac4_bilinear));
  print_outcome("AC5", "ladder round trip", guarded(ac5_ladder));
  print_outcome("AC6", "positive-real suite", guarded(ac6_theorem2));
  print_outcome("AC7", "parity identities", guarded(ac7_parity));
  print_outcome("AC8", "CLI golden files", guarded(ac8_golden));
  std::printf("%d of 8 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
