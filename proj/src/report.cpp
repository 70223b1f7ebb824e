#include "hurwitz/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hurwitz/root_oracle.hpp"

namespace hurwitz::report {

using json = nlohmann::ordered_json;

const char* to_string(Mode m) { return m == Mode::continuous ? "continuous" : "discrete"; }

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::reactance: return "reactance";
    case Criterion::routh: return "routh";
    case Criterion::theorem2: return "theorem2";
    case Criterion::oracle: return "oracle";
    case Criterion::bilinear: return "bilinear";
  }
  return "?";
}

std::string verdict_name(Verdict v, Mode m) {
  if (m == Mode::discrete) {
    if (v == Verdict::hurwitz) return "schur_stable";
    if (v == Verdict::not_hurwitz) return "not_schur_stable";
  }
  return hurwitz::to_string(v);
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

namespace {

constexpr Criterion kAllCriteria[] = {Criterion::reactance, Criterion::routh, Criterion::theorem2,
                                      Criterion::oracle, Criterion::bilinear};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<Criterion> parse_criteria(std::string_view list) {
  std::vector<Criterion> picked;
  for (const auto& name : split(list, ',')) {
    auto it = std::find_if(std::begin(kAllCriteria), std::end(kAllCriteria),
                           [&](Criterion c) { return name == to_string(c); });
    if (it == std::end(kAllCriteria)) throw UsageError("unknown criterion '" + name + "'");
    picked.push_back(*it);
  }
  std::vector<Criterion> ordered;
  for (Criterion c : kAllCriteria) {
    if (std::find(picked.begin(), picked.end(), c) != picked.end()) ordered.push_back(c);
  }
  return ordered;
}

}  // namespace

std::vector<Rational> parse_coefficients(std::string_view list) {
  if (trim(list).empty()) throw UsageError("empty coefficient list");
  std::vector<Rational> out;
  for (const auto& item : split(list, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw UsageError(std::string("bad coefficient: ") + e.what());
    }
  }
  return out;
}

AnalysisRequest parse_request(const std::vector<std::string>& args) {
  CLI::App app{"Hurwitz / Schur stability of real polynomials", "hurwitz-check"};
  std::string mode = "continuous";
  std::optional<std::string> coeffs;
  std::string criteria = "reactance,routh,theorem2,oracle,bilinear";
  std::uint64_t seed = kDefaultSeed;
  bool as_json = false;
  std::optional<std::string> batch;

  app.add_option("--mode", mode, "continuous (Hurwitz) or discrete (Schur)")
      ->check(CLI::IsMember({"continuous", "discrete"}));
  app.add_option("--coeffs", coeffs,
                 "comma-separated coefficients in ascending order, constant term first");
  app.add_option("--criteria", criteria, "subset of reactance,routh,theorem2,oracle,bilinear");
  app.add_option("--seed", seed, "seed for positivity sampling (HURWITZ_SEED overrides)");
  app.add_flag("--json", as_json, "emit JSON instead of a text table");
  app.add_option("--batch", batch, "file with one coefficient list per line; emits JSON lines");

  // CLI11 reads argv in reverse.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  AnalysisRequest req;
  req.mode = mode == "discrete" ? Mode::discrete : Mode::continuous;
  req.output = as_json ? OutputFormat::json : OutputFormat::text;
  req.criteria = parse_criteria(criteria);
  if (req.criteria.empty()) throw UsageError("no criterion selected");
  req.batch_file = batch;
  if (!batch) {
    if (!coeffs) throw UsageError("--coeffs is required (or --batch FILE)");
    req.coefficients = parse_coefficients(*coeffs);
  } else if (coeffs) {
    throw UsageError("--coeffs and --batch are mutually exclusive");
  }
  req.sample_seed = seed;
  if (const char* env = std::getenv("HURWITZ_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    errno = 0;
    unsigned long long v = std::strtoull(env, &end, 0);
    if (errno != 0 || end == env || *end != '\0') throw UsageError("HURWITZ_SEED is not an integer");
    req.sample_seed = v;
  }
  return req;
}

AnalysisRequest parse_request(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_request(args);
}

namespace {

json rationals(const std::vector<Rational>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(x.to_fraction_string());
  return arr;
}

std::string rationals_text(const std::vector<Rational>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
  return s + "]";
}

std::string num_text(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", round15(x));
  return buf;
}

// Components below rounding level relative to |z| are printed as zero.
Complex tidy(const Complex& z) {
  const double floor = 1e-14 * std::max(1.0, std::abs(z));
  return {std::abs(z.real()) <= floor ? 0.0 : z.real(), std::abs(z.imag()) <= floor ? 0.0 : z.imag()};
}

json complex_json(const Complex& raw) {
  Complex z = tidy(raw);
  return json::array({round15(z.real()), round15(z.imag())});
}

CriterionResult not_applicable(Criterion c, const std::string& reason) {
  CriterionResult r{c, Verdict::not_applicable, json::object(), "not applicable: " + reason};
  r.evidence["reason"] = reason;
  return r;
}

CriterionResult reactance_criterion(const ExactPolynomial& p) {
  if (p.degree() < 1) return not_applicable(Criterion::reactance, "constant polynomial");
  ReactanceTest t = hurwitz_by_reactance(p);
  CriterionResult r{Criterion::reactance, t.verdict, json::object(), {}};
  r.evidence["reason"] = to_string(t.reason);
  r.evidence["sign_normalized"] = t.sign_normalized;
  r.evidence["orientation"] = t.orientation ? json(to_string(*t.orientation)) : json(nullptr);
  if (t.expansion) {
    r.evidence["cf_coefficients"] = rationals(t.expansion->coefficients);
    r.evidence["expansion_status"] = t.expansion->complete() ? "complete" : "degenerate";
    r.evidence["degenerate_step"] = t.expansion->degenerate_step;
    r.summary = (t.expansion->complete() ? "complete CF " : "degenerate CF at step " +
                 std::to_string(t.expansion->degenerate_step) + " ") +
                rationals_text(t.expansion->coefficients);
  } else {
    r.evidence["cf_coefficients"] = json::array();
    r.evidence["expansion_status"] = nullptr;
    r.evidence["degenerate_step"] = 0;
    r.summary = to_string(t.reason);
  }
  if (t.verdict == Verdict::not_hurwitz && t.expansion) r.summary += " (" + std::string(to_string(t.reason)) + ")";
  return r;
}

CriterionResult routh_criterion(const ExactPolynomial& p) {
  if (p.degree() < 1) return not_applicable(Criterion::routh, "constant polynomial");
  RouthResult rr = routh_array(p);
  Verdict v = rr.classification == RouthResult::Classification::hurwitz ? Verdict::hurwitz
                                                                        : Verdict::not_hurwitz;
  CriterionResult r{Criterion::routh, v, json::object(), {}};
  r.evidence["first_column"] = rationals(rr.first_column);
  r.evidence["classification"] = to_string(rr.classification);
  r.evidence["singular_row_power"] = rr.singular_power >= 0 ? json(rr.singular_power) : json(nullptr);
  r.summary = "first column " + rationals_text(rr.first_column);
  if (rr.classification == RouthResult::Classification::singular) {
    r.summary += " singular at s^" + std::to_string(rr.singular_power);
  }
  return r;
}

CriterionResult theorem2_criterion(const ExactPolynomial& input, std::uint64_t seed) {
  if (input.degree() < 1) return not_applicable(Criterion::theorem2, "constant polynomial");
  ExactPolynomial p = input.leading().sign() < 0 ? negate(input) : input;
  if (!has_positive_coefficients(p)) {
    return not_applicable(Criterion::theorem2, "coefficients not all positive");
  }
  SampleConfig samples;
  samples.seed = seed;
  BoundaryGrid grid;
  Theorem2Result t = theorem2_check(p, grid, samples);
  Verdict v = t.hurwitz_claim.classification == RouthResult::Classification::hurwitz
                  ? Verdict::hurwitz
                  : Verdict::not_hurwitz;
  CriterionResult r{Criterion::theorem2, v, json::object(), {}};
  json positive = json::object();
  positive["result"] = t.premises.positive.falsified ? "falsified" : "not_falsified";
  positive["witness"] = t.premises.positive.witness ? complex_json(*t.premises.positive.witness) : json(nullptr);
  positive["samples"] = t.premises.positive.evaluated;
  positive["seed"] = seed;
  r.evidence["sign_normalized"] = input.leading().sign() < 0;
  r.evidence["positive"] = positive;
  r.evidence["no_common_roots"] = t.premises.no_common_roots;
  r.evidence["boundary_ok"] = t.boundary_ok;
  r.evidence["boundary_min_re"] = round15(t.boundary_min_re);
  r.evidence["boundary_points"] = t.boundary_points;
  r.evidence["boundary_skipped"] = t.boundary_skipped;
  r.evidence["hurwitz_claim"] = to_string(t.hurwitz_claim.classification);
  r.summary = std::string("positive ") + (t.premises.positive.falsified ? "falsified" : "not falsified") +
              ", common roots " + (t.premises.no_common_roots ? "none" : "found") +
              ", boundary " + (t.boundary_ok ? "ok" : "violated") + " (min Re " +
              num_text(t.boundary_min_re) + ")";
  return r;
}

CriterionResult oracle_criterion(const ExactPolynomial& p, Mode mode) {
  if (p.degree() < 1) return not_applicable(Criterion::oracle, "constant polynomial");
  RootSet roots = find_roots(p);
  if (!roots.converged) {
    throw IndeterminateError("root oracle did not converge (residual " + num_text(roots.residual) + ")");
  }
  OracleVerdict ov = mode == Mode::continuous ? classify_hurwitz(roots) : classify_schur(roots);
  Verdict v = ov == OracleVerdict::yes ? Verdict::hurwitz
              : ov == OracleVerdict::no ? Verdict::not_hurwitz
                                        : Verdict::marginal;
  CriterionResult r{Criterion::oracle, v, json::object(), {}};
  json arr = json::array();
  for (const auto& z : roots.roots) arr.push_back(complex_json(z));
  r.evidence["roots"] = arr;

  auto metric = [mode](const Complex& z) { return mode == Mode::continuous ? z.real() : std::abs(z); };
  const Complex* worst = &roots.roots.front();
  for (const auto& z : roots.roots) {
    if (metric(z) > metric(*worst)) worst = &z;
  }
  double m = metric(*worst);
  const Complex shown = tidy(*worst);
  const char* metric_name = mode == Mode::continuous ? "max_real_part" : "max_modulus";
  r.evidence[metric_name] = round15(m);
  r.evidence["witness"] = complex_json(*worst);
  r.evidence["residual"] = round15(roots.residual);
  r.evidence["converged"] = roots.converged;
  r.summary = std::string(mode == Mode::continuous ? "max Re " : "max |z| ") + num_text(m) +
              " at " + num_text(shown.real()) + (shown.imag() < 0 ? " - " : " + ") +
              num_text(std::abs(shown.imag())) + "i";
  return r;
}

CriterionResult bilinear_criterion(const ExactPolynomial& d) {
  if (d.degree() < 1) return not_applicable(Criterion::bilinear, "constant polynomial");
  SchurTest s = schur_stable_via_bilinear(d);
  Verdict v = s.verdict == SchurTest::Verdict::schur_stable       ? Verdict::hurwitz
              : s.verdict == SchurTest::Verdict::not_schur_stable ? Verdict::not_hurwitz
                                                                   : Verdict::marginal;
  CriterionResult r{Criterion::bilinear, v, json::object(), {}};
  r.evidence["image"] = rationals(s.image.coeffs());
  r.evidence["reason"] = s.reason;
  r.evidence["routh_first_column"] = s.routh ? rationals(s.routh->first_column) : json(nullptr);
  r.summary = "image " + rationals_text(s.image.coeffs()) + (s.reason.empty() ? "" : ", " + s.reason);
  return r;
}

}  // namespace

Verdict consensus(const std::vector<CriterionResult>& verdicts) {
  auto any = [&](Verdict v) {
    return std::any_of(verdicts.begin(), verdicts.end(), [v](const CriterionResult& r) { return r.verdict == v; });
  };
  auto oracle = std::find_if(verdicts.begin(), verdicts.end(),
                             [](const CriterionResult& r) { return r.criterion == Criterion::oracle; });
  if (oracle != verdicts.end() && oracle->verdict != Verdict::not_applicable) {
    if (oracle->verdict == Verdict::not_hurwitz) return Verdict::not_hurwitz;
    if (oracle->verdict == Verdict::marginal) return Verdict::marginal;
    if (any(Verdict::not_hurwitz)) return Verdict::not_hurwitz;
    if (any(Verdict::marginal)) return Verdict::marginal;
    return Verdict::hurwitz;
  }
  if (any(Verdict::marginal)) return Verdict::marginal;
  if (any(Verdict::not_hurwitz)) return Verdict::not_hurwitz;
  if (any(Verdict::hurwitz)) return Verdict::hurwitz;
  return Verdict::not_applicable;
}

StabilityReport run(const AnalysisRequest& request) {
  if (request.coefficients.empty()) throw UsageError("empty coefficient list");
  StabilityReport report;
  report.mode = request.mode;
  report.input = ExactPolynomial(request.coefficients);
  const ExactPolynomial& p = report.input;

  std::optional<ExactPolynomial> image;
  std::string image_problem;
  if (request.mode == Mode::discrete) {
    if (p.degree() >= 1) {
      image = bilinear_substitute(p);
      if (image->degree() < p.degree()) image_problem = "bilinear image lost degree (root at z = -1)";
    } else {
      image_problem = "constant polynomial";
    }
  }

  for (Criterion c : request.criteria) {
    const bool symbolic = c == Criterion::reactance || c == Criterion::routh || c == Criterion::theorem2;
    if (request.mode == Mode::discrete && symbolic && !image_problem.empty()) {
      report.verdicts.push_back(not_applicable(c, image_problem));
      continue;
    }
    const ExactPolynomial& target = request.mode == Mode::discrete && symbolic ? *image : p;
    CriterionResult r = [&]() -> CriterionResult {
      switch (c) {
        case Criterion::reactance: return reactance_criterion(target);
        case Criterion::routh: return routh_criterion(target);
        case Criterion::theorem2: return theorem2_criterion(target, request.sample_seed);
        case Criterion::oracle: return oracle_criterion(p, request.mode);
        case Criterion::bilinear:
          if (request.mode == Mode::continuous) return not_applicable(c, "continuous mode");
          return bilinear_criterion(p);
      }
      return not_applicable(c, "unknown criterion");
    }();
    if (request.mode == Mode::discrete && symbolic) {
      r.evidence["image"] = rationals(image->coeffs());
    }
    report.verdicts.push_back(std::move(r));
  }
  report.final = consensus(report.verdicts);
  return report;
}

json to_json(const StabilityReport& report) {
  json doc;
  json input;
  input["coefficients"] = rationals(report.input.coeffs());
  input["order"] = "ascending";
  input["degree"] = report.input.degree();
  doc["input"] = input;
  doc["mode"] = to_string(report.mode);
  json verdicts = json::object();
  for (const auto& r : report.verdicts) {
    json entry;
    entry["verdict"] = verdict_name(r.verdict, report.mode);
    entry["evidence"] = r.evidence;
    verdicts[to_string(r.criterion)] = entry;
  }
  doc["verdicts"] = verdicts;
  doc["final"] = verdict_name(report.final, report.mode);
  doc["tool_version"] = kToolVersion;
  return doc;
}

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string render_text(const StabilityReport& report) {
  std::ostringstream os;
  os << "hurwitz-check " << kToolVersion << "\n";
  os << "mode:   " << to_string(report.mode) << "\n";
  os << "input:  " << to_string(report.input) << "  (ascending powers, constant term first)\n";
  os << "\n";
  os << pad("criterion", 11) << pad("verdict", 18) << "detail\n";
  os << pad("---------", 11) << pad("-------", 18) << "------\n";
  for (const auto& r : report.verdicts) {
    os << pad(to_string(r.criterion), 11) << pad(verdict_name(r.verdict, report.mode), 18) << r.summary
       << "\n";
  }
  os << "\n";
  os << pad("final", 11) << verdict_name(report.final, report.mode) << "\n";
  return os.str();
}

}  // namespace

std::string render(const StabilityReport& report, OutputFormat format) {
  if (format == OutputFormat::json) return to_json(report).dump(2) + "\n";
  return render_text(report);
}

void run_batch(const AnalysisRequest& request, std::istream& in, std::ostream& out) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    AnalysisRequest one = request;
    try {
      one.coefficients = parse_coefficients(t);
    } catch (const UsageError& e) {
      throw UsageError("line " + std::to_string(lineno) + ": " + e.what());
    }
    out << to_json(run(one)).dump() << "\n";
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    AnalysisRequest req = parse_request(args);
    if (req.batch_file) {
      std::ifstream in(*req.batch_file);
      if (!in) throw UsageError("cannot open batch file '" + *req.batch_file + "'");
      run_batch(req, in, out);
    } else {
      out << render(run(req), req.output);
    }
    return 0;
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const IndeterminateError& e) {
    err << "indeterminate: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace hurwitz::report
