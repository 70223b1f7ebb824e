#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>

#include "hurwitz/report.hpp"
#include "hurwitz/root_oracle.hpp"
#include "hurwitz/stability.hpp"

namespace py = pybind11;
using namespace hurwitz;

namespace {

// Coefficients arrive as int, str, or fractions.Fraction; all go through the
// exact parser via str(), so a float is taken at its shortest repr.
std::vector<Rational> to_rationals(const py::sequence& seq) {
  std::vector<Rational> out;
  for (const auto& item : seq) out.push_back(parse_rational(py::str(item).cast<std::string>()));
  return out;
}

ExactPolynomial to_poly(const py::sequence& seq) { return ExactPolynomial(to_rationals(seq)); }

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(q.to_fraction_string());
}

py::list fractions(const std::vector<Rational>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(fraction(x));
  return out;
}

py::dict routh_dict(const RouthResult& r) {
  py::dict d;
  d["first_column"] = fractions(r.first_column);
  d["classification"] = to_string(r.classification);
  d["singular_power"] = r.singular_power >= 0 ? py::object(py::int_(r.singular_power)) : py::object(py::none());
  return d;
}

ExactRationalFunction to_function(const py::sequence& num, const py::sequence& den) {
  return ExactRationalFunction::make(to_poly(num), to_poly(den));
}

py::dict analyze(const py::sequence& coeffs, const std::string& mode, std::optional<std::vector<std::string>> criteria,
                 std::uint64_t seed) {
  report::AnalysisRequest req;
  if (mode != "continuous" && mode != "discrete") throw py::value_error("mode must be 'continuous' or 'discrete'");
  req.mode = mode == "discrete" ? report::Mode::discrete : report::Mode::continuous;
  req.coefficients = to_rationals(coeffs);
  req.sample_seed = seed;
  std::vector<report::Criterion> all{report::Criterion::reactance, report::Criterion::routh,
                                     report::Criterion::theorem2, report::Criterion::oracle,
                                     report::Criterion::bilinear};
  if (!criteria) {
    req.criteria = all;
  } else {
    for (auto c : all) {
      for (const auto& name : *criteria) {
        if (name == report::to_string(c)) {
          req.criteria.push_back(c);
          break;
        }
      }
    }
    if (req.criteria.size() != std::set<std::string>(criteria->begin(), criteria->end()).size()) {
      throw py::value_error("unknown criterion name");
    }
  }
  if (req.criteria.empty()) throw py::value_error("no criterion selected");
  std::string text = report::to_json(report::run(req)).dump();
  return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hurwitz and Schur stability tests";
  m.attr("__version__") = report::kToolVersion;

  static py::exception<Error> base(m, "HurwitzError", PyExc_ValueError);
  static py::exception<IndeterminateError> indeterminate(m, "IndeterminateError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const IndeterminateError& e) {
      py::set_error(indeterminate, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("analyze", &analyze, py::arg("coeffs"), py::arg("mode") = "continuous", py::arg("criteria") = py::none(),
        py::arg("seed") = report::kDefaultSeed,
        "Full report as a dict with the same layout as the CLI's JSON output.");

  m.def("even_part", [](const py::sequence& c) { return fractions(even_part(to_poly(c)).coeffs()); });
  m.def("odd_part", [](const py::sequence& c) { return fractions(odd_part(to_poly(c)).coeffs()); });

  m.def("cauer_expansion", [](const py::sequence& num, const py::sequence& den) {
    CauerExpansion e = cauer_expansion(to_function(num, den));
    py::dict d;
    d["coefficients"] = fractions(e.coefficients);
    d["complete"] = e.complete();
    d["degenerate_step"] = e.degenerate_step;
    return d;
  });

  m.def("hurwitz_by_reactance", [](const py::sequence& c) {
    ReactanceTest t = hurwitz_by_reactance(to_poly(c));
    py::dict d;
    d["verdict"] = to_string(t.verdict);
    d["reason"] = to_string(t.reason);
    d["sign_normalized"] = t.sign_normalized;
    d["cf_coefficients"] = t.expansion ? fractions(t.expansion->coefficients) : py::list();
    return d;
  });

  m.def("routh_array", [](const py::sequence& c) { return routh_dict(routh_array(to_poly(c))); });

  m.def("theorem2_check", [](const py::sequence& c, std::uint64_t seed) {
    SampleConfig samples;
    samples.seed = seed;
    Theorem2Result t = theorem2_check(to_poly(c), {}, samples);
    py::dict d;
    d["positive_falsified"] = t.premises.positive.falsified;
    d["no_common_roots"] = t.premises.no_common_roots;
    d["boundary_ok"] = t.boundary_ok;
    d["boundary_min_re"] = t.boundary_min_re;
    d["hurwitz_claim"] = routh_dict(t.hurwitz_claim);
    return d;
  }, py::arg("coeffs"), py::arg("seed") = report::kDefaultSeed);

  m.def("find_roots", [](const py::sequence& c) {
    RootSet r = find_roots(to_poly(c));
    py::dict d;
    d["roots"] = r.roots;
    d["converged"] = r.converged;
    d["residual"] = r.residual;
    return d;
  });

  m.def("bilinear_substitute", [](const py::sequence& c) { return fractions(bilinear_substitute(to_poly(c)).coeffs()); });

  m.def("schur_stable_via_bilinear", [](const py::sequence& c) {
    SchurTest s = schur_stable_via_bilinear(to_poly(c));
    py::dict d;
    d["verdict"] = to_string(s.verdict);
    d["reason"] = s.reason;
    d["image"] = fractions(s.image.coeffs());
    return d;
  });

  m.def("synthesize_lc_ladder", [](const py::sequence& num, const py::sequence& den) {
    py::list out;
    const LCLadder ladder = synthesize_lc_ladder(to_function(num, den));
    for (const auto& e : ladder.elements()) {
      out.append(py::make_tuple(to_string(e.kind), fraction(e.value)));
    }
    return out;
  });

  m.def("ladder_to_impedance", [](const py::sequence& elements) {
    std::vector<LadderElement> parsed;
    for (const auto& item : elements) {
      auto pair = item.cast<py::tuple>();
      std::string kind = pair[0].cast<std::string>();
      ElementKind k;
      if (kind == "series_L") {
        k = ElementKind::series_inductor;
      } else if (kind == "shunt_C") {
        k = ElementKind::shunt_capacitor;
      } else {
        throw py::value_error("element kind must be 'series_L' or 'shunt_C'");
      }
      parsed.push_back({k, parse_rational(py::str(pair[1]).cast<std::string>())});
    }
    auto z = ladder_to_impedance(LCLadder(std::move(parsed)));
    return py::make_tuple(fractions(z.num().coeffs()), fractions(z.denom().coeffs()));
  });
}
