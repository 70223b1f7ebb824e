#include "hurwitz/stability.hpp"

#include <algorithm>
#include <cmath>

#include "hurwitz/root_oracle.hpp"

namespace hurwitz {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::hurwitz: return "hurwitz";
    case Verdict::not_hurwitz: return "not_hurwitz";
    case Verdict::marginal: return "marginal";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

const char* to_string(Orientation o) { return o == Orientation::direct ? "direct" : "reciprocal"; }

const char* to_string(ReactanceTest::Reason r) {
  using R = ReactanceTest::Reason;
  switch (r) {
    case R::none: return "none";
    case R::non_positive_coefficients: return "non_positive_coefficients";
    case R::degree_mismatch: return "degree_mismatch";
    case R::degenerate_expansion: return "degenerate_expansion";
    case R::non_positive_cf_coefficient: return "non_positive_cf_coefficient";
    case R::constant_polynomial: return "constant_polynomial";
  }
  return "?";
}

const char* to_string(RouthResult::Classification c) {
  using C = RouthResult::Classification;
  switch (c) {
    case C::hurwitz: return "hurwitz";
    case C::not_hurwitz: return "not_hurwitz";
    case C::singular: return "singular";
  }
  return "?";
}

const char* to_string(SchurTest::Verdict v) {
  using V = SchurTest::Verdict;
  switch (v) {
    case V::schur_stable: return "schur_stable";
    case V::not_schur_stable: return "not_schur_stable";
    case V::marginal: return "marginal";
  }
  return "?";
}

const char* to_string(ElementKind k) {
  return k == ElementKind::series_inductor ? "series_L" : "shunt_C";
}

bool CauerExpansion::all_positive() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& c) { return c.sign() > 0; });
}

CauerExpansion cauer_expansion(const ExactRationalFunction& z) {
  if (z.num().degree() != z.denom().degree() + 1) {
    throw OrientationError("expansion at infinity needs deg(num) = deg(denom) + 1 (got " +
                           std::to_string(z.num().degree()) + " over " +
                           std::to_string(z.denom().degree()) + "); take the reciprocal");
  }
  CauerExpansion out;
  ExactPolynomial a = z.num();
  ExactPolynomial b = z.denom();
  for (int step = 1;; ++step) {
    auto degenerate = [&] {
      out.status = CauerExpansion::Status::degenerate;
      out.degenerate_step = step;
      return out;
    };
    if (a.degree() != b.degree() + 1) return degenerate();
    auto [q, r] = divmod(a, b);
    if (q.degree() != 1 || !q[0].is_zero()) return degenerate();
    out.coefficients.push_back(q[1]);
    if (r.is_zero()) {
      if (b.degree() != 0) return degenerate();
      out.status = CauerExpansion::Status::complete;
      return out;
    }
    a = std::move(b);
    b = std::move(r);
  }
}

std::optional<Orientation> orient(const ExactRationalFunction& z) {
  if (z.num().is_zero()) return std::nullopt;
  if (z.num().degree() == z.denom().degree() + 1) return Orientation::direct;
  if (z.denom().degree() == z.num().degree() + 1) return Orientation::reciprocal;
  return std::nullopt;
}

namespace {

ExactRationalFunction oriented(const ExactRationalFunction& z, Orientation o) {
  return o == Orientation::direct ? z : reciprocal(z);
}

}  // namespace

bool is_reactance(const ExactRationalFunction& z, int n) {
  if (!is_odd(z)) throw NotApplicableError("reactance test needs a structurally odd function");
  auto o = orient(z);
  if (!o) return false;
  CauerExpansion e = cauer_expansion(oriented(z, *o));
  return e.complete() && e.all_positive() && static_cast<int>(e.coefficients.size()) == n;
}

ReactanceTest hurwitz_by_reactance(const ExactPolynomial& p) {
  using Reason = ReactanceTest::Reason;
  ReactanceTest out;
  if (p.degree() < 1) {
    out.reason = Reason::constant_polynomial;
    return out;
  }
  ExactPolynomial q = p;
  if (q.leading().sign() < 0) {
    q = negate(q);
    out.sign_normalized = true;
  }
  auto fail = [&out](Reason r) {
    out.verdict = Verdict::not_hurwitz;
    out.reason = r;
    return out;
  };
  if (!has_positive_coefficients(q)) return fail(Reason::non_positive_coefficients);

  auto z = ExactRationalFunction::make(even_part(q), odd_part(q));
  out.orientation = orient(z);
  if (!out.orientation) return fail(Reason::degree_mismatch);
  out.expansion = cauer_expansion(oriented(z, *out.orientation));
  const CauerExpansion& e = *out.expansion;
  if (!e.complete()) return fail(Reason::degenerate_expansion);
  if (!e.all_positive()) return fail(Reason::non_positive_cf_coefficient);
  if (static_cast<int>(e.coefficients.size()) != q.degree()) return fail(Reason::degree_mismatch);
  out.verdict = Verdict::hurwitz;
  return out;
}

RouthResult routh_array(const ExactPolynomial& p) {
  const int n = p.degree();
  if (n < 1) throw PreconditionError("Routh table needs degree >= 1");

  auto row_length = [n](int k) { return static_cast<std::size_t>((n - k) / 2 + 1); };
  auto coefficient_row = [&](int k) {
    std::vector<Rational> row;
    for (int power = n - k; power >= 0; power -= 2) row.push_back(p[static_cast<std::size_t>(power)]);
    return row;
  };
  auto at = [](const std::vector<Rational>& row, std::size_t j) {
    return j < row.size() ? row[j] : Rational(0);
  };

  RouthResult out;
  std::vector<Rational> prev = coefficient_row(0);
  std::vector<Rational> cur = coefficient_row(1);
  out.first_column.push_back(prev.front());

  for (int k = 1; k <= n; ++k) {
    if (k >= 2) {
      std::vector<Rational> next(row_length(k));
      for (std::size_t j = 0; j < next.size(); ++j) {
        next[j] = (cur[0] * at(prev, j + 1) - prev[0] * at(cur, j + 1)) / cur[0];
      }
      prev = std::move(cur);
      cur = std::move(next);
    }
    out.first_column.push_back(cur.front());
    if (cur.front().is_zero()) {
      out.classification = RouthResult::Classification::singular;
      out.singular_power = n - k;
      return out;
    }
  }

  const int lead_sign = p.leading().sign();
  bool same = std::all_of(out.first_column.begin(), out.first_column.end(),
                          [lead_sign](const Rational& c) { return c.sign() == lead_sign; });
  out.classification = same ? RouthResult::Classification::hurwitz
                            : RouthResult::Classification::not_hurwitz;
  return out;
}

std::vector<double> grid_omegas(const BoundaryGrid& grid) {
  std::vector<double> omegas;
  if (grid.include_zero) omegas.push_back(0.0);
  const double lo = std::log10(grid.omega_min);
  const double hi = std::log10(grid.omega_max);
  for (int k = 0; k < grid.count; ++k) {
    double t = grid.count == 1 ? 0.0 : static_cast<double>(k) / (grid.count - 1);
    omegas.push_back(std::pow(10.0, lo + t * (hi - lo)));
  }
  return omegas;
}

int gcd_degree(const ExactPolynomial& a, const ExactPolynomial& b) {
  ExactPolynomial x = a;
  ExactPolynomial y = b;
  while (!y.is_zero()) {
    ExactPolynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.degree();
}

bool share_no_roots(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.degree() < 1 || b.degree() < 1) return true;
  // Non-converged root sets are still usable here: clustering only needs
  // the roots to within kCommonRootTol.
  RootSet ra = find_roots(a);
  RootSet rb = find_roots(b);
  for (const auto& x : ra.roots) {
    for (const auto& y : rb.roots) {
      double scale = std::max({1.0, std::abs(x), std::abs(y)});
      if (std::abs(x - y) <= kCommonRootTol * scale) return gcd_degree(a, b) == 0;
    }
  }
  return true;
}

Theorem2Result theorem2_check(const ExactPolynomial& p, const BoundaryGrid& grid,
                              const SampleConfig& samples) {
  if (p.degree() < 1 || !has_positive_coefficients(p)) {
    throw PreconditionError("positive-real check needs degree >= 1 and positive coefficients");
  }
  Theorem2Result out;
  ExactPolynomial fe = even_part(p);
  ExactPolynomial fo = odd_part(p);
  auto z = ExactRationalFunction::make(fe, fo);

  out.premises.no_common_roots = share_no_roots(fe, fo);
  out.premises.positive = is_positive_sampled(z, samples);

  const Rational floor = Rational::from_double(-grid.tolerance);
  std::optional<Rational> min_re;
  for (double omega : grid_omegas(grid)) {
    ComplexRational x(Rational(0), Rational::from_double(omega));
    ComplexRational d = eval(fo, x);
    if (d.is_zero()) {
      ++out.boundary_skipped;
      continue;
    }
    ComplexRational value = eval(fe, x) / d;
    ++out.boundary_points;
    if (!min_re || value.re < *min_re) min_re = value.re;
  }
  out.boundary_min_re = min_re ? min_re->to_double() : 0.0;
  out.boundary_ok = !min_re || *min_re >= floor;
  out.hurwitz_claim = routh_array(add(fe, fo));
  return out;
}

ExactPolynomial bilinear_substitute(const ExactPolynomial& d) {
  const int m = d.degree();
  if (m < 1) throw PreconditionError("bilinear substitution needs degree >= 1");
  const ExactPolynomial plus = make_exact({1, 1});
  const ExactPolynomial minus = make_exact({1, -1});

  std::vector<ExactPolynomial> plus_pow{make_exact({1})};
  std::vector<ExactPolynomial> minus_pow{make_exact({1})};
  for (int k = 1; k <= m; ++k) {
    plus_pow.push_back(mul(plus_pow.back(), plus));
    minus_pow.push_back(mul(minus_pow.back(), minus));
  }
  ExactPolynomial out;
  for (int k = 0; k <= m; ++k) {
    const Rational& c = d.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    out = add(out, scale(mul(plus_pow[static_cast<std::size_t>(k)],
                             minus_pow[static_cast<std::size_t>(m - k)]), c));
  }
  return out;
}

SchurTest schur_stable_via_bilinear(const ExactPolynomial& d) {
  SchurTest out;
  ExactPolynomial q = bilinear_substitute(d);
  if (!q.is_zero() && q.leading().sign() < 0) q = negate(q);
  out.image = q;
  if (q.degree() < d.degree()) {
    out.verdict = SchurTest::Verdict::marginal;
    out.reason = "root at z = -1";
    return out;
  }
  out.routh = routh_array(q);
  switch (out.routh->classification) {
    case RouthResult::Classification::hurwitz:
      out.verdict = SchurTest::Verdict::schur_stable;
      break;
    case RouthResult::Classification::not_hurwitz:
      out.verdict = SchurTest::Verdict::not_schur_stable;
      out.reason = "Routh first column changes sign";
      break;
    case RouthResult::Classification::singular:
      out.verdict = SchurTest::Verdict::not_schur_stable;
      out.reason = "singular Routh row s^" + std::to_string(out.routh->singular_power);
      break;
  }
  return out;
}

LCLadder::LCLadder(std::vector<LadderElement> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].value.sign() <= 0) throw SynthesisError("ladder element values must be positive");
    if (i > 0 && elements_[i].kind == elements_[i - 1].kind) {
      throw SynthesisError("ladder elements must alternate between series L and shunt C");
    }
  }
}

LCLadder synthesize_lc_ladder(const ExactRationalFunction& z) {
  auto o = orient(z);
  if (!is_odd(z) || !o) throw SynthesisError("not a reactance function: wrong parity or degree gap");
  CauerExpansion e = cauer_expansion(oriented(z, *o));
  if (!e.complete() || !e.all_positive() ||
      static_cast<int>(e.coefficients.size()) != degree(z)) {
    throw SynthesisError("not a reactance function: Cauer expansion is not complete and positive");
  }
  std::vector<LadderElement> elements;
  ElementKind kind = *o == Orientation::direct ? ElementKind::series_inductor : ElementKind::shunt_capacitor;
  for (auto& c : e.coefficients) {
    elements.push_back({kind, std::move(c)});
    kind = kind == ElementKind::series_inductor ? ElementKind::shunt_capacitor : ElementKind::series_inductor;
  }
  return LCLadder(std::move(elements));
}

ExactRationalFunction ladder_to_impedance(const LCLadder& ladder) {
  const auto& el = ladder.elements();
  if (el.empty()) throw PreconditionError("empty ladder");
  ExactPolynomial num = ExactPolynomial::monomial(el.back().value, 1);
  ExactPolynomial den = make_exact({1});
  for (std::size_t i = el.size() - 1; i-- > 0;) {
    // c·s + den/num
    ExactPolynomial next = add(mul(ExactPolynomial::monomial(el[i].value, 1), num), den);
    den = std::move(num);
    num = std::move(next);
  }
  auto chain = ExactRationalFunction::make(std::move(num), std::move(den));
  return el.front().kind == ElementKind::series_inductor ? chain : reciprocal(chain);
}

}  // namespace hurwitz
