#include "prolong/series.hpp"

#include <algorithm>

#include "prolong/error.hpp"

namespace prolong {

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  for (auto& c : coeffs_) c.canonicalize();
}

TruncSeries TruncSeries::constant(const Rational& c, std::size_t order) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

namespace {

TruncSeries from_tpoly(const TPoly& p, std::size_t order) {
  TruncSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) s[k] = p.coeff(static_cast<int>(k));
  return s;
}

}  // namespace

TruncSeries TruncSeries::from_elem(const BaseElem& e, std::size_t order) {
  if (e.is_polynomial()) return from_tpoly(e.num(), order);
  if (e.den().coeff(0) == 0) {
    throw Error(ErrorCode::NonUnitConstantTerm, "'" + e.str() + "' has no expansion in Q[[t]]");
  }
  return from_tpoly(e.num(), order) / from_tpoly(e.den(), order);
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] = coeffs_[k] + o.coeffs_[k];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  const std::size_t n = r.order();
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

TruncSeries TruncSeries::operator*(const Rational& c) const {
  TruncSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (coeffs_[0] == 0) throw Error(ErrorCode::NonUnitConstantTerm, "series with zero constant term is not invertible");
  TruncSeries r(order());
  const Rational inv0 = 1 / coeffs_[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= order(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return r;
}

TruncSeries TruncSeries::operator/(const TruncSeries& o) const { return *this * o.inverse(); }

TruncSeries TruncSeries::derivative() const {
  if (order() == 0) return TruncSeries(0);
  TruncSeries r(order() - 1);
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] = coeffs_[k + 1] * static_cast<long>(k + 1);
  return r;
}

TruncSeries TruncSeries::truncate(std::size_t new_order) const {
  TruncSeries r(new_order);
  for (std::size_t k = 0; k <= std::min(new_order, order()); ++k) r[k] = coeffs_[k];
  return r;
}

namespace {

std::size_t point_order(const SeriesPoint& point) {
  if (point.empty()) return 0;
  std::size_t n = point.front().order();
  for (const auto& s : point) n = std::min(n, s.order());
  return n;
}

}  // namespace

TruncSeries evaluate(const MultiPoly& p, const SeriesPoint& point) {
  if (point.size() != p.ambient()) throw Error(ErrorCode::ArityMismatch, "series point has the wrong length");
  const std::size_t order = point_order(point);
  std::vector<std::vector<TruncSeries>> powers(point.size());
  TruncSeries acc(order);
  for (const auto& [m, c] : p.terms()) {
    TruncSeries term = TruncSeries::from_elem(c, order);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(TruncSeries::constant(1, order));
      while (pw.size() <= m[i]) pw.push_back(pw.back() * point[i]);
      term = term * pw[m[i]];
    }
    acc = acc + term;
  }
  return acc;
}

TruncSeries evaluate(const RationalFunction& r, const SeriesPoint& point) {
  TruncSeries num = evaluate(r.num(), point);
  if (r.is_polynomial()) return num * TruncSeries::from_elem(r.den().lead_coeff().inv(), num.order());
  return num / evaluate(r.den(), point);
}

ResidualReport verify_on_variety(const AffineVariety& v, const SeriesPoint& p) {
  ResidualReport report;
  for (const auto& g : v.gens()) {
    TruncSeries r = evaluate(g, p);
    report.pass = report.pass && r.is_zero();
    report.residuals.push_back(std::move(r));
  }
  return report;
}

SeriesSolution solve_dpoint(const AffineVariety& v, const RationalMap& sigma, const std::vector<Rational>& a0,
                            std::size_t order) {
  const std::size_t n = v.ambient();
  if (sigma.in_arity != n || sigma.out_arity() != n || a0.size() != n) {
    throw Error(ErrorCode::ArityMismatch, "section and initial point must match the variety's " + std::to_string(n) +
                                              " variables");
  }
  Vector start;
  for (const auto& q : a0) start.emplace_back(q);
  if (!v.contains(start)) throw Error(ErrorCode::PointNotOnVariety, "initial point is not on '" + v.name + "'");

  SeriesPoint a;
  for (const auto& q : a0) a.push_back(TruncSeries::constant(q, order));

  SeriesPoint at_zero;
  for (const auto& q : a0) at_zero.push_back(TruncSeries::constant(q, 0));
  for (const auto& c : sigma.components) {
    if (evaluate(c.den(), at_zero)[0] == 0) {
      throw Error(ErrorCode::DenominatorVanishesAtInitialPoint, "a section denominator vanishes at the initial point");
    }
  }

  // coeff_{k+1}(a_i) = coeff_k(sigma_i(a)) / (k + 1); coefficient k of
  // sigma(a) only involves coefficients 0..k of a.
  for (std::size_t k = 0; k < order; ++k) {
    SeriesPoint head;
    for (const auto& s : a) head.push_back(s.truncate(k));
    for (std::size_t i = 0; i < n; ++i) {
      const TruncSeries s = evaluate(sigma.components[i], head);
      a[i][k + 1] = s[k] / Rational(static_cast<long>(k + 1));
    }
  }
  SeriesSolution out{a, verify_on_variety(v, a)};
  return out;
}

}  // namespace prolong
