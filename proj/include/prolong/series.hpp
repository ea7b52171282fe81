#pragma once

// Truncated power series in t over Q, and the recursive solver for
// da = sigma(a) in Q[[t]] / t^(N+1).

#include <vector>

#include "prolong/prolong.hpp"

namespace prolong {

/// Coefficients of orders 0..N. Binary operations truncate to the smaller
/// order; the derivative of an order-N series has order N-1.
class TruncSeries {
public:
  explicit TruncSeries(std::size_t order = 0);
  TruncSeries(std::vector<Rational> coeffs);  // NOLINT(google-explicit-constructor)

  static TruncSeries constant(const Rational& c, std::size_t order);
  /// Expansion of a base element at t = 0; its denominator must not vanish
  /// at 0 (NonUnitConstantTerm).
  static TruncSeries from_elem(const BaseElem& e, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  bool is_zero() const;

  TruncSeries operator-() const;
  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator*(const Rational& c) const;
  /// Requires a unit constant term in the divisor.
  TruncSeries operator/(const TruncSeries& o) const;
  TruncSeries inverse() const;

  TruncSeries derivative() const;
  TruncSeries truncate(std::size_t order) const;

  bool operator==(const TruncSeries& o) const = default;

private:
  std::vector<Rational> coeffs_;
};

using SeriesPoint = std::vector<TruncSeries>;

TruncSeries evaluate(const MultiPoly& p, const SeriesPoint& point);
TruncSeries evaluate(const RationalFunction& r, const SeriesPoint& point);

struct ResidualReport {
  /// One residual series per generator.
  std::vector<TruncSeries> residuals;
  bool pass = true;
};

ResidualReport verify_on_variety(const AffineVariety& v, const SeriesPoint& p);

struct SeriesSolution {
  SeriesPoint point;
  ResidualReport residuals;
};

/// The unique a in Q[[t]]^n with a(0) = a0 and da = sigma(a) through order N.
SeriesSolution solve_dpoint(const AffineVariety& v, const RationalMap& sigma, const std::vector<Rational>& a0,
                            std::size_t order);

}  // namespace prolong
