#pragma once

// Differential base fields: Q with the zero derivation and Q(t) with d/dt.
//
// Every base element is stored as a canonical univariate rational function
// num(t)/den(t) over Q with gcd(num, den) = 1 and den monic. Elements of Q
// are the constants of that representation.

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace prolong {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Parse "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);

enum class Field { Q, Qt };

const char* field_name(Field f);

/// Dense univariate polynomial in t over Q; coefficients low to high, no
/// trailing zeros. The zero polynomial has no coefficients.
class TPoly {
public:
  TPoly() = default;
  explicit TPoly(Rational c);
  explicit TPoly(std::vector<Rational> coeffs);

  static TPoly t();
  static TPoly monomial(Rational c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& lead() const { return coeffs_.back(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  TPoly operator-() const;
  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly operator*(const Rational& c) const;

  /// Euclidean division; divisor must be nonzero.
  void divmod(const TPoly& divisor, TPoly& quot, TPoly& rem) const;
  TPoly derivative() const;
  TPoly monic() const;
  Rational eval(const Rational& x) const;

  bool operator==(const TPoly& o) const = default;
  std::strong_ordering compare(const TPoly& o) const;

  std::string str() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
TPoly gcd(const TPoly& a, const TPoly& b);

/// An element of Q(t) in canonical form.
class RatFunc {
public:
  RatFunc();
  RatFunc(long v);  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& q);  // NOLINT(google-explicit-constructor)
  explicit RatFunc(TPoly num);
  RatFunc(TPoly num, TPoly den);

  static RatFunc t();

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Value of a constant element; only meaningful when is_constant().
  Rational constant_value() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inv() const;
  RatFunc pow(unsigned e) const;

  /// d/dt. Constants map to zero.
  RatFunc derivative() const;

  /// Sign of the leading numerator coefficient (-1, 0, 1).
  int sign() const;

  bool operator==(const RatFunc& o) const = default;
  std::strong_ordering compare(const RatFunc& o) const;

  /// Textual form accepted by the expression parser ("2/3", "t^2 + 1",
  /// "1/t^2", "(t + 1)/(t^2 - 2)").
  std::string str() const;
  /// True when str() needs parentheses to be used as a factor.
  bool needs_parens_as_factor() const;

private:
  void normalize();
  TPoly num_;
  TPoly den_;
};

using BaseElem = RatFunc;

/// The derivation of the field: zero on Q, d/dt on Q(t).
BaseElem derive(const BaseElem& a, Field field);

BaseElem field_add(const BaseElem& a, const BaseElem& b);
BaseElem field_sub(const BaseElem& a, const BaseElem& b);
BaseElem field_mul(const BaseElem& a, const BaseElem& b);
BaseElem field_div(const BaseElem& a, const BaseElem& b);
BaseElem field_neg(const BaseElem& a);
BaseElem field_inv(const BaseElem& a);

}  // namespace prolong
