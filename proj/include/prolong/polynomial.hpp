#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "prolong/basefield.hpp"

namespace prolong {

/// Exponent vector of fixed length (the ambient variable count).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial var(std::size_t n, std::size_t i, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }

  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& o) const;

  Monomial operator*(const Monomial& o) const;
  /// Requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  bool operator==(const Monomial& o) const = default;

private:
  std::vector<std::uint32_t> exps_;
};

enum class OrderKind { Grevlex, Lex };

/// Monomial order. `priority[0]` is the most significant variable; an empty
/// priority means declaration order.
struct TermOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<std::size_t> priority;

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
};

/// Descending grevlex in declaration order; the storage order of MultiPoly.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the base field.
class MultiPoly {
public:
  using TermMap = std::map<Monomial, BaseElem, GrevlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t ambient) : n_(ambient) {}

  static MultiPoly constant(std::size_t ambient, const BaseElem& c);
  static MultiPoly var(std::size_t ambient, std::size_t i);
  static MultiPoly term(const Monomial& m, const BaseElem& c);

  std::size_t ambient() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (zero if absent).
  BaseElem constant_term() const;

  /// Leading term under storage (grevlex) order. Requires !is_zero().
  const Monomial& lead_monomial() const { return terms_.begin()->first; }
  const BaseElem& lead_coeff() const { return terms_.begin()->second; }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t i) const;
  bool involves(std::size_t i) const { return degree_in(i) > 0; }

  void add_term(const Monomial& m, const BaseElem& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const BaseElem& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly mul_term(const Monomial& m, const BaseElem& c) const;
  MultiPoly pow(unsigned e) const;

  /// Formal partial derivative with respect to variable i.
  MultiPoly partial(std::size_t i) const;
  /// Apply the field derivation to each coefficient, keeping monomials.
  MultiPoly coeff_derive(Field field) const;

  BaseElem evaluate(std::span<const BaseElem> point) const;

  /// Re-embed into `ambient` variables; variable i goes to index_map[i].
  MultiPoly rename(std::size_t ambient, std::span<const std::size_t> index_map) const;
  /// Re-embed with variable i going to i + offset.
  MultiPoly shift(std::size_t ambient, std::size_t offset) const;

  /// Monic in storage order (lead coefficient 1); zero stays zero.
  MultiPoly monic() const;

  /// Coefficients with respect to variable v, keyed by the power of v.
  std::map<unsigned, MultiPoly> split(std::size_t v) const;

  bool operator==(const MultiPoly& o) const = default;
  /// Total order used for sorting generator lists.
  std::strong_ordering compare(const MultiPoly& o) const;

private:
  std::size_t n_ = 0;
  TermMap terms_;
};

MultiPoly scale(const MultiPoly& p, const BaseElem& c);

/// Exact quotient p / d; throws std::logic_error when d does not divide p.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d);

/// Monic greatest common divisor (recursive content / primitive PRS).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Quotient of polynomials in canonical form: gcd(num, den) = 1, den monic.
class RationalFunction {
public:
  RationalFunction() = default;
  explicit RationalFunction(std::size_t ambient);
  explicit RationalFunction(MultiPoly num);
  RationalFunction(MultiPoly num, MultiPoly den);

  std::size_t ambient() const { return num_.ambient(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction pow(unsigned e) const;

  RationalFunction partial(std::size_t i) const;
  RationalFunction coeff_derive(Field field) const;

  BaseElem evaluate(std::span<const BaseElem> point) const;

  /// Cross-multiplied equality num*o.den == o.num*den.
  bool equivalent(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const = default;

private:
  void normalize();
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace prolong
