#pragma once

#include <vector>

#include "prolong/polynomial.hpp"

namespace prolong {

/// Polynomial map K^n -> K^m.
struct PolyMap {
  std::size_t in_arity = 0;
  std::vector<MultiPoly> components;

  std::size_t out_arity() const { return components.size(); }

  static PolyMap identity(std::size_t n);

  std::vector<BaseElem> evaluate(std::span<const BaseElem> point) const;
  bool operator==(const PolyMap& o) const = default;
};

/// Rational map K^n -> K^m; each component is a reduced fraction.
struct RationalMap {
  std::size_t in_arity = 0;
  std::vector<RationalFunction> components;

  RationalMap() = default;
  RationalMap(std::size_t in, std::vector<RationalFunction> comps) : in_arity(in), components(std::move(comps)) {}
  explicit RationalMap(const PolyMap& p);

  std::size_t out_arity() const { return components.size(); }
  bool is_polynomial() const;
  /// Requires is_polynomial().
  PolyMap as_polynomial() const;

  static RationalMap identity(std::size_t n);

  std::vector<BaseElem> evaluate(std::span<const BaseElem> point) const;
  /// Componentwise cross-multiplied equality.
  bool equivalent(const RationalMap& o) const;
  bool operator==(const RationalMap& o) const = default;
};

using PolyMatrix = std::vector<std::vector<MultiPoly>>;
using RationalMatrix = std::vector<std::vector<RationalFunction>>;

/// m x n matrix with entry (j, i) = dF_j / dx_i.
PolyMatrix jacobian(const PolyMap& f);
RationalMatrix jacobian(const RationalMap& f);

/// Evaluate a polynomial matrix at a point.
std::vector<std::vector<BaseElem>> evaluate(const PolyMatrix& m, std::span<const BaseElem> point);

/// Coefficient derivation applied componentwise.
PolyMap coeff_derive(const PolyMap& f, Field field);
RationalMap coeff_derive(const RationalMap& f, Field field);

/// f o g (g applied first). Requires out_arity(g) == in_arity(f).
RationalMap compose(const RationalMap& f, const RationalMap& g);
PolyMap compose(const PolyMap& f, const PolyMap& g);

/// Substitute the components of g for the variables of p.
RationalFunction substitute(const RationalFunction& p, const RationalMap& g);
MultiPoly substitute(const MultiPoly& p, const PolyMap& g);

/// Cartesian product map (x, y) -> (f(x), g(y)).
RationalMap product(const RationalMap& f, const RationalMap& g);

/// Concatenate outputs: x -> (f(x), g(x)).
RationalMap concat(const RationalMap& f, const RationalMap& g);

}  // namespace prolong
