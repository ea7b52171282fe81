#pragma once

// Buchberger's algorithm with reduced output, normal forms and ideal
// membership. This is the certification layer for "identity holds on V".

#include <vector>

#include "prolong/polynomial.hpp"

namespace prolong {

inline constexpr unsigned kDefaultDegreeCap = 40;

struct IdealBasis {
  std::size_t ambient = 0;
  std::vector<MultiPoly> gens;

  IdealBasis() = default;
  /// Drops zero generators; all generators must live in `ambient` variables.
  IdealBasis(std::size_t ambient, std::vector<MultiPoly> generators);
};

enum class PairStrategy {
  Normal,  ///< minimal lcm degree first, ties by pair index
  Latest,  ///< most recently created pair first
};

/// A polynomial stored as terms sorted descending under a term order.
struct OrderedTerm {
  Monomial mono;
  BaseElem coeff;
};
using OrderedPoly = std::vector<OrderedTerm>;

class GroebnerBasis {
public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t ambient, TermOrder order, std::vector<OrderedPoly> gens);

  std::size_t ambient() const { return ambient_; }
  const TermOrder& order() const { return order_; }
  /// Reduced basis sorted by descending leading monomial.
  std::vector<MultiPoly> gens() const;
  const std::vector<OrderedPoly>& ordered_gens() const { return gens_; }
  bool is_unit() const;

  /// Structural equality of the reduced bases.
  bool operator==(const GroebnerBasis& o) const;

private:
  std::size_t ambient_ = 0;
  TermOrder order_;
  std::vector<OrderedPoly> gens_;
};

GroebnerBasis buchberger(const IdealBasis& ideal, const TermOrder& order = {},
                         unsigned degree_cap = kDefaultDegreeCap, PairStrategy strategy = PairStrategy::Normal);

/// Remainder of complete multivariate division by the basis.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);

bool equal_mod_ideal(const MultiPoly& p, const MultiPoly& q, const GroebnerBasis& gb);

inline bool in_ideal(const MultiPoly& p, const GroebnerBasis& gb) { return normal_form(p, gb).is_zero(); }

/// Every S-polynomial of a pair of basis elements reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

}  // namespace prolong
