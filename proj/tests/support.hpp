#pragma once

// Shorthands and hand-rolled generators shared by the test binaries.

#include <random>
#include <string>
#include <vector>

#include "prolong/parser.hpp"
#include "prolong/prolong.hpp"
#include "prolong/sampling.hpp"

namespace testing {

using namespace prolong;

inline BaseElem E(const std::string& s) { return parse_elem(s, Field::Qt); }

inline Vector pt(const std::string& s, Field f = Field::Qt) { return parse_point(s, f); }

inline MultiPoly P(const std::string& s, const std::vector<std::string>& vars, Field f = Field::Qt) {
  return parse_poly(s, vars, f);
}

inline RationalFunction R(const std::string& s, const std::vector<std::string>& vars, Field f = Field::Qt) {
  return parse_rational(s, vars, f);
}

inline RationalMap RM(const std::vector<std::string>& comps, const std::vector<std::string>& vars,
                      Field f = Field::Qt) {
  RationalMap m{vars.size(), {}};
  for (const auto& c : comps) m.components.push_back(R(c, vars, f));
  return m;
}

inline PolyMap PM(const std::vector<std::string>& comps, const std::vector<std::string>& vars, Field f = Field::Qt) {
  PolyMap m{vars.size(), {}};
  for (const auto& c : comps) m.components.push_back(P(c, vars, f));
  return m;
}

// Derivative of a base element by the quotient rule on raw coefficient
// vectors; shares no code with RatFunc::derivative.
inline BaseElem oracle_derive(const BaseElem& a) {
  auto d = [](const TPoly& p) {
    std::vector<Rational> out;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) out.push_back(p.coeffs()[k] * Rational(static_cast<long>(k)));
    return TPoly(out);
  };
  const TPoly& n = a.num();
  const TPoly& q = a.den();
  return BaseElem(d(n) * q - n * d(q), q * q);
}

// Polynomial in t of degree <= deg with small rational coefficients.
inline TPoly random_tpoly(std::mt19937_64& rng, int deg) {
  std::vector<Rational> c;
  for (int k = 0; k <= deg; ++k) c.push_back(random_rational(rng));
  return TPoly(c);
}

inline BaseElem random_coeff(std::mt19937_64& rng, Field f) {
  if (f == Field::Q) return BaseElem(random_rational(rng));
  return BaseElem(random_tpoly(rng, std::uniform_int_distribution<int>(0, 2)(rng)));
}

// Random polynomial in n variables of total degree <= deg.
inline MultiPoly random_poly(std::mt19937_64& rng, std::size_t n, unsigned deg, Field f, unsigned terms = 4) {
  MultiPoly p(n);
  std::uniform_int_distribution<unsigned> e(0, deg);
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m(n);
    unsigned budget = e(rng);
    for (std::size_t i = 0; i < n && budget > 0; ++i) {
      const unsigned take = std::uniform_int_distribution<unsigned>(0, budget)(rng);
      m = m * Monomial::var(n, i, take);
      budget -= take;
    }
    p.add_term(m, random_coeff(rng, f));
  }
  return p;
}

inline PolyMap random_polymap(std::mt19937_64& rng, std::size_t in, std::size_t out, unsigned deg, Field f) {
  PolyMap m{in, {}};
  for (std::size_t i = 0; i < out; ++i) m.components.push_back(random_poly(rng, in, deg, f));
  return m;
}

inline BaseElem random_nonzero(std::mt19937_64& rng, Field f) {
  BaseElem e;
  do e = random_elem(rng, f);
  while (e.is_zero());
  return e;
}

inline Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace testing
