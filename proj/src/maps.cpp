#include "prolong/maps.hpp"

#include "prolong/error.hpp"

namespace prolong {

PolyMap PolyMap::identity(std::size_t n) {
  PolyMap m{n, {}};
  for (std::size_t i = 0; i < n; ++i) m.components.push_back(MultiPoly::var(n, i));
  return m;
}

std::vector<BaseElem> PolyMap::evaluate(std::span<const BaseElem> point) const {
  std::vector<BaseElem> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.evaluate(point));
  return out;
}

RationalMap::RationalMap(const PolyMap& p) : in_arity(p.in_arity) {
  for (const auto& c : p.components) components.emplace_back(c);
}

bool RationalMap::is_polynomial() const {
  for (const auto& c : components) {
    if (!c.is_polynomial()) return false;
  }
  return true;
}

PolyMap RationalMap::as_polynomial() const {
  PolyMap p{in_arity, {}};
  for (const auto& c : components) {
    if (!c.is_polynomial()) throw Error(ErrorCode::NotPolynomial, "map component has a non-constant denominator");
    p.components.push_back(c.num() * c.den().lead_coeff().inv());
  }
  return p;
}

RationalMap RationalMap::identity(std::size_t n) { return RationalMap(PolyMap::identity(n)); }

std::vector<BaseElem> RationalMap::evaluate(std::span<const BaseElem> point) const {
  std::vector<BaseElem> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.evaluate(point));
  return out;
}

bool RationalMap::equivalent(const RationalMap& o) const {
  if (in_arity != o.in_arity || components.size() != o.components.size()) return false;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!components[i].equivalent(o.components[i])) return false;
  }
  return true;
}

PolyMatrix jacobian(const PolyMap& f) {
  PolyMatrix jac;
  for (const auto& c : f.components) {
    std::vector<MultiPoly> row;
    for (std::size_t i = 0; i < f.in_arity; ++i) row.push_back(c.partial(i));
    jac.push_back(std::move(row));
  }
  return jac;
}

RationalMatrix jacobian(const RationalMap& f) {
  RationalMatrix jac;
  for (const auto& c : f.components) {
    std::vector<RationalFunction> row;
    for (std::size_t i = 0; i < f.in_arity; ++i) row.push_back(c.partial(i));
    jac.push_back(std::move(row));
  }
  return jac;
}

std::vector<std::vector<BaseElem>> evaluate(const PolyMatrix& m, std::span<const BaseElem> point) {
  std::vector<std::vector<BaseElem>> out;
  for (const auto& row : m) {
    std::vector<BaseElem> r;
    for (const auto& e : row) r.push_back(e.evaluate(point));
    out.push_back(std::move(r));
  }
  return out;
}

PolyMap coeff_derive(const PolyMap& f, Field field) {
  PolyMap out{f.in_arity, {}};
  for (const auto& c : f.components) out.components.push_back(c.coeff_derive(field));
  return out;
}

RationalMap coeff_derive(const RationalMap& f, Field field) {
  RationalMap out{f.in_arity, {}};
  for (const auto& c : f.components) out.components.push_back(c.coeff_derive(field));
  return out;
}

namespace {

// Cached powers A_i^e and B_i^e of the substituted fractions.
class PowerCache {
public:
  explicit PowerCache(const RationalMap& g) : g_(g), nums_(g.out_arity()), dens_(g.out_arity()) {}

  const MultiPoly& num_pow(std::size_t i, unsigned e) { return get(nums_[i], g_.components[i].num(), e); }
  const MultiPoly& den_pow(std::size_t i, unsigned e) { return get(dens_[i], g_.components[i].den(), e); }

private:
  const MultiPoly& get(std::vector<MultiPoly>& cache, const MultiPoly& base, unsigned e) {
    if (cache.empty()) cache.push_back(MultiPoly::constant(g_.in_arity, BaseElem(1L)));
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  }

  const RationalMap& g_;
  std::vector<std::vector<MultiPoly>> nums_;
  std::vector<std::vector<MultiPoly>> dens_;
};

// Sum_m c_m * Prod_i A_i^{m_i} B_i^{d_i - m_i}: the numerator of p(A/B)
// scaled by Prod_i B_i^{d_i}.
MultiPoly homogenized(const MultiPoly& p, const RationalMap& g, const std::vector<unsigned>& degs,
                      PowerCache& cache) {
  MultiPoly out(g.in_arity);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(g.in_arity, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) term = term * cache.num_pow(i, m[i]);
      if (degs[i] > m[i] && !g.components[i].is_polynomial()) term = term * cache.den_pow(i, degs[i] - m[i]);
    }
    out += term;
  }
  return out;
}

}  // namespace

RationalFunction substitute(const RationalFunction& p, const RationalMap& g) {
  if (p.ambient() != g.out_arity()) {
    throw Error(ErrorCode::ArityMismatch, "substituting " + std::to_string(g.out_arity()) + " components into " +
                                              std::to_string(p.ambient()) + " variables");
  }
  std::vector<unsigned> degs(p.ambient());
  for (std::size_t i = 0; i < degs.size(); ++i) degs[i] = std::max(p.num().degree_in(i), p.den().degree_in(i));
  PowerCache cache(g);
  MultiPoly num = homogenized(p.num(), g, degs, cache);
  MultiPoly den = homogenized(p.den(), g, degs, cache);
  if (den.is_zero()) throw Error(ErrorCode::IdenticallyZeroDenominator, "composed denominator is identically zero");
  return RationalFunction(std::move(num), std::move(den));
}

MultiPoly substitute(const MultiPoly& p, const PolyMap& g) {
  if (p.ambient() != g.out_arity()) throw Error(ErrorCode::ArityMismatch, "substitution arity mismatch");
  std::vector<std::vector<MultiPoly>> powers(g.out_arity());
  MultiPoly out(g.in_arity);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(g.in_arity, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MultiPoly::constant(g.in_arity, BaseElem(1L)));
      while (pw.size() <= m[i]) pw.push_back(pw.back() * g.components[i]);
      term = term * pw[m[i]];
    }
    out += term;
  }
  return out;
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
  if (g.out_arity() != f.in_arity) {
    throw Error(ErrorCode::ArityMismatch, "compose: inner map has " + std::to_string(g.out_arity()) +
                                              " outputs, outer map takes " + std::to_string(f.in_arity));
  }
  RationalMap out{g.in_arity, {}};
  for (const auto& c : f.components) out.components.push_back(substitute(c, g));
  return out;
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  if (g.out_arity() != f.in_arity) throw Error(ErrorCode::ArityMismatch, "compose arity mismatch");
  PolyMap out{g.in_arity, {}};
  for (const auto& c : f.components) out.components.push_back(substitute(c, g));
  return out;
}

namespace {

RationalFunction shifted(const RationalFunction& r, std::size_t ambient, std::size_t offset) {
  return RationalFunction(r.num().shift(ambient, offset), r.den().shift(ambient, offset));
}

}  // namespace

RationalMap product(const RationalMap& f, const RationalMap& g) {
  const std::size_t n = f.in_arity + g.in_arity;
  RationalMap out{n, {}};
  for (const auto& c : f.components) out.components.push_back(shifted(c, n, 0));
  for (const auto& c : g.components) out.components.push_back(shifted(c, n, f.in_arity));
  return out;
}

RationalMap concat(const RationalMap& f, const RationalMap& g) {
  if (f.in_arity != g.in_arity) throw Error(ErrorCode::ArityMismatch, "concat arity mismatch");
  RationalMap out = f;
  out.components.insert(out.components.end(), g.components.begin(), g.components.end());
  return out;
}

}  // namespace prolong
