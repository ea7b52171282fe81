#include "prolong/ideals.hpp"

#include <algorithm>
#include <list>
#include <set>

#include "prolong/error.hpp"

namespace prolong {

IdealBasis::IdealBasis(std::size_t amb, std::vector<MultiPoly> generators) : ambient(amb) {
  for (auto& g : generators) {
    if (g.ambient() != amb) throw Error(ErrorCode::ArityMismatch, "ideal generator in the wrong number of variables");
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
}

namespace {

OrderedPoly to_ordered(const MultiPoly& p, const TermOrder& order) {
  OrderedPoly out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const OrderedTerm& a, const OrderedTerm& b) { return order.compare(a.mono, b.mono) > 0; });
  return out;
}

MultiPoly from_ordered(const OrderedPoly& p, std::size_t ambient) {
  MultiPoly out(ambient);
  for (const auto& t : p) out.add_term(t.mono, t.coeff);
  return out;
}

unsigned degree_of(const OrderedPoly& p) {
  unsigned d = 0;
  for (const auto& t : p) d = std::max(d, t.mono.degree());
  return d;
}

// a - c * mono * b, merged in descending order.
OrderedPoly sub_scaled(const OrderedPoly& a, const BaseElem& c, const Monomial& mono, const OrderedPoly& b,
                       const TermOrder& order) {
  OrderedPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b[j].mono * mono;
    if (i == a.size()) {
      out.push_back({std::move(bm), -(c * b[j].coeff)});
      ++j;
      continue;
    }
    const int cmp = order.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), -(c * b[j].coeff)});
      ++j;
    } else {
      BaseElem v = a[i].coeff - c * b[j].coeff;
      if (!v.is_zero()) out.push_back({std::move(bm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(OrderedPoly& p) {
  if (p.empty() || p.front().coeff.is_one()) return;
  const BaseElem inv = p.front().coeff.inv();
  for (auto& t : p) t.coeff *= inv;
}

// Full reduction of p by basis (skipping index `skip`).
OrderedPoly reduce(OrderedPoly p, const std::vector<OrderedPoly>& basis, const TermOrder& order,
                   std::size_t skip = static_cast<std::size_t>(-1)) {
  OrderedPoly rem;
  while (!p.empty()) {
    const OrderedTerm& lt = p.front();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const OrderedTerm& g = basis[k].front();
      if (!g.mono.divides(lt.mono)) continue;
      const BaseElem c = lt.coeff / g.coeff;
      const Monomial q = lt.mono / g.mono;
      p = sub_scaled(p, c, q, basis[k], order);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(std::move(p.front()));
      p.erase(p.begin());
    }
  }
  return rem;
}

OrderedPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g, const TermOrder& order) {
  const Monomial l = f.front().mono.lcm(g.front().mono);
  OrderedPoly sf = sub_scaled(OrderedPoly{}, BaseElem(-1L) / f.front().coeff, l / f.front().mono, f, order);
  return sub_scaled(sf, g.front().coeff.inv(), l / g.front().mono, g, order);
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::size_t serial;
};

}  // namespace

GroebnerBasis::GroebnerBasis(std::size_t ambient, TermOrder order, std::vector<OrderedPoly> gens)
    : ambient_(ambient), order_(std::move(order)), gens_(std::move(gens)) {}

std::vector<MultiPoly> GroebnerBasis::gens() const {
  std::vector<MultiPoly> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(from_ordered(g, ambient_));
  return out;
}

bool GroebnerBasis::is_unit() const { return gens_.size() == 1 && gens_.front().front().mono.is_one(); }

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  if (ambient_ != o.ambient_ || gens_.size() != o.gens_.size()) return false;
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    const auto& a = gens_[k];
    const auto& b = o.gens_[k];
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].mono != b[i].mono || a[i].coeff != b[i].coeff) return false;
    }
  }
  return true;
}

GroebnerBasis buchberger(const IdealBasis& ideal, const TermOrder& order, unsigned degree_cap, PairStrategy strategy) {
  const std::size_t n = ideal.ambient;
  std::vector<OrderedPoly> basis;
  for (const auto& g : ideal.gens) {
    if (g.total_degree() > degree_cap) {
      throw Error(ErrorCode::DegreeCapExceeded, "generator degree " + std::to_string(g.total_degree()) +
                                                    " exceeds cap " + std::to_string(degree_cap));
    }
    OrderedPoly p = to_ordered(g, order);
    make_monic(p);
    basis.push_back(std::move(p));
  }

  std::list<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  std::size_t serial = 0;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back({i, j, basis[i].front().mono.lcm(basis[j].front().mono), serial++});
      open.emplace(i, j);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_open = [&](std::size_t a, std::size_t b) { return open.count({std::min(a, b), std::max(a, b)}) != 0; };

  while (!pending.empty()) {
    auto pick = pending.begin();
    if (strategy == PairStrategy::Normal) {
      for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
        const unsigned d = it->lcm.degree();
        const unsigned best = pick->lcm.degree();
        if (d < best || (d == best && std::tie(it->i, it->j) < std::tie(pick->i, pick->j))) pick = it;
      }
    } else {
      for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
        if (it->serial > pick->serial) pick = it;
      }
    }
    const Pair pr = *pick;
    pending.erase(pick);
    open.erase({pr.i, pr.j});

    const Monomial& li = basis[pr.i].front().mono;
    const Monomial& lj = basis[pr.j].front().mono;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      chain = basis[k].front().mono.divides(pr.lcm) && !is_open(pr.i, k) && !is_open(pr.j, k);
    }
    if (chain) continue;

    OrderedPoly s = s_polynomial(basis[pr.i], basis[pr.j], order);
    if (degree_of(s) > degree_cap) {
      throw Error(ErrorCode::DegreeCapExceeded, "S-polynomial degree exceeds cap " + std::to_string(degree_cap));
    }
    OrderedPoly h = reduce(std::move(s), basis, order);
    if (h.empty()) continue;
    if (degree_of(h) > degree_cap) {
      throw Error(ErrorCode::DegreeCapExceeded, "reduced S-polynomial degree exceeds cap " + std::to_string(degree_cap));
    }
    make_monic(h);
    if (h.front().mono.is_one()) {
      basis.assign(1, std::move(h));
      pending.clear();
      break;
    }
    basis.push_back(std::move(h));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<OrderedPoly> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
      if (l == k) continue;
      const Monomial& a = basis[l].front().mono;
      const Monomial& b = basis[k].front().mono;
      if (a.divides(b) && (a != b || l < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  // Interreduce.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    OrderedPoly head{minimal[k].front()};
    OrderedPoly tail(minimal[k].begin() + 1, minimal[k].end());
    OrderedPoly red = reduce(std::move(tail), minimal, order, k);
    head.insert(head.end(), red.begin(), red.end());
    minimal[k] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return order.compare(a.front().mono, b.front().mono) > 0;
  });
  return GroebnerBasis(n, order, std::move(minimal));
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
  if (p.ambient() != gb.ambient()) {
    throw Error(ErrorCode::ArityMismatch, "normal form of a polynomial in " + std::to_string(p.ambient()) +
                                              " variables modulo an ideal in " + std::to_string(gb.ambient()));
  }
  return from_ordered(reduce(to_ordered(p, gb.order()), gb.ordered_gens(), gb.order()), gb.ambient());
}

bool equal_mod_ideal(const MultiPoly& p, const MultiPoly& q, const GroebnerBasis& gb) {
  return normal_form(p - q, gb).is_zero();
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.ordered_gens();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!reduce(s_polynomial(g[i], g[j], gb.order()), g, gb.order()).empty()) return false;
    }
  }
  return true;
}

}  // namespace prolong
