#include "prolong/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "prolong/error.hpp"

namespace prolong {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::size_t n, std::size_t i, std::uint32_t power) {
  Monomial m(n);
  m.exps_[i] = power;
  return m;
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0U); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], o.exps_[i]);
  return r;
}

// ---------------------------------------------------------------- orders

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  auto var_at = [&](std::size_t k) { return priority.empty() ? k : priority[k]; };
  if (kind == OrderKind::Lex) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t v = var_at(k);
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t v = var_at(k);
    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
  }
  return 0;
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  static const TermOrder grevlex{};
  return grevlex.compare(a, b) > 0;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(std::size_t ambient, const BaseElem& c) {
  MultiPoly p(ambient);
  if (!c.is_zero()) p.terms_.emplace(Monomial(ambient), c);
  return p;
}

MultiPoly MultiPoly::var(std::size_t ambient, std::size_t i) {
  if (i >= ambient) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  MultiPoly p(ambient);
  p.terms_.emplace(Monomial::var(ambient, i), BaseElem(1L));
  return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const BaseElem& c) {
  MultiPoly p(m.size());
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && lead_monomial().is_one()); }

BaseElem MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial(n_));
  return it == terms_.end() ? BaseElem() : it->second;
}

unsigned MultiPoly::total_degree() const {
  // Storage order is degree-first, so the lead term has maximal degree.
  return terms_.empty() ? 0 : lead_monomial().degree();
}

unsigned MultiPoly::degree_in(std::size_t i) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return d;
}

void MultiPoly::add_term(const Monomial& m, const BaseElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

namespace {

void check_ambient(const MultiPoly& a, const MultiPoly& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorCode::ArityMismatch, "polynomials over " + std::to_string(a.ambient()) + " and " +
                                              std::to_string(b.ambient()) + " variables");
  }
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_ambient(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_ambient(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_ambient(*this, o);
  MultiPoly r(n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly MultiPoly::operator*(const BaseElem& c) const {
  if (c.is_zero()) return MultiPoly(n_);
  MultiPoly r = *this;
  for (auto& [m, coeff] : r.terms_) coeff *= c;
  return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& mono, const BaseElem& c) const {
  MultiPoly r(n_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, coeff * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(n_, BaseElem(1L));
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::partial(std::size_t i) const {
  if (i >= n_) throw Error(ErrorCode::IndexOutOfRange, "partial derivative index " + std::to_string(i));
  MultiPoly r(n_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    r.add_term(d, c * BaseElem(static_cast<long>(m[i])));
  }
  return r;
}

MultiPoly MultiPoly::coeff_derive(Field field) const {
  MultiPoly r(n_);
  if (field == Field::Q) return r;
  for (const auto& [m, c] : terms_) r.add_term(m, derive(c, field));
  return r;
}

BaseElem MultiPoly::evaluate(std::span<const BaseElem> point) const {
  if (point.size() != n_) {
    throw Error(ErrorCode::ArityMismatch,
                "point of length " + std::to_string(point.size()) + " for " + std::to_string(n_) + " variables");
  }
  std::vector<std::vector<BaseElem>> powers(n_);
  BaseElem acc;
  for (const auto& [m, c] : terms_) {
    BaseElem value = c;
    for (std::size_t i = 0; i < n_; ++i) {
      const std::uint32_t e = m[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(BaseElem(1L));
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      value *= pw[e];
    }
    acc += value;
  }
  return acc;
}

MultiPoly MultiPoly::rename(std::size_t ambient, std::span<const std::size_t> index_map) const {
  if (index_map.size() != n_) throw Error(ErrorCode::ArityMismatch, "rename map size mismatch");
  MultiPoly r(ambient);
  for (const auto& [m, c] : terms_) {
    Monomial out(ambient);
    for (std::size_t i = 0; i < n_; ++i) {
      if (index_map[i] >= ambient) throw Error(ErrorCode::IndexOutOfRange, "rename target out of range");
      out[index_map[i]] += m[i];
    }
    r.add_term(out, c);
  }
  return r;
}

MultiPoly MultiPoly::shift(std::size_t ambient, std::size_t offset) const {
  std::vector<std::size_t> map(n_);
  std::iota(map.begin(), map.end(), offset);
  return rename(ambient, map);
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || lead_coeff().is_one()) return *this;
  return *this * lead_coeff().inv();
}

std::map<unsigned, MultiPoly> MultiPoly::split(std::size_t v) const {
  std::map<unsigned, MultiPoly> out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    const unsigned e = rest[v];
    rest[v] = 0;
    auto [it, inserted] = out.try_emplace(e, MultiPoly(n_));
    it->second.add_term(rest, c);
  }
  return out;
}

std::strong_ordering MultiPoly::compare(const MultiPoly& o) const {
  if (n_ != o.n_) return n_ <=> o.n_;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  GrevlexGreater greater;
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return greater(a->first, b->first) ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = a->second.compare(b->second); c != 0) return c;
  }
  if (a == terms_.end() && b == o.terms_.end()) return std::strong_ordering::equal;
  return a == terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

MultiPoly scale(const MultiPoly& p, const BaseElem& c) { return p * c; }

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& d) {
  check_ambient(p, d);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  MultiPoly quot(p.ambient());
  MultiPoly rem = p;
  const Monomial& lm = d.lead_monomial();
  const BaseElem lc_inv = d.lead_coeff().inv();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.lead_monomial();
    if (!lm.divides(rm)) throw std::logic_error("divide_exact: divisor does not divide dividend");
    Monomial q = rm / lm;
    BaseElem c = rem.lead_coeff() * lc_inv;
    quot.add_term(q, c);
    rem -= d.mul_term(q, c);
  }
  return quot;
}

// ---------------------------------------------------------------- gcd

namespace {

MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.ambient(), BaseElem(1L)); }

int main_variable(const MultiPoly& a, const MultiPoly& b) {
  for (std::size_t v = a.ambient(); v-- > 0;) {
    if (a.involves(v) || b.involves(v)) return static_cast<int>(v);
  }
  return -1;
}

MultiPoly content_in(const MultiPoly& p, std::size_t v);

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t v) {
  const unsigned db = b.degree_in(v);
  const MultiPoly lcb = b.split(v).rbegin()->second;
  MultiPoly r = a;
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(v);
    if (dr < db) break;
    const MultiPoly lcr = r.split(v).rbegin()->second;
    const MultiPoly shift = MultiPoly::term(Monomial::var(a.ambient(), v, dr - db), BaseElem(1L));
    r = r * lcb - lcr * shift * b;
  }
  return r;
}

// Monic as well, so field coefficients stay small in the univariate case.
MultiPoly primitive_part(const MultiPoly& p, std::size_t v) { return divide_exact(p, content_in(p, v)).monic(); }

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  check_ambient(a, b);
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return one_like(a);
  const int mv = main_variable(a, b);
  const auto v = static_cast<std::size_t>(mv);
  if (!a.involves(v)) return gcd(a, content_in(b, v));
  if (!b.involves(v)) return gcd(content_in(a, v), b);

  const MultiPoly ca = content_in(a, v);
  const MultiPoly cb = content_in(b, v);
  const MultiPoly c = gcd(ca, cb);
  MultiPoly x = divide_exact(a, ca).monic();
  MultiPoly y = divide_exact(b, cb).monic();
  if (x.degree_in(v) < y.degree_in(v)) std::swap(x, y);
  while (true) {
    MultiPoly r = pseudo_remainder(x, y, v);
    if (r.is_zero()) break;
    if (!r.involves(v)) return c.monic();
    x = std::move(y);
    y = primitive_part(r, v);
  }
  return (c * primitive_part(y, v)).monic();
}

namespace {

MultiPoly content_in(const MultiPoly& p, std::size_t v) {
  MultiPoly g(p.ambient());
  for (const auto& [e, coeff] : p.split(v)) {
    g = gcd(g, coeff);
    if (g.is_constant() && !g.is_zero()) return g.monic();
  }
  return g.monic();
}

}  // namespace

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(std::size_t ambient)
    : num_(ambient), den_(MultiPoly::constant(ambient, BaseElem(1L))) {}

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.ambient(), BaseElem(1L))) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  check_ambient(num_, den_);
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::IdenticallyZeroDenominator, "denominator is the zero polynomial");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.ambient(), BaseElem(1L));
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  if (!den_.lead_coeff().is_one()) {
    const BaseElem inv = den_.lead_coeff().inv();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_polynomial() && o.is_polynomial()) return RationalFunction(num_ * o.num_);
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
  return RationalFunction(num_.pow(e), den_.pow(e));
}

RationalFunction RationalFunction::partial(std::size_t i) const {
  if (is_polynomial()) return RationalFunction(num_.partial(i));
  return RationalFunction(num_.partial(i) * den_ - num_ * den_.partial(i), den_ * den_);
}

RationalFunction RationalFunction::coeff_derive(Field field) const {
  if (is_polynomial()) return RationalFunction(num_.coeff_derive(field));
  return RationalFunction(num_.coeff_derive(field) * den_ - num_ * den_.coeff_derive(field), den_ * den_);
}

BaseElem RationalFunction::evaluate(std::span<const BaseElem> point) const {
  const BaseElem d = den_.evaluate(point);
  if (d.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes at the point");
  return num_.evaluate(point) / d;
}

bool RationalFunction::equivalent(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

}  // namespace prolong
