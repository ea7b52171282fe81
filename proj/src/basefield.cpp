#include "prolong/basefield.hpp"

#include <algorithm>
#include <utility>

#include "prolong/error.hpp"

namespace prolong {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw Error(ErrorCode::SyntaxError, "not a rational literal: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

const char* field_name(Field f) { return f == Field::Q ? "Q" : "Qt"; }

// ---------------------------------------------------------------- TPoly

TPoly::TPoly(Rational c) {
  c.canonicalize();
  if (c != 0) coeffs_.push_back(std::move(c));
}

TPoly::TPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

TPoly TPoly::t() { return monomial(1, 1); }

TPoly TPoly::monomial(Rational c, int degree) {
  TPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  c.canonicalize();
  p.coeffs_.back() = std::move(c);
  return p;
}

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational TPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TPoly TPoly::operator+(const TPoly& o) const {
  TPoly r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
    if (i < o.coeffs_.size()) r.coeffs_[i] += o.coeffs_[i];
  }
  r.trim();
  return r;
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  TPoly r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  r.trim();
  return r;
}

TPoly TPoly::operator*(const Rational& c) const {
  if (c == 0) return {};
  TPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

void TPoly::divmod(const TPoly& divisor, TPoly& quot, TPoly& rem) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  quot = TPoly();
  rem = *this;
  if (rem.degree() < divisor.degree()) return;
  quot.coeffs_.assign(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1, Rational(0));
  const int dd = divisor.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    Rational f = rem.lead() / divisor.lead();
    quot.coeffs_[static_cast<std::size_t>(shift)] = f;
    for (int k = 0; k <= dd; ++k) {
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= f * divisor.coeffs_[static_cast<std::size_t>(k)];
    }
    rem.trim();
  }
  quot.trim();
}

TPoly TPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return TPoly(std::move(d));
}

TPoly TPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / lead();
  return *this * inv;
}

Rational TPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::strong_ordering TPoly::compare(const TPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() <=> o.coeffs_.size();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

std::size_t nonzero_terms(const TPoly& p) {
  return static_cast<std::size_t>(
      std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c != 0; }));
}

}  // namespace

std::string TPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

TPoly gcd(const TPoly& a, const TPoly& b) {
  TPoly x = a;
  TPoly y = b;
  while (!y.is_zero()) {
    TPoly q;
    TPoly r;
    x.divmod(y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc() : den_(Rational(1)) {}

RatFunc::RatFunc(long v) : num_(Rational(v)), den_(Rational(1)) {}

RatFunc::RatFunc(const Rational& q) : num_(q), den_(Rational(1)) {}

RatFunc::RatFunc(TPoly num) : num_(std::move(num)), den_(Rational(1)) {}

RatFunc::RatFunc(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::t() { return RatFunc(TPoly::t()); }

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = TPoly(Rational(1));
    return;
  }
  if (den_.degree() > 0 && num_.degree() >= 0) {
    TPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      TPoly q;
      TPoly r;
      num_.divmod(g, q, r);
      num_ = std::move(q);
      den_.divmod(g, q, r);
      den_ = std::move(q);
    }
  }
  if (den_.lead() != 1) {
    Rational inv = 1 / den_.lead();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

bool RatFunc::is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.lead() == 1; }

Rational RatFunc::constant_value() const { return num_.coeff(0); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_constant() && o.is_constant()) return RatFunc(constant_value() + o.constant_value());
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (is_constant() && o.is_constant()) return RatFunc(constant_value() * o.constant_value());
  if (is_constant()) {
    RatFunc r = o;
    r.num_ = r.num_ * constant_value();
    return r;
  }
  if (o.is_constant()) {
    RatFunc r = *this;
    r.num_ = r.num_ * o.constant_value();
    return r;
  }
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_constant()) return RatFunc(Rational(1 / constant_value()));
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(unsigned e) const {
  RatFunc result(1L);
  RatFunc base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

RatFunc RatFunc::derivative() const {
  if (is_constant()) return {};
  if (den_.degree() == 0) return RatFunc(num_.derivative());
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

int RatFunc::sign() const {
  if (is_zero()) return 0;
  return sgn(num_.lead());
}

std::strong_ordering RatFunc::compare(const RatFunc& o) const {
  if (auto c = den_.compare(o.den_); c != 0) return c;
  return num_.compare(o.num_);
}

bool RatFunc::needs_parens_as_factor() const {
  return den_.degree() == 0 && nonzero_terms(num_) > 1;
}

std::string RatFunc::str() const {
  if (den_.degree() == 0) return num_.str();
  // Clear fractional numerator coefficients into the denominator: 1/(2*t).
  mpz_class l = 1;
  for (const auto& c : num_.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  const TPoly num = num_ * Rational(l);
  const TPoly den = den_ * Rational(l);
  std::string n = num.str();
  if (nonzero_terms(num) > 1) n = "(" + n + ")";
  std::string d = den.str();
  if (nonzero_terms(den) > 1 || den.lead() != 1) d = "(" + d + ")";
  return n + "/" + d;
}

BaseElem derive(const BaseElem& a, Field field) {
  if (field == Field::Q) return {};
  return a.derivative();
}

BaseElem field_add(const BaseElem& a, const BaseElem& b) { return a + b; }
BaseElem field_sub(const BaseElem& a, const BaseElem& b) { return a - b; }
BaseElem field_mul(const BaseElem& a, const BaseElem& b) { return a * b; }
BaseElem field_div(const BaseElem& a, const BaseElem& b) { return a / b; }
BaseElem field_neg(const BaseElem& a) { return -a; }
BaseElem field_inv(const BaseElem& a) { return a.inv(); }

}  // namespace prolong
