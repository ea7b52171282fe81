#include "prolong/parser.hpp"

#include <algorithm>
#include <cctype>

#include "prolong/error.hpp"

namespace prolong {

namespace {

class Parser {
public:
  Parser(std::string_view src, const std::vector<std::string>& vars, Field field)
      : src_(src), vars_(vars), field_(field) {
    for (const auto& v : vars_) {
      if (v == "t") throw Error(ErrorCode::ModelError, "'t' is reserved for the field generator");
    }
  }

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    return r;
  }

private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction constant(const BaseElem& c) const {
    return RationalFunction(MultiPoly::constant(vars_.size(), c));
  }

  RationalFunction expr() {
    const bool negate = accept('-');
    RationalFunction acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction d = factor();
        if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero at offset " + std::to_string(at));
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) throw SyntaxError(pos_, "expected exponent");
      const std::string digits(src_.substr(start, pos_ - start));
      if (digits.size() > 6) throw SyntaxError(start, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  RationalFunction atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return constant(BaseElem(Rational(std::string(src_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(src_.substr(start, pos_ - start));
      if (name == "t") {
        if (field_ != Field::Qt) throw Error(ErrorCode::TInQField, "'t' used over Q at offset " + std::to_string(start));
        return constant(BaseElem::t());
      }
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        throw Error(ErrorCode::UnknownVariable, "'" + name + "' at offset " + std::to_string(start));
      }
      return RationalFunction(MultiPoly::var(vars_.size(), static_cast<std::size_t>(it - vars_.begin())));
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  Field field_;
  std::size_t pos_ = 0;
};

std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string coeff_str(const BaseElem& c) {
  std::string s = c.str();
  if (c.needs_parens_as_factor()) s = "(" + s + ")";
  return s;
}

}  // namespace

RationalFunction parse_rational(std::string_view src, const std::vector<std::string>& vars, Field field) {
  return Parser(src, vars, field).parse();
}

MultiPoly parse_poly(std::string_view src, const std::vector<std::string>& vars, Field field) {
  RationalFunction r = parse_rational(src, vars, field);
  if (!r.is_polynomial()) {
    throw Error(ErrorCode::NotPolynomial, "'" + std::string(src) + "' has a non-constant denominator");
  }
  return r.num();
}

BaseElem parse_elem(std::string_view src, Field field) {
  static const std::vector<std::string> none;
  return parse_poly(src, none, field).constant_term();
}

std::vector<BaseElem> parse_point(std::string_view src, Field field) {
  std::vector<BaseElem> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = src.find(',', start);
    out.push_back(parse_elem(src.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start),
                             field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format(const MultiPoly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, coeff] : p.terms()) {
    BaseElem c = coeff;
    const bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_str(m, vars);
    if (mono.empty()) {
      out += coeff_str(c);
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += coeff_str(c) + "*" + mono;
    }
  }
  return out;
}

std::string format(const RationalFunction& r, const std::vector<std::string>& vars) {
  if (r.is_polynomial()) return format(r.num() * r.den().lead_coeff().inv(), vars);
  std::string n = format(r.num(), vars);
  if (r.num().size() > 1) n = "(" + n + ")";
  std::string d = format(r.den(), vars);
  if (r.den().size() > 1 || d.find_first_of("*/ ") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace prolong
