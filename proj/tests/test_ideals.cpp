#include <doctest.h>

#include "prolong/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};

GroebnerBasis gb_of(const std::vector<std::string>& gens, const std::vector<std::string>& vars,
                    Field f = Field::Q, TermOrder order = {}) {
  std::vector<MultiPoly> ps;
  for (const auto& g : gens) ps.push_back(P(g, vars, f));
  return buchberger(IdealBasis(vars.size(), ps), order);
}

// Random ideal over Q with up to 3 generators of degree <= 3.
IdealBasis random_ideal(std::mt19937_64& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::vector<MultiPoly> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_poly(rng, n, 3, Field::Q, 3));
  return IdealBasis(n, gens);
}

}  // namespace

TEST_CASE("twisted cubic membership") {
  const GroebnerBasis gb = gb_of({"y - x^2", "z - x^3"}, XYZ);
  CHECK(in_ideal(P("z^2 - y^3", XYZ, Field::Q), gb));
  CHECK(in_ideal(P("x*y - z", XYZ, Field::Q), gb));
  CHECK_FALSE(in_ideal(P("z - y", XYZ, Field::Q), gb));
  CHECK(satisfies_buchberger_criterion(gb));
}

TEST_CASE("circle normal forms") {
  const std::vector<std::string> xy{"x", "y"};
  const GroebnerBasis gb = gb_of({"x^2 + y^2 - 1"}, xy);
  CHECK_FALSE(normal_form(P("x - y", xy, Field::Q), gb).is_zero());
  CHECK(normal_form(P("x^2", xy, Field::Q), gb) == P("-y^2 + 1", xy, Field::Q));
  CHECK(equal_mod_ideal(P("x^4", xy, Field::Q), P("(1 - y^2)^2", xy, Field::Q), gb));
}

TEST_CASE("unit ideal and zero ideal") {
  const std::vector<std::string> xy{"x", "y"};
  CHECK(gb_of({"x", "x - 1"}, xy).is_unit());
  CHECK(gb_of({}, xy).gens().empty());
  CHECK(normal_form(P("x + y", xy, Field::Q), gb_of({}, xy)) == P("x + y", xy, Field::Q));
}

TEST_CASE("lex basis eliminates") {
  const TermOrder lex{OrderKind::Lex, {}};
  const GroebnerBasis gb = gb_of({"x - t*y", "x^2 - y"}, {"x", "y"}, Field::Qt, lex);
  bool has_pure_y = false;
  for (const auto& g : gb.gens()) has_pure_y = has_pure_y || !g.involves(0);
  CHECK(has_pure_y);
}

TEST_CASE("degree cap") {
  const std::vector<std::string> xy{"x", "y"};
  CHECK_THROWS_AS(buchberger(IdealBasis(2, {P("x^3 - y^2", xy, Field::Q), P("x^2*y - 1", xy, Field::Q)}), {}, 2),
                  Error);
}

TEST_CASE("reduced basis does not depend on pair selection") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 20; ++k) {
    const IdealBasis ideal = random_ideal(rng);
    const GroebnerBasis a = buchberger(ideal, {}, kDefaultDegreeCap, PairStrategy::Normal);
    const GroebnerBasis b = buchberger(ideal, {}, kDefaultDegreeCap, PairStrategy::Latest);
    CHECK(a == b);
    CHECK(satisfies_buchberger_criterion(a));
    for (const auto& g : ideal.gens) CHECK(in_ideal(g, a));
  }
}

TEST_CASE("normal form is idempotent and linear") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 20; ++k) {
    const IdealBasis ideal = random_ideal(rng);
    const GroebnerBasis gb = buchberger(ideal);
    const std::size_t n = ideal.ambient;
    for (int j = 0; j < 5; ++j) {
      const MultiPoly p = random_poly(rng, n, 4, Field::Q, 5);
      const MultiPoly q = random_poly(rng, n, 4, Field::Q, 5);
      const BaseElem a = random_rational(rng);
      const BaseElem b = random_rational(rng);
      const MultiPoly np = normal_form(p, gb);
      CHECK(normal_form(np, gb) == np);
      CHECK(normal_form(p * a + q * b, gb) == np * a + normal_form(q, gb) * b);
      CHECK(in_ideal(p - np, gb));
    }
  }
}
