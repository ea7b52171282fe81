#include <doctest.h>

#include "prolong/dgroup.hpp"
#include "prolong/error.hpp"
#include "prolong/series.hpp"
#include "support.hpp"

using namespace testing;

namespace {

TruncSeries S(std::vector<long> c) {
  std::vector<Rational> q;
  for (long v : c) q.emplace_back(v);
  return TruncSeries(q);
}

AffineVariety borel_variety() { return AffineVariety("B", {"x", "y", "w"}, {P("x*w - 1", {"x", "y", "w"})}, Field::Q); }

RationalMap borel_section(const std::string& alpha, const std::string& beta) {
  return RM({"0", alpha + "*y + (" + beta + ")*(1 - x)", "0"}, {"x", "y", "w"}, Field::Q);
}

Rational factorial(unsigned k) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

}  // namespace

TEST_CASE("truncated arithmetic") {
  CHECK(S({1, 1, 0, 0}) * S({1, -1, 0, 0}) == S({1, 0, -1, 0}));
  CHECK(S({1, -1, 0, 0}).inverse() == S({1, 1, 1, 1}));
  CHECK((S({1, 2, 3}) + S({1, 1})).order() == 1);
  CHECK(S({1, 2, 3}).derivative() == S({2, 6}));
  CHECK_THROWS_AS(S({0, 1}).inverse(), Error);
  CHECK(TruncSeries::from_elem(E("1/(1 - t)"), 3) == S({1, 1, 1, 1}));
  CHECK_THROWS_AS(TruncSeries::from_elem(E("1/t"), 3), Error);
}

TEST_CASE("derivative of exp is exp truncated") {
  std::vector<Rational> c;
  for (unsigned k = 0; k <= 8; ++k) c.push_back(1 / factorial(k));
  const TruncSeries e(c);
  CHECK(e.derivative() == e.truncate(7));
}

TEST_CASE("Leibniz for truncated series") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 50; ++k) {
    std::vector<Rational> a, b;
    for (int i = 0; i <= 6; ++i) {
      a.push_back(random_rational(rng));
      b.push_back(random_rational(rng));
    }
    const TruncSeries x(a), y(b);
    CHECK((x * y).derivative() == x.derivative() * y + x * y.derivative());
  }
}

TEST_CASE("exponential") {
  const AffineVariety line("L", {"x"}, {}, Field::Q);
  const SeriesSolution sol = solve_dpoint(line, RM({"x"}, {"x"}, Field::Q), {Rational(1)}, 6);
  for (unsigned k = 0; k <= 6; ++k) CHECK(sol.point[0][k] == 1 / factorial(k));
  const SeriesSolution lin = solve_dpoint(line, RM({"3/2"}, {"x"}, Field::Q), {Rational(5)}, 4);
  CHECK(lin.point[0] == TruncSeries(std::vector<Rational>{5, Rational(3, 2), 0, 0, 0}));
}

TEST_CASE("triangular group solution") {
  const SeriesSolution sol =
      solve_dpoint(borel_variety(), borel_section("0", "1"), {Rational(2), Rational(0), Rational(1, 2)}, 5);
  CHECK(sol.point[0] == TruncSeries::constant(2, 5));
  CHECK(sol.point[1] == S({0, -1, 0, 0, 0, 0}));
  CHECK(sol.point[2] == TruncSeries::constant(Rational(1, 2), 5));
  CHECK(sol.residuals.pass);
}

TEST_CASE("solver preconditions") {
  const AffineVariety line("L", {"x"}, {}, Field::Q);
  CHECK_THROWS_AS(solve_dpoint(borel_variety(), borel_section("0", "1"), {1, 0, 2}, 3), Error);
  try {
    solve_dpoint(line, RM({"1/x"}, {"x"}, Field::Q), {Rational(0)}, 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DenominatorVanishesAtInitialPoint);
  }
  CHECK(solve_dpoint(line, RM({"1/x"}, {"x"}, Field::Q), {Rational(1)}, 3).point[0][1] == 1);
}

TEST_CASE("residuals") {
  const std::vector<std::string> xy{"x", "y"};
  const AffineVariety circle("C", xy, {P("x^2 + y^2 - 1", xy, Field::Q)}, Field::Q);
  CHECK(verify_on_variety(circle, {TruncSeries::constant(1, 3), TruncSeries::constant(0, 3)}).pass);
  const AffineVariety parabola("P", xy, {P("y - x^2", xy, Field::Q)}, Field::Q);
  const ResidualReport rep = verify_on_variety(parabola, {S({0, 1, 0}), S({0, 1, 0})});
  CHECK_FALSE(rep.pass);
  CHECK(rep.residuals[0] == S({0, 1, -1}));
}

TEST_CASE("truncation coherence and determinism") {
  const RationalMap sigma = borel_section("2", "-3");
  const std::vector<Rational> a0{Rational(3), Rational(1, 2), Rational(1, 3)};
  const SeriesSolution hi = solve_dpoint(borel_variety(), sigma, a0, 9);
  const SeriesSolution lo = solve_dpoint(borel_variety(), sigma, a0, 4);
  for (std::size_t i = 0; i < 3; ++i) CHECK(hi.point[i].truncate(4) == lo.point[i]);
  CHECK(solve_dpoint(borel_variety(), sigma, a0, 9).point == hi.point);
  CHECK(hi.residuals.pass);
}

TEST_CASE("products of solutions are solutions") {
  const RationalMap sigma = borel_section("2", "-3");
  const AffineVariety v = borel_variety();
  const std::vector<Rational> g0{Rational(2), Rational(1), Rational(1, 2)};
  const std::vector<Rational> h0{Rational(-1), Rational(3), Rational(-1)};
  const std::size_t n = 7;
  const SeriesPoint g = solve_dpoint(v, sigma, g0, n).point;
  const SeriesPoint h = solve_dpoint(v, sigma, h0, n).point;
  const SeriesPoint gh{g[0] * h[0], g[0] * h[1] + g[1], g[2] * h[2]};
  const std::vector<Rational> gh0{g0[0] * h0[0], g0[0] * h0[1] + g0[1], g0[2] * h0[2]};
  CHECK(solve_dpoint(v, sigma, gh0, n).point == gh);
}
