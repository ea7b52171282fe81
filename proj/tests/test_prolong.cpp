#include <doctest.h>

#include "prolong/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> X{"x"};
const std::vector<std::string> XU{"x", "u_x"};
const std::vector<std::string> XY{"x", "y"};

AffineVariety variety(const std::string& name, const std::vector<std::string>& vars,
                      const std::vector<std::string>& gens, Field f = Field::Qt) {
  std::vector<MultiPoly> ps;
  for (const auto& g : gens) ps.push_back(P(g, vars, f));
  return AffineVariety(name, vars, ps, f);
}

// Points of x^2 + y^2 = s^2 for s in Q(t).
Vector scaled_circle_point(const BaseElem& s, const BaseElem& r) {
  const BaseElem d = BaseElem(1) + r * r;
  return {s * (BaseElem(1) - r * r) / d, s * BaseElem(2) * r / d};
}

}  // namespace

TEST_CASE("f_del differentiates coefficients only") {
  CHECK(f_del(PM({"t*x^2"}, X), Field::Qt) == PM({"x^2"}, X));
  CHECK(f_del(PM({"3*x + 1"}, X), Field::Qt) == PM({"0"}, X));
  CHECK(f_del(PM({"t*x"}, X), Field::Q).components.size() == 1);
}

TEST_CASE("compatibility at F(x) = t*x, a = t") {
  const PolyMap f = PM({"t*x"}, X);
  const Vector a = pt("t");
  const BaseElem lhs = derive(f.evaluate(a)[0], Field::Qt);
  const BaseElem jac = evaluate(jacobian(f), a)[0][0];
  const BaseElem rhs = jac * derive(a[0], Field::Qt) + f_del(f, Field::Qt).evaluate(a)[0];
  CHECK(lhs == E("2*t"));
  CHECK(lhs == rhs);
}

TEST_CASE("tau and D of maps") {
  CHECK(tau_map(PM({"t*x"}, X), Field::Qt) == PM({"t*x", "t*u_x + x"}, XU));
  CHECK(tangent_map(PM({"t*x"}, X)) == PM({"t*x", "t*u_x"}, XU));
  CHECK(tau_map(RM({"1/x"}, X), Field::Qt) == RM({"1/x", "-u_x/x^2"}, XU));
  // over Q the two prolongations agree
  CHECK(tau_map(PM({"x^3 + 2*x"}, X, Field::Q), Field::Q) == tangent_map(PM({"x^3 + 2*x"}, X, Field::Q)));
  CHECK(tau_map(RM({"t/x"}, X), Field::Qt) == RM({"t/x", "-t*u_x/x^2 + 1/x"}, XU));
}

TEST_CASE("D chain rule on f = x^2, h = y^3") {
  const PolyMap f = PM({"x^2"}, X);
  const PolyMap h = PM({"y^3"}, {"y"});
  const PolyMap lhs = tangent_map(compose(h, f));
  CHECK(lhs == PM({"x^6", "6*x^5*u_x"}, XU));
  CHECK(lhs == compose(tangent_map(h), tangent_map(f)));
}

TEST_CASE("prolongation varieties") {
  const AffineVariety c = variety("C", XY, {"x^2 + y^2 - t"});
  const ProlongedVariety tv = tau_variety(c);
  CHECK(tv.total.vars == std::vector<std::string>{"x", "y", "u_x", "u_y"});
  REQUIRE(tv.total.gens().size() == 2);
  CHECK(format(tv.total.gens()[1], tv.total.vars) == "2*x*u_x + 2*y*u_y - 1");
  const ProlongedVariety dv = tangent_variety(c);
  CHECK(format(dv.total.gens()[1], dv.total.vars) == "2*x*u_x + 2*y*u_y");
  CHECK(tv.total.name == "tau(C)");
  CHECK(dv.total.name == "T(C)");
}

TEST_CASE("nabla") {
  const auto levels = nabla(pt("1/t"), 2, Field::Qt);
  REQUIRE(levels.size() == 3);
  CHECK(levels[0] == pt("1/t"));
  CHECK(levels[1] == pt("-1/t^2"));
  CHECK(levels[2] == pt("2/t^3"));
  CHECK(nabla(pt("3/2", Field::Q), 1, Field::Q)[1] == pt("0", Field::Q));
}

TEST_CASE("nabla lies on tau(V)") {
  const AffineVariety v = variety("S", XY, {"x^2 + y^2 - t^2"});
  std::mt19937_64 rng(7);
  for (int k = 0; k < 30; ++k) {
    Vector a = scaled_circle_point(E("t"), random_elem(rng, Field::Qt));
    CHECK(check_nabla_in_tau(v, a));
  }
  CHECK_THROWS_AS(check_nabla_in_tau(v, pt("1, 1")), Error);
  const AffineVariety hyp = variety("H", XY, {"x^2 - y^2 - t"});
  CHECK(check_nabla_in_tau(hyp, pt("(t + 1)/2, (t - 1)/2")));
}

TEST_CASE("fiber of the circle with t") {
  const AffineVariety v = variety("S", XY, {"x^2 + y^2 - t^2"}, Field::Qt);
  const Vector a = pt("t, 0");
  const AffineFiberDescription fd = fiber_solve(v, a);
  REQUIRE(fd.kernel.size() == 1);
  // 2t*u_x = 2t
  CHECK(fd.particular == pt("1, 0"));
  CHECK(fd.kernel[0][0].is_zero());
  CHECK(jacobian_rank(v, a) == 1);

  const AffineVariety w = variety("W", XY, {"x^2 + y^2 - t"});
  CHECK_THROWS_AS(fiber_solve(w, pt("1, 1")), Error);
}

TEST_CASE("fibers at singular points contain the derivative and grow") {
  const AffineVariety cusp = variety("K", XY, {"y^2 - x^3"});
  const AffineFiberDescription at_origin = fiber_solve(cusp, pt("0, 0"));
  CHECK(at_origin.kernel.size() == 2);
  CHECK(jacobian_rank(cusp, pt("0, 0")) == 0);
  const Vector a = pt("t^2, t^3");
  const AffineFiberDescription smooth = fiber_solve(cusp, a);
  CHECK(smooth.kernel.size() == 1);
  // the particular solution differs from da by a kernel multiple
  const Vector da = nabla(a, 1, Field::Qt)[1];
  const BaseElem lambda = (da[0] - smooth.particular[0]) / smooth.kernel[0][0];
  CHECK(da[1] == smooth.particular[1] + lambda * smooth.kernel[0][1]);
}

TEST_CASE("correspondence transfer on the parabola") {
  const AffineVariety l = variety("L", {"x"}, {});
  const AffineVariety r = variety("P", {"y"}, {});
  const Correspondence c{"parabola", l, r, variety("G", XY, {"y - x^2"})};
  const FiberTransfer tr = correspondence_transfer(c, pt("t"), pt("t^2"));
  CHECK(tr.linear == Matrix{pt("2*t")});
  CHECK(tr.offset == pt("0"));
  REQUIRE(tr.invertible);
  CHECK(mat_mul(*tr.inverse_linear, tr.linear) == identity_matrix(1));
  CHECK(tr.apply(pt("1")) == pt("2*t"));

  const Correspondence cq{"pq", variety("L", {"x"}, {}, Field::Q), variety("P", {"y"}, {}, Field::Q),
                          variety("G", XY, {"x^2 - y"}, Field::Q)};
  const FiberTransfer tq = correspondence_transfer(cq, pt("0", Field::Q), pt("0", Field::Q));
  CHECK_FALSE(tq.invertible);
  CHECK_THROWS_AS(correspondence_transfer(c, pt("t"), pt("t")), Error);
}

TEST_CASE("products of varieties") {
  const AffineVariety v = variety("V", X, {"x^2 - t"});
  const AffineVariety w = variety("W", {"y"}, {"y^3 - 1"});
  const AffineVariety vw = product(v, w);
  CHECK(vw.vars == XY);
  CHECK(vw.gens().size() == 2);
  CHECK_THROWS_AS(product(v, v), Error);
}

TEST_CASE("compatibility identity for random maps") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const PolyMap f = random_polymap(rng, n, 2, 3, Field::Qt);
    const Vector a = random_point(rng, n, Field::Qt);
    const Vector fa = f.evaluate(a);
    const auto jac = evaluate(jacobian(f), a);
    const Vector fd = f_del(f, Field::Qt).evaluate(a);
    for (std::size_t i = 0; i < f.out_arity(); ++i) {
      BaseElem rhs = fd[i];
      for (std::size_t j = 0; j < n; ++j) rhs += jac[i][j] * oracle_derive(a[j]);
      CHECK(oracle_derive(fa[i]) == rhs);
    }
  }
}

TEST_CASE("tau chain rule on random maps") {
  std::mt19937_64 rng(103);
  for (int k = 0; k < 30; ++k) {
    const PolyMap f = random_polymap(rng, 2, 2, 2, Field::Qt);
    const PolyMap h = random_polymap(rng, 2, 1, 2, Field::Qt);
    CHECK(tau_map(compose(h, f), Field::Qt) == compose(tau_map(h, Field::Qt), tau_map(f, Field::Qt)));
    CHECK(tangent_map(compose(h, f)) == compose(tangent_map(h), tangent_map(f)));
  }
}
