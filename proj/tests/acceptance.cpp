// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit if any fail.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>

#include "prolong/atlas.hpp"
#include "prolong/dgroup.hpp"
#include "prolong/error.hpp"
#include "prolong/series.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

AffineVariety variety(const std::string& name, const std::vector<std::string>& vars,
                      const std::vector<MultiPoly>& gens, Field f) {
  return AffineVariety(name, vars, gens, f);
}

std::vector<std::string> names(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

// 1
Outcome compatibility() {
  std::mt19937_64 rng(2024);
  int checked = 0;
  Outcome o;
  for (int k = 0; k < 240; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const PolyMap f = random_polymap(rng, n, m, 3, Field::Qt);
    const Vector a = random_point(rng, n, Field::Qt);
    const Vector fa = f.evaluate(a);
    const auto jac = evaluate(jacobian(f), a);
    const Vector fd = f_del(f, Field::Qt).evaluate(a);
    for (std::size_t i = 0; i < m; ++i) {
      BaseElem residual = oracle_derive(fa[i]) - fd[i];
      for (std::size_t j = 0; j < n; ++j) residual -= jac[i][j] * oracle_derive(a[j]);
      o.ok = o.ok && residual.is_zero();
    }
    ++checked;
  }
  o.note = std::to_string(checked) + " maps";
  return o;
}

// 2
Outcome chain_rules() {
  std::mt19937_64 rng(7);
  Outcome o;
  int pairs = 0;
  for (int k = 0; k < 110; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    const PolyMap f = random_polymap(rng, n, m, 2, Field::Qt);
    const PolyMap h = random_polymap(rng, m, 2, 2, Field::Qt);
    o.ok = o.ok && tau_map(compose(h, f), Field::Qt) == compose(tau_map(h, Field::Qt), tau_map(f, Field::Qt));
    o.ok = o.ok && tangent_map(compose(h, f)) == compose(tangent_map(h), tangent_map(f));
    ++pairs;
  }
  // rational pairs
  for (int k = 0; k < 10; ++k) {
    const RationalFunction d(random_poly(rng, 1, 1, Field::Qt, 2) + MultiPoly::var(1, 0));
    if (d.num().is_zero()) continue;
    const RationalMap f(1, {RationalFunction(random_poly(rng, 1, 2, Field::Qt, 2)) / d});
    const RationalMap h(1, {RationalFunction(MultiPoly::constant(1, random_nonzero(rng, Field::Qt))) /
                            RationalFunction(MultiPoly::var(1, 0) + MultiPoly::constant(1, E("t")))});
    RationalMap hf;
    try {
      hf = compose(h, f);
    } catch (const Error&) {
      continue;
    }
    o.ok = o.ok && tau_map(hf, Field::Qt).equivalent(compose(tau_map(h, Field::Qt), tau_map(f, Field::Qt)));
    o.ok = o.ok && tangent_map(hf).equivalent(compose(tangent_map(h), tangent_map(f)));
    ++pairs;
  }
  o.note = std::to_string(pairs) + " pairs";
  return o;
}

std::vector<MultiPoly> sorted(std::vector<MultiPoly> v) {
  std::sort(v.begin(), v.end(), [](const MultiPoly& a, const MultiPoly& b) { return a.compare(b) < 0; });
  return v;
}

// 3
Outcome products() {
  std::mt19937_64 rng(3);
  Outcome o;
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    std::vector<MultiPoly> gv{random_poly(rng, n, 3, Field::Qt)};
    std::vector<MultiPoly> gw{random_poly(rng, m, 3, Field::Qt), random_poly(rng, m, 2, Field::Qt)};
    const AffineVariety v = variety("V", names("x", n), gv, Field::Qt);
    const AffineVariety w = variety("W", names("y", m), gw, Field::Qt);
    const AffineVariety tvw = tau_variety(product(v, w)).total;
    const AffineVariety tv = tau_variety(v).total;
    const AffineVariety tw = tau_variety(w).total;
    const std::size_t total = 2 * (n + m);
    std::vector<std::size_t> mv, mw;
    for (std::size_t i = 0; i < n; ++i) mv.push_back(i);
    for (std::size_t i = 0; i < n; ++i) mv.push_back(n + m + i);
    for (std::size_t j = 0; j < m; ++j) mw.push_back(n + j);
    for (std::size_t j = 0; j < m; ++j) mw.push_back(2 * n + m + j);
    std::vector<MultiPoly> expected;
    for (const auto& g : tv.gens()) expected.push_back(g.rename(total, mv));
    for (const auto& g : tw.gens()) expected.push_back(g.rename(total, mw));
    o.ok = o.ok && sorted(expected) == sorted(tvw.gens());
    o.ok = o.ok && tvw.ambient() == total;
  }
  o.note = "20 variety pairs";
  return o;
}

// 4
Outcome naturality() {
  std::mt19937_64 rng(4);
  Outcome o;
  int count = 0;
  const std::vector<std::string> xy{"x", "y"};
  const AffineVariety circle = variety("S", xy, {P("x^2 + y^2 - t^2", xy)}, Field::Qt);
  const AffineVariety cusp = variety("K", xy, {P("y^2 - x^3", xy)}, Field::Qt);
  for (int k = 0; k < 60; ++k) {
    const BaseElem s = random_elem(rng, Field::Qt);
    Vector a;
    const AffineVariety* v = nullptr;
    if (k % 2 == 0) {
      const BaseElem d = BaseElem(1) + s * s;
      a = {E("t") * (BaseElem(1) - s * s) / d, E("t") * BaseElem(2) * s / d};
      v = &circle;
    } else {
      a = {s * s, s * s * s};
      v = &cusp;
    }
    if (!v->contains(a)) {
      o.ok = false;
      continue;
    }
    const PolyMap f = random_polymap(rng, 2, 2, 3, Field::Qt);
    const auto na = nabla(a, 1, Field::Qt);
    const Vector lhs = tau_map(f, Field::Qt).evaluate(concat(na[0], na[1]));
    const Vector fa = f.evaluate(a);
    Vector rhs = fa;
    for (const auto& c : fa) rhs.push_back(oracle_derive(c));
    o.ok = o.ok && lhs == rhs;
    ++count;
  }
  o.note = std::to_string(count) + " instances";
  return o;
}

AffineAlgGroup group(const std::string& name, const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                     const std::vector<std::string>& mult, const std::vector<std::string>& inv, const std::string& e) {
  std::vector<MultiPoly> ps;
  for (const auto& g : gens) ps.push_back(P(g, vars));
  AffineAlgGroup g;
  g.name = name;
  g.variety = AffineVariety(name, vars, ps, Field::Qt);
  g.mult_vars = doubled_names(vars);
  g.mult = RM(mult, g.mult_vars);
  g.inv = RM(inv, vars);
  g.identity = pt(e);
  return g;
}

// 5
Outcome dgroup_ledger() {
  Outcome o;
  const AffineAlgGroup ga = group("Ga", {"x"}, {}, {"x1 + x2"}, {"-x"}, "0");
  const AffineAlgGroup gm = group("Gm", {"x", "w"}, {"x*w - 1"}, {"x1*x2", "w1*w2"}, {"w", "x"}, "1, 1");
  const AffineAlgGroup b =
      group("B", {"x", "y", "w"}, {"x*w - 1"}, {"x1*x2", "x1*y2 + y1", "w1*w2"}, {"w", "-w*y", "x"}, "1, 0, 1");
  int rows = 0;
  for (const std::string c : {"0", "1", "-2", "t"}) {
    o.ok = o.ok && check_dgroup(ga, DGroupSection{"s", RM({c + "*x"}, {"x"})}).ok();
    ++rows;
  }
  for (const std::string c : {"1", "-2", "t"}) {
    const DGroupReport rep = check_dgroup(gm, DGroupSection{"s", RM({c + "*x", "-(" + c + ")*w"}, {"x", "w"})});
    const MultiPoly expected = P("(" + c + ")*x1*x2", doubled_names({"x", "w"}));
    o.ok = o.ok && rep.section_ok && !rep.homomorphism_ok && !rep.witnesses.empty() &&
           rep.witnesses[0].component == 0 && rep.witnesses[0].residue == expected;
    ++rows;
  }
  for (const auto& [alpha, beta] : std::vector<std::pair<std::string, std::string>>{{"0", "1"}, {"1", "0"}, {"2", "-3"}}) {
    o.ok = o.ok && check_dgroup(b, DGroupSection{"s", RM({"0", alpha + "*y + (" + beta + ")*(1 - x)", "0"},
                                                       {"x", "y", "w"})})
                       .ok();
    ++rows;
  }
  o.note = std::to_string(rows) + " ledger rows";
  return o;
}

// 6
Outcome tau_worked_example() {
  Outcome o;
  const std::vector<std::string> xy{"x", "y"};
  const AffineVariety c = variety("C", xy, {P("x^2 + y^2 - t", xy)}, Field::Qt);
  const AffineVariety tc = tau_variety(c).total;
  o.ok = tc.gens().size() == 2 && format(tc.gens()[1], tc.vars) == "2*x*u_x + 2*y*u_y - 1";
  // x^2 + y^2 - t has no points over Q(t) (odd t-degree on the right after
  // clearing denominators); sampled points come from t-dependent relatives
  // that do have Q(t)-points.
  std::mt19937_64 rng(6);
  const AffineVariety scaled = variety("S", xy, {P("x^2 + y^2 - t^2", xy)}, Field::Qt);
  const AffineVariety hyperbola = variety("H", xy, {P("x^2 - y^2 - t", xy)}, Field::Qt);
  int samples = 0;
  for (int k = 0; k < 20; ++k) {
    const BaseElem s = random_elem(rng, Field::Qt);
    const BaseElem d = BaseElem(1) + s * s;
    o.ok = o.ok && check_nabla_in_tau(scaled, {E("t") * (BaseElem(1) - s * s) / d, E("t") * BaseElem(2) * s / d});
    const BaseElem r = random_nonzero(rng, Field::Qt);
    // (x - y)(x + y) = t with x + y = r
    const BaseElem xm = E("t") / r;
    o.ok = o.ok && check_nabla_in_tau(hyperbola, {(r + xm) / BaseElem(2), (r - xm) / BaseElem(2)});
    o.ok = o.ok && !c.contains(random_point(rng, 2, Field::Qt));
    samples += 2;
  }
  o.note = "golden generator; " + std::to_string(samples) + " sampled points";
  return o;
}

// 7
Outcome series_oracle() {
  Outcome o;
  const AffineVariety line("L", {"x"}, {}, Field::Q);
  const SeriesSolution e = solve_dpoint(line, RM({"x"}, {"x"}, Field::Q), {Rational(1)}, 20);
  mpz_class f = 1;
  for (unsigned k = 0; k <= 20; ++k) {
    if (k > 0) f *= k;
    o.ok = o.ok && e.point[0][k] == Rational(1) / Rational(f);
  }
  const std::vector<std::string> xyw{"x", "y", "w"};
  const AffineVariety b("B", xyw, {P("x*w - 1", xyw, Field::Q)}, Field::Q);
  const SeriesSolution s =
      solve_dpoint(b, RM({"0", "1 - x", "0"}, xyw, Field::Q), {Rational(2), Rational(0), Rational(1, 2)}, 10);
  std::vector<Rational> y(11, Rational(0));
  y[1] = -1;
  o.ok = o.ok && s.point[0] == TruncSeries::constant(2, 10) && s.point[1] == TruncSeries(y) &&
         s.point[2] == TruncSeries::constant(Rational(1, 2), 10) && s.residuals.pass;
  for (const auto& r : s.residuals.residuals) o.ok = o.ok && r.is_zero();
  o.note = "1/k! for k <= 20; (2, -t, 1/2) through order 10";
  return o;
}

// 8
Outcome transfer() {
  Outcome o;
  const Correspondence c{"parabola", AffineVariety("L", {"x"}, {}, Field::Qt), AffineVariety("P", {"y"}, {}, Field::Qt),
                         AffineVariety("G", {"x", "y"}, {P("y - x^2", {"x", "y"})}, Field::Qt)};
  const FiberTransfer tr = correspondence_transfer(c, pt("t"), pt("t^2"));
  o.ok = tr.linear == Matrix{pt("2*t")} && tr.invertible;
  if (!o.ok) return o;
  o.ok = mat_mul(*tr.inverse_linear, tr.linear) == identity_matrix(1) &&
         mat_mul(tr.linear, *tr.inverse_linear) == identity_matrix(1);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    const Vector u = random_point(rng, 1, Field::Qt);
    const Vector v = tr.apply(u);
    const Vector back = mat_vec(*tr.inverse_linear, v);
    o.ok = o.ok && back[0] + (*tr.inverse_offset)[0] == u[0];
  }
  o.note = "v = 2*t*u, inverse verified";
  return o;
}

// 9
Outcome groebner() {
  Outcome o;
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<MultiPoly> gens;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_poly(rng, n, 3, Field::Q, 3));
    const IdealBasis ideal(n, gens);
    const GroebnerBasis a = buchberger(ideal, {}, kDefaultDegreeCap, PairStrategy::Normal);
    const GroebnerBasis b = buchberger(ideal, {}, kDefaultDegreeCap, PairStrategy::Latest);
    o.ok = o.ok && a == b && satisfies_buchberger_criterion(a);
    for (int j = 0; j < 5; ++j) {
      const MultiPoly p = random_poly(rng, n, 4, Field::Q, 4);
      const MultiPoly q = random_poly(rng, n, 4, Field::Q, 4);
      const BaseElem c = random_rational(rng);
      const MultiPoly np = normal_form(p, a);
      o.ok = o.ok && normal_form(np, a) == np && normal_form(p + q * c, a) == np + normal_form(q, a) * c;
    }
  }
  const std::vector<std::string> xyz{"x", "y", "z"};
  const GroebnerBasis cubic =
      buchberger(IdealBasis(3, {P("y - x^2", xyz, Field::Q), P("z - x^3", xyz, Field::Q)}));
  o.ok = o.ok && normal_form(P("z^2 - y^3", xyz, Field::Q), cubic).is_zero();
  o.note = "20 ideals, 100 normal-form pairs";
  return o;
}

// 10
Outcome atlas_suite() {
  Outcome o;
  AtlasManifold p1;
  p1.name = "P1";
  p1.dim = 1;
  p1.charts = 2;
  p1.vars = {"x"};
  p1.field = Field::Qt;
  p1.transitions.emplace(ChartPair{1, 2}, RM({"1/x"}, {"x"}));
  p1.transitions.emplace(ChartPair{2, 1}, RM({"1/x"}, {"x"}));
  o.ok = check_cocycle(p1).ok() && check_cocycle(tangent_atlas(p1).total).ok() &&
         check_cocycle(tau_atlas(p1).total).ok();
  std::mt19937_64 rng(10);
  int samples = 0;
  while (samples < 20) {
    const Vector a{random_nonzero(rng, Field::Qt)};
    const Vector u{random_elem(rng, Field::Qt)};
    const std::size_t i = 1 + samples % 2;
    const SigmaResult r = sigma_pointwise(p1, i, a, u, 3 - i);
    o.ok = o.ok && r.compatible.value_or(false);
    ++samples;
  }
  o.note = std::to_string(samples) + " sigma samples";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"compatibility identity", compatibility},
      {"chain rules for tau and D", chain_rules},
      {"product preservation", products},
      {"nabla naturality", naturality},
      {"golden D-group ledger", dgroup_ledger},
      {"tau(V) worked example", tau_worked_example},
      {"series solver oracle", series_oracle},
      {"correspondence transfer", transfer},
      {"Groebner engine", groebner},
      {"atlas suite", atlas_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2zu %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.note.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
