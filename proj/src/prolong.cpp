#include "prolong/prolong.hpp"

#include <algorithm>
#include <set>

#include "prolong/error.hpp"

namespace prolong {

AffineVariety::AffineVariety(std::string nm, std::vector<std::string> vs, std::vector<MultiPoly> gens, Field f)
    : name(std::move(nm)), vars(std::move(vs)), field(f) {
  ideal = IdealBasis(vars.size(), std::move(gens));
}

bool AffineVariety::contains(std::span<const BaseElem> point) const {
  if (point.size() != ambient()) {
    throw Error(ErrorCode::ArityMismatch, "point of length " + std::to_string(point.size()) + " for variety '" + name +
                                              "' in " + std::to_string(ambient()) + " variables");
  }
  return std::all_of(gens().begin(), gens().end(), [&](const MultiPoly& g) { return g.evaluate(point).is_zero(); });
}

std::string fiber_name(const std::string& var) { return "u_" + var; }

std::vector<std::string> prolonged_names(const std::vector<std::string>& vars) {
  std::vector<std::string> out = vars;
  for (const auto& v : vars) out.push_back(fiber_name(v));
  return out;
}

Vector FiberTransfer::apply(const Vector& u) const {
  Vector v = mat_vec(linear, u);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += offset[k];
  return v;
}

PolyMap f_del(const PolyMap& f, Field field) { return coeff_derive(f, field); }

RationalMap f_del(const RationalMap& f, Field field) { return coeff_derive(f, field); }

namespace {

// Sum_i dP/dx_i * u_i (+ P^del) in 2n variables.
MultiPoly linearization(const MultiPoly& p, ProlongKind kind, Field field) {
  const std::size_t n = p.ambient();
  MultiPoly out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly d = p.partial(i);
    if (d.is_zero()) continue;
    out += d.shift(2 * n, 0) * MultiPoly::var(2 * n, n + i);
  }
  if (kind == ProlongKind::Tau) out += p.coeff_derive(field).shift(2 * n, 0);
  return out;
}

RationalFunction shift(const RationalFunction& r, std::size_t ambient, std::size_t offset) {
  return RationalFunction(r.num().shift(ambient, offset), r.den().shift(ambient, offset));
}

RationalFunction linearization(const RationalFunction& r, ProlongKind kind, Field field) {
  if (r.is_polynomial()) {
    MultiPoly p = r.num() * r.den().lead_coeff().inv();
    return RationalFunction(linearization(p, kind, field));
  }
  // (sum_i (N_i D - N D_i) u_i + N^del D - N D^del) / D^2
  const std::size_t n = r.ambient();
  const MultiPoly& num = r.num();
  const MultiPoly& den = r.den();
  MultiPoly top(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly d = num.partial(i) * den - num * den.partial(i);
    if (d.is_zero()) continue;
    top += d.shift(2 * n, 0) * MultiPoly::var(2 * n, n + i);
  }
  if (kind == ProlongKind::Tau) {
    top += (num.coeff_derive(field) * den - num * den.coeff_derive(field)).shift(2 * n, 0);
  }
  return RationalFunction(std::move(top), (den * den).shift(2 * n, 0));
}

}  // namespace

PolyMap tangent_map(const PolyMap& f) {
  const std::size_t n = f.in_arity;
  PolyMap out{2 * n, {}};
  for (const auto& c : f.components) out.components.push_back(c.shift(2 * n, 0));
  for (const auto& c : f.components) out.components.push_back(linearization(c, ProlongKind::Tangent, Field::Q));
  return out;
}

PolyMap tau_map(const PolyMap& f, Field field) {
  const std::size_t n = f.in_arity;
  PolyMap out{2 * n, {}};
  for (const auto& c : f.components) out.components.push_back(c.shift(2 * n, 0));
  for (const auto& c : f.components) out.components.push_back(linearization(c, ProlongKind::Tau, field));
  return out;
}

RationalMap prolong_map(const RationalMap& f, ProlongKind kind, Field field) {
  const std::size_t n = f.in_arity;
  RationalMap out{2 * n, {}};
  for (const auto& c : f.components) out.components.push_back(shift(c, 2 * n, 0));
  for (const auto& c : f.components) out.components.push_back(linearization(c, kind, field));
  return out;
}

RationalMap tangent_map(const RationalMap& f) { return prolong_map(f, ProlongKind::Tangent, Field::Q); }

RationalMap tau_map(const RationalMap& f, Field field) { return prolong_map(f, ProlongKind::Tau, field); }

ProlongedVariety prolong_variety(const AffineVariety& v, ProlongKind kind) {
  const std::size_t n = v.ambient();
  std::vector<MultiPoly> gens;
  for (const auto& g : v.gens()) gens.push_back(g.shift(2 * n, 0));
  for (const auto& g : v.gens()) gens.push_back(linearization(g, kind, v.field));
  const std::string prefix = kind == ProlongKind::Tau ? "tau(" : "T(";
  AffineVariety total(prefix + v.name + ")", prolonged_names(v.vars), std::move(gens), v.field);
  return ProlongedVariety{v, kind, std::move(total)};
}

ProlongedVariety tangent_variety(const AffineVariety& v) { return prolong_variety(v, ProlongKind::Tangent); }

ProlongedVariety tau_variety(const AffineVariety& v) { return prolong_variety(v, ProlongKind::Tau); }

AffineVariety product(const AffineVariety& v, const AffineVariety& w) {
  if (v.field != w.field) throw Error(ErrorCode::ArityMismatch, "product of varieties over different fields");
  std::vector<std::string> vars = v.vars;
  vars.insert(vars.end(), w.vars.begin(), w.vars.end());
  if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size()) {
    throw Error(ErrorCode::ModelError, "product varieties share variable names");
  }
  const std::size_t n = vars.size();
  std::vector<MultiPoly> gens;
  for (const auto& g : v.gens()) gens.push_back(g.shift(n, 0));
  for (const auto& g : w.gens()) gens.push_back(g.shift(n, v.ambient()));
  return AffineVariety(v.name + "x" + w.name, std::move(vars), std::move(gens), v.field);
}

std::vector<Vector> nabla(const Vector& a, unsigned r, Field field) {
  std::vector<Vector> out{a};
  for (unsigned k = 0; k < r; ++k) {
    Vector next;
    next.reserve(a.size());
    for (const auto& e : out.back()) next.push_back(derive(e, field));
    out.push_back(std::move(next));
  }
  return out;
}

namespace {

void require_on_variety(const AffineVariety& v, const Vector& a) {
  if (!v.contains(a)) throw Error(ErrorCode::PointNotOnVariety, "point is not on '" + v.name + "'");
}

Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

bool check_nabla_in_tau(const AffineVariety& v, const Vector& a) {
  require_on_variety(v, a);
  const ProlongedVariety tv = tau_variety(v);
  return tv.total.contains(concat(a, nabla(a, 1, v.field)[1]));
}

std::size_t jacobian_rank(const AffineVariety& v, const Vector& a) {
  Matrix jac;
  for (const auto& g : v.gens()) {
    Vector row;
    for (std::size_t i = 0; i < v.ambient(); ++i) row.push_back(g.partial(i).evaluate(a));
    jac.push_back(std::move(row));
  }
  return rank(std::move(jac), v.ambient());
}

AffineFiberDescription fiber_solve(const AffineVariety& v, const Vector& a, ProlongKind kind) {
  require_on_variety(v, a);
  Matrix jac;
  Vector rhs;
  for (const auto& g : v.gens()) {
    Vector row;
    for (std::size_t i = 0; i < v.ambient(); ++i) row.push_back(g.partial(i).evaluate(a));
    jac.push_back(std::move(row));
    rhs.push_back(kind == ProlongKind::Tau ? -g.coeff_derive(v.field).evaluate(a) : BaseElem());
  }
  auto sol = solve_affine(jac, rhs, v.ambient());
  if (!sol) throw Error(ErrorCode::NoSolution, "fiber of '" + v.name + "' is empty at the point");
  return AffineFiberDescription{std::move(sol->particular), std::move(sol->kernel)};
}

namespace {

struct Dependence {
  bool functional = false;
  Matrix linear;
  Vector offset;
};

// Rows: dep * y + ind * x = rhs. Express y as an affine function of x.
Dependence solve_dependence(const Matrix& dep, const Matrix& ind, const Vector& rhs, std::size_t ny,
                            std::size_t nx) {
  Matrix aug;
  for (std::size_t r = 0; r < rhs.size(); ++r) {
    Vector row = dep[r];
    row.insert(row.end(), ind[r].begin(), ind[r].end());
    row.push_back(rhs[r]);
    aug.push_back(std::move(row));
  }
  const auto pivots = row_reduce(aug, ny);
  Dependence out;
  out.functional = pivots.size() == ny;
  if (!out.functional) return out;
  out.linear.assign(ny, Vector(nx));
  out.offset.assign(ny, BaseElem());
  for (std::size_t k = 0; k < ny; ++k) {
    const std::size_t y = pivots[k];
    for (std::size_t i = 0; i < nx; ++i) out.linear[y][i] = -aug[k][ny + i];
    out.offset[y] = aug[k][ny + nx];
  }
  return out;
}

}  // namespace

FiberTransfer correspondence_transfer(const Correspondence& c, const Vector& a, const Vector& b) {
  const std::size_t n1 = c.left.ambient();
  const std::size_t n2 = c.right.ambient();
  if (c.graph.ambient() != n1 + n2) throw Error(ErrorCode::ArityMismatch, "graph variables do not match left x right");
  require_on_variety(c.left, a);
  require_on_variety(c.right, b);
  const Vector ab = concat(a, b);
  require_on_variety(c.graph, ab);
  fiber_solve(c.left, a);
  fiber_solve(c.right, b);

  // Linear system of tau(graph) at (a, b), together with the fiber
  // equations of the two factors.
  Matrix left_cols;
  Matrix right_cols;
  Vector rhs;
  const Field field = c.graph.field;
  for (const auto& g : c.graph.gens()) {
    Vector lu;
    Vector rv;
    for (std::size_t i = 0; i < n1; ++i) lu.push_back(g.partial(i).evaluate(ab));
    for (std::size_t j = 0; j < n2; ++j) rv.push_back(g.partial(n1 + j).evaluate(ab));
    left_cols.push_back(std::move(lu));
    right_cols.push_back(std::move(rv));
    rhs.push_back(-g.coeff_derive(field).evaluate(ab));
  }
  for (const auto& g : c.left.gens()) {
    Vector lu;
    for (std::size_t i = 0; i < n1; ++i) lu.push_back(g.partial(i).evaluate(a));
    left_cols.push_back(std::move(lu));
    right_cols.emplace_back(n2);
    rhs.push_back(-g.coeff_derive(field).evaluate(a));
  }
  for (const auto& g : c.right.gens()) {
    Vector rv;
    for (std::size_t j = 0; j < n2; ++j) rv.push_back(g.partial(j).evaluate(b));
    left_cols.emplace_back(n1);
    right_cols.push_back(std::move(rv));
    rhs.push_back(-g.coeff_derive(field).evaluate(b));
  }

  Dependence forward = solve_dependence(right_cols, left_cols, rhs, n2, n1);
  if (!forward.functional) {
    throw Error(ErrorCode::TransferNotFunctional, "tau(graph) does not determine the right fiber from the left");
  }
  Dependence backward = solve_dependence(left_cols, right_cols, rhs, n1, n2);
  FiberTransfer out;
  out.linear = std::move(forward.linear);
  out.offset = std::move(forward.offset);
  out.invertible = backward.functional && n1 == n2;
  if (out.invertible) {
    out.inverse_linear = std::move(backward.linear);
    out.inverse_offset = std::move(backward.offset);
  }
  return out;
}

}  // namespace prolong
