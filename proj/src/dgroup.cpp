#include "prolong/dgroup.hpp"

#include "prolong/error.hpp"

namespace prolong {

std::vector<std::string> doubled_names(const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back(v + "1");
  for (const auto& v : vars) out.push_back(v + "2");
  return out;
}

namespace {

GroebnerBasis copies_gb(const AffineVariety& v, std::size_t copies, unsigned cap) {
  const std::size_t n = v.ambient();
  std::vector<MultiPoly> gens;
  for (std::size_t c = 0; c < copies; ++c) {
    for (const auto& g : v.gens()) gens.push_back(g.shift(n * copies, c * n));
  }
  return buchberger(IdealBasis(n * copies, std::move(gens)), TermOrder{}, cap);
}

// Projection of (K^n)^copies onto copy c.
RationalMap projection(std::size_t n, std::size_t copies, std::size_t c) {
  RationalMap out{n * copies, {}};
  for (std::size_t i = 0; i < n; ++i) out.components.emplace_back(MultiPoly::var(n * copies, c * n + i));
  return out;
}

RationalMap constant_map(std::size_t in, const Vector& value) {
  RationalMap out{in, {}};
  for (const auto& e : value) out.components.emplace_back(MultiPoly::constant(in, e));
  return out;
}

std::vector<std::string> copy_names(const std::vector<std::string>& vars, std::size_t copies) {
  if (copies == 1) return vars;
  std::vector<std::string> out;
  for (std::size_t c = 1; c <= copies; ++c) {
    for (const auto& v : vars) out.push_back(v + std::to_string(c));
  }
  return out;
}

// Compares lhs and rhs modulo the ideal after clearing denominators; on
// failure records NF(rhs - lhs) as the witness.
bool same_on(const RationalFunction& lhs, const RationalFunction& rhs, const GroebnerBasis& gb,
             const std::string& condition, std::size_t component, const std::vector<std::string>& vars,
             std::vector<Witness>& witnesses) {
  const bool indeterminate = in_ideal(lhs.den(), gb) || in_ideal(rhs.den(), gb);
  if (indeterminate) {
    witnesses.push_back({condition, component, MultiPoly(gb.ambient()), vars, true});
    return false;
  }
  MultiPoly residue = normal_form(rhs.num() * lhs.den() - lhs.num() * rhs.den(), gb);
  if (residue.is_zero()) return true;
  witnesses.push_back({condition, component, std::move(residue), vars, false});
  return false;
}

bool same_maps_on(const RationalMap& lhs, const RationalMap& rhs, const GroebnerBasis& gb,
                  const std::string& condition, const std::vector<std::string>& vars,
                  std::vector<Witness>& witnesses) {
  bool ok = true;
  for (std::size_t k = 0; k < lhs.out_arity(); ++k) {
    ok = same_on(lhs.components[k], rhs.components[k], gb, condition, k, vars, witnesses) && ok;
  }
  return ok;
}

bool lands_in(const RationalMap& f, const AffineVariety& v, const GroebnerBasis& gb, const std::string& condition,
              const std::vector<std::string>& vars, std::vector<Witness>& witnesses) {
  bool ok = true;
  const RationalFunction zero(f.in_arity);
  for (std::size_t k = 0; k < v.gens().size(); ++k) {
    RationalFunction image = substitute(RationalFunction(v.gens()[k]), f);
    ok = same_on(image, zero, gb, condition, k, vars, witnesses) && ok;
  }
  return ok;
}

void check_shapes(const AffineAlgGroup& g) {
  const std::size_t n = g.dim();
  if (g.mult.in_arity != 2 * n || g.mult.out_arity() != n) {
    throw Error(ErrorCode::ArityMismatch, "group '" + g.name + "': product must map 2n to n variables");
  }
  if (g.inv.in_arity != n || g.inv.out_arity() != n) {
    throw Error(ErrorCode::ArityMismatch, "group '" + g.name + "': inverse must map n to n variables");
  }
  if (g.identity.size() != n) throw Error(ErrorCode::ArityMismatch, "group '" + g.name + "': identity has wrong length");
}

}  // namespace

GroupAxiomReport check_group_axioms(const AffineAlgGroup& g, unsigned degree_cap) {
  check_shapes(g);
  const std::size_t n = g.dim();
  const auto& vars = g.variety.vars;
  GroupAxiomReport report;
  report.identity_on_variety = g.variety.contains(g.identity);

  const GroebnerBasis gb1 = copies_gb(g.variety, 1, degree_cap);
  const GroebnerBasis gb2 = copies_gb(g.variety, 2, degree_cap);
  const GroebnerBasis gb3 = copies_gb(g.variety, 3, degree_cap);

  report.closure = lands_in(g.mult, g.variety, gb2, "closure(mult)", copy_names(vars, 2), report.witnesses);
  report.closure = lands_in(g.inv, g.variety, gb1, "closure(inv)", vars, report.witnesses) && report.closure;

  const RationalMap x3 = projection(n, 3, 0);
  const RationalMap y3 = projection(n, 3, 1);
  const RationalMap z3 = projection(n, 3, 2);
  const RationalMap left = compose(g.mult, concat(compose(g.mult, concat(x3, y3)), z3));
  const RationalMap right = compose(g.mult, concat(x3, compose(g.mult, concat(y3, z3))));
  report.associativity = same_maps_on(left, right, gb3, "associativity", copy_names(vars, 3), report.witnesses);

  const RationalMap id = RationalMap::identity(n);
  const RationalMap e = constant_map(n, g.identity);
  report.identity = same_maps_on(compose(g.mult, concat(e, id)), id, gb1, "left identity", vars, report.witnesses);
  report.identity =
      same_maps_on(compose(g.mult, concat(id, e)), id, gb1, "right identity", vars, report.witnesses) &&
      report.identity;

  report.inverse = same_maps_on(compose(g.mult, concat(id, g.inv)), e, gb1, "right inverse", vars, report.witnesses);
  report.inverse =
      same_maps_on(compose(g.mult, concat(g.inv, id)), e, gb1, "left inverse", vars, report.witnesses) &&
      report.inverse;
  return report;
}

TauGroup tau_group(const AffineAlgGroup& g, unsigned degree_cap, ProlongKind kind) {
  check_shapes(g);
  const std::size_t n = g.dim();
  const Field field = g.field();
  const ProlongedVariety pv = prolong_variety(g.variety, kind);

  // prolong_map(mult) takes (x, y, u, v); the prolonged group law takes
  // ((x, u), (y, v)).
  const RationalMap pm = prolong_map(g.mult, kind, field);
  RationalMap reorder{4 * n, {}};
  auto var = [&](std::size_t i) { return RationalFunction(MultiPoly::var(4 * n, i)); };
  for (std::size_t i = 0; i < n; ++i) reorder.components.push_back(var(i));          // x
  for (std::size_t i = 0; i < n; ++i) reorder.components.push_back(var(2 * n + i));  // y
  for (std::size_t i = 0; i < n; ++i) reorder.components.push_back(var(n + i));      // u
  for (std::size_t i = 0; i < n; ++i) reorder.components.push_back(var(3 * n + i));  // v

  AffineAlgGroup prolonged;
  prolonged.name = (kind == ProlongKind::Tau ? "tau(" : "T(") + g.name + ")";
  prolonged.variety = pv.total;
  prolonged.mult = compose(pm, reorder);
  prolonged.inv = prolong_map(g.inv, kind, field);
  prolonged.identity = g.identity;
  const Vector de = kind == ProlongKind::Tau ? nabla(g.identity, 1, field)[1] : Vector(n);
  prolonged.identity.insert(prolonged.identity.end(), de.begin(), de.end());
  prolonged.mult_vars = doubled_names(pv.total.vars);

  TauGroup out;
  out.base = g;
  out.kind = kind;
  // pi(x, u, y, v) = (x, y) composed into the base product.
  RationalMap base_coords{4 * n, {}};
  for (std::size_t i = 0; i < n; ++i) base_coords.components.push_back(var(i));
  for (std::size_t i = 0; i < n; ++i) base_coords.components.push_back(var(2 * n + i));
  const RationalMap base_mult = compose(g.mult, base_coords);
  out.projection_is_homomorphism = true;
  for (std::size_t k = 0; k < n; ++k) {
    out.projection_is_homomorphism =
        out.projection_is_homomorphism && prolonged.mult.components[k].equivalent(base_mult.components[k]);
  }
  out.axioms = check_group_axioms(prolonged, degree_cap);
  out.group = std::move(prolonged);
  return out;
}

RationalMap DGroupSection::as_map() const { return concat(RationalMap::identity(sigma.in_arity), sigma); }

RationalMap DGroupSection::projection_of_section() const {
  RationalMap s = as_map();
  s.components.resize(sigma.in_arity);
  return s;
}

DGroupSection zero_section(const AffineAlgGroup& g) {
  return DGroupSection{"zero", constant_map(g.dim(), Vector(g.dim()))};
}

DGroupReport check_dgroup(const AffineAlgGroup& g, const DGroupSection& s, unsigned degree_cap, ProlongKind kind) {
  check_shapes(g);
  const std::size_t n = g.dim();
  if (s.sigma.in_arity != n || s.sigma.out_arity() != n) {
    throw Error(ErrorCode::ArityMismatch, "section '" + s.name + "' must map n to n variables");
  }
  const Field field = g.field();
  const auto& vars = g.variety.vars;
  const GroebnerBasis gb1 = copies_gb(g.variety, 1, degree_cap);
  const GroebnerBasis gb2 = copies_gb(g.variety, 2, degree_cap);
  DGroupReport report;

  for (std::size_t k = 0; k < n; ++k) {
    if (in_ideal(s.sigma.components[k].den(), gb1)) {
      report.witnesses.push_back({"sigma denominator", k, MultiPoly(n), vars, true});
      report.section_ok = false;
    }
  }

  const ProlongedVariety pv = prolong_variety(g.variety, kind);
  report.section_ok = lands_in(s.as_map(), pv.total, gb1, "section", vars, report.witnesses) && report.section_ok;

  const RationalMap x2 = projection(n, 2, 0);
  const RationalMap y2 = projection(n, 2, 1);
  RationalMap lifted = concat(x2, y2);
  lifted = concat(lifted, compose(s.sigma, x2));
  lifted = concat(lifted, compose(s.sigma, y2));
  const RationalMap pm = prolong_map(g.mult, kind, field);
  const RationalMap sigma_of_product = compose(s.sigma, g.mult);
  const std::vector<std::string> names2 = copy_names(vars, 2);
  for (std::size_t k = 0; k < n; ++k) {
    const RationalFunction rhs = substitute(pm.components[n + k], lifted);
    report.homomorphism_ok =
        same_on(sigma_of_product.components[k], rhs, gb2, "homomorphism", k, names2, report.witnesses) &&
        report.homomorphism_ok;
  }
  return report;
}

namespace {

void require_on(const AffineAlgGroup& g, const Vector& a) {
  if (!g.variety.contains(a)) throw Error(ErrorCode::PointNotOnVariety, "point is not on group '" + g.name + "'");
}

Vector joined(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

Vector multiply(const AffineAlgGroup& g, const Vector& a, const Vector& b) { return g.mult.evaluate(joined(a, b)); }

bool nabla_hom_check(const AffineAlgGroup& g, const Vector& a, const Vector& b) {
  require_on(g, a);
  require_on(g, b);
  const Field field = g.field();
  const Vector ab = multiply(g, a, b);
  const Vector lhs = joined(ab, nabla(ab, 1, field)[1]);
  const Vector da = nabla(a, 1, field)[1];
  const Vector db = nabla(b, 1, field)[1];
  const Vector rhs = tau_map(g.mult, field).evaluate(joined(joined(a, b), joined(da, db)));
  return lhs == rhs;
}

bool dpoint_check(const DGroup& d, const Vector& g) {
  require_on(d.group, g);
  return d.section.sigma.evaluate(g) == nabla(g, 1, d.group.field())[1];
}

}  // namespace prolong
