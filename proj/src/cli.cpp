#include "prolong/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "prolong/error.hpp"
#include "prolong/model.hpp"
#include "prolong/parser.hpp"
#include "prolong/sampling.hpp"
#include "prolong/series.hpp"

namespace prolong::cli {

namespace {

using nlohmann::json;

enum class Status { Pass, Fail, Error };

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

int exit_code(Status s) { return s == Status::Pass ? 0 : (s == Status::Fail ? 1 : 2); }

struct Options {
  std::string model;
  std::string variety;
  std::string group;
  std::string section;
  std::string atlas;
  std::string correspondence;
  std::string map;
  std::string point;
  std::string point2;
  std::string poly;
  std::string init;
  std::string series;
  std::string term_order = "grevlex";
  std::string kind = "tau";
  std::optional<unsigned> order;
  unsigned degree_cap = kDefaultDegreeCap;
  std::uint64_t seed = 1;
  bool timing = false;
};

struct Result {
  Status status = Status::Pass;
  json details = json::object();
};

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorCode::ModelError, what); }

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) usage(std::string("missing required flag ") + flag);
  return value;
}

ProlongKind parse_kind(const std::string& k) {
  if (k == "tau") return ProlongKind::Tau;
  if (k == "tangent") return ProlongKind::Tangent;
  usage("--kind must be 'tau' or 'tangent'");
}

TermOrder parse_order(const std::string& s) {
  if (s == "grevlex") return TermOrder{OrderKind::Grevlex, {}};
  if (s == "lex") return TermOrder{OrderKind::Lex, {}};
  usage("--term-order must be 'grevlex' or 'lex'");
}

json elems_json(const Vector& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

json polys_json(const std::vector<MultiPoly>& ps, const std::vector<std::string>& vars) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(format(p, vars));
  return out;
}

json map_json(const RationalMap& m, const std::vector<std::string>& vars) {
  json out = json::array();
  for (const auto& c : m.components) out.push_back(format(c, vars));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(elems_json(row));
  return out;
}

json series_json(const TruncSeries& s) {
  json out = json::array();
  for (const auto& c : s.coeffs()) out.push_back(to_string(c));
  return out;
}

json witnesses_json(const std::vector<Witness>& ws) {
  json out = json::array();
  for (const auto& w : ws) {
    out.push_back({{"condition", w.condition},
                   {"component", w.component},
                   {"indeterminate", w.indeterminate},
                   {"residue", w.indeterminate ? std::string("IndeterminateOnVariety") : format(w.residue, w.vars)}});
  }
  return out;
}

json variety_json(const AffineVariety& v) {
  json out = {{"vars", v.vars}, {"gens", polys_json(v.gens(), v.vars)}};
  if (v.declared_rank) out["rank"] = *v.declared_rank;
  return out;
}

json axioms_json(const GroupAxiomReport& r) {
  return {{"identity_on_variety", r.identity_on_variety},
          {"closure", r.closure},
          {"associativity", r.associativity},
          {"identity", r.identity},
          {"inverse", r.inverse},
          {"witnesses", witnesses_json(r.witnesses)}};
}

json atlas_transitions_json(const AtlasManifold& a) {
  json out = json::object();
  for (const auto& [key, phi] : a.transitions) {
    out[std::to_string(key.first) + "," + std::to_string(key.second)] = map_json(phi, a.vars);
  }
  return out;
}

Vector point_arg(const std::string& text, const char* flag, Field field) {
  return parse_point(need(text, flag), field);
}

// ---------------------------------------------------------------- commands

Result cmd_parse(const Options&, const Model& m) {
  Result r;
  json& d = r.details;
  d["basefield"] = field_name(m.field);
  d["varieties"] = json::object();
  for (const auto& [name, v] : m.varieties) d["varieties"][name] = variety_json(v);
  d["maps"] = json::object();
  for (const auto& [name, f] : m.maps) d["maps"][name] = {{"vars", f.vars}, {"components", map_json(f.map, f.vars)}};
  d["groups"] = json::object();
  for (const auto& [name, g] : m.groups) {
    d["groups"][name] = {{"variety", g.variety.name},
                         {"mult_vars", g.mult_vars},
                         {"mult", map_json(g.mult, g.mult_vars)},
                         {"inv", map_json(g.inv, g.variety.vars)},
                         {"identity", elems_json(g.identity)}};
  }
  d["sections"] = json::object();
  for (const auto& [name, s] : m.sections) {
    json js = {{"variety", s.variety}, {"sigma", map_json(s.section.sigma, m.variety(s.variety).vars)}};
    if (s.group) js["group"] = *s.group;
    d["sections"][name] = js;
  }
  d["atlases"] = json::object();
  for (const auto& [name, a] : m.atlases) {
    d["atlases"][name] = {{"dim", a.dim}, {"charts", a.charts}, {"vars", a.vars},
                          {"transitions", atlas_transitions_json(a)}};
  }
  d["correspondences"] = json::object();
  for (const auto& [name, c] : m.correspondences) {
    d["correspondences"][name] = {{"left", c.left.name},
                                  {"right", c.right.name},
                                  {"vars", c.graph.vars},
                                  {"graph", polys_json(c.graph.gens(), c.graph.vars)}};
  }
  return r;
}

Result cmd_gb(const Options& o, const Model& m) {
  const AffineVariety& v = m.variety(need(o.variety, "-v"));
  const GroebnerBasis gb = buchberger(v.ideal, parse_order(o.term_order), o.degree_cap);
  Result r;
  r.details = {{"variety", v.name},
               {"vars", v.vars},
               {"term_order", o.term_order},
               {"basis", polys_json(gb.gens(), v.vars)},
               {"unit_ideal", gb.is_unit()}};
  return r;
}

Result cmd_nf(const Options& o, const Model& m) {
  const AffineVariety& v = m.variety(need(o.variety, "-v"));
  const MultiPoly p = parse_poly(need(o.poly, "--poly"), v.vars, m.field);
  const GroebnerBasis gb = buchberger(v.ideal, parse_order(o.term_order), o.degree_cap);
  const MultiPoly nf = normal_form(p, gb);
  Result r;
  r.details = {{"variety", v.name},
               {"vars", v.vars},
               {"term_order", o.term_order},
               {"poly", format(p, v.vars)},
               {"normal_form", format(nf, v.vars)},
               {"in_ideal", nf.is_zero()}};
  return r;
}

Result cmd_fdel(const Options& o, const Model& m) {
  const NamedMap& f = m.map(need(o.map, "-m"));
  Result r;
  r.details = {{"map", f.name}, {"vars", f.vars}, {"fdel", map_json(f_del(f.map, m.field), f.vars)}};
  return r;
}

Result cmd_tau_map(const Options& o, const Model& m) {
  const NamedMap& f = m.map(need(o.map, "-m"));
  const ProlongKind kind = parse_kind(o.kind);
  const auto vars = prolonged_names(f.vars);
  Result r;
  r.details = {{"map", f.name},
               {"kind", o.kind},
               {"vars", vars},
               {"components", map_json(prolong_map(f.map, kind, m.field), vars)}};
  return r;
}

Result cmd_prolong_variety(const Options& o, const Model& m, ProlongKind kind) {
  const AffineVariety& v = m.variety(need(o.variety, "-v"));
  const ProlongedVariety pv = prolong_variety(v, kind);
  std::vector<MultiPoly> fiber(pv.total.gens().begin() + static_cast<std::ptrdiff_t>(v.gens().size()),
                               pv.total.gens().end());
  Result r;
  r.details = {{"variety", v.name},
               {"kind", kind == ProlongKind::Tau ? "tau" : "tangent"},
               {"vars", pv.total.vars},
               {"gens", polys_json(pv.total.gens(), pv.total.vars)},
               {"fiber_gens", polys_json(fiber, pv.total.vars)}};
  return r;
}

Result cmd_nabla(const Options& o, const Model& m) {
  const Vector a = point_arg(o.point, "--point", m.field);
  const unsigned order = o.order.value_or(1);
  json levels = json::array();
  for (const auto& level : nabla(a, order, m.field)) levels.push_back(elems_json(level));
  Result r;
  r.details = {{"point", elems_json(a)}, {"order", order}, {"levels", levels}};
  return r;
}

Result cmd_check_nabla(const Options& o, const Model& m) {
  const AffineVariety& v = m.variety(need(o.variety, "-v"));
  const Vector a = point_arg(o.point, "--point", m.field);
  const bool holds = check_nabla_in_tau(v, a);
  Result r;
  r.status = holds ? Status::Pass : Status::Fail;
  r.details = {{"variety", v.name},
               {"point", elems_json(a)},
               {"derivative", elems_json(nabla(a, 1, m.field)[1])},
               {"nabla_in_tau", holds}};
  return r;
}

Result cmd_fiber(const Options& o, const Model& m) {
  const AffineVariety& v = m.variety(need(o.variety, "-v"));
  const Vector a = point_arg(o.point, "--point", m.field);
  const AffineFiberDescription fd = fiber_solve(v, a, parse_kind(o.kind));
  json kernel = json::array();
  for (const auto& k : fd.kernel) kernel.push_back(elems_json(k));
  const auto names = prolonged_names(v.vars);
  const std::vector<std::string> fiber_vars(names.begin() + static_cast<std::ptrdiff_t>(v.ambient()), names.end());
  Result r;
  r.details = {{"variety", v.name},
               {"kind", o.kind},
               {"fiber_vars", fiber_vars},
               {"point", elems_json(a)},
               {"particular", elems_json(fd.particular)},
               {"kernel", kernel},
               {"dimension", fd.kernel.size()},
               {"jacobian_rank", jacobian_rank(v, a)}};
  if (v.declared_rank) r.details["declared_rank"] = *v.declared_rank;
  return r;
}

Result cmd_transfer(const Options& o, const Model& m) {
  const Correspondence& c = m.correspondence(need(o.correspondence, "-c"));
  const Vector a = point_arg(o.point, "--point", m.field);
  const Vector b = point_arg(o.point2, "--point2", m.field);
  const FiberTransfer t = correspondence_transfer(c, a, b);
  Result r;
  r.status = t.invertible ? Status::Pass : Status::Fail;
  r.details = {{"correspondence", c.name},
               {"left_point", elems_json(a)},
               {"right_point", elems_json(b)},
               {"linear", matrix_json(t.linear)},
               {"offset", elems_json(t.offset)},
               {"invertible", t.invertible}};
  if (t.invertible) {
    r.details["inverse_linear"] = matrix_json(*t.inverse_linear);
    r.details["inverse_offset"] = elems_json(*t.inverse_offset);
  }
  return r;
}

json cocycle_json(const CocycleReport& rep) {
  json failures = json::array();
  for (const auto& f : rep.failures) failures.push_back({{"kind", f.kind}, {"i", f.i}, {"j", f.j}, {"k", f.k}});
  return {{"checked", rep.checked}, {"failures", failures}, {"ok", rep.ok()}};
}

Result cmd_check_cocycle(const Options& o, const Model& m) {
  const AtlasManifold& a = m.atlas(need(o.atlas, "-a"));
  const CocycleReport rep = check_cocycle(a);
  Result r;
  r.status = rep.ok() ? Status::Pass : Status::Fail;
  r.details = cocycle_json(rep);
  r.details["atlas"] = a.name;
  return r;
}

Result cmd_tau_atlas(const Options& o, const Model& m) {
  const AtlasManifold& a = m.atlas(need(o.atlas, "-a"));
  const ProlongKind kind = parse_kind(o.kind);
  const ProlongedAtlas pa = prolong_atlas(a, kind);
  Result r;
  r.details = {{"atlas", a.name},
               {"kind", o.kind},
               {"vars", pa.total.vars},
               {"transitions", atlas_transitions_json(pa.total)},
               {"reverified", check_cocycle(pa.total).ok()}};
  if (kind == ProlongKind::Tau) {
    // sigma-compatibility at random points for every stored transition.
    std::mt19937_64 rng(o.seed);
    std::size_t checked = 0;
    bool ok = true;
    for (const auto& [key, phi] : a.transitions) {
      for (int s = 0; s < 8; ++s) {
        try {
          auto res = sigma_pointwise(a, key.first, random_point(rng, a.dim, a.field),
                                     random_point(rng, a.dim, a.field), key.second);
          ++checked;
          ok = ok && res.compatible.value_or(false);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DenominatorVanishes) throw;
        }
      }
    }
    r.details["sigma_compatibility"] = {{"samples", checked}, {"ok", ok}, {"seed", o.seed}};
    if (!ok) r.status = Status::Fail;
  }
  return r;
}

Result cmd_check_group(const Options& o, const Model& m) {
  const AffineAlgGroup& g = m.group(need(o.group, "-g"));
  const GroupAxiomReport rep = check_group_axioms(g, o.degree_cap);
  Result r;
  r.status = rep.ok() ? Status::Pass : Status::Fail;
  r.details = axioms_json(rep);
  r.details["group"] = g.name;
  return r;
}

Result cmd_tau_group(const Options& o, const Model& m) {
  const AffineAlgGroup& g = m.group(need(o.group, "-g"));
  const TauGroup tg = tau_group(g, o.degree_cap, parse_kind(o.kind));
  Result r;
  r.status = tg.axioms.ok() && tg.projection_is_homomorphism ? Status::Pass : Status::Fail;
  r.details = {{"group", g.name},
               {"kind", o.kind},
               {"vars", tg.group.variety.vars},
               {"gens", polys_json(tg.group.variety.gens(), tg.group.variety.vars)},
               {"mult_vars", tg.group.mult_vars},
               {"mult", map_json(tg.group.mult, tg.group.mult_vars)},
               {"inv", map_json(tg.group.inv, tg.group.variety.vars)},
               {"identity", elems_json(tg.group.identity)},
               {"projection_is_homomorphism", tg.projection_is_homomorphism},
               {"axioms", axioms_json(tg.axioms)}};
  return r;
}

const AffineAlgGroup& section_group(const Options& o, const Model& m, const NamedSection& s) {
  if (!o.group.empty()) return m.group(o.group);
  if (s.group) return m.group(*s.group);
  usage("section '" + s.name + "' is not attached to a group; pass -g");
}

Result cmd_check_dgroup(const Options& o, const Model& m) {
  const NamedSection& s = m.section(need(o.section, "-s"));
  const AffineAlgGroup& g = section_group(o, m, s);
  const DGroupReport rep = check_dgroup(g, s.section, o.degree_cap, parse_kind(o.kind));
  Result r;
  r.status = rep.ok() ? Status::Pass : Status::Fail;
  r.details = {{"group", g.name},
               {"section", s.name},
               {"kind", o.kind},
               {"section_ok", rep.section_ok},
               {"homomorphism_ok", rep.homomorphism_ok},
               {"witnesses", witnesses_json(rep.witnesses)}};
  return r;
}

Result cmd_check_dpoint(const Options& o, const Model& m) {
  const NamedSection& s = m.section(need(o.section, "-s"));
  const AffineAlgGroup& g = section_group(o, m, s);
  const Vector p = point_arg(o.point, "--point", m.field);
  const bool holds = dpoint_check(DGroup{g, s.section}, p);
  Result r;
  r.status = holds ? Status::Pass : Status::Fail;
  r.details = {{"group", g.name},
               {"section", s.name},
               {"point", elems_json(p)},
               {"sigma", elems_json(s.section.sigma.evaluate(p))},
               {"derivative", elems_json(nabla(p, 1, m.field)[1])},
               {"is_dpoint", holds}};
  return r;
}

json residuals_json(const ResidualReport& rep) {
  json series = json::array();
  for (const auto& s : rep.residuals) series.push_back(series_json(s));
  return {{"pass", rep.pass}, {"series", series}};
}

Result cmd_solve_series(const Options& o, const Model& m) {
  const NamedSection& s = m.section(need(o.section, "-s"));
  const AffineVariety* v = &m.variety(s.variety);
  if (!o.group.empty()) v = &m.group(o.group).variety;
  if (!o.variety.empty()) v = &m.variety(o.variety);
  std::vector<Rational> a0;
  for (const auto& e : point_arg(o.init, "--init", Field::Q)) a0.push_back(e.constant_value());
  const std::size_t order = o.order.value_or(10);
  const SeriesSolution sol = solve_dpoint(*v, s.section.sigma, a0, order);
  json vars = json::object();
  for (std::size_t i = 0; i < v->ambient(); ++i) vars[v->vars[i]] = series_json(sol.point[i]);
  Result r;
  r.status = sol.residuals.pass ? Status::Pass : Status::Fail;
  r.details = {{"variety", v->name},
               {"section", s.name},
               {"order", order},
               {"init", elems_json(Vector(a0.begin(), a0.end()))},
               {"coefficients", vars},
               {"residuals", residuals_json(sol.residuals)}};
  return r;
}

Result cmd_verify_series(const Options& o, const Model& m) {
  const AffineVariety& v = m.variety(need(o.variety, "-v"));
  const std::size_t order = o.order.value_or(10);
  SeriesPoint p;
  for (const auto& e : point_arg(o.series, "--series", Field::Qt)) p.push_back(TruncSeries::from_elem(e, order));
  if (p.size() != v.ambient()) usage("--series must have one entry per variable");
  const ResidualReport rep = verify_on_variety(v, p);
  Result r;
  r.status = rep.pass ? Status::Pass : Status::Fail;
  r.details = {{"variety", v.name}, {"order", order}, {"residuals", residuals_json(rep)}};
  return r;
}

using Handler = std::function<Result(const Options&, const Model&)>;

struct Command {
  const char* name;
  const char* help;
  Handler handler;
  std::vector<std::string> flags;
};

std::vector<Command> commands() {
  return {
      {"parse", "Validate a model and echo canonical forms", cmd_parse, {}},
      {"gb", "Reduced Groebner basis of a variety's ideal", cmd_gb, {"-v", "--term-order", "--degree-cap"}},
      {"nf", "Normal form of a polynomial modulo a variety's ideal", cmd_nf,
       {"-v", "--poly", "--term-order", "--degree-cap"}},
      {"fdel", "Coefficient-derivative map f^del", cmd_fdel, {"-m"}},
      {"tau-map", "Prolongation tau(f) (or D(f) with --kind tangent)", cmd_tau_map, {"-m", "--kind"}},
      {"t-variety", "Tangent variety T(V)",
       [](const Options& o, const Model& m) { return cmd_prolong_variety(o, m, ProlongKind::Tangent); }, {"-v"}},
      {"tau-variety", "Prolongation variety tau(V)",
       [](const Options& o, const Model& m) { return cmd_prolong_variety(o, m, ProlongKind::Tau); }, {"-v"}},
      {"nabla", "Iterated derivatives (a, da, ..., d^r a)", cmd_nabla, {"--point", "--order"}},
      {"check-nabla", "Check that (a, da) lies on tau(V)", cmd_check_nabla, {"-v", "--point"}},
      {"fiber", "Fiber of tau(V) over a point", cmd_fiber, {"-v", "--point", "--kind"}},
      {"transfer", "Fiber transfer along a correspondence", cmd_transfer, {"-c", "--point", "--point2"}},
      {"check-cocycle", "Verify atlas transition cocycle", cmd_check_cocycle, {"-a"}},
      {"tau-atlas", "Prolonged atlas gluing data", cmd_tau_atlas, {"-a", "--kind", "--seed"}},
      {"check-group", "Verify group axioms on the variety", cmd_check_group, {"-g", "--degree-cap"}},
      {"tau-group", "Prolonged group tau(G)", cmd_tau_group, {"-g", "--kind", "--degree-cap"}},
      {"check-dgroup", "Verify a D-group section", cmd_check_dgroup, {"-g", "-s", "--kind", "--degree-cap"}},
      {"check-dpoint", "Check sigma(g) = dg", cmd_check_dpoint, {"-g", "-s", "--point"}},
      {"solve-series", "Solve da = sigma(a) in truncated power series", cmd_solve_series,
       {"-g", "-v", "-s", "--init", "--order"}},
      {"verify-series", "Residuals of a series point on a variety", cmd_verify_series,
       {"-v", "--series", "--order"}},
  };
}

void add_flag(CLI::App& sub, const std::string& flag, Options& o) {
  if (flag == "-v") sub.add_option("-v,--variety", o.variety, "Variety name");
  if (flag == "-g") sub.add_option("-g,--group", o.group, "Group name");
  if (flag == "-s") sub.add_option("-s,--section", o.section, "Section name");
  if (flag == "-a") sub.add_option("-a,--atlas", o.atlas, "Atlas name");
  if (flag == "-c") sub.add_option("-c,--correspondence", o.correspondence, "Correspondence name");
  if (flag == "-m") sub.add_option("-m,--map", o.map, "Map name");
  if (flag == "--point") sub.add_option("--point", o.point, "Comma-separated base field elements");
  if (flag == "--point2") sub.add_option("--point2", o.point2, "Second point (right side of a correspondence)");
  if (flag == "--poly") sub.add_option("--poly", o.poly, "Polynomial expression");
  if (flag == "--init") sub.add_option("--init", o.init, "Comma-separated rational initial point");
  if (flag == "--series") sub.add_option("--series", o.series, "Comma-separated series given as expressions in t");
  if (flag == "--order") sub.add_option("--order", o.order, "Truncation / derivative order");
  if (flag == "--term-order") {
    sub.add_option("--term-order", o.term_order, "grevlex or lex")->check(CLI::IsMember({"grevlex", "lex"}));
  }
  if (flag == "--degree-cap") sub.add_option("--degree-cap", o.degree_cap, "Groebner degree cap");
  if (flag == "--kind") sub.add_option("--kind", o.kind, "tau or tangent")->check(CLI::IsMember({"tau", "tangent"}));
  if (flag == "--seed") sub.add_option("--seed", o.seed, "Seed for sampled checks");
}

void emit(std::ostream& out, const std::string& command, Status status, json details, std::optional<double> ms) {
  json report = {{"command", command}, {"status", status_name(status)}, {"details", std::move(details)}};
  if (ms) report["timing"] = {{"elapsed_ms", *ms}};
  out << report.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Prolongation calculus toolkit"};
  app.require_subcommand(1);
  std::vector<Command> cmds = commands();
  std::vector<CLI::App*> subs;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("-i,--input", opts.model, "Model file (JSON)")->required();
    sub->add_flag("--timing", opts.timing, "Include wall-clock timing in the report");
    for (const auto& f : c.flags) add_flag(*sub, f, opts);
    subs.push_back(sub);
  }

  std::string command = args.empty() ? "" : args.front();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    emit(out, command, Status::Error, {{"error", "UsageError"}, {"message", e.what()}}, std::nullopt);
    return 2;
  }

  std::size_t which = 0;
  while (which < subs.size() && !subs[which]->parsed()) ++which;
  command = cmds[which].name;

  const auto start = std::chrono::steady_clock::now();
  Status status = Status::Error;
  json details;
  try {
    const Model model = load_model_file(opts.model);
    Result r = cmds[which].handler(opts, model);
    status = r.status;
    details = std::move(r.details);
  } catch (const Error& e) {
    const bool mathematical = e.code() == ErrorCode::NoSolution || e.code() == ErrorCode::TransferNotFunctional;
    status = mathematical ? Status::Fail : Status::Error;
    details = {{"error", error_name(e.code())}, {"message", e.what()}};
    err << e.what() << "\n";
  } catch (const std::exception& e) {
    status = Status::Error;
    details = {{"error", "InternalError"}, {"message", e.what()}};
    err << e.what() << "\n";
  }
  std::optional<double> ms;
  if (opts.timing) {
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  emit(out, command, status, std::move(details), ms);
  return exit_code(status);
}

}  // namespace prolong::cli
