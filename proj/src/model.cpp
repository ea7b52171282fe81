#include "prolong/model.hpp"

#include <fstream>
#include <set>

#include "prolong/error.hpp"
#include "prolong/parser.hpp"

namespace prolong {

namespace {

using nlohmann::json;

[[noreturn]] void model_error(const std::string& what) { throw Error(ErrorCode::ModelError, what); }

template <typename T>
const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* kind) {
  auto it = m.find(name);
  if (it == m.end()) model_error(std::string("no ") + kind + " named '" + name + "'");
  return it->second;
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) model_error(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) model_error(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) model_error(where + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::string> var_list(const json& j, const std::string& where) {
  std::vector<std::string> vars = string_list(j, where);
  if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size()) {
    model_error(where + ": duplicate variable names");
  }
  return vars;
}

RationalMap parse_map(const std::vector<std::string>& exprs, const std::vector<std::string>& vars, Field field) {
  RationalMap m{vars.size(), {}};
  for (const auto& e : exprs) m.components.push_back(parse_rational(e, vars, field));
  return m;
}

Vector parse_elems(const json& j, Field field, const std::string& where) {
  Vector out;
  for (const auto& s : string_list(j, where)) out.push_back(parse_elem(s, field));
  return out;
}

AffineVariety load_variety(const std::string& name, const json& spec, Field field) {
  const std::string where = "variety '" + name + "'";
  std::vector<std::string> vars = var_list(require(spec, "vars", where), where);
  std::vector<MultiPoly> gens;
  if (spec.contains("gens")) {
    for (const auto& g : string_list(spec.at("gens"), where)) gens.push_back(parse_poly(g, vars, field));
  }
  AffineVariety v(name, std::move(vars), std::move(gens), field);
  if (spec.contains("rank")) v.declared_rank = spec.at("rank").get<std::size_t>();
  return v;
}

}  // namespace

const AffineVariety& Model::variety(const std::string& name) const { return lookup(varieties, name, "variety"); }
const NamedMap& Model::map(const std::string& name) const { return lookup(maps, name, "map"); }
const AffineAlgGroup& Model::group(const std::string& name) const { return lookup(groups, name, "group"); }
const NamedSection& Model::section(const std::string& name) const { return lookup(sections, name, "section"); }
const AtlasManifold& Model::atlas(const std::string& name) const { return lookup(atlases, name, "atlas"); }
const Correspondence& Model::correspondence(const std::string& name) const {
  return lookup(correspondences, name, "correspondence");
}

namespace {

Model load_model_unchecked(const json& doc) {
  if (!doc.is_object()) model_error("model must be a JSON object");
  static const std::set<std::string> known{"basefield", "varieties", "maps", "groups",
                                           "sections", "atlases", "correspondences"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) model_error("unknown top-level key \"" + key + "\"");
  }
  Model m;
  const std::string bf = require(doc, "basefield", "model").get<std::string>();
  if (bf == "Q") {
    m.field = Field::Q;
  } else if (bf == "Qt") {
    m.field = Field::Qt;
  } else {
    model_error("basefield must be \"Q\" or \"Qt\"");
  }
  auto section_of = [&](const char* key) -> const json& {
    static const json empty = json::object();
    return doc.contains(key) ? doc.at(key) : empty;
  };

  for (const auto& [name, spec] : section_of("varieties").items()) {
    m.varieties.emplace(name, load_variety(name, spec, m.field));
  }

  for (const auto& [name, spec] : section_of("maps").items()) {
    const std::string where = "map '" + name + "'";
    std::vector<std::string> vars = var_list(require(spec, "vars", where), where);
    RationalMap f = parse_map(string_list(require(spec, "components", where), where), vars, m.field);
    m.maps.emplace(name, NamedMap{name, std::move(vars), std::move(f)});
  }

  for (const auto& [name, spec] : section_of("groups").items()) {
    const std::string where = "group '" + name + "'";
    AffineAlgGroup g;
    g.name = name;
    g.variety = m.variety(require(spec, "variety", where).get<std::string>());
    g.mult_vars = spec.contains("mult_vars") ? var_list(spec.at("mult_vars"), where) : doubled_names(g.variety.vars);
    if (g.mult_vars.size() != 2 * g.variety.ambient()) model_error(where + ": mult_vars must have 2n names");
    g.mult = parse_map(string_list(require(spec, "mult", where), where), g.mult_vars, m.field);
    g.inv = parse_map(string_list(require(spec, "inv", where), where), g.variety.vars, m.field);
    g.identity = parse_elems(require(spec, "identity", where), m.field, where);
    const std::size_t n = g.variety.ambient();
    if (g.mult.out_arity() != n || g.inv.out_arity() != n || g.identity.size() != n) {
      model_error(where + ": mult, inv and identity must each have " + std::to_string(n) + " entries");
    }
    m.groups.emplace(name, std::move(g));
  }

  for (const auto& [name, spec] : section_of("sections").items()) {
    const std::string where = "section '" + name + "'";
    NamedSection s;
    s.name = name;
    if (spec.contains("group")) {
      s.group = spec.at("group").get<std::string>();
      s.variety = m.group(*s.group).variety.name;
    } else {
      s.variety = require(spec, "variety", where).get<std::string>();
    }
    const AffineVariety& v = m.variety(s.variety);
    s.section.name = name;
    s.section.sigma = parse_map(string_list(require(spec, "sigma", where), where), v.vars, m.field);
    if (s.section.sigma.out_arity() != v.ambient()) {
      model_error(where + ": sigma must have " + std::to_string(v.ambient()) + " components");
    }
    m.sections.emplace(name, std::move(s));
  }

  for (const auto& [name, spec] : section_of("atlases").items()) {
    const std::string where = "atlas '" + name + "'";
    AtlasManifold a;
    a.name = name;
    a.field = m.field;
    a.dim = require(spec, "dim", where).get<std::size_t>();
    a.charts = require(spec, "charts", where).get<std::size_t>();
    if (spec.contains("vars")) {
      a.vars = var_list(spec.at("vars"), where);
    } else if (a.dim == 1) {
      a.vars = {"x"};
    } else {
      for (std::size_t i = 1; i <= a.dim; ++i) a.vars.push_back("x" + std::to_string(i));
    }
    if (a.vars.size() != a.dim) model_error(where + ": vars must have dim entries");
    for (const auto& [key, exprs] : require(spec, "transitions", where).items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) model_error(where + ": transition key must be \"i,j\"");
      std::size_t i = 0;
      std::size_t j = 0;
      try {
        i = std::stoul(key.substr(0, comma));
        j = std::stoul(key.substr(comma + 1));
      } catch (const std::exception&) {
        model_error(where + ": transition key must be \"i,j\"");
      }
      if (i < 1 || j < 1 || i > a.charts || j > a.charts) model_error(where + ": chart index out of range in " + key);
      RationalMap phi = parse_map(string_list(exprs, where), a.vars, m.field);
      if (phi.out_arity() != a.dim) model_error(where + ": transition " + key + " must have dim components");
      a.transitions.emplace(ChartPair{i, j}, std::move(phi));
    }
    m.atlases.emplace(name, std::move(a));
  }

  for (const auto& [name, spec] : section_of("correspondences").items()) {
    const std::string where = "correspondence '" + name + "'";
    Correspondence c;
    c.name = name;
    c.left = m.variety(require(spec, "left", where).get<std::string>());
    c.right = m.variety(require(spec, "right", where).get<std::string>());
    std::vector<std::string> vars = c.left.vars;
    vars.insert(vars.end(), c.right.vars.begin(), c.right.vars.end());
    if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size()) {
      model_error(where + ": left and right varieties share variable names");
    }
    std::vector<MultiPoly> gens;
    for (const auto& g : string_list(require(spec, "graph", where), where)) gens.push_back(parse_poly(g, vars, m.field));
    c.graph = AffineVariety(name, std::move(vars), std::move(gens), m.field);
    if (spec.contains("samples")) {
      for (const auto& sample : spec.at("samples")) {
        Vector p = parse_elems(sample, m.field, where);
        if (p.size() != c.graph.ambient() || !c.graph.contains(p)) {
          model_error(where + ": a declared sample point is not on the graph");
        }
      }
    }
    m.correspondences.emplace(name, std::move(c));
  }
  return m;
}

}  // namespace

Model load_model(const json& doc) {
  try {
    return load_model_unchecked(doc);
  } catch (const json::exception& e) {
    model_error(std::string("malformed model: ") + e.what());
  }
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) model_error("cannot open model file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    model_error(std::string("invalid JSON: ") + e.what());
  }
  return load_model(doc);
}

}  // namespace prolong
