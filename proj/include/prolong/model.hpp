#pragma once

// Declarative model documents (UTF-8 JSON):
//
//   {
//     "basefield": "Q" | "Qt",
//     "varieties": {"V": {"vars": ["x","y"], "gens": ["x^2+y^2-1"], "rank": 1}},
//     "maps": {"F": {"vars": ["x"], "components": ["t*x^2"]}},
//     "groups": {"G": {"variety": "V", "mult": [...], "inv": [...], "identity": ["1","0"],
//                      "mult_vars": [...]}},
//     "sections": {"s": {"group": "G", "sigma": [...]}}    // or "variety": "V"
//     "atlases": {"A": {"dim": 1, "charts": 2, "vars": ["x"],
//                       "transitions": {"1,2": ["1/x"], "2,1": ["1/x"]}}},
//     "correspondences": {"C": {"left": "W1", "right": "W2", "graph": ["y - x^2"],
//                               "samples": [["t", "t^2"]]}}
//   }
//
// Group products are written in `<v>1`, `<v>2` unless "mult_vars" is given;
// correspondence graphs use the left variables followed by the right ones.

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "prolong/atlas.hpp"
#include "prolong/dgroup.hpp"

namespace prolong {

struct NamedMap {
  std::string name;
  std::vector<std::string> vars;
  RationalMap map;
};

struct NamedSection {
  std::string name;
  std::optional<std::string> group;
  std::string variety;
  DGroupSection section;
};

struct Model {
  Field field = Field::Q;
  std::map<std::string, AffineVariety> varieties;
  std::map<std::string, NamedMap> maps;
  std::map<std::string, AffineAlgGroup> groups;
  std::map<std::string, NamedSection> sections;
  std::map<std::string, AtlasManifold> atlases;
  std::map<std::string, Correspondence> correspondences;

  const AffineVariety& variety(const std::string& name) const;
  const NamedMap& map(const std::string& name) const;
  const AffineAlgGroup& group(const std::string& name) const;
  const NamedSection& section(const std::string& name) const;
  const AtlasManifold& atlas(const std::string& name) const;
  const Correspondence& correspondence(const std::string& name) const;
};

Model load_model(const nlohmann::json& doc);
Model load_model_file(const std::string& path);

}  // namespace prolong
