#pragma once

// Manifolds given by charts glued along rational transition maps. Chart
// domains are not represented: every gluing identity is an identity of
// rational maps, and pointwise transport raises DenominatorVanishes outside
// a transition's domain.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prolong/prolong.hpp"

namespace prolong {

using ChartPair = std::pair<std::size_t, std::size_t>;

struct AtlasManifold {
  std::string name;
  std::size_t dim = 0;
  /// Charts are numbered 1..charts.
  std::size_t charts = 0;
  std::vector<std::string> vars;
  Field field = Field::Q;
  std::map<ChartPair, RationalMap> transitions;

  /// Stored transition, or the identity for (i, i) when none is stored.
  std::optional<RationalMap> transition(std::size_t i, std::size_t j) const;
};

struct ProlongedAtlas {
  AtlasManifold base;
  ProlongKind kind = ProlongKind::Tau;
  /// Gluing data in 2*dim variables (x, u_x).
  AtlasManifold total;
};

struct CocycleFailure {
  std::string kind;  ///< "identity", "inverse", "cocycle" or "undefined"
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
};

struct CocycleReport {
  std::size_t checked = 0;
  std::vector<CocycleFailure> failures;
  bool ok() const { return failures.empty(); }
};

CocycleReport check_cocycle(const AtlasManifold& m);

/// Transitions mapped through D or tau; the output cocycle is re-verified
/// (CocycleViolation on failure).
ProlongedAtlas prolong_atlas(const AtlasManifold& m, ProlongKind kind);
inline ProlongedAtlas tangent_atlas(const AtlasManifold& m) { return prolong_atlas(m, ProlongKind::Tangent); }
inline ProlongedAtlas tau_atlas(const AtlasManifold& m) { return prolong_atlas(m, ProlongKind::Tau); }

struct SigmaResult {
  FiberPoint point;
  /// Present when a second chart was supplied: whether the T(M)-related
  /// pair maps to a tau(M)-related pair.
  std::optional<bool> compatible;
};

/// sigma_M(a, u) = (a, u + da) in chart `chart`; with `other_chart`, checks
/// (a_i, u) ~T (a_j, v)  =>  (a_i, u + da_i) ~tau (a_j, v + da_j).
SigmaResult sigma_pointwise(const AtlasManifold& m, std::size_t chart, const Vector& a, const Vector& u,
                            std::optional<std::size_t> other_chart = std::nullopt);

/// (a, u) -> (a, u - da).
FiberPoint sigma_inverse(const FiberPoint& p, Field field);

/// Chartwise representatives (i of the source, j of the target) of a map
/// between atlases.
struct ChartwiseMap {
  std::map<ChartPair, RationalMap> reps;
};

/// Prolongs every representative; well-definedness of input and output is
/// spot-checked at `samples` random points (ChartIncompatibility on failure).
ChartwiseMap prolong_map_between_atlases(const AtlasManifold& source, const AtlasManifold& target,
                                         const ChartwiseMap& f, ProlongKind kind, unsigned samples = 8,
                                         std::uint64_t seed = 1);

}  // namespace prolong
