#include "prolong/atlas.hpp"

#include <random>

#include "prolong/error.hpp"
#include "prolong/sampling.hpp"

namespace prolong {

std::optional<RationalMap> AtlasManifold::transition(std::size_t i, std::size_t j) const {
  auto it = transitions.find({i, j});
  if (it != transitions.end()) return it->second;
  if (i == j) return RationalMap::identity(dim);
  return std::nullopt;
}

namespace {

// Composition as a rational-map identity check; a composed denominator that
// vanishes identically means the maps cannot be composed at all.
std::optional<bool> composes_to(const RationalMap& outer, const RationalMap& inner, const RationalMap& expected) {
  try {
    return compose(outer, inner).equivalent(expected);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IdenticallyZeroDenominator) return std::nullopt;
    throw;
  }
}

}  // namespace

CocycleReport check_cocycle(const AtlasManifold& m) {
  CocycleReport report;
  const RationalMap id = RationalMap::identity(m.dim);
  for (const auto& [key, phi] : m.transitions) {
    if (phi.in_arity != m.dim || phi.out_arity() != m.dim) {
      throw Error(ErrorCode::ArityMismatch, "transition " + std::to_string(key.first) + "," +
                                                std::to_string(key.second) + " is not a map in " +
                                                std::to_string(m.dim) + " variables");
    }
  }
  for (const auto& [key, phi] : m.transitions) {
    const auto [i, j] = key;
    if (i == j) {
      ++report.checked;
      if (!phi.equivalent(id)) report.failures.push_back({"identity", i, j, i});
      continue;
    }
    if (auto back = m.transitions.find({j, i}); back != m.transitions.end()) {
      ++report.checked;
      auto r = composes_to(back->second, phi, id);
      if (!r) {
        report.failures.push_back({"undefined", i, j, i});
      } else if (!*r) {
        report.failures.push_back({"inverse", i, j, i});
      }
    }
  }
  for (const auto& [ij, phi_ij] : m.transitions) {
    const auto [i, j] = ij;
    if (i == j) continue;
    for (std::size_t k = 1; k <= m.charts; ++k) {
      if (k == i || k == j) continue;
      auto jk = m.transitions.find({j, k});
      auto ik = m.transitions.find({i, k});
      if (jk == m.transitions.end() || ik == m.transitions.end()) continue;
      ++report.checked;
      auto r = composes_to(jk->second, phi_ij, ik->second);
      if (!r) {
        report.failures.push_back({"undefined", i, j, k});
      } else if (!*r) {
        report.failures.push_back({"cocycle", i, j, k});
      }
    }
  }
  return report;
}

ProlongedAtlas prolong_atlas(const AtlasManifold& m, ProlongKind kind) {
  if (!check_cocycle(m).ok()) throw Error(ErrorCode::CocycleViolation, "atlas '" + m.name + "' fails its cocycle check");
  AtlasManifold total;
  total.name = (kind == ProlongKind::Tau ? "tau(" : "T(") + m.name + ")";
  total.dim = 2 * m.dim;
  total.charts = m.charts;
  total.vars = prolonged_names(m.vars);
  total.field = m.field;
  for (const auto& [key, phi] : m.transitions) total.transitions.emplace(key, prolong_map(phi, kind, m.field));
  if (!check_cocycle(total).ok()) {
    throw Error(ErrorCode::CocycleViolation, "prolonged atlas of '" + m.name + "' fails re-verification");
  }
  return ProlongedAtlas{m, kind, std::move(total)};
}

namespace {

Vector add(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return out;
}

Vector derived(const Vector& a, Field field) { return nabla(a, 1, field)[1]; }

Vector joined(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

SigmaResult sigma_pointwise(const AtlasManifold& m, std::size_t chart, const Vector& a, const Vector& u,
                            std::optional<std::size_t> other_chart) {
  if (a.size() != m.dim || u.size() != m.dim) throw Error(ErrorCode::ArityMismatch, "point dimension mismatch");
  if (chart < 1 || chart > m.charts) throw Error(ErrorCode::IndexOutOfRange, "no chart " + std::to_string(chart));
  SigmaResult out{FiberPoint{a, add(u, derived(a, m.field))}, std::nullopt};
  if (!other_chart) return out;
  auto phi = m.transition(chart, *other_chart);
  if (!phi) {
    throw Error(ErrorCode::IndexOutOfRange,
                "no transition " + std::to_string(chart) + "," + std::to_string(*other_chart));
  }
  const Vector tangent = tangent_map(*phi).evaluate(joined(a, u));
  const Vector aj(tangent.begin(), tangent.begin() + static_cast<std::ptrdiff_t>(m.dim));
  const Vector v(tangent.begin() + static_cast<std::ptrdiff_t>(m.dim), tangent.end());
  const Vector lhs = tau_map(*phi, m.field).evaluate(joined(a, out.point.fiber));
  const Vector rhs = joined(aj, add(v, derived(aj, m.field)));
  out.compatible = lhs == rhs;
  return out;
}

FiberPoint sigma_inverse(const FiberPoint& p, Field field) {
  Vector d = derived(p.base, field);
  Vector fiber = p.fiber;
  for (std::size_t k = 0; k < fiber.size(); ++k) fiber[k] -= d[k];
  return FiberPoint{p.base, std::move(fiber)};
}

namespace {

// Checks psi_{j,j2} o f_{ij} = f_{i2 j2} o phi_{i,i2} at random points of
// chart i; points outside a domain of definition are skipped.
void spot_check(const AtlasManifold& source, const AtlasManifold& target, const ChartwiseMap& f, unsigned samples,
                std::mt19937_64& rng, const std::string& what) {
  for (const auto& [p1, f1] : f.reps) {
    for (const auto& [p2, f2] : f.reps) {
      if (p1 == p2) continue;
      auto phi = source.transition(p1.first, p2.first);
      auto psi = target.transition(p1.second, p2.second);
      if (!phi || !psi) continue;
      unsigned done = 0;
      for (unsigned attempt = 0; attempt < 4 * samples && done < samples; ++attempt) {
        const Vector a = random_point(rng, source.dim, source.field);
        try {
          const Vector lhs = psi->evaluate(f1.evaluate(a));
          const Vector rhs = f2.evaluate(phi->evaluate(a));
          ++done;
          if (lhs != rhs) {
            throw Error(ErrorCode::ChartIncompatibility,
                        what + " representatives (" + std::to_string(p1.first) + "," + std::to_string(p1.second) +
                            ") and (" + std::to_string(p2.first) + "," + std::to_string(p2.second) + ") disagree");
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DenominatorVanishes) throw;
        }
      }
    }
  }
}

}  // namespace

ChartwiseMap prolong_map_between_atlases(const AtlasManifold& source, const AtlasManifold& target,
                                         const ChartwiseMap& f, ProlongKind kind, unsigned samples,
                                         std::uint64_t seed) {
  for (const auto& [key, rep] : f.reps) {
    if (rep.in_arity != source.dim || rep.out_arity() != target.dim) {
      throw Error(ErrorCode::ArityMismatch, "chart representative has the wrong arity");
    }
  }
  std::mt19937_64 rng(seed);
  spot_check(source, target, f, samples, rng, "map");
  ChartwiseMap out;
  for (const auto& [key, rep] : f.reps) out.reps.emplace(key, prolong_map(rep, kind, source.field));
  const ProlongedAtlas ps = prolong_atlas(source, kind);
  const ProlongedAtlas pt = prolong_atlas(target, kind);
  spot_check(ps.total, pt.total, out, samples, rng, "prolonged");
  return out;
}

}  // namespace prolong
