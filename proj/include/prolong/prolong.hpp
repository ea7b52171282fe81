#pragma once

// Prolongation calculus on polynomial and rational maps and on affine
// varieties: the coefficient-derivative correction f^del, the tangent map
// D(f), the twisted prolongation tau(f) = (f, Df.u + f^del), the varieties
// T(V) and tau(V), the section nabla(a) = (a, da) and fiber computations.

#include <optional>
#include <string>
#include <vector>

#include "prolong/ideals.hpp"
#include "prolong/linear.hpp"
#include "prolong/maps.hpp"

namespace prolong {

enum class ProlongKind { Tangent, Tau };

struct AffineVariety {
  std::string name;
  std::vector<std::string> vars;
  IdealBasis ideal;
  Field field = Field::Q;
  /// Rank of the Jacobian of the generators at smooth points, when known.
  std::optional<std::size_t> declared_rank;

  AffineVariety() = default;
  AffineVariety(std::string name, std::vector<std::string> vars, std::vector<MultiPoly> gens, Field field);

  std::size_t ambient() const { return vars.size(); }
  const std::vector<MultiPoly>& gens() const { return ideal.gens; }
  bool contains(std::span<const BaseElem> point) const;
};

/// Fiber variable name for a base variable.
std::string fiber_name(const std::string& var);
std::vector<std::string> prolonged_names(const std::vector<std::string>& vars);

struct ProlongedVariety {
  AffineVariety base;
  ProlongKind kind = ProlongKind::Tau;
  /// Variables (x_1..x_n, u_1..u_n).
  AffineVariety total;
};

struct FiberPoint {
  Vector base;
  Vector fiber;
  bool operator==(const FiberPoint&) const = default;
};

struct AffineFiberDescription {
  Vector particular;
  std::vector<Vector> kernel;
};

struct Correspondence {
  std::string name;
  AffineVariety left;
  AffineVariety right;
  /// Variables: left vars followed by right vars.
  AffineVariety graph;
};

/// Affine map u -> linear*u + offset between fiber coordinate spaces.
struct FiberTransfer {
  Matrix linear;
  Vector offset;
  bool invertible = false;
  /// Present when invertible: v -> inverse_linear*v + inverse_offset.
  std::optional<Matrix> inverse_linear;
  std::optional<Vector> inverse_offset;

  Vector apply(const Vector& u) const;
};

PolyMap f_del(const PolyMap& f, Field field);
RationalMap f_del(const RationalMap& f, Field field);

/// D(f)(x, u) = (f(x), Df_x u).
PolyMap tangent_map(const PolyMap& f);
RationalMap tangent_map(const RationalMap& f);

/// tau(f)(x, u) = (f(x), Df_x u + f^del(x)).
PolyMap tau_map(const PolyMap& f, Field field);
RationalMap tau_map(const RationalMap& f, Field field);

RationalMap prolong_map(const RationalMap& f, ProlongKind kind, Field field);

ProlongedVariety tangent_variety(const AffineVariety& v);
ProlongedVariety tau_variety(const AffineVariety& v);
ProlongedVariety prolong_variety(const AffineVariety& v, ProlongKind kind);

/// V x W with variables of V followed by variables of W.
AffineVariety product(const AffineVariety& v, const AffineVariety& w);

/// (a, da, ..., d^r a).
std::vector<Vector> nabla(const Vector& a, unsigned r, Field field);

/// True iff every generator of tau(V) vanishes at (a, da).
bool check_nabla_in_tau(const AffineVariety& v, const Vector& a);

/// Rank of the Jacobian of the generators at a.
std::size_t jacobian_rank(const AffineVariety& v, const Vector& a);

/// Fiber of tau(V) (or T(V)) over a: solutions u of DP_a u = -P^del(a).
AffineFiberDescription fiber_solve(const AffineVariety& v, const Vector& a, ProlongKind kind = ProlongKind::Tau);

/// Affine bijection between tau(left)_a and tau(right)_b cut out by
/// tau(graph) at (a, b).
FiberTransfer correspondence_transfer(const Correspondence& c, const Vector& a, const Vector& b);

}  // namespace prolong
