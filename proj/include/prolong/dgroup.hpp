#pragma once

// Affine algebraic groups, their prolongations tau(G), D-group structures
// (G, s) with s(g) = (g, sigma(g)), and exact membership in (G, s)^del.
//
// All "holds on G" identities are certified by ideal membership modulo
// Groebner bases of I(V), I(V x V) and I(V x V x V). Rational components
// are compared after clearing denominators.

#include <string>
#include <vector>

#include "prolong/prolong.hpp"

namespace prolong {

struct AffineAlgGroup {
  std::string name;
  AffineVariety variety;
  /// G x G -> G in variables (x, y), each a copy of the variety's variables.
  RationalMap mult;
  RationalMap inv;
  Vector identity;
  /// Display names for the 2n variables of mult.
  std::vector<std::string> mult_vars;

  std::size_t dim() const { return variety.ambient(); }
  Field field() const { return variety.field; }
};

/// Names `<v>1` then `<v>2` for the two factors.
std::vector<std::string> doubled_names(const std::vector<std::string>& vars);

/// A failed (or indeterminate) identity with its reduced witness
/// NF(rhs - lhs) after clearing denominators.
struct Witness {
  std::string condition;
  std::size_t component = 0;
  MultiPoly residue;
  std::vector<std::string> vars;
  bool indeterminate = false;
};

struct GroupAxiomReport {
  bool identity_on_variety = true;
  bool closure = true;
  bool associativity = true;
  bool identity = true;
  bool inverse = true;
  std::vector<Witness> witnesses;

  bool ok() const { return identity_on_variety && closure && associativity && identity && inverse; }
};

GroupAxiomReport check_group_axioms(const AffineAlgGroup& g, unsigned degree_cap = kDefaultDegreeCap);

struct TauGroup {
  AffineAlgGroup base;
  ProlongKind kind = ProlongKind::Tau;
  /// The prolonged group on tau(V) (or T(V)); mult variables are
  /// interleaved as ((x, u), (y, v)).
  AffineAlgGroup group;
  /// First n components of the prolonged product equal the base product.
  bool projection_is_homomorphism = false;
  GroupAxiomReport axioms;
};

TauGroup tau_group(const AffineAlgGroup& g, unsigned degree_cap = kDefaultDegreeCap,
                   ProlongKind kind = ProlongKind::Tau);

struct DGroupSection {
  std::string name;
  /// sigma: V -> K^n; the section is s(g) = (g, sigma(g)).
  RationalMap sigma;

  /// pi o s, which is the identity by construction of s.
  RationalMap projection_of_section() const;
  /// s as a map V -> tau(V).
  RationalMap as_map() const;
};

DGroupSection zero_section(const AffineAlgGroup& g);

struct DGroup {
  AffineAlgGroup group;
  DGroupSection section;
};

struct DGroupReport {
  bool section_ok = true;
  bool homomorphism_ok = true;
  std::vector<Witness> witnesses;
  bool ok() const { return section_ok && homomorphism_ok; }
};

/// (i) s(V) lies in tau(V); (ii) sigma(m(x, y)) = Dm.(sigma x, sigma y) + m^del
/// modulo I(V x V). With kind = Tangent, checks against T(G) instead.
DGroupReport check_dgroup(const AffineAlgGroup& g, const DGroupSection& s, unsigned degree_cap = kDefaultDegreeCap,
                          ProlongKind kind = ProlongKind::Tau);

/// nabla(m(a, b)) == tau(m)(nabla a, nabla b).
bool nabla_hom_check(const AffineAlgGroup& g, const Vector& a, const Vector& b);

/// sigma(g) == dg.
bool dpoint_check(const DGroup& d, const Vector& g);

/// m evaluated at a pair of points.
Vector multiply(const AffineAlgGroup& g, const Vector& a, const Vector& b);

}  // namespace prolong
