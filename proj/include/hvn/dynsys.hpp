#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hvn/character.hpp"
#include "hvn/config.hpp"
#include "hvn/duality.hpp"
#include "hvn/topsystem.hpp"

namespace hvn {

// Point spectrum of a system: multiplicity of each irreducible in the
// function space of the action. Bookkeeping sum(mult * degree) = points is
// checked at construction.
struct PointSpectrum {
  TablePtr table;
  std::vector<int> mult;  // per irrep index

  std::vector<int> support() const;  // indices with positive multiplicity
};

PointSpectrum point_spectrum(const TablePtr& t, const TopSystem& s);

// Two-clause normality test, run on any system: (1) the support is
// grouplike, (2) every multiplicity is 0 or the full degree. Minimality is
// reported separately (normality already forces it here, since the trivial
// multiplicity is the orbit count).
struct NormalityReport {
  bool normal = false;
  bool minimal = false;
  std::string diagnosis;  // names the first violated clause when not normal
};

NormalityReport is_normal(const TablePtr& t, const TopSystem& s);

// mult(i) <= degree(i) for every irrep; requires a minimal system.
struct MultBoundReport {
  bool ok = false;
  int witness = -1;  // first violating irrep when not ok
};

MultBoundReport mult_bound_check(const TablePtr& t, const TopSystem& s);

// Enveloping data of a pointed minimal system: the image group H of the
// action, the surjection onto it, and the evaluation map h -> h(base).
struct EnvResult {
  Compactification comp;
  std::vector<Perm> elem_perms;  // realization of each target element
  std::vector<int> eval;         // eval[h] = elem_perms[h][base]
};

EnvResult env_functor(const PointedSystem& p);

// Left-translation system of the target, pointed at the identity.
PointedSystem rot_functor(const Compactification& c);

// Translation action on cosets of a subgroup of the target, pulled back
// along the compactification; point 0 is the coset of the identity.
PointedSystem quasi_rotation(const Compactification& c, const Subgroup& u);

// Decision procedure for normal systems: isomorphic iff the spectra agree;
// a positive answer carries an explicit equivariant bijection, checked by
// composition before returning. Throws NotNormal naming the offending side.
struct IsoDecision {
  bool isomorphic = false;
  std::optional<Perm> certificate;
  std::string note;
};

IsoDecision normal_iso_decision(const TablePtr& t, const TopSystem& a, const TopSystem& b);

// Exhaustive equivariant-bijection search. Allowed when the systems are
// transitive (point-stabilizer propagation) or have at most `cap` points.
std::optional<Perm> brute_force_iso(const TopSystem& a, const TopSystem& b,
                                    std::size_t cap = kIsoPointCap);

// Canonical model with prescribed spectrum support: the rotation of the
// quotient attached to sigma. Asserts the support comes back exactly and
// the result is normal.
TopSystem realize_spectrum(const GrouplikeSubset& sigma);

// Pair of non-isomorphic transitive systems with identical spectra, if one
// exists over this group: non-conjugate subgroups of equal index whose
// coset actions share the permutation character.
struct GassmannPair {
  Subgroup u;
  Subgroup v;
  TopSystem a;
  TopSystem b;
};

std::optional<GassmannPair> gassmann_search(const GroupPtr& g,
                                            std::size_t subgroup_cap = kSubgroupOrderCap);

// Checks q : a -> b is an equivariant surjection (errors NotEquivariant /
// NotSurjective) and that the factor's spectrum embeds multiplicity-wise.
bool spectrum_monotonic_under_factor(const TablePtr& t, const TopSystem& a, const TopSystem& b,
                                     const std::vector<int>& q);

}  // namespace hvn
