#pragma once

#include <optional>
#include <vector>

#include "hvn/config.hpp"
#include "hvn/rational.hpp"
#include "hvn/topsystem.hpp"

namespace hvn {

// Action on finitely many atoms carrying positive rational weights that sum
// to 1 and are preserved by every group element. Non-uniform invariant
// weight assignments on a single orbit do not exist, so the uniform case is
// the whole story at this scale; the checks still take arbitrary weights.
struct MeasureSystem {
  GroupPtr group;
  int atoms = 0;
  std::vector<Rational> weights;
  std::vector<Perm> action;
};

// Validates all axioms: action via make_system, positivity, total mass 1,
// and invariance of each weight along its orbit.
MeasureSystem make_measure_system(const GroupPtr& g, int atoms, std::vector<Rational> weights,
                                  std::vector<Perm> action);

// Uniform weights 1/k on a minimal system (errors NotMinimal otherwise).
MeasureSystem meas_functor(const TopSystem& s);

// Ergodic == every invariant set is null or conull == transitive, given
// that all weights are positive.
bool is_ergodic(const MeasureSystem& m);

// Forgets the weights; requires ergodicity so the result is minimal.
TopSystem top_functor(const MeasureSystem& m);

// Weight-preserving equivariant bijection, by exhaustive search (cap as in
// brute_force_iso; transitive systems are exempt from the cap).
std::optional<Perm> measure_iso(const MeasureSystem& a, const MeasureSystem& b,
                                std::size_t cap = kMeasureIsoCap);

}  // namespace hvn
