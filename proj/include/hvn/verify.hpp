#pragma once

#include <string>
#include <vector>

#include "hvn/corpus.hpp"
#include "hvn/topsystem.hpp"

namespace hvn {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure explanation or short success note
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool ok() const;
  int passed() const;
  int failed() const;
};

// Each suite walks the built-in corpus up to max_order and appends one
// check per (group, property) pair. All failures are collected, never
// thrown; an exception inside a property is itself recorded as a failure.

// Exact orthogonality and degree bookkeeping for every corpus table.
SuiteReport run_chartable_suite(int max_order, bool include_gl32);

// Grouplike subsets biject with normal subgroups; Rep/Tan roundtrips.
SuiteReport run_duality_suite(int max_order);

// Abelian groups only: ddual(cdual) = id on dual subgroups and agreement
// of the dual-subgroup path with the Rep/Tan path.
SuiteReport run_abelian_suite(int max_order);

// rot(env) recovers every normal transitive action up to point_cap points,
// with an explicit pointed equivariant bijection; relabeled copies are
// generated from the seed.
SuiteReport run_envrot_suite(int max_order, int point_cap, unsigned seed);

// Spectrum decision vs exhaustive search on all pairs of normal transitive
// systems up to point_cap points, including relabeled copies.
SuiteReport run_hvn_suite(int max_order, int point_cap, unsigned seed);

// realize_spectrum returns a normal system with the prescribed support for
// every grouplike subset of every corpus group.
SuiteReport run_realization_suite(int max_order);

// Exact meas/top roundtrips over an explicit corpus of minimal systems,
// one check per system; an empty corpus yields an empty report.
SuiteReport verify_equivalence_roundtrips(const std::vector<TopSystem>& corpus);

// meas/top roundtrips on all minimal systems; isomorphism verdicts agree
// between the two sides on all pairs up to point_cap points.
SuiteReport run_meastop_suite(int max_order, int point_cap);

// mult(i) <= degree(i) on every minimal corpus system.
SuiteReport run_multbound_suite(int max_order);

// GL(3,2) yields a Gassmann pair on 7 points; S3 and C8 yield none.
SuiteReport run_gassmann_suite();

}  // namespace hvn
