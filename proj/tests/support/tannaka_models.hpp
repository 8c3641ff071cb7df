#pragma once

#include <string>
#include <vector>

#include "hvn/character.hpp"
#include "hvn/duality.hpp"
#include "hvn/group.hpp"
#include "support/cycmatrix.hpp"

namespace hvn::testutil {

// Explicit unitary matrix model of every irreducible of one group, with
// exact cyclotomic entries at the table's root order. rep[i][g] realizes
// table row i at element g; construction verifies the homomorphism
// property on all pairs, unitarity, and that traces match the table rows
// one-to-one.
struct MatrixModel {
  std::string name;
  GroupPtr group;
  TablePtr table;
  std::vector<std::vector<CycMatrix>> rep;
};

MatrixModel model_cyclic(int n);
MatrixModel model_s3();
MatrixModel model_d4();
MatrixModel model_q8();

// The groups whose irreducibles all admit hand-written models of degree
// at most 2: cyclic up to order 8, S3, D4, Q8.
std::vector<MatrixModel> degree_two_models();

// Basis of the intertwiner space {T : T from(g) = to(g) T for all g},
// computed as an exact null space. T maps the `from` space into the `to`
// space, so each basis matrix is (to-degree) x (from-degree).
std::vector<CycMatrix> intertwiner_basis(const std::vector<CycMatrix>& from,
                                         const std::vector<CycMatrix>& to);

struct TannakaOutcome {
  bool ok = false;
  std::string detail;
};

// Literal check that the tensor-preserving, self-adjoint, unital natural
// families over the category generated by sigma are exactly the evaluation
// families g -> (rep[i][g]):
//   - every evaluation family satisfies unitality, conjugation naturality
//     and naturality along a basis of every tensor-component intertwiner
//     space, all by exact matrix arithmetic;
//   - intertwiner space dimensions equal the table's multiplicities;
//   - the distinctness pattern of the families matches the fibers of
//     tan_functor(sigma), and their count is the target order;
//   - the matrix-coefficient functions of sigma span exactly the functions
//     constant on those fibers (rank check including coset indicators).
// The last point pins completeness: a natural family induces a functional
// on the coefficient span, well defined by naturality and multiplicative
// by tensor preservation; on the fiber indicators, which are orthogonal
// idempotents summing to 1, such a functional is evaluation at one fiber,
// so no families exist beyond the enumerated ones.
TannakaOutcome validate_tannaka_families(const MatrixModel& m, const GrouplikeSubset& sigma);

}  // namespace hvn::testutil
