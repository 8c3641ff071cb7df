#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hvn/cyclotomic.hpp"
#include "hvn/group.hpp"
#include "hvn/topsystem.hpp"

namespace hvn {

// A class function: one exact cyclotomic value per conjugacy class, in the
// class order of the table it belongs to.
struct ClassFunction {
  std::vector<Cyclotomic> values;
};

// Complete character table over exact cyclotomics. This module computes
// values only; explicit matrix realizations of irreducibles are out of
// scope (tests carry hand-built models where they are needed).
//
// Invariants established at construction and asserted before returning:
//   - rows are pairwise orthogonal and have norm 1 under inner_product
//   - columns satisfy the dual orthogonality relations
//   - sum of squared degrees equals the group order
//   - all values are algebraic integers (integral coefficient vectors)
//   - row 0 is the trivial character; rows sorted by (degree, value order)
struct CharacterTable {
  GroupPtr group;
  std::vector<std::vector<int>> classes;  // conjugacy classes, spec order
  std::vector<int> class_of;              // element -> class index
  std::vector<int> class_rep;             // least member of each class
  std::vector<int> inverse_class;         // class of the inverses
  int root_order = 1;                     // e, a multiple of the group exponent
  std::vector<ClassFunction> rows;        // irreducible characters
  std::vector<int> degrees;               // degrees[i] = rows[i] at identity

  // Precomputed at construction: conjugation and tensor structure are the
  // hot queries of the grouplike-closure walks, so they are answered from
  // these caches rather than recomputed per call.
  std::vector<int> conj_row;                           // index of the conjugate row
  std::vector<std::vector<std::vector<int>>> tensor;   // tensor[i][j] = multiplicities

  int num_classes() const { return static_cast<int>(classes.size()); }
  int num_irreps() const { return static_cast<int>(rows.size()); }
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Burnside-Dixon: class algebra over F_p (p = 1 mod exponent, p > 2*sqrt|G|),
// simultaneous eigenvectors, degrees from the orthogonality relation, exact
// lift through eigenvalue multiplicities of cyclic restrictions.
TablePtr character_table(const GroupPtr& g);

// (1/|G|) sum over classes of |C| * f(C) * conj(g(C)). The result must be
// rational (always true when g is irreducible and f is a genuine character);
// otherwise throws NotRational.
Rational inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g);

// Multiplicity vector of irreducibles in rows[i] (x) rows[j]; checked
// against the degree bookkeeping sum(mult * degree) = deg_i * deg_j.
std::vector<int> tensor_decompose(const CharacterTable& t, int i, int j);

// Multiplicities <f, chi_i> of an arbitrary genuine character; throws
// NotRational / Internal if any multiplicity is non-integral or negative.
std::vector<int> decompose_character(const CharacterTable& t, const ClassFunction& f);

// Index of the complex-conjugate character.
int conjugate_irrep(const CharacterTable& t, int i);

// Fixed-point counts of the action per class, as a class function.
ClassFunction permutation_character(const CharacterTable& t, const TopSystem& s);

// {g : chi(g) = chi(1)}; always a normal subgroup (checked).
Subgroup kernel_of_irrep(const CharacterTable& t, int i);

ClassFunction trivial_character(const CharacterTable& t);
ClassFunction regular_character(const CharacterTable& t);
ClassFunction pointwise_product(const CharacterTable& t, const ClassFunction& a,
                                const ClassFunction& b);
ClassFunction conjugate_classfunction(const ClassFunction& f);

// Row index whose values equal f exactly, if any.
std::optional<int> find_row(const CharacterTable& t, const ClassFunction& f);

// Pull a class function on the quotient side of a surjection back to the
// source group's classes, rebased to the source table's root order.
ClassFunction pullback_classfunction(const CharacterTable& source_table,
                                     const CharacterTable& target_table, const GroupHom& hom,
                                     const ClassFunction& f);

std::uint64_t table_hash(const CharacterTable& t);

}  // namespace hvn
