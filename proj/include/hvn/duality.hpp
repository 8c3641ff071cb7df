#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hvn/character.hpp"
#include "hvn/group.hpp"

namespace hvn {

// A subset of the irreducible dual closed under the grouplike conditions:
// contains the trivial index, closed under conjugation, and closed under
// taking the irreducible components of tensor products.
struct GrouplikeSubset {
  TablePtr table;
  std::vector<int> members;  // sorted irrep indices

  bool contains(int i) const;
};

// A surjection from the base group onto a (finite) target group.
struct Compactification {
  GroupPtr base;
  GroupPtr target;
  GroupHom map;  // surjective, checked by make_compactification
};

Compactification make_compactification(GroupPtr base, GroupPtr target, std::vector<int> images);
Compactification identity_compactification(const GroupPtr& g);

struct GrouplikeCheck {
  bool ok = false;
  std::string violation;  // empty when ok
};

GrouplikeCheck is_grouplike(const TablePtr& t, const std::vector<int>& members);

// Least grouplike superset of the seed.
GrouplikeSubset grouplike_closure(const TablePtr& t, const std::vector<int>& seed);

// All grouplike subsets, ordered by (size, lexicographic members). The
// enumeration walks the closure lattice: every grouplike set is reached by
// closing a smaller one joined with one more index. Throws CapExceeded when
// the dual has more than `dual_cap` irreducibles.
std::vector<GrouplikeSubset> enumerate_grouplike(const TablePtr& t,
                                                 std::size_t dual_cap = kGrouplikeDualCap);

// Irreducibles whose characters factor through the surjection, i.e. whose
// kernels contain ker(map). The result is checked to be grouplike.
GrouplikeSubset rep_functor(const TablePtr& t, const Compactification& c);

// Quotient of the base by the joint kernel of the members, as a
// compactification of the base group.
Compactification tan_functor(const GrouplikeSubset& sigma);

// Joint kernel of the member characters, as a subgroup of the base.
Subgroup joint_kernel(const GrouplikeSubset& sigma);

struct RoundtripReport {
  bool ok = false;
  std::string detail;
};

// rep(tan(sigma)) == sigma by exact index-set equality.
RoundtripReport verify_rep_tan_roundtrip(const GrouplikeSubset& sigma);

// tan(rep(c)) is isomorphic to c over the base: equal kernels and an
// explicit target isomorphism commuting with both maps.
RoundtripReport verify_tan_rep_roundtrip(const TablePtr& t, const Compactification& c);

// The dual group of an abelian group: elements are the (all degree 1) rows
// of its character table, multiplication is pointwise product. Row 0 (the
// trivial character) is the identity. Throws NotAbelian otherwise.
struct DualGroup {
  GroupPtr group;      // the dual, abstractly
  TablePtr base_table; // table of the base group; row i realizes element i
};

DualGroup pontryagin_dual(const TablePtr& t);

// Subgroup of the dual: the characters of the target pulled back along the
// surjection, located among the base group's characters.
Subgroup ddual(const DualGroup& dual, const Compactification& c);

// Compactification attached to a subgroup of the dual: the image of the
// evaluation map t -> (chi(t))_{chi in sigma}, with pointwise products.
// The target order equals |sigma| (checked).
Compactification cdual(const DualGroup& dual, const std::vector<int>& sigma_members);

struct TranslationProperties {
  bool abelian = false;    // all member degrees are 1
  bool trivial = false;    // sigma = {trivial}
  long long order = 0;     // sum of squared member degrees
  bool verified = false;   // order and abelianness match the tan target
};

TranslationProperties translation_properties(const GrouplikeSubset& sigma);

}  // namespace hvn
