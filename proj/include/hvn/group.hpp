#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hvn/config.hpp"
#include "hvn/perm.hpp"

namespace hvn {

// A finite group as a full Cayley table. Invariants (checked by
// validate_group and preserved by every constructor here):
//   - table is order x order, entries in [0, order)
//   - index 0 is the two-sided identity
//   - every element has a two-sided inverse
//   - multiplication is associative
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<std::string> labels;      // element names, size order

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int element_order(int a) const;
  bool is_abelian() const;
  std::uint64_t content_hash() const;

  std::vector<int> inverse;  // filled at construction
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A homomorphism recorded by its value on every source element.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> images;  // size source->order

  int operator()(int g) const { return images[g]; }
};

// A subgroup as a sorted member list of the parent's element indices.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted, contains 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
};

// Permutation-group closure result: the abstract group plus the faithful
// defining action (elem_perms[i] is the permutation realizing element i).
struct PermutationRealization {
  GroupPtr group;
  int degree = 0;
  std::vector<Perm> elem_perms;
  std::vector<int> generator_elements;        // element index of each input generator
  std::vector<std::pair<int, int>> expr;      // elem i = expr[i].first * generator expr[i].second,
                                              // ({-1,-1} for identity, {-1, j} for generator j)
};

// Construction. All builders place the identity at index 0.
GroupPtr group_from_cayley_table(std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels = {},
                                 std::size_t order_cap = kTableOrderCap);
GroupPtr group_cyclic(int n);
GroupPtr group_dicyclic(int m);  // order 4m; m = 2 gives the quaternion group
GroupPtr group_direct_product(const GroupPtr& a, const GroupPtr& b,
                              std::size_t order_cap = kTableOrderCap);
PermutationRealization group_from_permutations(const std::vector<Perm>& generators,
                                               std::size_t order_cap = kTableOrderCap);
PermutationRealization group_symmetric(int n);
PermutationRealization group_gl32();  // GL(3,2) on the 7 nonzero vectors of F_2^3
GroupPtr group_dihedral(int n);       // order 2n

// Throws unless all FiniteGroup invariants hold (exhaustive check).
void validate_group(const FiniteGroup& g);

// Conjugacy classes, each sorted; classes ordered by (size, least member),
// which lists the identity's class first.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// All subgroups, deduplicated, sorted by (order, lexicographic members).
std::vector<Subgroup> all_subgroups(const GroupPtr& g,
                                    std::size_t order_cap = kSubgroupOrderCap);

// One representative per conjugacy class of subgroups, each the
// lexicographically least member set of its class, sorted like all_subgroups.
std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& g,
                                                std::size_t order_cap = kSubgroupOrderCap);

// All normal subgroups (unions of conjugacy classes closed under
// multiplication), sorted by (order, lexicographic members).
std::vector<Subgroup> normal_subgroups(const GroupPtr& g,
                                       std::size_t order_cap = kSubgroupOrderCap);

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& generators);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members);
bool is_normal_subgroup(const FiniteGroup& g, const Subgroup& h);
Subgroup conjugate_subgroup(const Subgroup& h, int by);
Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);

// Quotient by a normal subgroup. Coset of the identity gets index 0;
// cosets are ordered by least member. Throws NotNormal otherwise.
struct QuotientResult {
  GroupPtr group;
  GroupHom projection;
  std::vector<std::vector<int>> cosets;
};
QuotientResult quotient(const GroupPtr& g, const Subgroup& n);

// Left-coset action of g on g/u; cosets ordered by least member, so the
// subgroup itself is point 0. Returns one permutation per group element.
struct CosetAction {
  std::vector<std::vector<int>> cosets;
  std::vector<Perm> action;  // action[g] maps coset index to coset index
};
CosetAction coset_action(const FiniteGroup& g, const Subgroup& u);

// Greedy minimal generating sequence: repeatedly adjoin the least element
// outside the generated subgroup.
std::vector<int> generating_sequence(const FiniteGroup& g);

// Isomorphism by backtracking over generator images (order-profile pruned).
std::optional<GroupHom> group_isomorphism(const GroupPtr& a, const GroupPtr& b);
bool group_is_isomorphic(const GroupPtr& a, const GroupPtr& b);

void validate_hom(const GroupHom& h);
bool hom_is_surjective(const GroupHom& h);
std::vector<int> hom_kernel(const GroupHom& h);  // sorted element list

int group_exponent(const FiniteGroup& g);

}  // namespace hvn
