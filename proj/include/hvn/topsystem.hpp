#pragma once

#include <string>
#include <vector>

#include "hvn/group.hpp"
#include "hvn/perm.hpp"

namespace hvn {

// A finite topological system: an action of the group on {0..points-1},
// one permutation per group element. Invariants (checked by make_system):
// action[0] is the identity and action[g*h] = action[g] o action[h].
struct TopSystem {
  GroupPtr group;
  int points = 0;
  std::vector<Perm> action;  // size group->order

  const Perm& at(int g) const { return action[g]; }
};

struct PointedSystem {
  TopSystem system;
  int base = 0;
};

TopSystem make_system(GroupPtr group, std::vector<Perm> action);
TopSystem make_system(GroupPtr group, int points, std::vector<Perm> action);

// Expand generator images to a full action table, verifying the images
// respect every relation of the group. On conflict throws RelationViolation
// naming a witness word in the generators.
TopSystem system_from_generators(const GroupPtr& group, const std::vector<int>& generator_elements,
                                 const std::vector<Perm>& generator_images, int points);

// Convenience overload for groups built by group_from_permutations.
TopSystem system_from_generators(const PermutationRealization& realization,
                                 const std::vector<Perm>& generator_images, int points);

std::vector<std::vector<int>> orbits(const TopSystem& s);
bool is_minimal(const TopSystem& s);  // single orbit

// Elements acting as the identity permutation, sorted.
std::vector<int> kernel_of_action(const TopSystem& s);

// The defining action of a permutation realization as a TopSystem.
TopSystem defining_system(const PermutationRealization& r);

// Left-translation action on the cosets of u, points ordered by least
// coset member (the subgroup itself is point 0).
TopSystem coset_system(const GroupPtr& g, const Subgroup& u);

// Conjugate a system by a relabeling of points: new action = p o old o p^-1.
TopSystem relabel_points(const TopSystem& s, const Perm& p);

// Disjoint union (a on points [0, a.points), b shifted above them).
TopSystem disjoint_union(const TopSystem& a, const TopSystem& b);

bool same_group(const TopSystem& a, const TopSystem& b);

// True iff q (a map a.points -> b.points) satisfies q o a.action = b.action o q.
bool is_equivariant_map(const TopSystem& a, const TopSystem& b, const std::vector<int>& q);

}  // namespace hvn
