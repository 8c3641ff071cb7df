#pragma once

#include <string>
#include <vector>

#include "hvn/group.hpp"

namespace hvn {

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

// Deterministic test corpus, sorted by (order, name): every abelian group
// up to max_order (one per invariant-factor chain), dihedral and dicyclic
// families, S3 and S4, direct products of S3/D4/Q8 with small abelian
// groups, and optionally GL(3,2). Isomorphic duplicates built through
// different constructors (S3 vs D3) are kept on purpose.
std::vector<NamedGroup> corpus_groups(int max_order, bool include_gl32);

// Just the abelian part, for the dual-side checks that go up to order 32.
std::vector<NamedGroup> corpus_abelian_groups(int max_order);

}  // namespace hvn
