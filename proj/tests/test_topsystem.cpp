#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "hvn/errors.hpp"
#include "hvn/group.hpp"
#include "hvn/topsystem.hpp"

using namespace hvn;

namespace {

TopSystem regular_system(const GroupPtr& g) {
  std::vector<Perm> action(g->order);
  for (int a = 0; a < g->order; ++a) {
    action[a].resize(g->order);
    for (int x = 0; x < g->order; ++x) action[a][x] = g->mul(a, x);
  }
  return make_system(g, std::move(action));
}

}  // namespace

TEST_CASE("make_system enforces the homomorphism axioms") {
  GroupPtr c2 = group_cyclic(2);
  TopSystem ok = make_system(c2, {{0, 1, 2}, {1, 0, 2}});
  CHECK(ok.points == 3);

  // Non-identity image of the identity element.
  CHECK_THROWS_AS(make_system(c2, {{1, 0}, {0, 1}}), Error);
  // action[1]^2 != action[0].
  CHECK_THROWS_AS(make_system(c2, {{0, 1, 2}, {1, 2, 0}}), Error);
  // Declared point count at odds with the permutations.
  CHECK_THROWS_AS(make_system(c2, 4, {{0, 1, 2}, {1, 0, 2}}), Error);
}

TEST_CASE("generator images expand to a full action") {
  PermutationRealization s3 = group_symmetric(3);
  TopSystem nat = system_from_generators(s3, {{1, 2, 0}, {1, 0, 2}}, 3);
  CHECK(nat.points == 3);
  CHECK(nat.action == defining_system(s3).action);

  GroupPtr triv = group_cyclic(1);
  TopSystem fixed = system_from_generators(triv, {}, {}, 4);
  CHECK(fixed.points == 4);
  CHECK(perm_is_identity(fixed.at(0)));
}

TEST_CASE("generator images violating a relation are rejected with a witness word") {
  GroupPtr c2 = group_cyclic(2);
  try {
    system_from_generators(c2, {1}, {{1, 2, 0}}, 3);
    FAIL("order mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RelationViolation);
    // The witness names the generators by position.
    CHECK(std::string(e.what()).find("g0") != std::string::npos);
  }
}

TEST_CASE("orbits and minimality") {
  GroupPtr c4 = group_cyclic(4);
  TopSystem reg = regular_system(c4);
  CHECK(is_minimal(reg));
  CHECK(orbits(reg).size() == 1);

  TopSystem trivial2 = make_system(c4, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  CHECK_FALSE(is_minimal(trivial2));
  CHECK(orbits(trivial2).size() == 2);

  PermutationRealization s3 = group_symmetric(3);
  CHECK(is_minimal(defining_system(s3)));

  TopSystem both = disjoint_union(reg, trivial2);
  CHECK(both.points == 6);
  CHECK(orbits(both).size() == 3);
}

TEST_CASE("kernel of an action") {
  GroupPtr c4 = group_cyclic(4);
  // C4 on 2 points through the parity map: elements 0 and 2 act trivially.
  TopSystem parity = make_system(c4, {{0, 1}, {1, 0}, {0, 1}, {1, 0}});
  CHECK(kernel_of_action(parity) == std::vector<int>{0, 2});
  CHECK(kernel_of_action(regular_system(c4)) == std::vector<int>{0});
}

TEST_CASE("coset systems are transitive with the subgroup at point 0") {
  GroupPtr s3 = group_symmetric(3).group;
  for (const Subgroup& u : subgroups_up_to_conjugacy(s3)) {
    TopSystem s = coset_system(s3, u);
    CHECK(s.points * u.order() == s3->order);
    CHECK(is_minimal(s));
    // Point 0 is the coset of the identity: u fixes it.
    for (int a : u.members) CHECK(s.at(a)[0] == 0);
  }
}

TEST_CASE("relabeling conjugates the action") {
  GroupPtr c4 = group_cyclic(4);
  TopSystem reg = regular_system(c4);
  Perm p = {2, 0, 3, 1};
  TopSystem moved = relabel_points(reg, p);
  for (int g = 0; g < 4; ++g) {
    CHECK(moved.at(g) == perm_compose(p, perm_compose(reg.at(g), perm_inverse(p))));
  }
  // p itself is the equivariant bijection between the two systems.
  std::vector<int> q(p.begin(), p.end());
  CHECK(is_equivariant_map(reg, moved, q));
}

TEST_CASE("equivariance checker rejects non-commuting maps") {
  PermutationRealization s3 = group_symmetric(3);
  TopSystem nat = defining_system(s3);
  CHECK(is_equivariant_map(nat, nat, {0, 1, 2}));
  // A transposition of points does not commute with the full action.
  CHECK_FALSE(is_equivariant_map(nat, nat, {1, 0, 2}));
  // Constant maps commute only with trivial actions.
  CHECK_FALSE(is_equivariant_map(nat, nat, {0, 0, 0}));
}
