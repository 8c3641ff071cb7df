#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "hvn/character.hpp"
#include "hvn/corpus.hpp"
#include "hvn/duality.hpp"
#include "hvn/errors.hpp"
#include "hvn/group.hpp"
#include "support/tannaka_models.hpp"

using namespace hvn;
using namespace hvn::testutil;

namespace {

int row_of_degree(const CharacterTable& t, int degree, int skip = -1) {
  for (int i = 0; i < t.num_irreps(); ++i) {
    if (t.degrees[i] == degree && i != skip) return i;
  }
  REQUIRE(false);
  return -1;
}

std::vector<int> full_dual(const CharacterTable& t) {
  std::vector<int> all(t.num_irreps());
  for (int i = 0; i < t.num_irreps(); ++i) all[i] = i;
  return all;
}

}  // namespace

TEST_CASE("grouplike recognition over S3") {
  TablePtr t = character_table(group_symmetric(3).group);
  CHECK(is_grouplike(t, {0}).ok);
  CHECK(is_grouplike(t, full_dual(*t)).ok);

  const int std_row = row_of_degree(*t, 2);
  GrouplikeCheck bad = is_grouplike(t, {0, std_row});
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.violation.empty());
  // The witness names the tensor square of the standard row.
  CHECK(bad.violation.find("tensor") != std::string::npos);
}

TEST_CASE("grouplike closure") {
  TablePtr s3 = character_table(group_symmetric(3).group);
  CHECK(grouplike_closure(s3, {}).members == std::vector<int>{0});
  CHECK(grouplike_closure(s3, {row_of_degree(*s3, 2)}).members == full_dual(*s3));

  TablePtr c4 = character_table(group_cyclic(4));
  // chi^2 is the order-2 character: real, nontrivial, degree 1.
  int chi2 = -1;
  for (int i = 1; i < c4->num_irreps(); ++i) {
    if (conjugate_irrep(*c4, i) == i) chi2 = i;
  }
  REQUIRE(chi2 >= 0);
  CHECK(grouplike_closure(c4, {chi2}).members == std::vector<int>{0, chi2});
}

TEST_CASE("grouplike enumeration counts") {
  TablePtr s3 = character_table(group_symmetric(3).group);
  CHECK(enumerate_grouplike(s3).size() == 3);
  CHECK(enumerate_grouplike(character_table(group_cyclic(2))).size() == 2);
  TablePtr klein = character_table(group_direct_product(group_cyclic(2), group_cyclic(2)));
  CHECK(enumerate_grouplike(klein).size() == 5);

  TablePtr c24 = character_table(group_cyclic(24));
  CHECK_THROWS_AS(enumerate_grouplike(c24, 20), Error);
}

TEST_CASE("rep functor on identity, sign and collapse maps") {
  GroupPtr s3 = group_symmetric(3).group;
  TablePtr t = character_table(s3);

  CHECK(rep_functor(t, identity_compactification(s3)).members == full_dual(*t));

  auto ns = normal_subgroups(s3);
  QuotientResult sign = quotient(s3, ns[1]);
  Compactification c = make_compactification(s3, sign.group, sign.projection.images);
  const int sgn_row = row_of_degree(*t, 1, 0);
  CHECK(rep_functor(t, c).members == std::vector<int>{0, sgn_row});

  QuotientResult collapse = quotient(s3, full_subgroup(s3));
  Compactification all = make_compactification(s3, collapse.group, collapse.projection.images);
  CHECK(rep_functor(t, all).members == std::vector<int>{0});
}

TEST_CASE("tan functor kernels and targets over S3") {
  GroupPtr s3g = group_symmetric(3).group;
  TablePtr t = character_table(s3g);
  for (const GrouplikeSubset& sigma : enumerate_grouplike(t)) {
    Compactification c = tan_functor(sigma);
    CHECK(hom_is_surjective(c.map));
    CHECK(hom_kernel(c.map) == joint_kernel(sigma).members);
    long long degsq = 0;
    for (int i : sigma.members) degsq += static_cast<long long>(t->degrees[i]) * t->degrees[i];
    CHECK(c.target->order == degsq);
  }
  GrouplikeSubset full{t, full_dual(*t)};
  CHECK(joint_kernel(full).members == std::vector<int>{0});
  CHECK(tan_functor(full).target->order == 6);
}

TEST_CASE("grouplike subsets biject with normal subgroups") {
  for (const NamedGroup& ng : corpus_groups(16, false)) {
    TablePtr t = character_table(ng.group);
    std::vector<GrouplikeSubset> gl = enumerate_grouplike(t, 40);
    std::vector<Subgroup> ns = normal_subgroups(ng.group);
    REQUIRE(gl.size() == ns.size());

    std::set<std::vector<int>> normal_sets;
    for (const Subgroup& n : ns) normal_sets.insert(n.members);
    for (const GrouplikeSubset& sigma : gl) {
      // sigma -> its joint kernel -> back through the irreps containing it.
      Subgroup n = joint_kernel(sigma);
      CHECK(normal_sets.count(n.members) == 1);
      std::vector<int> back;
      for (int i = 0; i < t->num_irreps(); ++i) {
        const Subgroup k = kernel_of_irrep(*t, i);
        if (std::includes(k.members.begin(), k.members.end(), n.members.begin(),
                          n.members.end())) {
          back.push_back(i);
        }
      }
      CHECK(back == sigma.members);
    }
  }
}

TEST_CASE("rep/tan roundtrips across the corpus") {
  for (const NamedGroup& ng : corpus_groups(12, false)) {
    TablePtr t = character_table(ng.group);
    for (const GrouplikeSubset& sigma : enumerate_grouplike(t, 40)) {
      RoundtripReport r = verify_rep_tan_roundtrip(sigma);
      CHECK_MESSAGE(r.ok, ng.name, ": ", r.detail);
    }
    for (const Subgroup& n : normal_subgroups(ng.group)) {
      QuotientResult q = quotient(ng.group, n);
      Compactification c = make_compactification(ng.group, q.group, q.projection.images);
      RoundtripReport r = verify_tan_rep_roundtrip(t, c);
      CHECK_MESSAGE(r.ok, ng.name, ": ", r.detail);
    }
  }
}

TEST_CASE("contravariance of tan on nested grouplike subsets") {
  TablePtr t = character_table(group_dihedral(4));
  std::vector<GrouplikeSubset> gl = enumerate_grouplike(t);
  for (const GrouplikeSubset& a : gl) {
    for (const GrouplikeSubset& b : gl) {
      const bool nested = std::includes(b.members.begin(), b.members.end(), a.members.begin(),
                                        a.members.end());
      // a subset of b iff tan(b) covers tan(a): kernel containment flips.
      Subgroup ka = joint_kernel(a);
      Subgroup kb = joint_kernel(b);
      const bool covers = std::includes(ka.members.begin(), ka.members.end(),
                                        kb.members.begin(), kb.members.end());
      CHECK(nested == covers);
    }
  }
}

TEST_CASE("pontryagin dual of small abelian groups") {
  DualGroup d2 = pontryagin_dual(character_table(group_cyclic(2)));
  CHECK(group_is_isomorphic(d2.group, group_cyclic(2)));

  DualGroup d4 = pontryagin_dual(character_table(group_cyclic(4)));
  CHECK(group_is_isomorphic(d4.group, group_cyclic(4)));
  // The generator character chi(k) = i^k generates the dual.
  bool has_generator = false;
  for (int i = 0; i < 4; ++i) {
    if (d4.group->element_order(i) == 4) has_generator = true;
  }
  CHECK(has_generator);

  GroupPtr klein = group_direct_product(group_cyclic(2), group_cyclic(2));
  DualGroup dk = pontryagin_dual(character_table(klein));
  CHECK(group_is_isomorphic(dk.group, klein));

  CHECK_THROWS_AS(pontryagin_dual(character_table(group_symmetric(3).group)), Error);
}

TEST_CASE("ddual pulls back target characters") {
  GroupPtr c4 = group_cyclic(4);
  TablePtr t = character_table(c4);
  DualGroup dual = pontryagin_dual(t);

  CHECK(ddual(dual, identity_compactification(c4)).order() == 4);

  // C4 -> C2 reduction: the pullback is the order-2 subgroup of the dual.
  auto ns = normal_subgroups(c4);
  const Subgroup* order2 = nullptr;
  for (const Subgroup& n : ns) {
    if (n.order() == 2) order2 = &n;
  }
  QuotientResult q = quotient(c4, *order2);
  Compactification c = make_compactification(c4, q.group, q.projection.images);
  Subgroup pulled = ddual(dual, c);
  CHECK(pulled.order() == 2);
  for (int i : pulled.members) {
    // Pulled-back characters are trivial on the kernel.
    CHECK(t->rows[i].values[t->class_of[2]].rational_value() == Rational(1));
  }

  QuotientResult collapse = quotient(c4, full_subgroup(c4));
  Compactification onto_trivial =
      make_compactification(c4, collapse.group, collapse.projection.images);
  CHECK(ddual(dual, onto_trivial).members == std::vector<int>{0});
}

TEST_CASE("cdual builds evaluation compactifications") {
  GroupPtr c4 = group_cyclic(4);
  TablePtr t = character_table(c4);
  DualGroup dual = pontryagin_dual(t);

  Compactification trivial = cdual(dual, {0});
  CHECK(trivial.target->order == 1);

  int chi2 = -1;
  for (int i = 1; i < 4; ++i) {
    if (dual.group->element_order(i) == 2) chi2 = i;
  }
  Compactification mod2 = cdual(dual, {0, chi2});
  CHECK(mod2.target->order == 2);
  CHECK(hom_kernel(mod2.map) == std::vector<int>{0, 2});

  Compactification full = cdual(dual, {0, 1, 2, 3});
  CHECK(full.target->order == 4);
  CHECK(group_is_isomorphic(full.target, c4));
  CHECK(hom_kernel(full.map) == std::vector<int>{0});
}

TEST_CASE("ddual(cdual) is the identity on dual subgroups") {
  for (const NamedGroup& ng : corpus_abelian_groups(16)) {
    TablePtr t = character_table(ng.group);
    DualGroup dual = pontryagin_dual(t);
    for (const Subgroup& sigma : all_subgroups(dual.group)) {
      Compactification c = cdual(dual, sigma.members);
      CHECK(ddual(dual, c).members == sigma.members);
    }
  }
}

TEST_CASE("translation properties report abelianness and order") {
  TablePtr t = character_table(group_symmetric(3).group);
  const int sgn_row = row_of_degree(*t, 1, 0);

  GrouplikeSubset sign{t, {0, sgn_row}};
  TranslationProperties p = translation_properties(sign);
  CHECK(p.abelian);
  CHECK_FALSE(p.trivial);
  CHECK(p.order == 2);
  CHECK(p.verified);

  GrouplikeSubset full{t, full_dual(*t)};
  TranslationProperties pf = translation_properties(full);
  CHECK_FALSE(pf.abelian);
  CHECK(pf.order == 6);
  CHECK(pf.verified);

  GrouplikeSubset triv{t, {0}};
  TranslationProperties pt = translation_properties(triv);
  CHECK(pt.trivial);
  CHECK(pt.abelian);
  CHECK(pt.order == 1);
  CHECK(pt.verified);
}

TEST_CASE("tannaka families over explicit matrix models") {
  for (const MatrixModel& m : degree_two_models()) {
    for (const GrouplikeSubset& sigma : enumerate_grouplike(m.table)) {
      TannakaOutcome out = validate_tannaka_families(m, sigma);
      CHECK_MESSAGE(out.ok, out.detail);
    }
  }
}
