#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hvn/character.hpp"
#include "hvn/corpus.hpp"
#include "hvn/errors.hpp"
#include "hvn/group.hpp"
#include "hvn/topsystem.hpp"
#include "support/numeric_oracle.hpp"

using namespace hvn;
using namespace hvn::testutil;

namespace {

// Class index of the elements with the given element order; must be unique.
int unique_class_of_order(const CharacterTable& t, int order) {
  int found = -1;
  for (int c = 0; c < t.num_classes(); ++c) {
    if (t.group->element_order(t.class_rep[c]) != order) continue;
    REQUIRE(found == -1);
    found = c;
  }
  REQUIRE(found >= 0);
  return found;
}

TopSystem regular_system(const GroupPtr& g) {
  std::vector<Perm> action(g->order);
  for (int a = 0; a < g->order; ++a) {
    action[a].resize(g->order);
    for (int x = 0; x < g->order; ++x) action[a][x] = g->mul(a, x);
  }
  return make_system(g, std::move(action));
}

Cyclotomic cyc_int(int e, long long v) { return Cyclotomic::from_rational(e, Rational(v)); }

}  // namespace

TEST_CASE("table of C2") {
  TablePtr t = character_table(group_cyclic(2));
  REQUIRE(t->num_irreps() == 2);
  const int e = t->root_order;
  CHECK(t->rows[0].values == std::vector<Cyclotomic>{cyc_int(e, 1), cyc_int(e, 1)});
  CHECK(t->rows[1].values == std::vector<Cyclotomic>{cyc_int(e, 1), cyc_int(e, -1)});
}

TEST_CASE("table of the trivial group") {
  TablePtr t = character_table(group_cyclic(1));
  REQUIRE(t->num_irreps() == 1);
  CHECK(t->degrees == std::vector<int>{1});
  CHECK(t->rows[0].values[0].rational_value() == Rational(1));
}

TEST_CASE("table of S3 and its degree-2 row") {
  TablePtr t = character_table(group_symmetric(3).group);
  std::vector<int> degrees = t->degrees;
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{1, 1, 2});

  const int transpositions = unique_class_of_order(*t, 2);
  const int threecycles = unique_class_of_order(*t, 3);
  CHECK(t->classes[transpositions].size() == 3);
  CHECK(t->classes[threecycles].size() == 2);

  int std_row = -1;
  for (int i = 0; i < t->num_irreps(); ++i) {
    if (t->degrees[i] == 2) std_row = i;
  }
  REQUIRE(std_row >= 0);
  const int e = t->root_order;
  CHECK(t->rows[std_row].values[0] == cyc_int(e, 2));
  CHECK(t->rows[std_row].values[transpositions] == cyc_int(e, 0));
  CHECK(t->rows[std_row].values[threecycles] == cyc_int(e, -1));
}

TEST_CASE("numeric projections of the regular representation endorse each table") {
  for (const NamedGroup& ng : corpus_groups(16, false)) {
    TablePtr t = character_table(ng.group);
    ProjectionReport r = regular_projection_check(*t);
    CHECK_MESSAGE(r.max_error() < 1e-9, ng.name, ": error ", r.max_error());
  }
}

TEST_CASE("row and column orthogonality hold exactly") {
  for (const GroupPtr& g : {group_symmetric(4).group, group_dihedral(6), group_dicyclic(3)}) {
    TablePtr t = character_table(g);
    for (int i = 0; i < t->num_irreps(); ++i) {
      for (int j = 0; j < t->num_irreps(); ++j) {
        CHECK(inner_product(*t, t->rows[i], t->rows[j]) == Rational(i == j ? 1 : 0));
      }
    }
    const int e = t->root_order;
    for (int c = 0; c < t->num_classes(); ++c) {
      for (int d = 0; d < t->num_classes(); ++d) {
        Cyclotomic sum = Cyclotomic::zero(e);
        for (int i = 0; i < t->num_irreps(); ++i) {
          sum += t->rows[i].values[c].conj() * t->rows[i].values[d];
        }
        const long long want = c == d ? g->order / static_cast<long long>(t->classes[c].size()) : 0;
        CHECK(sum == cyc_int(e, want));
      }
    }
  }
}

TEST_CASE("degree bookkeeping and trivial row across the corpus") {
  for (const NamedGroup& ng : corpus_groups(20, false)) {
    TablePtr t = character_table(ng.group);
    CHECK(t->num_irreps() == t->num_classes());
    long long sum = 0;
    for (int d : t->degrees) sum += static_cast<long long>(d) * d;
    CHECK(sum == ng.group->order);
    for (const Cyclotomic& v : t->rows[0].values) CHECK(v.rational_value() == Rational(1));
    // Values are algebraic integers.
    for (const ClassFunction& row : t->rows) {
      for (const Cyclotomic& v : row.values) CHECK(v.is_integral());
    }
  }
}

TEST_CASE("inner products with the regular character") {
  GroupPtr s3 = group_symmetric(3).group;
  TablePtr t = character_table(s3);
  ClassFunction reg = regular_character(*t);
  for (int i = 0; i < t->num_irreps(); ++i) {
    CHECK(inner_product(*t, reg, t->rows[i]) == Rational(t->degrees[i]));
    CHECK(inner_product(*t, t->rows[i], t->rows[i]) == Rational(1));
  }
  CHECK(inner_product(*t, trivial_character(*t), trivial_character(*t)) == Rational(1));
}

TEST_CASE("natural S3 action pairs once with the standard character") {
  PermutationRealization s3 = group_symmetric(3);
  TablePtr t = character_table(s3.group);
  ClassFunction nat = permutation_character(*t, defining_system(s3));
  const int e = t->root_order;
  CHECK(nat.values[0] == cyc_int(e, 3));
  CHECK(nat.values[unique_class_of_order(*t, 2)] == cyc_int(e, 1));
  CHECK(nat.values[unique_class_of_order(*t, 3)] == cyc_int(e, 0));
  for (int i = 0; i < t->num_irreps(); ++i) {
    const Rational want(t->degrees[i] == 2 ? 1 : (i == 0 ? 1 : 0));
    CHECK(inner_product(*t, nat, t->rows[i]) == want);
  }
}

TEST_CASE("permutation characters of trivial and regular actions") {
  GroupPtr d4 = group_dihedral(4);
  TablePtr t = character_table(d4);
  const int e = t->root_order;

  std::vector<Perm> fixed(d4->order, perm_identity(5));
  ClassFunction triv5 = permutation_character(*t, make_system(d4, std::move(fixed)));
  for (const Cyclotomic& v : triv5.values) CHECK(v == cyc_int(e, 5));

  ClassFunction reg = permutation_character(*t, regular_system(d4));
  CHECK(reg.values[0] == cyc_int(e, 8));
  for (int c = 1; c < t->num_classes(); ++c) CHECK(reg.values[c].is_zero());
  CHECK(reg.values == regular_character(*t).values);
}

TEST_CASE("tensor decomposition in S3 and C4") {
  TablePtr s3 = character_table(group_symmetric(3).group);
  // The trivial row is neutral for every row.
  for (int i = 0; i < s3->num_irreps(); ++i) {
    std::vector<int> want(s3->num_irreps(), 0);
    want[i] = 1;
    CHECK(tensor_decompose(*s3, 0, i) == want);
  }
  int std_row = -1;
  for (int i = 0; i < s3->num_irreps(); ++i) {
    if (s3->degrees[i] == 2) std_row = i;
  }
  // std (x) std = triv + sgn + std: every multiplicity is 1.
  CHECK(tensor_decompose(*s3, std_row, std_row) == std::vector<int>{1, 1, 1});

  TablePtr c4 = character_table(group_cyclic(4));
  int gen_row = -1;
  for (int i = 0; i < c4->num_irreps(); ++i) {
    if (c4->rows[i].values[c4->class_of[1]] == Cyclotomic::root(c4->root_order, 1)) gen_row = i;
  }
  REQUIRE(gen_row >= 0);
  std::vector<int> sq = tensor_decompose(*c4, gen_row, gen_row);
  CHECK(std::count(sq.begin(), sq.end(), 1) == 1);
  const int sq_row = static_cast<int>(std::find(sq.begin(), sq.end(), 1) - sq.begin());
  ClassFunction prod = pointwise_product(*c4, c4->rows[gen_row], c4->rows[gen_row]);
  CHECK(find_row(*c4, prod) == sq_row);
}

TEST_CASE("tensor decomposition is commutative and respects degrees") {
  for (const NamedGroup& ng : corpus_groups(16, false)) {
    TablePtr t = character_table(ng.group);
    for (int i = 0; i < t->num_irreps(); ++i) {
      for (int j = i; j < t->num_irreps(); ++j) {
        std::vector<int> ij = tensor_decompose(*t, i, j);
        CHECK(ij == tensor_decompose(*t, j, i));
        long long dim = 0;
        for (int k = 0; k < t->num_irreps(); ++k) {
          CHECK(ij[k] >= 0);
          dim += static_cast<long long>(ij[k]) * t->degrees[k];
        }
        CHECK(dim == static_cast<long long>(t->degrees[i]) * t->degrees[j]);
      }
    }
  }
}

TEST_CASE("triple products decompose associatively") {
  for (const GroupPtr& g : {group_symmetric(3).group, group_dihedral(4), group_cyclic(6)}) {
    TablePtr t = character_table(g);
    const int n = t->num_irreps();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          // ((i*j)*k) and (i*(j*k)) as total multiplicity vectors.
          std::vector<int> left(n, 0), right(n, 0);
          std::vector<int> ij = tensor_decompose(*t, i, j);
          for (int m = 0; m < n; ++m) {
            if (ij[m] == 0) continue;
            std::vector<int> mk = tensor_decompose(*t, m, k);
            for (int r = 0; r < n; ++r) left[r] += ij[m] * mk[r];
          }
          std::vector<int> jk = tensor_decompose(*t, j, k);
          for (int m = 0; m < n; ++m) {
            if (jk[m] == 0) continue;
            std::vector<int> im = tensor_decompose(*t, i, m);
            for (int r = 0; r < n; ++r) right[r] += jk[m] * im[r];
          }
          CHECK(left == right);
        }
      }
    }
  }
}

TEST_CASE("conjugate irreducibles") {
  TablePtr s3 = character_table(group_symmetric(3).group);
  for (int i = 0; i < s3->num_irreps(); ++i) CHECK(conjugate_irrep(*s3, i) == i);

  TablePtr c4 = character_table(group_cyclic(4));
  int gen_row = -1;
  for (int i = 0; i < c4->num_irreps(); ++i) {
    if (c4->rows[i].values[c4->class_of[1]] == Cyclotomic::root(c4->root_order, 1)) gen_row = i;
  }
  const int conj = conjugate_irrep(*c4, gen_row);
  CHECK(conj != gen_row);
  CHECK(c4->rows[conj].values[c4->class_of[1]] == Cyclotomic::root(c4->root_order, 3));
  CHECK(conjugate_irrep(*c4, 0) == 0);

  for (const NamedGroup& ng : corpus_groups(16, false)) {
    TablePtr t = character_table(ng.group);
    for (int i = 0; i < t->num_irreps(); ++i) {
      const int c = conjugate_irrep(*t, i);
      CHECK(conjugate_irrep(*t, c) == i);
      bool real = true;
      for (const Cyclotomic& v : t->rows[i].values) real = real && v.conj() == v;
      CHECK((c == i) == real);
      CHECK(conjugate_classfunction(t->rows[i]).values == t->rows[c].values);
    }
  }
}

TEST_CASE("kernels of irreducibles") {
  GroupPtr s3 = group_symmetric(3).group;
  TablePtr t = character_table(s3);
  CHECK(kernel_of_irrep(*t, 0).order() == 6);
  int sgn_row = -1;
  for (int i = 0; i < t->num_irreps(); ++i) {
    if (t->degrees[i] == 1 && i != 0) sgn_row = i;
  }
  Subgroup a3 = kernel_of_irrep(*t, sgn_row);
  CHECK(a3.order() == 3);
  for (int g : a3.members) CHECK((g == 0 || s3->element_order(g) == 3));

  TablePtr c4 = character_table(group_cyclic(4));
  for (int i = 0; i < c4->num_irreps(); ++i) {
    if (c4->rows[i].values[c4->class_of[1]] == Cyclotomic::root(c4->root_order, 1)) {
      CHECK(kernel_of_irrep(*c4, i).members == std::vector<int>{0});
    }
  }
}

TEST_CASE("transitive actions fix a one-dimensional space") {
  for (const NamedGroup& ng : corpus_groups(12, false)) {
    TablePtr t = character_table(ng.group);
    for (const Subgroup& u : subgroups_up_to_conjugacy(ng.group)) {
      ClassFunction f = permutation_character(*t, coset_system(ng.group, u));
      CHECK(inner_product(*t, f, trivial_character(*t)) == Rational(1));
    }
  }
}

TEST_CASE("rows are sorted by degree then value order") {
  for (const NamedGroup& ng : corpus_groups(16, false)) {
    TablePtr t = character_table(ng.group);
    for (int i = 1; i < t->num_irreps(); ++i) {
      CHECK(t->degrees[i - 1] <= t->degrees[i]);
    }
    CHECK(t->degrees[0] == 1);
  }
}

TEST_CASE("decompose_character matches per-row inner products") {
  PermutationRealization gl = group_gl32();
  TablePtr t = character_table(gl.group);
  ClassFunction nat = permutation_character(*t, defining_system(gl));
  std::vector<int> mult = decompose_character(*t, nat);
  for (int i = 0; i < t->num_irreps(); ++i) {
    CHECK(Rational(mult[i]) == inner_product(*t, nat, t->rows[i]));
  }
}
