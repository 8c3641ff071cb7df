#include "hvn/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hvn/character.hpp"
#include "hvn/duality.hpp"
#include "hvn/dynsys.hpp"
#include "hvn/errors.hpp"
#include "hvn/measure.hpp"

namespace hvn {

namespace {

// The default dual cap suits interactive use; the corpus includes abelian
// groups of order 24+ whose duals are larger.
constexpr std::size_t kSuiteDualCap = 40;

void run_check(SuiteReport& rep, const std::string& name, const std::function<std::string()>& body) {
  CheckResult r;
  r.name = name;
  try {
    r.detail = body();  // empty or a short success note; throws on failure
    r.pass = true;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  rep.checks.push_back(std::move(r));
}

[[noreturn]] void check_fail(const std::string& msg) { fail(ErrorKind::Internal, msg); }

void expect(bool cond, const std::string& msg) {
  if (!cond) check_fail(msg);
}

Perm seeded_relabeling(int points, std::mt19937& rng) {
  Perm p(points);
  for (int i = 0; i < points; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// All normal transitive systems of g with at most point_cap points: the
// rotations attached to its grouplike subsets.
std::vector<TopSystem> normal_transitive_systems(const GroupPtr& g, const TablePtr& t,
                                                 int point_cap) {
  std::vector<TopSystem> out;
  for (const GrouplikeSubset& sigma : enumerate_grouplike(t, kSuiteDualCap)) {
    TopSystem s = realize_spectrum(sigma);
    if (s.points <= point_cap) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int SuiteReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return c.pass; }));
}

int SuiteReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

SuiteReport run_chartable_suite(int max_order, bool include_gl32) {
  SuiteReport rep;
  rep.suite = "chartable";
  for (const NamedGroup& ng : corpus_groups(max_order, include_gl32)) {
    run_check(rep, "chartable/" + ng.name, [&]() -> std::string {
      TablePtr t = character_table(ng.group);
      int r = static_cast<int>(t->rows.size());
      expect(r == static_cast<int>(t->classes.size()), "row count != class count");

      long long degsum = 0;
      for (int d : t->degrees) degsum += static_cast<long long>(d) * d;
      expect(degsum == ng.group->order, "sum of squared degrees != group order");

      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          Rational ip = inner_product(*t, t->rows[i], t->rows[j]);
          expect(ip == Rational(i == j ? 1 : 0), "row orthogonality failed");
        }
      }
      for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) {
          Cyclotomic s = Cyclotomic::zero(t->root_order);
          for (int i = 0; i < r; ++i) {
            s = s + t->rows[i].values[k] * t->rows[i].values[l].conj();
          }
          Cyclotomic want = Cyclotomic::from_rational(
              t->root_order,
              k == l ? Rational(ng.group->order, static_cast<long long>(t->classes[k].size()))
                     : Rational(0));
          expect(s == want, "column orthogonality failed");
        }
      }
      std::vector<int> reg = decompose_character(*t, regular_character(*t));
      expect(reg == t->degrees, "regular character does not decompose by degrees");
      return std::to_string(r) + " irreps";
    });
  }
  return rep;
}

SuiteReport run_duality_suite(int max_order) {
  SuiteReport rep;
  rep.suite = "duality";
  for (const NamedGroup& ng : corpus_groups(max_order, false)) {
    run_check(rep, "duality/" + ng.name, [&]() -> std::string {
      TablePtr t = character_table(ng.group);
      std::vector<GrouplikeSubset> gl = enumerate_grouplike(t, kSuiteDualCap);
      std::vector<Subgroup> ns = normal_subgroups(ng.group);
      expect(gl.size() == ns.size(), "grouplike count " + std::to_string(gl.size()) +
                                         " != normal subgroup count " + std::to_string(ns.size()));

      std::set<std::vector<int>> kernel_sets;
      for (const GrouplikeSubset& sigma : gl) {
        kernel_sets.insert(joint_kernel(sigma).members);
        RoundtripReport rt = verify_rep_tan_roundtrip(sigma);
        expect(rt.ok, "rep(tan) roundtrip: " + rt.detail);
      }
      std::set<std::vector<int>> normal_sets;
      for (const Subgroup& n : ns) normal_sets.insert(n.members);
      expect(kernel_sets == normal_sets, "joint kernels do not match the normal subgroups");

      for (const Subgroup& n : ns) {
        QuotientResult q = quotient(ng.group, n);
        Compactification c = make_compactification(ng.group, q.group, q.projection.images);
        GrouplikeSubset sigma = rep_functor(t, c);
        expect(joint_kernel(sigma).members == n.members,
               "rep functor kernel mismatch for a normal subgroup");
        RoundtripReport rt = verify_tan_rep_roundtrip(t, c);
        expect(rt.ok, "tan(rep) roundtrip: " + rt.detail);
      }
      return std::to_string(gl.size()) + " grouplike";
    });
  }
  return rep;
}

SuiteReport run_abelian_suite(int max_order) {
  SuiteReport rep;
  rep.suite = "abelian";
  for (const NamedGroup& ng : corpus_abelian_groups(max_order)) {
    run_check(rep, "abelian/" + ng.name, [&]() -> std::string {
      TablePtr t = character_table(ng.group);
      DualGroup dual = pontryagin_dual(t);
      expect(dual.group->order == ng.group->order, "dual order mismatch");
      expect(group_is_isomorphic(dual.group, ng.group), "dual not isomorphic to the base group");

      std::vector<Subgroup> subs = all_subgroups(dual.group);
      for (const Subgroup& h : subs) {
        // Dual element index == irrep row index, so a subgroup of the dual
        // is literally an index set in the character table.
        GrouplikeCheck gc = is_grouplike(t, h.members);
        expect(gc.ok, "dual subgroup is not grouplike: " + gc.violation);

        Compactification c = cdual(dual, h.members);
        Subgroup back = ddual(dual, c);
        expect(back.members == h.members, "ddual(cdual) != id on a dual subgroup");

        GrouplikeSubset sigma{t, h.members};
        expect(rep_functor(t, c).members == h.members,
               "rep of cdual disagrees with the dual subgroup");
        std::vector<int> ker = hom_kernel(c.map);
        expect(joint_kernel(sigma).members == ker,
               "tan kernel disagrees with the cdual kernel");

        TranslationProperties tp = translation_properties(sigma);
        expect(tp.abelian && tp.verified, "translation target failed the abelian checks");
        expect(tp.order == static_cast<long long>(h.members.size()),
               "translation target order != |sigma|");
      }
      return std::to_string(subs.size()) + " dual subgroups";
    });
  }
  return rep;
}

SuiteReport run_envrot_suite(int max_order, int point_cap, unsigned seed) {
  SuiteReport rep;
  rep.suite = "envrot";
  std::mt19937 rng(seed);
  for (const NamedGroup& ng : corpus_groups(max_order, false)) {
    run_check(rep, "envrot/" + ng.name, [&]() -> std::string {
      TablePtr t = character_table(ng.group);
      int count = 0;
      for (TopSystem& base : normal_transitive_systems(ng.group, t, point_cap)) {
        TopSystem sys = relabel_points(base, seeded_relabeling(base.points, rng));
        for (int b : {0, sys.points - 1}) {
          PointedSystem pointed{sys, b};
          EnvResult env = env_functor(pointed);
          PointedSystem rot = rot_functor(env.comp);

          // The evaluation map h -> h(base) is the claimed isomorphism.
          const std::vector<int>& q = env.eval;
          expect(static_cast<int>(q.size()) == rot.system.points, "eval size mismatch");
          expect(rot.system.points == sys.points, "rotation has the wrong number of points");
          std::vector<bool> seen(sys.points, false);
          for (int h : q) {
            expect(h >= 0 && h < sys.points && !seen[h], "eval map is not a bijection");
            seen[h] = true;
          }
          expect(is_equivariant_map(rot.system, sys, q), "eval map is not equivariant");
          expect(q[rot.base] == pointed.base, "eval map does not respect base points");
          ++count;
        }
      }
      return std::to_string(count) + " pointed systems";
    });
  }
  return rep;
}

SuiteReport run_hvn_suite(int max_order, int point_cap, unsigned seed) {
  SuiteReport rep;
  rep.suite = "hvn";
  std::mt19937 rng(seed);
  for (const NamedGroup& ng : corpus_groups(max_order, false)) {
    run_check(rep, "hvn/" + ng.name, [&]() -> std::string {
      TablePtr t = character_table(ng.group);
      std::vector<TopSystem> systems = normal_transitive_systems(ng.group, t, point_cap);
      std::size_t base_count = systems.size();
      for (std::size_t i = 0; i < base_count; ++i) {
        systems.push_back(relabel_points(systems[i], seeded_relabeling(systems[i].points, rng)));
      }
      int pairs = 0;
      for (std::size_t i = 0; i < systems.size(); ++i) {
        for (std::size_t j = i; j < systems.size(); ++j) {
          IsoDecision dec = normal_iso_decision(t, systems[i], systems[j]);
          std::optional<Perm> oracle = brute_force_iso(systems[i], systems[j]);
          expect(dec.isomorphic == oracle.has_value(),
                 "decision disagrees with exhaustive search on pair " + std::to_string(i) + "," +
                     std::to_string(j));
          if (dec.certificate) {
            expect(is_equivariant_map(systems[i], systems[j], *dec.certificate),
                   "certificate is not equivariant");
            std::vector<bool> seen(systems[j].points, false);
            for (int y : *dec.certificate) {
              expect(y >= 0 && y < systems[j].points && !seen[y], "certificate is not a bijection");
              seen[y] = true;
            }
          }
          ++pairs;
        }
      }
      return std::to_string(pairs) + " pairs";
    });
  }
  return rep;
}

SuiteReport run_realization_suite(int max_order) {
  SuiteReport rep;
  rep.suite = "realization";
  for (const NamedGroup& ng : corpus_groups(max_order, false)) {
    run_check(rep, "realization/" + ng.name, [&]() -> std::string {
      TablePtr t = character_table(ng.group);
      std::vector<GrouplikeSubset> gl = enumerate_grouplike(t, kSuiteDualCap);
      for (const GrouplikeSubset& sigma : gl) {
        TopSystem s = realize_spectrum(sigma);
        PointSpectrum ps = point_spectrum(t, s);
        expect(ps.support() == sigma.members, "support differs from the prescribed subset");
        NormalityReport nr = is_normal(t, s);
        expect(nr.normal, "realization not normal: " + nr.diagnosis);
        for (int i : sigma.members) {
          expect(ps.mult[i] == t->degrees[i], "multiplicity != degree inside the support");
        }
      }
      return std::to_string(gl.size()) + " subsets realized";
    });
  }
  return rep;
}

namespace {

// Shared by the explicit-corpus report and the per-group suite.
std::string meastop_roundtrip_one(const TopSystem& s) {
  MeasureSystem m = meas_functor(s);
  expect(is_ergodic(m), "uniform measure on a minimal system is not ergodic");
  for (const Rational& w : m.weights) {
    expect(w == Rational(1, s.points), "meas did not produce uniform weights");
  }
  TopSystem back = top_functor(m);
  expect(back.action == s.action, "top(meas) changed the action");
  MeasureSystem m2 = meas_functor(back);
  expect(m2.weights == m.weights, "meas(top) changed the weights");
  return std::to_string(s.points) + " points";
}

}  // namespace

SuiteReport verify_equivalence_roundtrips(const std::vector<TopSystem>& corpus) {
  SuiteReport rep;
  rep.suite = "meastop-roundtrips";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const TopSystem& s = corpus[i];
    const std::string name = "roundtrip/" + std::to_string(i) + " (order " +
                             std::to_string(s.group->order) + ", " +
                             std::to_string(s.points) + " pts)";
    run_check(rep, name, [&]() { return meastop_roundtrip_one(s); });
  }
  return rep;
}

SuiteReport run_meastop_suite(int max_order, int point_cap) {
  SuiteReport rep;
  rep.suite = "meastop";
  for (const NamedGroup& ng : corpus_groups(max_order, false)) {
    run_check(rep, "meastop/" + ng.name, [&]() -> std::string {
      std::vector<TopSystem> minimal;
      for (const Subgroup& u : subgroups_up_to_conjugacy(ng.group)) {
        minimal.push_back(coset_system(ng.group, u));
      }
      for (const TopSystem& s : minimal) {
        meastop_roundtrip_one(s);
      }
      int pairs = 0;
      for (std::size_t i = 0; i < minimal.size(); ++i) {
        if (minimal[i].points > point_cap) continue;
        for (std::size_t j = i; j < minimal.size(); ++j) {
          if (minimal[j].points > point_cap) continue;
          bool top_iso = brute_force_iso(minimal[i], minimal[j]).has_value();
          std::optional<Perm> meas = measure_iso(meas_functor(minimal[i]), meas_functor(minimal[j]));
          expect(top_iso == meas.has_value(), "topological and measure verdicts disagree");
          if (meas) {
            expect(is_equivariant_map(minimal[i], minimal[j], *meas),
                   "measure isomorphism is not equivariant");
          }
          ++pairs;
        }
      }
      return std::to_string(minimal.size()) + " systems, " + std::to_string(pairs) + " pairs";
    });
  }
  return rep;
}

SuiteReport run_multbound_suite(int max_order) {
  SuiteReport rep;
  rep.suite = "multbound";
  for (const NamedGroup& ng : corpus_groups(max_order, false)) {
    run_check(rep, "multbound/" + ng.name, [&]() -> std::string {
      TablePtr t = character_table(ng.group);
      int count = 0;
      for (const Subgroup& u : subgroups_up_to_conjugacy(ng.group)) {
        TopSystem s = coset_system(ng.group, u);
        MultBoundReport mb = mult_bound_check(t, s);
        expect(mb.ok, "multiplicity exceeds degree at irrep " + std::to_string(mb.witness));
        ++count;
      }
      return std::to_string(count) + " systems";
    });
  }
  return rep;
}

SuiteReport run_gassmann_suite() {
  SuiteReport rep;
  rep.suite = "gassmann";
  run_check(rep, "gassmann/GL(3,2)", [&]() -> std::string {
    GroupPtr g = group_gl32().group;
    std::optional<GassmannPair> pair = gassmann_search(g);
    expect(pair.has_value(), "no pair found");
    expect(pair->a.points == 7 && pair->b.points == 7, "expected 7-point actions");
    expect(pair->u.members.size() == 24 && pair->v.members.size() == 24,
           "expected index-7 subgroups");
    TablePtr t = character_table(g);
    ClassFunction ca = permutation_character(*t, pair->a);
    ClassFunction cb = permutation_character(*t, pair->b);
    expect(ca.values == cb.values, "permutation characters differ");
    expect(!brute_force_iso(pair->a, pair->b).has_value(), "systems are isomorphic");
    for (int x : pair->u.members) {
      if (!std::binary_search(pair->v.members.begin(), pair->v.members.end(), x)) {
        return "pair found; subgroups differ at element " + std::to_string(x);
      }
    }
    check_fail("search returned the same subgroup twice");
  });
  run_check(rep, "gassmann/S3", [&]() -> std::string {
    expect(!gassmann_search(group_symmetric(3).group).has_value(), "unexpected pair over S3");
    return "none";
  });
  run_check(rep, "gassmann/C8", [&]() -> std::string {
    expect(!gassmann_search(group_cyclic(8)).has_value(), "unexpected pair over C8");
    return "none";
  });
  return rep;
}

}  // namespace hvn
