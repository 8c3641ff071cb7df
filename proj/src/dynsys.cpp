#include "hvn/dynsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hvn/errors.hpp"

namespace hvn {

std::vector<int> PointSpectrum::support() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(mult.size()); ++i) {
    if (mult[i] > 0) out.push_back(i);
  }
  return out;
}

PointSpectrum point_spectrum(const TablePtr& t, const TopSystem& s) {
  if (t->group != s.group) fail(ErrorKind::GroupMismatch, "spectrum: table is for a different group");
  ClassFunction chi = permutation_character(*t, s);
  PointSpectrum ps;
  ps.table = t;
  ps.mult = decompose_character(*t, chi);
  long long total = 0;
  for (std::size_t i = 0; i < ps.mult.size(); ++i) {
    total += static_cast<long long>(ps.mult[i]) * t->degrees[i];
  }
  require_internal(total == static_cast<long long>(s.points),
                   "spectrum multiplicities do not add up to the point count");
  return ps;
}

namespace {

NormalityReport normality_from(const PointSpectrum& ps, const TopSystem& s) {
  const CharacterTable& t = *ps.table;
  NormalityReport rep;
  rep.minimal = is_minimal(s);

  std::vector<int> supp = ps.support();
  GrouplikeCheck gc = is_grouplike(ps.table, supp);
  if (!gc.ok) {
    rep.normal = false;
    rep.diagnosis = "support is not grouplike: " + gc.violation;
    return rep;
  }
  for (int i = 0; i < static_cast<int>(ps.mult.size()); ++i) {
    if (ps.mult[i] != 0 && ps.mult[i] != t.degrees[i]) {
      rep.normal = false;
      std::ostringstream os;
      os << "irrep " << i << " has multiplicity " << ps.mult[i] << ", expected 0 or " << t.degrees[i];
      rep.diagnosis = os.str();
      return rep;
    }
  }
  rep.normal = true;
  // Trivial multiplicity equals the orbit count, so a normal system is
  // automatically minimal.
  require_internal(rep.minimal, "normal system failed the minimality check");
  return rep;
}

}  // namespace

NormalityReport is_normal(const TablePtr& t, const TopSystem& s) {
  return normality_from(point_spectrum(t, s), s);
}

MultBoundReport mult_bound_check(const TablePtr& t, const TopSystem& s) {
  if (!is_minimal(s)) fail(ErrorKind::NotMinimal, "multiplicity bound requires a minimal system");
  PointSpectrum ps = point_spectrum(t, s);
  MultBoundReport rep;
  rep.ok = true;
  for (int i = 0; i < static_cast<int>(ps.mult.size()); ++i) {
    if (ps.mult[i] > t->degrees[i]) {
      rep.ok = false;
      rep.witness = i;
      return rep;
    }
  }
  return rep;
}

EnvResult env_functor(const PointedSystem& p) {
  const TopSystem& s = p.system;
  if (!is_minimal(s)) fail(ErrorKind::NotMinimal, "env: system is not minimal");
  require_internal(p.base >= 0 && p.base < s.points, "env: base point out of range");

  // Distinct action permutations form the image group H. First occurrence
  // over g = 0..n-1 fixes the element order, so the identity lands at 0.
  std::map<Perm, int> index_of;
  std::vector<Perm> perms;
  std::vector<int> cmap(s.group->order, -1);
  for (int g = 0; g < s.group->order; ++g) {
    auto it = index_of.find(s.action[g]);
    if (it == index_of.end()) {
      int idx = static_cast<int>(perms.size());
      index_of.emplace(s.action[g], idx);
      perms.push_back(s.action[g]);
      cmap[g] = idx;
    } else {
      cmap[g] = it->second;
    }
  }
  require_internal(cmap[0] == 0, "env: identity permutation not at index 0");

  int h = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(h, std::vector<int>(h, -1));
  for (int a = 0; a < h; ++a) {
    for (int b = 0; b < h; ++b) {
      Perm prod = perm_compose(perms[a], perms[b]);
      auto it = index_of.find(prod);
      require_internal(it != index_of.end(), "env: image not closed under composition");
      table[a][b] = it->second;
    }
  }
  std::vector<std::string> labels(h);
  for (int a = 0; a < h; ++a) labels[a] = "t" + std::to_string(a);
  GroupPtr target = group_from_cayley_table(table, labels);

  EnvResult res;
  res.comp = make_compactification(s.group, target, cmap);
  res.elem_perms = std::move(perms);
  res.eval.resize(h);
  for (int a = 0; a < h; ++a) res.eval[a] = res.elem_perms[a][p.base];
  return res;
}

PointedSystem rot_functor(const Compactification& c) {
  const GroupPtr& tgt = c.target;
  int h = tgt->order;
  TopSystem sys;
  sys.group = c.base;
  sys.points = h;
  sys.action.resize(c.base->order);
  for (int g = 0; g < c.base->order; ++g) {
    Perm a(h);
    for (int x = 0; x < h; ++x) a[x] = tgt->mul(c.map(g), x);
    sys.action[g] = std::move(a);
  }
  // Left translations are automorphisms of the coset structure; the checks
  // in make_system re-verify the action axioms.
  sys = make_system(sys.group, sys.points, sys.action);
  return PointedSystem{std::move(sys), 0};
}

PointedSystem quasi_rotation(const Compactification& c, const Subgroup& u) {
  require_internal(u.parent == c.target, "quasi_rotation: subgroup of the wrong group");
  CosetAction ca = coset_action(*c.target, u);
  int k = static_cast<int>(ca.cosets.size());
  TopSystem sys;
  sys.group = c.base;
  sys.points = k;
  sys.action.resize(c.base->order);
  for (int g = 0; g < c.base->order; ++g) sys.action[g] = ca.action[c.map(g)];
  sys = make_system(sys.group, sys.points, sys.action);
  return PointedSystem{std::move(sys), 0};
}

namespace {

// Verifies q is a bijection a -> b commuting with every group element.
bool check_certificate(const TopSystem& a, const TopSystem& b, const Perm& q) {
  if (a.points != b.points) return false;
  if (static_cast<int>(q.size()) != a.points || !is_perm(q)) return false;
  for (int g = 0; g < a.group->order; ++g) {
    for (int x = 0; x < a.points; ++x) {
      if (q[a.action[g][x]] != b.action[g][q[x]]) return false;
    }
  }
  return true;
}

}  // namespace

IsoDecision normal_iso_decision(const TablePtr& t, const TopSystem& a, const TopSystem& b) {
  if (!same_group(a, b)) fail(ErrorKind::GroupMismatch, "iso: systems live over different groups");
  PointSpectrum sa = point_spectrum(t, a);
  PointSpectrum sb = point_spectrum(t, b);
  NormalityReport ra = normality_from(sa, a);
  if (!ra.normal) fail(ErrorKind::NotNormal, "iso: first system is not normal: " + ra.diagnosis);
  NormalityReport rb = normality_from(sb, b);
  if (!rb.normal) fail(ErrorKind::NotNormal, "iso: second system is not normal: " + rb.diagnosis);

  IsoDecision dec;
  if (sa.mult != sb.mult) {
    dec.isomorphic = false;
    dec.note = "spectra differ";
    return dec;
  }

  // Equal spectra force equal action kernels, so x -> action_b[t](0) for
  // any t with action_a[t](0) = x is a well-defined map; the certificate
  // check below confirms equivariance and bijectivity.
  Perm q(a.points, -1);
  for (int g = 0; g < a.group->order; ++g) {
    int x = a.action[g][0];
    int y = b.action[g][0];
    if (q[x] == -1) {
      q[x] = y;
    } else {
      require_internal(q[x] == y, "iso: transport map is not well defined");
    }
  }
  for (int x = 0; x < a.points; ++x) {
    require_internal(q[x] != -1, "iso: transport map left a point unassigned");
  }
  require_internal(check_certificate(a, b, q), "iso: transport certificate failed verification");
  dec.isomorphic = true;
  dec.certificate = q;
  dec.note = "spectra agree";
  return dec;
}

namespace {

struct BruteSearch {
  const TopSystem& a;
  const TopSystem& b;
  Perm q;
  std::vector<bool> used;

  BruteSearch(const TopSystem& sa, const TopSystem& sb)
      : a(sa), b(sb), q(sa.points, -1), used(sb.points, false) {}

  // Assigns q[x] = y and propagates along every group element, recording
  // each new assignment in `trail` for rollback.
  bool assign(int x, int y, std::vector<int>& trail) {
    if (q[x] == y) return true;
    if (q[x] != -1 || used[y]) return false;
    q[x] = y;
    used[y] = true;
    trail.push_back(x);
    for (int g = 0; g < a.group->order; ++g) {
      if (!assign(a.action[g][x], b.action[g][y], trail)) return false;
    }
    return true;
  }

  void rollback(std::vector<int>& trail, std::size_t from) {
    while (trail.size() > from) {
      int x = trail.back();
      trail.pop_back();
      used[q[x]] = false;
      q[x] = -1;
    }
  }

  bool search(std::vector<int>& trail) {
    int x = -1;
    for (int i = 0; i < a.points; ++i) {
      if (q[i] == -1) {
        x = i;
        break;
      }
    }
    if (x == -1) return true;
    for (int y = 0; y < b.points; ++y) {
      if (used[y]) continue;
      std::size_t mark = trail.size();
      if (assign(x, y, trail) && search(trail)) return true;
      rollback(trail, mark);
    }
    return false;
  }
};

}  // namespace

std::optional<Perm> brute_force_iso(const TopSystem& a, const TopSystem& b, std::size_t cap) {
  if (!same_group(a, b)) fail(ErrorKind::GroupMismatch, "iso: systems live over different groups");
  if (a.points != b.points) return std::nullopt;
  bool transitive = orbits(a).size() == 1 && orbits(b).size() == 1;
  if (!transitive && static_cast<std::size_t>(a.points) > cap) {
    fail(ErrorKind::CapExceeded,
         "iso: exhaustive search limited to " + std::to_string(cap) + " points for non-transitive systems");
  }
  BruteSearch bs(a, b);
  std::vector<int> trail;
  if (!bs.search(trail)) return std::nullopt;
  require_internal(check_certificate(a, b, bs.q), "iso: search produced an invalid certificate");
  return bs.q;
}

TopSystem realize_spectrum(const GrouplikeSubset& sigma) {
  Compactification c = tan_functor(sigma);
  PointedSystem p = rot_functor(c);
  PointSpectrum ps = point_spectrum(sigma.table, p.system);
  require_internal(ps.support() == sigma.members, "realization support mismatch");
  require_internal(normality_from(ps, p.system).normal, "realization is not normal");
  return p.system;
}

std::optional<GassmannPair> gassmann_search(const GroupPtr& g, std::size_t subgroup_cap) {
  TablePtr t = character_table(g);
  std::vector<Subgroup> reps = subgroups_up_to_conjugacy(g, subgroup_cap);

  // Group the conjugacy class representatives by index, then compare the
  // fixed-point characters of their coset actions.
  std::map<std::size_t, std::vector<std::size_t>> by_index;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    by_index[g->order / reps[i].members.size()].push_back(i);
  }

  for (const auto& [index, ids] : by_index) {
    if (index <= 1) continue;
    std::vector<TopSystem> systems;
    std::vector<std::vector<int>> spectra;
    for (std::size_t id : ids) {
      TopSystem s = coset_system(g, reps[id]);
      spectra.push_back(point_spectrum(t, s).mult);
      systems.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (spectra[i] != spectra[j]) continue;
        // Same spectrum but non-conjugate subgroups; confirm the coset
        // actions really are non-isomorphic.
        if (brute_force_iso(systems[i], systems[j]).has_value()) continue;
        GassmannPair pair{reps[ids[i]], reps[ids[j]], systems[i], systems[j]};
        return pair;
      }
    }
  }
  return std::nullopt;
}

bool spectrum_monotonic_under_factor(const TablePtr& t, const TopSystem& a, const TopSystem& b,
                                     const std::vector<int>& q) {
  if (!same_group(a, b)) fail(ErrorKind::GroupMismatch, "factor: systems live over different groups");
  if (static_cast<int>(q.size()) != a.points) {
    fail(ErrorKind::NotEquivariant, "factor: map size does not match the source point count");
  }
  std::vector<bool> hit(b.points, false);
  for (int x = 0; x < a.points; ++x) {
    if (q[x] < 0 || q[x] >= b.points) fail(ErrorKind::NotEquivariant, "factor: image point out of range");
    hit[q[x]] = true;
  }
  for (int y = 0; y < b.points; ++y) {
    if (!hit[y]) fail(ErrorKind::NotSurjective, "factor: point " + std::to_string(y) + " has no preimage");
  }
  for (int g = 0; g < a.group->order; ++g) {
    for (int x = 0; x < a.points; ++x) {
      if (q[a.action[g][x]] != b.action[g][q[x]]) {
        fail(ErrorKind::NotEquivariant, "factor: map does not commute at point " + std::to_string(x));
      }
    }
  }
  PointSpectrum sa = point_spectrum(t, a);
  PointSpectrum sb = point_spectrum(t, b);
  for (std::size_t i = 0; i < sa.mult.size(); ++i) {
    if (sb.mult[i] > sa.mult[i]) return false;
  }
  return true;
}

}  // namespace hvn
