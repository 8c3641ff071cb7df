#include "hvn/topsystem.hpp"

#include <algorithm>

#include "hvn/errors.hpp"

namespace hvn {

TopSystem make_system(GroupPtr group, std::vector<Perm> action) {
  TopSystem s;
  s.group = std::move(group);
  s.action = std::move(action);
  require_internal(static_cast<int>(s.action.size()) == s.group->order,
                   "action table must have one permutation per element");
  require_internal(!s.action.empty(), "empty action");
  s.points = static_cast<int>(s.action[0].size());
  for (const Perm& p : s.action) {
    require_internal(static_cast<int>(p.size()) == s.points, "action degree mismatch");
    require_internal(is_perm(p), "action entry is not a permutation");
  }
  require_internal(perm_is_identity(s.action[0]), "identity must act trivially");
  const FiniteGroup& g = *s.group;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      require_internal(s.action[g.table[a][b]] == perm_compose(s.action[a], s.action[b]),
                       "action is not a homomorphism");
  return s;
}

TopSystem make_system(GroupPtr group, int points, std::vector<Perm> action) {
  TopSystem s = make_system(std::move(group), std::move(action));
  require_internal(s.points == points, "declared point count does not match the action");
  return s;
}

TopSystem system_from_generators(const GroupPtr& group, const std::vector<int>& generator_elements,
                                 const std::vector<Perm>& generator_images, int points) {
  if (generator_elements.size() != generator_images.size())
    fail(ErrorKind::Parse, "generator/image count mismatch");
  for (const Perm& p : generator_images) {
    if (static_cast<int>(p.size()) != points || !is_perm(p))
      fail(ErrorKind::Parse, "generator image is not a permutation of the point set");
  }
  Subgroup gen = subgroup_generated(group, generator_elements);
  if (gen.order() != group->order)
    fail(ErrorKind::Parse, "given elements do not generate the group");

  const FiniteGroup& g = *group;
  const int n = g.order;
  std::vector<Perm> action(n);
  std::vector<char> known(n, 0);
  std::vector<std::string> word(n);
  action[0] = perm_identity(points);
  known[0] = 1;
  word[0] = "e";

  auto set_or_check = [&](int elem, const Perm& p, const std::string& w) {
    if (!known[elem]) {
      action[elem] = p;
      known[elem] = 1;
      word[elem] = w;
      return true;
    }
    if (action[elem] != p)
      fail(ErrorKind::RelationViolation,
           "images violate group relations: words \"" + word[elem] + "\" and \"" + w +
               "\" name the same element but act differently");
    return false;
  };

  for (std::size_t i = 0; i < generator_elements.size(); ++i)
    set_or_check(generator_elements[i], generator_images[i], "g" + std::to_string(i));

  // Worklist closure under right-multiplication by generators; every
  // element is reached because the inputs generate the group.
  std::vector<int> work;
  for (int x = 0; x < n; ++x)
    if (known[x]) work.push_back(x);
  for (std::size_t i = 0; i < work.size(); ++i) {
    int x = work[i];
    for (std::size_t gi = 0; gi < generator_elements.size(); ++gi) {
      int y = g.table[x][generator_elements[gi]];
      Perm p = perm_compose(action[x], generator_images[gi]);
      std::string w = (word[x] == "e") ? "g" + std::to_string(gi)
                                       : word[x] + "*g" + std::to_string(gi);
      bool added = !known[y];
      set_or_check(y, p, w);
      if (added) work.push_back(y);
    }
  }
  for (int x = 0; x < n; ++x)
    require_internal(known[x], "generator closure did not reach every element");

  // Full homomorphism verification; a conflict is a relation violation.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (action[g.table[a][b]] != perm_compose(action[a], action[b]))
        fail(ErrorKind::RelationViolation,
             "images violate group relations at word \"" + word[a] + "*" + word[b] + "\"");
    }

  TopSystem s;
  s.group = group;
  s.points = points;
  s.action = std::move(action);
  return s;
}

TopSystem system_from_generators(const PermutationRealization& realization,
                                 const std::vector<Perm>& generator_images, int points) {
  return system_from_generators(realization.group, realization.generator_elements,
                                generator_images, points);
}

std::vector<std::vector<int>> orbits(const TopSystem& s) {
  std::vector<int> orbit_of(s.points, -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < s.points; ++x) {
    if (orbit_of[x] >= 0) continue;
    std::vector<int> orb;
    for (const Perm& p : s.action) {
      int y = p[x];
      if (orbit_of[y] < 0) {
        orbit_of[y] = static_cast<int>(out.size());
        orb.push_back(y);
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_minimal(const TopSystem& s) { return orbits(s).size() == 1; }

std::vector<int> kernel_of_action(const TopSystem& s) {
  std::vector<int> k;
  for (int g = 0; g < s.group->order; ++g)
    if (perm_is_identity(s.action[g])) k.push_back(g);
  return k;
}

TopSystem defining_system(const PermutationRealization& r) {
  TopSystem s;
  s.group = r.group;
  s.points = r.degree;
  s.action = r.elem_perms;
  return s;
}

TopSystem coset_system(const GroupPtr& g, const Subgroup& u) {
  CosetAction ca = coset_action(*g, u);
  TopSystem s;
  s.group = g;
  s.points = static_cast<int>(ca.cosets.size());
  s.action = std::move(ca.action);
  return s;
}

TopSystem relabel_points(const TopSystem& s, const Perm& p) {
  require_internal(static_cast<int>(p.size()) == s.points && is_perm(p),
                   "relabeling must be a permutation of the points");
  TopSystem out;
  out.group = s.group;
  out.points = s.points;
  Perm pinv = perm_inverse(p);
  out.action.reserve(s.action.size());
  for (const Perm& a : s.action) out.action.push_back(perm_compose(perm_compose(p, a), pinv));
  return out;
}

TopSystem disjoint_union(const TopSystem& a, const TopSystem& b) {
  require_internal(same_group(a, b), "disjoint union needs a common acting group");
  TopSystem out;
  out.group = a.group;
  out.points = a.points + b.points;
  out.action.reserve(a.action.size());
  for (int g = 0; g < a.group->order; ++g) {
    Perm p(out.points);
    for (int x = 0; x < a.points; ++x) p[x] = a.action[g][x];
    for (int x = 0; x < b.points; ++x) p[a.points + x] = a.points + b.action[g][x];
    out.action.push_back(std::move(p));
  }
  return out;
}

bool same_group(const TopSystem& a, const TopSystem& b) {
  if (a.group == b.group) return true;
  return a.group->content_hash() == b.group->content_hash() && a.group->table == b.group->table;
}

bool is_equivariant_map(const TopSystem& a, const TopSystem& b, const std::vector<int>& q) {
  if (static_cast<int>(q.size()) != a.points) return false;
  for (int v : q)
    if (v < 0 || v >= b.points) return false;
  for (int g = 0; g < a.group->order; ++g)
    for (int x = 0; x < a.points; ++x)
      if (q[a.action[g][x]] != b.action[g][q[x]]) return false;
  return true;
}

}  // namespace hvn
