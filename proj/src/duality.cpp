#include "hvn/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hvn/errors.hpp"

namespace hvn {

bool GrouplikeSubset::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

Compactification make_compactification(GroupPtr base, GroupPtr target, std::vector<int> images) {
  Compactification c{std::move(base), std::move(target), GroupHom{}};
  c.map = GroupHom{c.base, c.target, std::move(images)};
  validate_hom(c.map);
  if (!hom_is_surjective(c.map))
    fail(ErrorKind::NotSurjective, "compactification map must be surjective");
  return c;
}

Compactification identity_compactification(const GroupPtr& g) {
  std::vector<int> images(g->order);
  for (int i = 0; i < g->order; ++i) images[i] = i;
  return make_compactification(g, g, std::move(images));
}

GrouplikeCheck is_grouplike(const TablePtr& t, const std::vector<int>& members) {
  for (int i : members)
    require_internal(i >= 0 && i < t->num_irreps(), "irrep index out of range");
  std::vector<char> in(t->num_irreps(), 0);
  for (int i : members) in[i] = 1;
  if (!in[0]) return {false, "missing unit: trivial character not in the set"};
  for (int i : members) {
    int c = conjugate_irrep(*t, i);
    if (!in[c])
      return {false, "missing conjugate: irrep " + std::to_string(c) + " (conjugate of " +
                         std::to_string(i) + ")"};
  }
  for (int i : members)
    for (int j : members) {
      std::vector<int> mult = tensor_decompose(*t, i, j);
      for (int k = 0; k < t->num_irreps(); ++k)
        if (mult[k] > 0 && !in[k])
          return {false, "tensor escape: component " + std::to_string(k) + " of " +
                             std::to_string(i) + " (x) " + std::to_string(j) +
                             " leaves the set"};
    }
  return {true, ""};
}

GrouplikeSubset grouplike_closure(const TablePtr& t, const std::vector<int>& seed) {
  std::set<int> cur(seed.begin(), seed.end());
  cur.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = cur;
    for (int i : cur) next.insert(conjugate_irrep(*t, i));
    for (int i : cur)
      for (int j : cur) {
        std::vector<int> mult = tensor_decompose(*t, i, j);
        for (int k = 0; k < t->num_irreps(); ++k)
          if (mult[k] > 0) next.insert(k);
      }
    if (next != cur) {
      cur = std::move(next);
      grew = true;
    }
  }
  GrouplikeSubset out{t, std::vector<int>(cur.begin(), cur.end())};
  require_internal(is_grouplike(t, out.members).ok, "closure did not produce a grouplike set");
  return out;
}

std::vector<GrouplikeSubset> enumerate_grouplike(const TablePtr& t, std::size_t dual_cap) {
  if (static_cast<std::size_t>(t->num_irreps()) > dual_cap)
    fail(ErrorKind::CapExceeded, "dual has " + std::to_string(t->num_irreps()) +
                                     " irreducibles, above cap " + std::to_string(dual_cap));
  // Lattice walk: join each known grouplike set with one extra index and
  // close. Any grouplike set is reachable one element at a time, since a
  // closure of a subset of it stays inside it.
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> work;
  std::vector<int> base = grouplike_closure(t, {}).members;
  found.insert(base);
  work.push_back(std::move(base));
  for (std::size_t w = 0; w < work.size(); ++w) {
    for (int extra = 0; extra < t->num_irreps(); ++extra) {
      if (std::binary_search(work[w].begin(), work[w].end(), extra)) continue;
      std::vector<int> seed = work[w];
      seed.push_back(extra);
      std::vector<int> closed = grouplike_closure(t, seed).members;
      if (found.insert(closed).second) work.push_back(std::move(closed));
    }
  }
  std::vector<GrouplikeSubset> out;
  out.reserve(found.size());
  for (const auto& m : found) out.push_back(GrouplikeSubset{t, m});
  std::sort(out.begin(), out.end(), [](const GrouplikeSubset& a, const GrouplikeSubset& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

namespace {

// Member mask of the kernel of an irreducible: chi(g) = chi(1).
std::vector<char> kernel_mask(const CharacterTable& t, int i) {
  const Cyclotomic deg = Cyclotomic::from_rational(t.root_order, Rational(t.degrees[i]));
  std::vector<char> mask(t.group->order, 0);
  for (int x = 0; x < t.group->order; ++x)
    if (t.rows[i].values[t.class_of[x]] == deg) mask[x] = 1;
  return mask;
}

}  // namespace

GrouplikeSubset rep_functor(const TablePtr& t, const Compactification& c) {
  require_internal(t->group->content_hash() == c.base->content_hash(),
                   "table and compactification base differ");
  std::vector<int> ker = hom_kernel(c.map);
  std::vector<int> members;
  for (int i = 0; i < t->num_irreps(); ++i) {
    std::vector<char> mask = kernel_mask(*t, i);
    bool contains_ker = true;
    for (int k : ker)
      if (!mask[k]) {
        contains_ker = false;
        break;
      }
    if (contains_ker) members.push_back(i);
  }
  GrouplikeCheck chk = is_grouplike(t, members);
  require_internal(chk.ok, "rep image is not grouplike: " + chk.violation);
  return GrouplikeSubset{t, std::move(members)};
}

Subgroup joint_kernel(const GrouplikeSubset& sigma) {
  const CharacterTable& t = *sigma.table;
  std::vector<int> members;
  for (int x = 0; x < t.group->order; ++x) {
    bool in_all = true;
    for (int i : sigma.members) {
      if (!(t.rows[i].values[t.class_of[x]] ==
            Cyclotomic::from_rational(t.root_order, Rational(t.degrees[i])))) {
        in_all = false;
        break;
      }
    }
    if (in_all) members.push_back(x);
  }
  Subgroup k{t.group, std::move(members)};
  require_internal(is_subgroup(*t.group, k.members) && is_normal_subgroup(*t.group, k),
                   "joint kernel is not a normal subgroup");
  return k;
}

Compactification tan_functor(const GrouplikeSubset& sigma) {
  Subgroup n = joint_kernel(sigma);
  QuotientResult q = quotient(sigma.table->group, n);
  return make_compactification(sigma.table->group, q.group, q.projection.images);
}

RoundtripReport verify_rep_tan_roundtrip(const GrouplikeSubset& sigma) {
  Compactification c = tan_functor(sigma);
  GrouplikeSubset back = rep_functor(sigma.table, c);
  if (back.members == sigma.members) return {true, ""};
  for (std::size_t i = 0; i < std::max(back.members.size(), sigma.members.size()); ++i) {
    int a = i < sigma.members.size() ? sigma.members[i] : -1;
    int b = i < back.members.size() ? back.members[i] : -1;
    if (a != b)
      return {false, "first mismatched irrep index: expected " + std::to_string(a) + ", got " +
                         std::to_string(b)};
  }
  return {false, "size mismatch"};
}

RoundtripReport verify_tan_rep_roundtrip(const TablePtr& t, const Compactification& c) {
  GrouplikeSubset sigma = rep_functor(t, c);
  Compactification c2 = tan_functor(sigma);
  std::vector<int> k1 = hom_kernel(c.map);
  std::vector<int> k2 = hom_kernel(c2.map);
  if (k1 != k2) return {false, "kernels differ; targets cannot be isomorphic over the base"};

  // Equal kernels force the comparison isomorphism phi(c(g)) = c2(g).
  std::vector<int> phi(c.target->order, -1);
  for (int g = 0; g < c.base->order; ++g) {
    int h = c.map.images[g];
    int h2 = c2.map.images[g];
    if (phi[h] < 0)
      phi[h] = h2;
    else if (phi[h] != h2)
      return {false, "induced map is not well defined"};
  }
  std::vector<char> hit(c2.target->order, 0);
  for (int v : phi) {
    if (v < 0) return {false, "induced map is partial"};
    hit[v] = 1;
  }
  for (char v : hit)
    if (!v) return {false, "induced map is not surjective"};
  if (c.target->order != c2.target->order) return {false, "target orders differ"};
  GroupHom iso{c.target, c2.target, phi};
  validate_hom(iso);
  for (int g = 0; g < c.base->order; ++g)
    if (phi[c.map.images[g]] != c2.map.images[g])
      return {false, "isomorphism does not commute with the maps from the base"};
  return {true, ""};
}

DualGroup pontryagin_dual(const TablePtr& t) {
  if (!t->group->is_abelian())
    fail(ErrorKind::NotAbelian, "Pontryagin dual requires an abelian group");
  const int n = t->num_irreps();
  require_internal(n == t->group->order, "abelian group must have order many characters");
  // Classes of an abelian group are singletons ordered by element index.
  for (int c = 0; c < n; ++c)
    require_internal(t->classes[c] == std::vector<int>{c}, "abelian class order broken");

  std::map<std::vector<std::string>, int> row_index;
  auto key_of = [&](const ClassFunction& f) {
    std::vector<std::string> key;
    key.reserve(f.values.size());
    for (const auto& v : f.values) key.push_back(v.str());
    return key;
  };
  for (int i = 0; i < n; ++i) row_index.emplace(key_of(t->rows[i]), i);

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "chi" + std::to_string(i);
    for (int j = 0; j < n; ++j) {
      auto it = row_index.find(key_of(pointwise_product(*t, t->rows[i], t->rows[j])));
      require_internal(it != row_index.end(), "product of characters is not a character");
      table[i][j] = it->second;
    }
  }
  DualGroup d;
  d.group = group_from_cayley_table(std::move(table), std::move(labels));
  d.base_table = t;
  require_internal(d.group->table[0] == [&] {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    return id;
  }(), "trivial character must be the dual identity");
  return d;
}

Subgroup ddual(const DualGroup& dual, const Compactification& c) {
  const TablePtr& tg = dual.base_table;
  require_internal(tg->group->content_hash() == c.base->content_hash(),
                   "dual and compactification base differ");
  if (!c.target->is_abelian())
    fail(ErrorKind::NotAbelian, "ddual requires an abelian target");
  TablePtr th = character_table(c.target);
  std::vector<int> members;
  for (int i = 0; i < th->num_irreps(); ++i) {
    ClassFunction pulled = pullback_classfunction(*tg, *th, c.map, th->rows[i]);
    auto row = find_row(*tg, pulled);
    require_internal(row.has_value(), "pulled-back character is not a base character");
    members.push_back(*row);
  }
  std::sort(members.begin(), members.end());
  Subgroup s{dual.group, std::move(members)};
  require_internal(is_subgroup(*dual.group, s.members), "ddual image is not a subgroup");
  return s;
}

Compactification cdual(const DualGroup& dual, const std::vector<int>& sigma_members) {
  const TablePtr& t = dual.base_table;
  require_internal(is_subgroup(*dual.group, sigma_members), "cdual needs a subgroup of the dual");
  const int n = t->group->order;

  // Evaluation vectors (chi(t))_{chi in sigma}; their pointwise products
  // realize the dual group of sigma as a quotient target of the base.
  auto eval_key = [&](int g) {
    std::vector<std::string> key;
    key.reserve(sigma_members.size());
    for (int i : sigma_members) key.push_back(t->rows[i].values[t->class_of[g]].str());
    return key;
  };
  std::map<std::vector<std::string>, int> index;
  std::vector<int> images(n);
  std::vector<int> first_rep;
  for (int g = 0; g < n; ++g) {
    auto key = eval_key(g);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(std::move(key), static_cast<int>(first_rep.size())).first;
      first_rep.push_back(g);
    }
    images[g] = it->second;
  }
  const int h = static_cast<int>(first_rep.size());
  require_internal(h == static_cast<int>(sigma_members.size()),
                   "evaluation image order must equal |sigma|");
  std::vector<std::vector<int>> table(h, std::vector<int>(h));
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b)
      table[a][b] = images[t->group->table[first_rep[a]][first_rep[b]]];
  GroupPtr target = group_from_cayley_table(std::move(table));
  return make_compactification(t->group, std::move(target), std::move(images));
}

TranslationProperties translation_properties(const GrouplikeSubset& sigma) {
  const CharacterTable& t = *sigma.table;
  TranslationProperties out;
  out.abelian = true;
  for (int i : sigma.members) {
    if (t.degrees[i] != 1) out.abelian = false;
    out.order += static_cast<long long>(t.degrees[i]) * t.degrees[i];
  }
  out.trivial = sigma.members == std::vector<int>{0};
  Compactification c = tan_functor(sigma);
  out.verified =
      (out.order == c.target->order) && (out.abelian == c.target->is_abelian());
  return out;
}

}  // namespace hvn
