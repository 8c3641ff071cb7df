#include "hvn/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hvn/errors.hpp"

namespace hvn {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

std::vector<int> compute_inverses(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) {
        inv[a] = b;
        break;
      }
    }
  }
  return inv;
}

GroupPtr finish_group(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  auto g = std::make_shared<FiniteGroup>();
  g->order = static_cast<int>(table.size());
  g->table = std::move(table);
  g->labels = labels.empty() ? default_labels(g->order) : std::move(labels);
  g->inverse = compute_inverses(g->table);
  for (int a = 0; a < g->order; ++a)
    require_internal(g->inverse[a] >= 0, "constructed group lacks an inverse");
  return g;
}

// 64-bit FNV-1a, the content hash used across exports.
std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

int FiniteGroup::element_order(int a) const {
  int k = 1;
  int x = a;
  while (x != 0) {
    x = table[x][a];
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (table[a][b] != table[b][a]) return false;
  return true;
}

std::uint64_t FiniteGroup::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a(h, static_cast<std::uint64_t>(order));
  for (const auto& row : table)
    for (int v : row) h = fnv1a(h, static_cast<std::uint64_t>(v));
  return h;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

void validate_group(const FiniteGroup& g) {
  const int n = g.order;
  if (n <= 0) fail(ErrorKind::Parse, "group must have positive order");
  require_internal(static_cast<int>(g.table.size()) == n, "table size mismatch");
  for (int a = 0; a < n; ++a) {
    require_internal(static_cast<int>(g.table[a].size()) == n, "table row size mismatch");
    for (int b = 0; b < n; ++b) {
      int v = g.table[a][b];
      if (v < 0 || v >= n) fail(ErrorKind::Parse, "table entry out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.table[0][a] != a || g.table[a][0] != a)
      fail(ErrorKind::NoIdentity, "element 0 is not a two-sided identity");
  }
  for (int a = 0; a < n; ++a) {
    bool has = false;
    for (int b = 0; b < n; ++b) {
      if (g.table[a][b] == 0 && g.table[b][a] == 0) {
        has = true;
        break;
      }
    }
    if (!has)
      fail(ErrorKind::NoInverse, "element " + g.labels[a] + " (index " + std::to_string(a) +
                                     ") has no two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          fail(ErrorKind::NotAssociative,
               "associativity fails on triple (" + std::to_string(a) + ", " + std::to_string(b) +
                   ", " + std::to_string(c) + ")");
}

GroupPtr group_from_cayley_table(std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels, std::size_t order_cap) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(ErrorKind::Parse, "empty Cayley table");
  if (static_cast<std::size_t>(n) > order_cap)
    fail(ErrorKind::CapExceeded,
         "order " + std::to_string(n) + " exceeds table cap " + std::to_string(order_cap));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      fail(ErrorKind::Parse, "row " + std::to_string(a) + " has wrong length");
    for (int v : table[a])
      if (v < 0 || v >= n) fail(ErrorKind::Parse, "table entry out of range");
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) fail(ErrorKind::NoIdentity, "no two-sided identity element");

  if (labels.empty()) labels = default_labels(n);

  if (identity != 0) {
    // Relabel by swapping 0 and the identity.
    std::vector<int> relab(n);
    for (int i = 0; i < n; ++i) relab[i] = i;
    relab[0] = identity;
    relab[identity] = 0;
    std::vector<std::vector<int>> t2(n, std::vector<int>(n));
    std::vector<std::string> l2(n);
    for (int a = 0; a < n; ++a) {
      l2[relab[a]] = labels[a];
      for (int b = 0; b < n; ++b) t2[relab[a]][relab[b]] = relab[table[a][b]];
    }
    table = std::move(t2);
    labels = std::move(l2);
  }

  FiniteGroup probe;
  probe.order = n;
  probe.table = table;
  probe.labels = labels;
  validate_group(probe);
  return finish_group(std::move(table), std::move(labels));
}

GroupPtr group_cyclic(int n) {
  if (n <= 0) fail(ErrorKind::Parse, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return finish_group(std::move(t), {});
}

GroupPtr group_dicyclic(int m) {
  if (m < 2) fail(ErrorKind::Parse, "dicyclic parameter must be at least 2");
  // Elements a^i b^j, i in [0,2m), j in {0,1}; index = 2*i + j.
  // Relations: a^(2m) = 1, b^2 = a^m, b a = a^(-1) b.
  const int n = 4 * m;
  auto idx = [m](int i, int j) { return 2 * (((i % (2 * m)) + 2 * m) % (2 * m)) + j; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < 2 * m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2 * m; ++k)
        for (int l = 0; l < 2; ++l) {
          int p, q;
          if (j == 0) {
            p = i + k;
            q = l;
          } else {
            p = i - k;
            q = 1 + l;
          }
          if (q == 2) {
            p += m;
            q = 0;
          }
          t[idx(i, j)][idx(k, l)] = idx(p, q);
        }
  return finish_group(std::move(t), {});
}

GroupPtr group_dihedral(int n) {
  if (n < 1) fail(ErrorKind::Parse, "dihedral parameter must be positive");
  // Elements r^i s^j, index = 2*i + j; s r = r^(-1) s.
  const int order = 2 * n;
  auto idx = [n](int i, int j) { return 2 * (((i % n) + n) % n) + j; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          int p = (j == 0) ? i + k : i - k;
          int q = (j + l) % 2;
          t[idx(i, j)][idx(k, l)] = idx(p, q);
        }
  return finish_group(std::move(t), {});
}

GroupPtr group_direct_product(const GroupPtr& a, const GroupPtr& b, std::size_t order_cap) {
  const long long n = static_cast<long long>(a->order) * b->order;
  if (n > static_cast<long long>(order_cap))
    fail(ErrorKind::CapExceeded,
         "product order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
  const int nb = b->order;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < a->order; ++x)
    for (int y = 0; y < nb; ++y) {
      labels[x * nb + y] = "(" + a->labels[x] + "," + b->labels[y] + ")";
      for (int u = 0; u < a->order; ++u)
        for (int v = 0; v < nb; ++v)
          t[x * nb + y][u * nb + v] = a->table[x][u] * nb + b->table[y][v];
    }
  return finish_group(std::move(t), std::move(labels));
}

PermutationRealization group_from_permutations(const std::vector<Perm>& generators,
                                               std::size_t order_cap) {
  if (generators.empty()) fail(ErrorKind::Parse, "need at least one generator");
  const std::size_t degree = generators[0].size();
  if (degree == 0) fail(ErrorKind::Parse, "generator degree must be positive");
  for (const Perm& g : generators) {
    if (g.size() != degree) fail(ErrorKind::Parse, "generators have differing degrees");
    if (!is_perm(g)) fail(ErrorKind::Parse, "generator is not a permutation: " + perm_str(g));
  }

  // Closure by breadth-first products elem * generator, recording how each
  // element arose so callers can rebuild witness words.
  std::vector<Perm> elems{perm_identity(static_cast<int>(degree))};
  std::map<Perm, int> index{{elems[0], 0}};
  std::vector<std::pair<int, int>> expr{{-1, -1}};
  std::vector<int> gen_elem(generators.size(), -1);

  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    auto it = index.find(generators[gi]);
    if (it == index.end()) {
      elems.push_back(generators[gi]);
      index.emplace(generators[gi], static_cast<int>(elems.size()) - 1);
      expr.push_back({-1, static_cast<int>(gi)});
      gen_elem[gi] = static_cast<int>(elems.size()) - 1;
    } else {
      gen_elem[gi] = it->second;
    }
  }

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      Perm p = perm_compose(elems[i], generators[gi]);
      if (!index.count(p)) {
        if (elems.size() >= order_cap)
          fail(ErrorKind::CapExceeded,
               "permutation closure exceeds order cap " + std::to_string(order_cap));
        elems.push_back(p);
        index.emplace(std::move(p), static_cast<int>(elems.size()) - 1);
        expr.push_back({static_cast<int>(i), static_cast<int>(gi)});
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(perm_compose(elems[a], elems[b]));
      require_internal(it != index.end(), "permutation closure not closed");
      t[a][b] = it->second;
    }

  PermutationRealization out;
  out.group = finish_group(std::move(t), {});
  out.degree = static_cast<int>(degree);
  out.elem_perms = std::move(elems);
  out.generator_elements = std::move(gen_elem);
  out.expr = std::move(expr);
  return out;
}

PermutationRealization group_symmetric(int n) {
  if (n < 1) fail(ErrorKind::Parse, "symmetric group degree must be positive");
  if (n == 1) return group_from_permutations({perm_identity(1)});
  Perm cycle(n), swap01 = perm_identity(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  swap01[0] = 1;
  swap01[1] = 0;
  if (n == 2) return group_from_permutations({swap01});
  return group_from_permutations({cycle, swap01});
}

PermutationRealization group_gl32() {
  // Points 0..6 are the nonzero vectors of F_2^3, point v-1 <-> bits of v.
  // Generators: the cyclic coordinate shift and one transvection.
  auto apply = [](const int m[3][3], int v) {
    int b0 = v & 1, b1 = (v >> 1) & 1, b2 = (v >> 2) & 1;
    int c0 = (m[0][0] * b0 + m[0][1] * b1 + m[0][2] * b2) & 1;
    int c1 = (m[1][0] * b0 + m[1][1] * b1 + m[1][2] * b2) & 1;
    int c2 = (m[2][0] * b0 + m[2][1] * b1 + m[2][2] * b2) & 1;
    return c0 | (c1 << 1) | (c2 << 2);
  };
  const int shift[3][3] = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const int transvection[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  Perm p1(7), p2(7);
  for (int v = 1; v <= 7; ++v) {
    p1[v - 1] = apply(shift, v) - 1;
    p2[v - 1] = apply(transvection, v) - 1;
  }
  PermutationRealization r = group_from_permutations({p1, p2});
  require_internal(r.group->order == 168, "GL(3,2) closure has wrong order");
  return r;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order;
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> c;
    for (int x = 0; x < n; ++x) {
      int y = g.table[g.table[x][a]][g.inv(x)];
      if (cls[y] < 0) {
        cls[y] = static_cast<int>(classes.size());
        c.push_back(y);
      }
    }
    std::sort(c.begin(), c.end());
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x[0] < y[0];
  });
  return classes;
}

namespace {

// Closure of a seed set under products; the result is the generated subgroup.
std::vector<int> close_under_products(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> in(g.order, 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(0);
  for (int s : seed) add(s);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.table[elems[i]][elems[j]]);
      add(g.table[elems[j]][elems[i]]);
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
  return a.members < b.members;
}

}  // namespace

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& generators) {
  return Subgroup{g, close_under_products(*g, generators)};
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<int> m(g->order);
  for (int i = 0; i < g->order; ++i) m[i] = i;
  return Subgroup{g, std::move(m)};
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
  std::vector<char> in(g.order, 0);
  for (int m : members) {
    if (m < 0 || m >= g.order) return false;
    in[m] = 1;
  }
  if (!in[0]) return false;
  for (int a : members)
    for (int b : members)
      if (!in[g.table[a][b]]) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> in(g.order, 0);
  for (int m : h.members) in[m] = 1;
  for (int x = 0; x < g.order; ++x)
    for (int m : h.members)
      if (!in[g.table[g.table[x][m]][g.inv(x)]]) return false;
  return true;
}

Subgroup conjugate_subgroup(const Subgroup& h, int by) {
  const FiniteGroup& g = *h.parent;
  std::vector<int> out;
  out.reserve(h.members.size());
  for (int m : h.members) out.push_back(g.table[g.table[by][m]][g.inv(by)]);
  std::sort(out.begin(), out.end());
  return Subgroup{h.parent, std::move(out)};
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  require_internal(a.parent->content_hash() == b.parent->content_hash(),
                   "intersecting subgroups of different groups");
  std::vector<int> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out));
  return Subgroup{a.parent, std::move(out)};
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t order_cap) {
  if (static_cast<std::size_t>(g->order) > order_cap)
    fail(ErrorKind::CapExceeded, "order " + std::to_string(g->order) +
                                     " exceeds subgroup enumeration cap " +
                                     std::to_string(order_cap));
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  std::vector<int> triv{0};
  seen.insert(triv);
  work.push_back(triv);
  for (std::size_t i = 0; i < work.size(); ++i) {
    const std::vector<int> h = work[i];
    std::vector<char> in_h(g->order, 0);
    for (int m : h) in_h[m] = 1;
    // One extension candidate per coset of h is enough: <h, g> = <h, hg>.
    std::vector<char> coset_done(g->order, 0);
    for (int m : h) coset_done[m] = 1;
    for (int x = 0; x < g->order; ++x) {
      if (coset_done[x]) continue;
      for (int m : h) coset_done[g->table[m][x]] = 1;
      std::vector<int> seed = h;
      seed.push_back(x);
      std::vector<int> k = close_under_products(*g, seed);
      if (seen.insert(k).second) work.push_back(std::move(k));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(work.size());
  for (auto& m : seen) out.push_back(Subgroup{g, m});
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& g, std::size_t order_cap) {
  std::vector<Subgroup> subs = all_subgroups(g, order_cap);
  std::set<std::vector<int>> remaining;
  for (const auto& s : subs) remaining.insert(s.members);
  std::vector<Subgroup> reps;
  // Iterating in sorted order and erasing whole conjugation orbits leaves
  // exactly the least member set of each class as its representative.
  while (!remaining.empty()) {
    std::vector<int> rep = *remaining.begin();
    Subgroup s{g, rep};
    for (int x = 0; x < g->order; ++x) remaining.erase(conjugate_subgroup(s, x).members);
    reps.push_back(std::move(s));
  }
  std::sort(reps.begin(), reps.end(), subgroup_less);
  return reps;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g, std::size_t order_cap) {
  if (static_cast<std::size_t>(g->order) > order_cap)
    fail(ErrorKind::CapExceeded, "order " + std::to_string(g->order) +
                                     " exceeds subgroup enumeration cap " +
                                     std::to_string(order_cap));
  // Atoms are normal closures of single conjugacy classes; every normal
  // subgroup is a join of the atoms below it, so joining to a fixed point
  // enumerates the whole normal lattice.
  auto classes = conjugacy_classes(*g);
  std::vector<std::vector<int>> atoms;
  for (const auto& c : classes) atoms.push_back(close_under_products(*g, c));

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> work;
  std::vector<int> triv{0};
  found.insert(triv);
  work.push_back(triv);
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& atom : atoms) {
      std::vector<int> seed = work[i];
      seed.insert(seed.end(), atom.begin(), atom.end());
      std::vector<int> j = close_under_products(*g, seed);
      if (found.insert(j).second) work.push_back(std::move(j));
    }
  }
  std::vector<Subgroup> out;
  for (auto& m : found) {
    Subgroup s{g, m};
    require_internal(is_normal_subgroup(*g, s), "normal lattice produced a non-normal subgroup");
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

CosetAction coset_action(const FiniteGroup& g, const Subgroup& u) {
  const int n = g.order;
  std::vector<int> coset_of(n, -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> c;
    for (int m : u.members) {
      int y = g.table[x][m];
      require_internal(coset_of[y] < 0, "coset overlap; not a subgroup");
      coset_of[y] = static_cast<int>(cosets.size());
      c.push_back(y);
    }
    std::sort(c.begin(), c.end());
    cosets.push_back(std::move(c));
  }
  CosetAction out;
  out.action.resize(n);
  for (int t = 0; t < n; ++t) {
    Perm p(cosets.size());
    for (std::size_t c = 0; c < cosets.size(); ++c) p[c] = coset_of[g.table[t][cosets[c][0]]];
    out.action[t] = std::move(p);
  }
  out.cosets = std::move(cosets);
  return out;
}

QuotientResult quotient(const GroupPtr& g, const Subgroup& n) {
  if (!is_subgroup(*g, n.members)) fail(ErrorKind::Parse, "quotient by a non-subgroup");
  if (!is_normal_subgroup(*g, n))
    fail(ErrorKind::NotNormal, "subgroup of order " + std::to_string(n.members.size()) +
                                   " is not normal; quotient undefined");
  CosetAction ca = coset_action(*g, n);
  const int q = static_cast<int>(ca.cosets.size());
  std::vector<int> coset_of(g->order);
  for (int c = 0; c < q; ++c)
    for (int x : ca.cosets[c]) coset_of[x] = c;
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  std::vector<std::string> labels(q);
  for (int a = 0; a < q; ++a) {
    labels[a] = "[" + g->labels[ca.cosets[a][0]] + "]";
    for (int b = 0; b < q; ++b) t[a][b] = coset_of[g->table[ca.cosets[a][0]][ca.cosets[b][0]]];
  }
  QuotientResult out;
  out.group = finish_group(std::move(t), std::move(labels));
  out.projection = GroupHom{g, out.group, std::move(coset_of)};
  out.cosets = std::move(ca.cosets);
  require_internal(out.projection.images[0] == 0, "identity coset not at index 0");
  return out;
}

std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> in(g.order, 0);
  in[0] = 1;
  int covered = 1;
  while (covered < g.order) {
    int next = -1;
    for (int x = 0; x < g.order; ++x)
      if (!in[x]) {
        next = x;
        break;
      }
    gens.push_back(next);
    std::vector<int> members;
    for (int x = 0; x < g.order; ++x)
      if (in[x]) members.push_back(x);
    members.push_back(next);
    std::vector<int> closed = close_under_products(g, members);
    std::fill(in.begin(), in.end(), 0);
    for (int x : closed) in[x] = 1;
    covered = static_cast<int>(closed.size());
  }
  return gens;
}

namespace {

struct IsoSearch {
  const FiniteGroup& a;
  const FiniteGroup& b;
  std::vector<int> gens;            // generating sequence of a
  std::vector<int> images;          // partial map a -> b, -1 when unset
  std::vector<char> used;           // image elements already taken
  std::vector<int> domain;          // elements of a with images, in closure order

  bool extend(int gen, int target) {
    // Assign gen -> target, then close the partial map under products.
    std::vector<std::pair<int, int>> added;
    auto assign = [&](int x, int y) {
      if (images[x] >= 0) return images[x] == y;
      if (used[y]) return false;
      images[x] = y;
      used[y] = 1;
      domain.push_back(x);
      added.push_back({x, y});
      return true;
    };
    std::size_t start = domain.size();
    bool ok = assign(gen, target);
    for (std::size_t i = 0; ok && i < domain.size(); ++i) {
      // Pair every known element with the new ones (both orders).
      std::size_t lo = (i < start) ? start : 0;
      for (std::size_t j = lo; ok && j < domain.size(); ++j) {
        int x = domain[i], y = domain[j];
        ok = assign(a.table[x][y], b.table[images[x]][images[y]]) &&
             assign(a.table[y][x], b.table[images[y]][images[x]]);
      }
    }
    if (ok) return true;
    for (auto it = added.rbegin(); it != added.rend(); ++it) {
      images[it->first] = -1;
      used[it->second] = 0;
      domain.pop_back();
    }
    return false;
  }

  bool search(std::size_t gi) {
    if (gi == gens.size()) return static_cast<int>(domain.size()) == a.order;
    int gen = gens[gi];
    int need = a.element_order(gen);
    std::size_t mark = domain.size();
    for (int y = 0; y < b.order; ++y) {
      if (used[y] || b.element_order(y) != need) continue;
      if (extend(gen, y)) {
        if (search(gi + 1)) return true;
        while (domain.size() > mark) {
          int x = domain.back();
          used[images[x]] = 0;
          images[x] = -1;
          domain.pop_back();
        }
      }
    }
    return false;
  }
};

std::vector<int> order_profile(const FiniteGroup& g) {
  std::vector<int> p(g.order);
  for (int x = 0; x < g.order; ++x) p[x] = g.element_order(x);
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

std::optional<GroupHom> group_isomorphism(const GroupPtr& a, const GroupPtr& b) {
  if (a->order != b->order) return std::nullopt;
  if (a->is_abelian() != b->is_abelian()) return std::nullopt;
  if (order_profile(*a) != order_profile(*b)) return std::nullopt;
  {
    auto ca = conjugacy_classes(*a);
    auto cb = conjugacy_classes(*b);
    if (ca.size() != cb.size()) return std::nullopt;
    std::vector<std::size_t> sa, sb;
    for (const auto& c : ca) sa.push_back(c.size());
    for (const auto& c : cb) sb.push_back(c.size());
    if (sa != sb) return std::nullopt;
  }

  IsoSearch s{*a, *b, generating_sequence(*a),
              std::vector<int>(a->order, -1), std::vector<char>(b->order, 0), {}};
  s.images[0] = 0;
  s.used[0] = 1;
  s.domain.push_back(0);
  if (!s.search(0)) return std::nullopt;
  GroupHom h{a, b, s.images};
  validate_hom(h);
  require_internal(hom_is_surjective(h), "isomorphism witness not surjective");
  return h;
}

bool group_is_isomorphic(const GroupPtr& a, const GroupPtr& b) {
  return group_isomorphism(a, b).has_value();
}

void validate_hom(const GroupHom& h) {
  const FiniteGroup& a = *h.source;
  const FiniteGroup& b = *h.target;
  require_internal(static_cast<int>(h.images.size()) == a.order, "hom image list size mismatch");
  for (int v : h.images) require_internal(v >= 0 && v < b.order, "hom image out of range");
  require_internal(h.images[0] == 0, "hom does not preserve identity");
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < a.order; ++y)
      require_internal(h.images[a.table[x][y]] == b.table[h.images[x]][h.images[y]],
                       "map is not a homomorphism");
}

bool hom_is_surjective(const GroupHom& h) {
  std::vector<char> hit(h.target->order, 0);
  for (int v : h.images) hit[v] = 1;
  for (char c : hit)
    if (!c) return false;
  return true;
}

std::vector<int> hom_kernel(const GroupHom& h) {
  std::vector<int> k;
  for (int x = 0; x < h.source->order; ++x)
    if (h.images[x] == 0) k.push_back(x);
  return k;
}

int group_exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.order; ++x) {
    long long o = g.element_order(x);
    e = std::lcm(e, o);
  }
  return static_cast<int>(e);
}

}  // namespace hvn
