#include "hvn/corpus.hpp"

#include <algorithm>

namespace hvn {

namespace {

// Invariant-factor chains d1 | d2 | ... | dk with product n, largest last.
// `limit` is the factor chosen one level up; every deeper factor divides it.
void chains(int n, int limit, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (n == 1) {
    std::vector<int> chain(acc.rbegin(), acc.rend());
    out.push_back(std::move(chain));
    return;
  }
  for (int m = 2; m <= limit; ++m) {
    if (n % m != 0 || limit % m != 0) continue;
    acc.push_back(m);
    chains(n / m, m, acc, out);
    acc.pop_back();
  }
}

NamedGroup abelian_from_chain(const std::vector<int>& chain) {
  NamedGroup ng;
  ng.group = group_cyclic(chain[0]);
  ng.name = "C" + std::to_string(chain[0]);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    ng.group = group_direct_product(ng.group, group_cyclic(chain[i]));
    ng.name += "xC" + std::to_string(chain[i]);
  }
  return ng;
}

void sort_corpus(std::vector<NamedGroup>& v) {
  std::sort(v.begin(), v.end(), [](const NamedGroup& a, const NamedGroup& b) {
    if (a.group->order != b.group->order) return a.group->order < b.group->order;
    return a.name < b.name;
  });
}

}  // namespace

std::vector<NamedGroup> corpus_abelian_groups(int max_order) {
  std::vector<NamedGroup> out;
  out.push_back({"C1", group_cyclic(1)});
  for (int n = 2; n <= max_order; ++n) {
    std::vector<std::vector<int>> all;
    std::vector<int> acc;
    chains(n, n, acc, all);
    for (const auto& chain : all) out.push_back(abelian_from_chain(chain));
  }
  sort_corpus(out);
  return out;
}

std::vector<NamedGroup> corpus_groups(int max_order, bool include_gl32) {
  std::vector<NamedGroup> out = corpus_abelian_groups(max_order);
  for (int n = 3; 2 * n <= max_order; ++n) {
    out.push_back({"D" + std::to_string(n), group_dihedral(n)});
  }
  for (int m = 2; 4 * m <= max_order; ++m) {
    std::string name = m == 2 ? "Q8" : "Dic" + std::to_string(m);
    out.push_back({name, group_dicyclic(m)});
  }
  if (max_order >= 6) out.push_back({"S3", group_symmetric(3).group});
  if (max_order >= 24) out.push_back({"S4", group_symmetric(4).group});

  struct Base {
    const char* name;
    GroupPtr group;
  };
  std::vector<Base> bases;
  if (max_order >= 12) bases.push_back({"S3", group_symmetric(3).group});
  if (max_order >= 16) {
    bases.push_back({"D4", group_dihedral(4)});
    bases.push_back({"Q8", group_dicyclic(2)});
  }
  std::vector<NamedGroup> abelian_small = corpus_abelian_groups(max_order / 6);
  for (const Base& b : bases) {
    for (const NamedGroup& a : abelian_small) {
      if (a.group->order < 2) continue;
      if (b.group->order * a.group->order > max_order) continue;
      out.push_back({std::string(b.name) + "x" + a.name, group_direct_product(b.group, a.group)});
    }
  }
  if (include_gl32) out.push_back({"GL(3,2)", group_gl32().group});
  sort_corpus(out);
  return out;
}

}  // namespace hvn
