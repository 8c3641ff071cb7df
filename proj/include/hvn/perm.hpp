#pragma once

#include <string>
#include <vector>

#include "hvn/errors.hpp"

namespace hvn {

// A permutation of {0..n-1} stored as its image list.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline bool is_perm(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Left-to-right as actions: (compose(p, q))(x) = p(q(x)).
inline Perm perm_compose(const Perm& p, const Perm& q) {
  require_internal(p.size() == q.size(), "composing permutations of different degree");
  Perm r(p.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
  return r;
}

inline bool perm_is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != static_cast<int>(x)) return false;
  return true;
}

inline std::string perm_str(const Perm& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace hvn
