#include "hvn/measure.hpp"

#include <algorithm>
#include <functional>

#include "hvn/dynsys.hpp"
#include "hvn/errors.hpp"

namespace hvn {

MeasureSystem make_measure_system(const GroupPtr& g, int atoms, std::vector<Rational> weights,
                                  std::vector<Perm> action) {
  TopSystem base = make_system(g, atoms, action);
  if (static_cast<int>(weights.size()) != atoms) {
    fail(ErrorKind::Parse, "measure: expected one weight per atom");
  }
  Rational total(0);
  for (int x = 0; x < atoms; ++x) {
    if (!weights[x].is_positive()) {
      fail(ErrorKind::Parse, "measure: weight of atom " + std::to_string(x) + " is not positive");
    }
    total = total + weights[x];
  }
  if (!(total == Rational(1))) fail(ErrorKind::Parse, "measure: weights do not sum to 1");
  for (int gi = 0; gi < g->order; ++gi) {
    for (int x = 0; x < atoms; ++x) {
      if (!(weights[base.action[gi][x]] == weights[x])) {
        fail(ErrorKind::Parse, "measure: weights are not invariant under the action");
      }
    }
  }
  MeasureSystem m;
  m.group = g;
  m.atoms = atoms;
  m.weights = std::move(weights);
  m.action = std::move(base.action);
  return m;
}

MeasureSystem meas_functor(const TopSystem& s) {
  if (!is_minimal(s)) fail(ErrorKind::NotMinimal, "meas: system is not minimal");
  std::vector<Rational> w(s.points, Rational(1, s.points));
  return make_measure_system(s.group, s.points, std::move(w), s.action);
}

bool is_ergodic(const MeasureSystem& m) {
  TopSystem s;
  s.group = m.group;
  s.points = m.atoms;
  s.action = m.action;
  return orbits(s).size() == 1;
}

TopSystem top_functor(const MeasureSystem& m) {
  if (!is_ergodic(m)) fail(ErrorKind::NotErgodic, "top: measure system is not ergodic");
  return make_system(m.group, m.atoms, m.action);
}

std::optional<Perm> measure_iso(const MeasureSystem& a, const MeasureSystem& b, std::size_t cap) {
  if (a.group != b.group) fail(ErrorKind::GroupMismatch, "iso: systems live over different groups");
  if (a.atoms != b.atoms) return std::nullopt;
  {
    // Weight multisets must agree.
    auto wa = a.weights;
    auto wb = b.weights;
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    if (!(wa == wb)) return std::nullopt;
  }
  TopSystem ta = make_system(a.group, a.atoms, a.action);
  TopSystem tb = make_system(b.group, b.atoms, b.action);
  bool transitive = orbits(ta).size() == 1 && orbits(tb).size() == 1;
  if (!transitive && static_cast<std::size_t>(a.atoms) > cap) {
    fail(ErrorKind::CapExceeded,
         "iso: exhaustive search limited to " + std::to_string(cap) + " atoms for non-transitive systems");
  }

  // Transitive case: any equivariant bijection preserves the (constant)
  // weight, so the plain search suffices. Otherwise filter by weight.
  std::optional<Perm> q = brute_force_iso(ta, tb, cap);
  if (!q) return std::nullopt;
  for (int x = 0; x < a.atoms; ++x) {
    if (!(a.weights[x] == b.weights[(*q)[x]])) {
      // Restart with a weight-respecting search.
      q = std::nullopt;
      break;
    }
  }
  if (q) return q;

  // Weight-aware backtracking over orbit matchings: try every equivariant
  // bijection orbit by orbit, accepting only weight-preserving ones.
  std::vector<std::vector<int>> oa = orbits(ta);
  std::vector<std::vector<int>> ob = orbits(tb);
  if (oa.size() != ob.size()) return std::nullopt;
  std::vector<bool> used(ob.size(), false);
  Perm out(a.atoms, -1);

  // Maps orbit i of a onto orbit j of b equivariantly with q[x0] = y0.
  auto map_orbit = [&](int x0, int y0, Perm& acc) -> bool {
    std::vector<std::pair<int, int>> added;
    if (acc[x0] != -1) return acc[x0] == y0;
    acc[x0] = y0;
    added.emplace_back(x0, y0);
    std::size_t head = 0;
    std::vector<int> work{x0};
    while (head < work.size()) {
      int x = work[head++];
      int y = acc[x];
      if (!(a.weights[x] == b.weights[y])) {
        for (auto& [px, py] : added) acc[px] = -1;
        return false;
      }
      for (int g = 0; g < a.group->order; ++g) {
        int nx = ta.action[g][x];
        int ny = tb.action[g][y];
        if (acc[nx] == -1) {
          acc[nx] = ny;
          added.emplace_back(nx, ny);
          work.push_back(nx);
        } else if (acc[nx] != ny) {
          for (auto& [px, py] : added) acc[px] = -1;
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == oa.size()) return true;
    int x0 = oa[i][0];
    for (std::size_t j = 0; j < ob.size(); ++j) {
      if (used[j] || ob[j].size() != oa[i].size()) continue;
      for (int y0 : ob[j]) {
        Perm snapshot = out;
        if (map_orbit(x0, y0, out)) {
          used[j] = true;
          if (rec(i + 1)) return true;
          used[j] = false;
        }
        out = snapshot;
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;

  std::vector<bool> image(b.atoms, false);
  for (int x = 0; x < a.atoms; ++x) {
    require_internal(out[x] != -1, "measure iso: unassigned atom after search");
    image[out[x]] = true;
  }
  for (int y = 0; y < b.atoms; ++y) {
    require_internal(image[y], "measure iso: search result is not surjective");
  }
  return out;
}

}  // namespace hvn
