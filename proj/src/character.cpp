#include "hvn/character.hpp"

#include <algorithm>
#include <numeric>

#include "hvn/errors.hpp"

namespace hvn {

namespace {

// ---- arithmetic mod a small prime ----------------------------------------

long long mulm(long long a, long long b, long long p) {
  return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

long long powm(long long a, long long k, long long p) {
  long long r = 1 % p;
  a %= p;
  while (k > 0) {
    if (k & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    k >>= 1;
  }
  return r;
}

long long invm(long long a, long long p) { return powm(((a % p) + p) % p, p - 2, p); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p with p = 1 (mod e) and p*p > 4*n (i.e. p > 2*sqrt(n)).
long long dixon_prime(int e, int n) {
  for (long long p = e + 1;; p += e) {
    if (p * p > 4LL * n && is_prime(p)) return p;
  }
}

long long primitive_root(long long p) {
  std::vector<long long> prime_factors;
  long long m = p - 1;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : prime_factors)
      if (powm(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(ErrorKind::Internal, "no primitive root found");
}

// ---- small dense linear algebra mod p -------------------------------------

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;  // row-major

Vec mat_apply(const Mat& m, const Vec& v, long long p) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc = (acc + mulm(m[i][j], v[j], p)) % p;
    out[i] = acc;
  }
  return out;
}

long long det_mod(Mat m, long long p) {
  const int n = static_cast<int>(m.size());
  long long det = 1;
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) return 0;
    if (pr != col) {
      std::swap(m[pr], m[col]);
      det = p - det;
    }
    det = mulm(det, m[col][col], p);
    long long inv = invm(m[col][col], p);
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      long long f = mulm(m[r][col], inv, p);
      for (int c = col; c < n; ++c) m[r][c] = ((m[r][c] - mulm(f, m[col][c], p)) % p + p) % p;
    }
  }
  return det % p;
}

// Basis of the nullspace of m (n x n), each vector length n.
std::vector<Vec> nullspace_mod(Mat m, long long p) {
  const int n = static_cast<int>(m.size());
  std::vector<int> pivot_col_of_row(n, -1);
  std::vector<int> is_pivot_col(n, 0);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    long long inv = invm(m[row][col], p);
    for (int c = col; c < n; ++c) m[row][c] = mulm(m[row][c], inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      long long f = m[r][col];
      for (int c = col; c < n; ++c) m[r][c] = ((m[r][c] - mulm(f, m[row][c], p)) % p + p) % p;
    }
    pivot_col_of_row[row] = col;
    is_pivot_col[col] = 1;
    ++row;
  }
  std::vector<Vec> basis;
  for (int col = 0; col < n; ++col) {
    if (is_pivot_col[col]) continue;
    Vec v(n, 0);
    v[col] = 1;
    for (int r = 0; r < row; ++r) {
      int pc = pivot_col_of_row[r];
      v[pc] = (p - m[r][col]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Column-reduce a spanning set into reduced echelon basis with unit pivots.
struct EchelonBasis {
  std::vector<Vec> cols;   // basis vectors
  std::vector<int> pivots; // pivot row of each basis vector; cols[k][pivots[j]] = delta_kj
};

EchelonBasis echelonize(std::vector<Vec> vecs, long long p) {
  EchelonBasis b;
  for (Vec v : vecs) {
    for (std::size_t k = 0; k < b.cols.size(); ++k) {
      long long f = v[b.pivots[k]];
      if (f == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = ((v[i] - mulm(f, b.cols[k][i], p)) % p + p) % p;
    }
    int pr = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        pr = static_cast<int>(i);
        break;
      }
    if (pr < 0) continue;
    long long inv = invm(v[pr], p);
    for (auto& x : v) x = mulm(x, inv, p);
    for (std::size_t k = 0; k < b.cols.size(); ++k) {
      long long f = b.cols[k][pr];
      if (f == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i)
        b.cols[k][i] = ((b.cols[k][i] - mulm(f, v[i], p)) % p + p) % p;
    }
    b.cols.push_back(std::move(v));
    b.pivots.push_back(pr);
  }
  return b;
}

// Restriction of m to the invariant subspace spanned by b, in b-coordinates.
Mat restrict_to(const Mat& m, const EchelonBasis& b, long long p) {
  const int d = static_cast<int>(b.cols.size());
  Mat a(d, Vec(d, 0));
  for (int j = 0; j < d; ++j) {
    Vec u = mat_apply(m, b.cols[j], p);
    // Coordinates read off at pivot rows; then verify membership.
    Vec coord(d);
    for (int k = 0; k < d; ++k) coord[k] = u[b.pivots[k]];
    Vec check(u.size(), 0);
    for (int k = 0; k < d; ++k)
      for (std::size_t i = 0; i < u.size(); ++i)
        check[i] = (check[i] + mulm(coord[k], b.cols[k][i], p)) % p;
    require_internal(check == u, "class matrix does not preserve subspace");
    for (int k = 0; k < d; ++k) a[k][j] = coord[k];
  }
  return a;
}

// All eigenvalues of a over F_p, by scanning the field (p stays small at
// the supported orders). The class algebra splits over F_p, so every
// eigenvalue of a restriction lies in F_p.
std::vector<long long> eigenvalues_mod(const Mat& a, long long p) {
  const int d = static_cast<int>(a.size());
  std::vector<long long> roots;
  for (long long x = 0; x < p; ++x) {
    Mat m = a;
    for (int i = 0; i < d; ++i) m[i][i] = ((m[i][i] - x) % p + p) % p;
    if (det_mod(std::move(m), p) == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace

TablePtr character_table(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  const int n = g.order;

  auto table = std::make_shared<CharacterTable>();
  table->group = gp;
  table->classes = conjugacy_classes(g);
  const int r = static_cast<int>(table->classes.size());
  table->class_of.assign(n, -1);
  for (int c = 0; c < r; ++c)
    for (int x : table->classes[c]) table->class_of[x] = c;
  table->class_rep.resize(r);
  for (int c = 0; c < r; ++c) table->class_rep[c] = table->classes[c][0];
  table->inverse_class.resize(r);
  for (int c = 0; c < r; ++c) table->inverse_class[c] = table->class_of[g.inv(table->class_rep[c])];

  const int e = group_exponent(g);
  table->root_order = e;
  const long long p = dixon_prime(e, n);

  // Class algebra structure constants: M[i][k][j] counts x in C_i with
  // x^-1 * z_k in C_j, i.e. the matrix of multiplication by the i-th class
  // sum on the class-sum basis, acting as column j -> column entries k.
  std::vector<Mat> m(r, Mat(r, Vec(r, 0)));
  for (int k = 0; k < r; ++k) {
    const int z = table->class_rep[k];
    for (int x = 0; x < n; ++x) {
      const int i = table->class_of[x];
      const int j = table->class_of[g.table[g.inv(x)][z]];
      // x * (x^-1 z) = z contributes a_{i j k}.
      m[i][k][j] += 1;
    }
  }
  for (auto& mi : m)
    for (auto& row : mi)
      for (auto& v : row) v %= p;

  // Split F_p^r into the r one-dimensional common eigenspaces.
  std::vector<EchelonBasis> spaces;
  {
    std::vector<Vec> full;
    for (int i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(echelonize(full, p));
  }
  for (int i = 0; i < r; ++i) {
    bool all_one = true;
    for (const auto& s : spaces) all_one = all_one && s.cols.size() == 1;
    if (all_one) break;
    std::vector<EchelonBasis> next;
    for (const auto& s : spaces) {
      if (s.cols.size() == 1) {
        next.push_back(s);
        continue;
      }
      Mat a = restrict_to(m[i], s, p);
      std::size_t total = 0;
      for (long long lambda : eigenvalues_mod(a, p)) {
        Mat shifted = a;
        for (std::size_t d = 0; d < a.size(); ++d)
          shifted[d][d] = ((shifted[d][d] - lambda) % p + p) % p;
        std::vector<Vec> null = nullspace_mod(shifted, p);
        if (null.empty()) continue;
        std::vector<Vec> lifted;
        for (const Vec& c : null) {
          Vec v(r, 0);
          for (std::size_t k = 0; k < s.cols.size(); ++k)
            for (int t = 0; t < r; ++t) v[t] = (v[t] + mulm(c[k], s.cols[k][t], p)) % p;
          lifted.push_back(std::move(v));
        }
        EchelonBasis eb = echelonize(lifted, p);
        total += eb.cols.size();
        next.push_back(std::move(eb));
      }
      require_internal(total == s.cols.size(), "class matrix not semisimple on subspace");
    }
    spaces = std::move(next);
  }
  require_internal(static_cast<int>(spaces.size()) == r, "wrong number of common eigenspaces");
  for (const auto& s : spaces) require_internal(s.cols.size() == 1, "eigenspace not split");

  // Central character values omega_i and degrees.
  std::vector<Vec> omega(r, Vec(r));  // omega[chi][class]
  for (int chi = 0; chi < r; ++chi) {
    const Vec& v = spaces[chi].cols[0];
    int anchor = spaces[chi].pivots[0];
    for (int i = 0; i < r; ++i) {
      Vec u = mat_apply(m[i], v, p);
      long long w = mulm(u[anchor], invm(v[anchor], p), p);
      require_internal(u == [&] {
        Vec scaled(v.size());
        for (std::size_t t = 0; t < v.size(); ++t) scaled[t] = mulm(w, v[t], p);
        return scaled;
      }(), "not a common eigenvector");
      omega[chi][i] = w;
    }
  }

  std::vector<long long> degree_mod(r), degree_int(r);
  for (int chi = 0; chi < r; ++chi) {
    long long s = 0;
    for (int i = 0; i < r; ++i) {
      long long class_size = static_cast<long long>(table->classes[i].size()) % p;
      s = (s + mulm(mulm(omega[chi][i], omega[chi][table->inverse_class[i]], p),
                    invm(class_size, p), p)) %
          p;
    }
    long long d2 = mulm(n % p, invm(s, p), p);
    long long found = -1;
    for (long long d = 1; d * d <= n; ++d)
      if (mulm(d, d, p) == d2) {
        found = d;
        break;
      }
    require_internal(found > 0, "no integer degree matches the orthogonality relation");
    degree_int[chi] = found;
    degree_mod[chi] = found % p;
  }

  // Character values mod p: chi(g_j) = d * omega_j / |C_j|.
  std::vector<Vec> chi_mod(r, Vec(r));
  for (int chi = 0; chi < r; ++chi)
    for (int j = 0; j < r; ++j) {
      long long class_size = static_cast<long long>(table->classes[j].size()) % p;
      chi_mod[chi][j] = mulm(mulm(degree_mod[chi], omega[chi][j], p), invm(class_size, p), p);
    }

  // Exact lift. For g of order m, chi(g) = sum_l c_l zeta_m^l where c_l is
  // the multiplicity of eigenvalue zeta_m^l, recovered by a mod-p DFT over
  // the powers of g. Multiplicities are bounded by the degree < p, so the
  // lift is unique.
  const long long z = primitive_root(p);
  const long long w_e = powm(z, (p - 1) / e, p);

  std::vector<std::vector<int>> power_class(r);
  std::vector<int> rep_order(r);
  for (int j = 0; j < r; ++j) {
    const int rep = table->class_rep[j];
    const int ord = g.element_order(rep);
    rep_order[j] = ord;
    power_class[j].resize(ord);
    int x = 0;
    for (int t = 0; t < ord; ++t) {
      power_class[j][t] = table->class_of[x];
      x = g.table[x][rep];
    }
  }

  std::vector<ClassFunction> rows(r);
  for (int chi = 0; chi < r; ++chi) {
    rows[chi].values.reserve(r);
    for (int j = 0; j < r; ++j) {
      const int ord = rep_order[j];
      require_internal(e % ord == 0, "element order does not divide the exponent");
      const long long w_m = powm(w_e, e / ord, p);
      const long long w_m_inv = invm(w_m, p);
      Cyclotomic value = Cyclotomic::zero(e);
      long long total = 0;
      for (int l = 0; l < ord; ++l) {
        long long acc = 0;
        for (int t = 0; t < ord; ++t)
          acc = (acc + mulm(chi_mod[chi][power_class[j][t]], powm(w_m_inv, 1LL * l * t, p), p)) % p;
        long long c_l = mulm(acc, invm(ord % p, p), p);
        require_internal(c_l <= degree_int[chi], "lifted multiplicity exceeds the degree");
        total += c_l;
        if (c_l != 0)
          value += Cyclotomic::root(e, static_cast<long long>(e / ord) * l).scale(Rational(c_l));
      }
      require_internal(total == degree_int[chi], "eigenvalue multiplicities do not sum to degree");
      rows[chi].values.push_back(std::move(value));
    }
  }

  // Deterministic row order: degree, then the canonical value order.
  std::vector<int> order_idx(r);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    if (degree_int[a] != degree_int[b]) return degree_int[a] < degree_int[b];
    for (int j = 0; j < r; ++j) {
      int c = Cyclotomic::compare(rows[a].values[j], rows[b].values[j]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  table->rows.reserve(r);
  table->degrees.reserve(r);
  for (int i : order_idx) {
    table->rows.push_back(std::move(rows[i]));
    table->degrees.push_back(static_cast<int>(degree_int[i]));
  }

  // Structural assertions; any failure is a bug, not an input condition.
  const Cyclotomic one = Cyclotomic::one(e);
  for (int j = 0; j < r; ++j)
    require_internal(table->rows[0].values[j] == one, "row 0 is not the trivial character");
  long long degsum = 0;
  for (int i = 0; i < r; ++i) degsum += 1LL * table->degrees[i] * table->degrees[i];
  require_internal(degsum == n, "squared degrees do not sum to the group order");
  for (int i = 0; i < r; ++i) {
    require_internal(table->rows[i].values[0] ==
                         Cyclotomic::from_rational(e, Rational(table->degrees[i])),
                     "identity value differs from the degree");
    for (const Cyclotomic& v : table->rows[i].values)
      require_internal(v.is_integral(), "character value is not an algebraic integer");
  }
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Cyclotomic acc = Cyclotomic::zero(e);
      for (int k = 0; k < r; ++k)
        acc += (table->rows[i].values[k] * table->rows[j].values[k].conj())
                   .scale(Rational(static_cast<long long>(table->classes[k].size())));
      Cyclotomic expect = Cyclotomic::from_rational(e, Rational(i == j ? n : 0));
      require_internal(acc == expect, "row orthogonality fails");
    }
  for (int k = 0; k < r; ++k)
    for (int l = k; l < r; ++l) {
      Cyclotomic acc = Cyclotomic::zero(e);
      for (int i = 0; i < r; ++i) acc += table->rows[i].values[k] * table->rows[i].values[l].conj();
      Cyclotomic expect =
          (k == l) ? Cyclotomic::from_rational(
                         e, Rational(n, static_cast<long long>(table->classes[k].size())))
                   : Cyclotomic::zero(e);
      require_internal(acc == expect, "column orthogonality fails");
    }

  // Conjugation and tensor caches.
  table->conj_row.assign(r, -1);
  for (int i = 0; i < r; ++i) {
    auto idx = find_row(*table, conjugate_classfunction(table->rows[i]));
    require_internal(idx.has_value(), "conjugate of an irreducible is missing from the table");
    table->conj_row[i] = *idx;
  }
  table->tensor.assign(r, std::vector<std::vector<int>>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      std::vector<int> mult =
          decompose_character(*table, pointwise_product(*table, table->rows[i], table->rows[j]));
      long long bookkeeping = 0;
      for (int k = 0; k < r; ++k) bookkeeping += static_cast<long long>(mult[k]) * table->degrees[k];
      require_internal(bookkeeping == 1LL * table->degrees[i] * table->degrees[j],
                       "tensor decomposition degree bookkeeping fails");
      table->tensor[i][j] = mult;
      table->tensor[j][i] = std::move(mult);
    }
  }

  return table;
}

Rational inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g) {
  require_internal(f.values.size() == t.classes.size() && g.values.size() == t.classes.size(),
                   "class function length mismatch");
  const int e = t.root_order;
  Cyclotomic acc = Cyclotomic::zero(e);
  for (std::size_t k = 0; k < t.classes.size(); ++k)
    acc += (f.values[k] * g.values[k].conj())
               .scale(Rational(static_cast<long long>(t.classes[k].size())));
  Cyclotomic scaled = acc.scale(Rational(1, t.group->order));
  return scaled.rational_value();
}

std::vector<int> decompose_character(const CharacterTable& t, const ClassFunction& f) {
  const int r = t.num_irreps();
  require_internal(f.values.size() == t.classes.size(), "class function has the wrong length");

  // For a character row, conj(chi(g)) = chi(g^-1), so the inner product
  // reads the row at the inverse class instead of conjugating. Rational f
  // values (the common case: permutation characters) avoid cyclotomic
  // products entirely.
  std::vector<Rational> weight(r);
  bool all_rational = true;
  for (int c = 0; c < r; ++c) {
    if (!f.values[c].is_rational()) {
      all_rational = false;
      break;
    }
    weight[c] =
        f.values[c].rational_value() * Rational(static_cast<long long>(t.classes[c].size()));
  }

  std::vector<int> mult(r);
  for (int k = 0; k < r; ++k) {
    Cyclotomic acc = Cyclotomic::zero(t.root_order);
    for (int c = 0; c < r; ++c) {
      const Cyclotomic& x = t.rows[k].values[t.inverse_class[c]];
      if (all_rational) {
        acc += x.scale(weight[c]);
      } else {
        acc += (f.values[c] * x).scale(Rational(static_cast<long long>(t.classes[c].size())));
      }
    }
    Rational m = acc.scale(Rational(1, t.group->order)).rational_value();
    require_internal(m.is_integer() && m.is_nonneg(), "multiplicity must be in Z>=0");
    mult[k] = static_cast<int>(m.as_integer());
  }
  return mult;
}

std::vector<int> tensor_decompose(const CharacterTable& t, int i, int j) {
  require_internal(i >= 0 && j >= 0 && i < t.num_irreps() && j < t.num_irreps(),
                   "irrep index out of range");
  return t.tensor[i][j];
}

int conjugate_irrep(const CharacterTable& t, int i) {
  require_internal(i >= 0 && i < t.num_irreps(), "irrep index out of range");
  return t.conj_row[i];
}

ClassFunction permutation_character(const CharacterTable& t, const TopSystem& s) {
  if (s.group != t.group && s.group->content_hash() != t.group->content_hash())
    fail(ErrorKind::GroupMismatch, "system and table have different groups");
  ClassFunction f;
  f.values.reserve(t.classes.size());
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    const Perm& p = s.action[t.class_rep[c]];
    long long fixed = 0;
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p[x] == static_cast<int>(x)) ++fixed;
    f.values.push_back(Cyclotomic::from_rational(t.root_order, Rational(fixed)));
  }
  return f;
}

Subgroup kernel_of_irrep(const CharacterTable& t, int i) {
  const Cyclotomic deg = Cyclotomic::from_rational(t.root_order, Rational(t.degrees[i]));
  std::vector<int> members;
  for (int x = 0; x < t.group->order; ++x)
    if (t.rows[i].values[t.class_of[x]] == deg) members.push_back(x);
  Subgroup k{t.group, members};
  require_internal(is_subgroup(*t.group, k.members), "irrep kernel is not a subgroup");
  require_internal(is_normal_subgroup(*t.group, k), "irrep kernel is not normal");
  return k;
}

ClassFunction trivial_character(const CharacterTable& t) { return t.rows[0]; }

ClassFunction regular_character(const CharacterTable& t) {
  ClassFunction f;
  f.values.reserve(t.classes.size());
  f.values.push_back(Cyclotomic::from_rational(t.root_order, Rational(t.group->order)));
  for (std::size_t c = 1; c < t.classes.size(); ++c)
    f.values.push_back(Cyclotomic::zero(t.root_order));
  return f;
}

ClassFunction pointwise_product(const CharacterTable& t, const ClassFunction& a,
                                const ClassFunction& b) {
  require_internal(a.values.size() == b.values.size() && a.values.size() == t.classes.size(),
                   "class function length mismatch");
  ClassFunction out;
  out.values.reserve(a.values.size());
  for (std::size_t k = 0; k < a.values.size(); ++k) out.values.push_back(a.values[k] * b.values[k]);
  return out;
}

ClassFunction conjugate_classfunction(const ClassFunction& f) {
  ClassFunction out;
  out.values.reserve(f.values.size());
  for (const auto& v : f.values) out.values.push_back(v.conj());
  return out;
}

std::optional<int> find_row(const CharacterTable& t, const ClassFunction& f) {
  for (int i = 0; i < t.num_irreps(); ++i)
    if (t.rows[i].values == f.values) return i;
  return std::nullopt;
}

ClassFunction pullback_classfunction(const CharacterTable& source_table,
                                     const CharacterTable& target_table, const GroupHom& hom,
                                     const ClassFunction& f) {
  require_internal(source_table.root_order % target_table.root_order == 0,
                   "pullback needs compatible root orders");
  ClassFunction out;
  out.values.reserve(source_table.classes.size());
  for (std::size_t c = 0; c < source_table.classes.size(); ++c) {
    int img = hom.images[source_table.class_rep[c]];
    out.values.push_back(
        f.values[target_table.class_of[img]].rebase(source_table.root_order));
  }
  return out;
}

std::uint64_t table_hash(const CharacterTable& t) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(t.group->order));
  mix(static_cast<std::uint64_t>(t.root_order));
  for (const auto& c : t.classes) {
    mix(c.size());
    mix(static_cast<std::uint64_t>(c[0]));
  }
  for (const auto& row : t.rows)
    for (const auto& v : row.values)
      for (const auto& coeff : v.coeffs()) {
        mix(static_cast<std::uint64_t>(coeff.num()));
        mix(static_cast<std::uint64_t>(coeff.den()));
      }
  return h;
}

}  // namespace hvn
