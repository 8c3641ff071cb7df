#include "hvn/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>

#include "hvn/errors.hpp"

namespace hvn {

int euler_phi(int n) {
  require_internal(n >= 1, "euler_phi of nonpositive argument");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials, used only where divisibility holds.
std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
  require_internal(!den.empty() && den.back() == 1, "divisor must be monic");
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  require_internal(dn >= dd, "division degree underflow");
  std::vector<long long> q(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    long long coeff = num[k + dd];
    q[k] = coeff;
    if (coeff == 0) continue;
    for (int j = 0; j <= dd; ++j) num[k + j] -= coeff * den[j];
  }
  for (long long r : num) require_internal(r == 0, "polynomial division has remainder");
  return q;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively.
  static std::map<int, std::vector<long long>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<std::vector<long long>(int)> phi_of = [&](int m) -> std::vector<long long> {
    auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    std::vector<long long> acc = num;
    for (int d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      acc = poly_divide_exact(acc, phi_of(d));
    }
    cache.emplace(m, acc);
    return acc;
  };
  return phi_of(n);
}

namespace {

// Per-root-order reduction data: zeta^k in canonical coordinates for all
// exponents a product of two canonical forms can reach.
struct ReductionContext {
  int e;
  int phi;
  std::vector<std::vector<Rational>> pow;  // pow[k], k in [0, 2e)
};

const ReductionContext& context_for(int e) {
  static std::map<int, std::unique_ptr<ReductionContext>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(e);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<ReductionContext>();
  ctx->e = e;
  ctx->phi = euler_phi(e);
  const int phi = ctx->phi;
  std::vector<long long> cp = cyclotomic_polynomial(e);
  require_internal(static_cast<int>(cp.size()) == phi + 1 && cp[phi] == 1,
                   "cyclotomic polynomial degree mismatch");
  ctx->pow.resize(2 * e);
  for (int k = 0; k < phi; ++k) {
    ctx->pow[k].assign(phi, Rational(0));
    ctx->pow[k][k] = Rational(1);
  }
  for (int k = phi; k < 2 * e; ++k) {
    // zeta^k = zeta * zeta^(k-1); the top coefficient folds through
    // zeta^phi = -(cp[0] + cp[1] zeta + ... + cp[phi-1] zeta^(phi-1)).
    const std::vector<Rational>& prev = ctx->pow[k - 1];
    std::vector<Rational> cur(phi, Rational(0));
    for (int j = 0; j + 1 < phi; ++j) cur[j + 1] = prev[j];
    const Rational top = prev[phi - 1];
    if (!top.is_zero())
      for (int j = 0; j < phi; ++j) cur[j] -= top * Rational(cp[j]);
    ctx->pow[k] = std::move(cur);
  }
  const ReductionContext& ref = *ctx;
  cache.emplace(e, std::move(ctx));
  return ref;
}

}  // namespace

Cyclotomic Cyclotomic::zero(int e) {
  const auto& ctx = context_for(e);
  return Cyclotomic(e, std::vector<Rational>(ctx.phi, Rational(0)));
}

Cyclotomic Cyclotomic::one(int e) { return from_rational(e, Rational(1)); }

Cyclotomic Cyclotomic::from_rational(int e, const Rational& r) {
  Cyclotomic z = zero(e);
  z.c_[0] = r;
  return z;
}

Cyclotomic Cyclotomic::root(int e, long long k) {
  const auto& ctx = context_for(e);
  long long kk = ((k % e) + e) % e;
  return Cyclotomic(e, ctx.pow[static_cast<int>(kk)]);
}

bool Cyclotomic::is_zero() const {
  for (const auto& r : c_)
    if (!r.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_integral() const {
  for (const auto& r : c_)
    if (!r.is_integer()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) fail(ErrorKind::NotRational, "cyclotomic value " + str() + " is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::conj() const {
  // conj(zeta^k) = zeta^(e-k); rebuild from the canonical coordinates.
  const auto& ctx = context_for(e_);
  std::vector<Rational> out(ctx.phi, Rational(0));
  for (int k = 0; k < ctx.phi; ++k) {
    if (c_[k].is_zero()) continue;
    const auto& img = ctx.pow[(e_ - k) % e_];
    for (int j = 0; j < ctx.phi; ++j) out[j] += c_[k] * img[j];
  }
  return Cyclotomic(e_, std::move(out));
}

Cyclotomic Cyclotomic::rebase(int e2) const {
  if (e2 == e_) return *this;
  require_internal(e2 % e_ == 0, "rebase target order must be a multiple");
  const int stride = e2 / e_;
  Cyclotomic out = zero(e2);
  const auto& ctx = context_for(e2);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    const auto& img = ctx.pow[(static_cast<long long>(stride) * k) % e2];
    for (int j = 0; j < ctx.phi; ++j) out.c_[j] += c_[k] * img[j];
  }
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / e_;
    acc += c_[k].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string Cyclotomic::str() const {
  // Sparse polynomial in z{e} (z{e} = exp(2*pi*i/e)); rationals print bare.
  if (is_rational()) return c_[0].str();
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    if (s.empty()) {
      if (!c.is_nonneg()) s += "-";
    } else {
      s += c.is_nonneg() ? "+" : "-";
    }
    Rational abs = c.is_nonneg() ? c : -c;
    if (i == 0) {
      s += abs.str();
    } else {
      if (abs != Rational(1)) s += abs.str() + "*";
      s += "z" + std::to_string(e_);
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  require_internal(a.e_ == b.e_, "mixing root orders in addition");
  Cyclotomic out = a;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& r : out.c_) r = -r;
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  require_internal(a.e_ == b.e_, "mixing root orders in multiplication");
  const auto& ctx = context_for(a.e_);
  const int phi = ctx.phi;
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.c_[j].is_zero()) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rational> out(phi, Rational(0));
  for (int k = 0; k < 2 * phi - 1; ++k) {
    if (conv[k].is_zero()) continue;
    if (k < phi) {
      out[k] += conv[k];
    } else {
      const auto& red = ctx.pow[k];
      for (int j = 0; j < phi; ++j) out[j] += conv[k] * red[j];
    }
  }
  return Cyclotomic(a.e_, std::move(out));
}

Cyclotomic Cyclotomic::scale(const Rational& r) const {
  Cyclotomic out = *this;
  for (auto& c : out.c_) c *= r;
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(ErrorKind::Internal, "inverse of zero cyclotomic");
  // Solve (this) * x = 1 as a phi x phi rational linear system whose
  // columns are this * zeta^j in canonical coordinates.
  const auto& ctx = context_for(e_);
  const int phi = ctx.phi;
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, Rational(0)));
  for (int j = 0; j < phi; ++j) {
    Cyclotomic col = *this * Cyclotomic::root(e_, j);
    for (int i = 0; i < phi; ++i) m[i][j] = col.c_[i];
  }
  m[0][phi] = Rational(1);
  // Gaussian elimination with exact pivoting.
  int row = 0;
  std::vector<int> pivot_col(phi, -1);
  for (int col = 0; col < phi && row < phi; ++col) {
    int pr = -1;
    for (int r = row; r < phi; ++r)
      if (!m[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (int c = col; c <= phi; ++c) m[row][c] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (int c = col; c <= phi; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col[row] = col;
    ++row;
  }
  std::vector<Rational> x(phi, Rational(0));
  for (int r = 0; r < phi; ++r) {
    if (pivot_col[r] >= 0) x[pivot_col[r]] = m[r][phi];
  }
  Cyclotomic result(e_, std::move(x));
  require_internal((*this * result) == Cyclotomic::one(e_), "cyclotomic inverse check failed");
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  require_internal(a.e_ == b.e_, "comparing cyclotomics of different root order");
  return a.c_ == b.c_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  require_internal(a.e_ == b.e_, "ordering cyclotomics of different root order");
  // 1 is the strict minimum of the order. Coefficient comparison alone does
  // not grant this: for some root orders (30 is the smallest) a reduced root
  // of unity starts with the same constant term 1 followed by positive
  // coefficients. Pinning 1 first keeps the trivial character at row 0.
  auto is_unit = [](const Cyclotomic& v) {
    if (!(v.c_[0] == Rational(1))) return false;
    for (std::size_t i = 1; i < v.c_.size(); ++i)
      if (!v.c_[i].is_zero()) return false;
    return true;
  };
  const bool a_one = is_unit(a);
  const bool b_one = is_unit(b);
  if (a_one || b_one) return a_one == b_one ? 0 : (a_one ? -1 : 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == b.c_[i]) continue;
    return (a.c_[i] > b.c_[i]) ? -1 : 1;  // larger coefficient sorts earlier
  }
  return 0;
}

}  // namespace hvn
