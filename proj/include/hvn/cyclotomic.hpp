#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "hvn/rational.hpp"

namespace hvn {

// Exact element of Q(zeta_e). Canonical form: rational coefficients over
// the power basis zeta_e^0 .. zeta_e^(phi(e)-1), i.e. the remainder modulo
// the e-th cyclotomic polynomial. Two values with the same root order are
// equal iff their coefficient vectors are equal. Algebraic integers are
// exactly the values with integral coefficients in this basis.
class Cyclotomic {
 public:
  Cyclotomic() : e_(1), c_{Rational(0)} {}

  static Cyclotomic zero(int e);
  static Cyclotomic one(int e);
  static Cyclotomic from_rational(int e, const Rational& r);
  static Cyclotomic root(int e, long long k);  // zeta_e^k

  int root_order() const { return e_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;    // lies in Q
  bool is_integral() const;    // lies in Z[zeta_e]
  Rational rational_value() const;  // throws NotRational unless is_rational()

  Cyclotomic conj() const;
  Cyclotomic rebase(int e2) const;  // requires root_order() | e2

  std::complex<double> to_complex() const;
  std::string str() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic scale(const Rational& r) const;
  Cyclotomic inverse() const;  // exact; throws on zero

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Canonical total order used wherever values are sorted: lexicographic on
  // coefficient vectors, comparing each coefficient numerically descending.
  // Under this order 1 precedes every other root of unity.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(int e, std::vector<Rational> c) : e_(e), c_(std::move(c)) {}

  int e_;
  std::vector<Rational> c_;  // size phi(e)
};

inline bool cyclo_less(const Cyclotomic& a, const Cyclotomic& b) {
  return Cyclotomic::compare(a, b) < 0;
}

int euler_phi(int n);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(int n);

}  // namespace hvn
