#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "hvn/errors.hpp"

namespace hvn {

// Exact rational over int64 with checked arithmetic. All values in this
// library stay far below overflow at the supported group orders; going
// out of range is a bug, so mixed 128-bit intermediates are verified
// before narrowing.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_nonneg() const { return num_ >= 0; }
  bool is_positive() const { return num_ > 0; }

  // Integer value; caller must know the value is integral.
  long long as_integer() const {
    if (den_ != 1) fail(ErrorKind::NotRational, "value " + str() + " is not an integer");
    return num_;
  }

  Rational operator-() const { return Rational(-num_, den_, already_normal_tag{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(ErrorKind::Internal, "rational division by zero");
    return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  struct already_normal_tag {};
  Rational(long long n, long long d, already_normal_tag) : num_(n), den_(d) {}

  static long long checked_add(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) + b;
    narrow_check(r);
    return static_cast<long long>(r);
  }
  static long long checked_mul(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) * b;
    narrow_check(r);
    return static_cast<long long>(r);
  }
  static void narrow_check(__int128 r) {
    require_internal(r <= INT64_MAX && r >= INT64_MIN, "rational arithmetic overflow");
  }

  void normalize() {
    require_internal(den_ != 0, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

}  // namespace hvn
