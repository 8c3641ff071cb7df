#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "hvn/cyclotomic.hpp"
#include "hvn/errors.hpp"
#include "hvn/rational.hpp"

using namespace hvn;

TEST_CASE("roots of unity satisfy their defining relations") {
  for (int e : {1, 2, 3, 4, 6, 8, 12}) {
    Cyclotomic z = Cyclotomic::root(e, 1);
    Cyclotomic power = Cyclotomic::one(e);
    for (int k = 1; k <= e; ++k) {
      power *= z;
      CHECK(power == Cyclotomic::root(e, k));
    }
    CHECK(power == Cyclotomic::one(e));
  }
  // zeta_4^2 = -1 in canonical form.
  Cyclotomic i = Cyclotomic::root(4, 1);
  CHECK(i * i == Cyclotomic::from_rational(4, Rational(-1)));
}

TEST_CASE("canonical form is unique and detects rationality") {
  // 1 + zeta_3 + zeta_3^2 = 0: the sum reduces to the zero vector.
  Cyclotomic sum = Cyclotomic::one(3) + Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2);
  CHECK(sum.is_zero());

  Cyclotomic z6 = Cyclotomic::root(6, 1);
  CHECK(z6 * z6 * z6 == Cyclotomic::from_rational(6, Rational(-1)));

  Cyclotomic two = Cyclotomic::from_rational(12, Rational(2));
  CHECK(two.is_rational());
  CHECK(two.rational_value() == Rational(2));
  CHECK(two.is_integral());
  CHECK(Cyclotomic::from_rational(5, Rational(1, 2)).is_rational());
  CHECK_FALSE(Cyclotomic::from_rational(5, Rational(1, 2)).is_integral());
  CHECK_FALSE(Cyclotomic::root(5, 1).is_rational());

  try {
    Cyclotomic::root(8, 1).rational_value();
    FAIL("irrational value produced a rational");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRational);
  }
}

TEST_CASE("conjugation is an involution fixing rationals") {
  for (int e : {3, 4, 5, 8, 12}) {
    for (int k = 0; k < e; ++k) {
      Cyclotomic z = Cyclotomic::root(e, k);
      CHECK(z.conj().conj() == z);
      CHECK(z * z.conj() == Cyclotomic::one(e));
    }
  }
  Cyclotomic r = Cyclotomic::from_rational(7, Rational(3, 5));
  CHECK(r.conj() == r);
}

TEST_CASE("rebase embeds smaller fields exactly") {
  Cyclotomic z3 = Cyclotomic::root(3, 1);
  Cyclotomic z3_in_12 = z3.rebase(12);
  CHECK(z3_in_12 == Cyclotomic::root(12, 4));
  CHECK(z3_in_12.root_order() == 12);
  // Arithmetic commutes with the embedding.
  CHECK((z3 * z3).rebase(12) == z3_in_12 * z3_in_12);
  CHECK((z3 + z3).rebase(12) == z3_in_12 + z3_in_12);
}

TEST_CASE("inverse is exact") {
  for (int e : {4, 5, 8, 9}) {
    Cyclotomic x = Cyclotomic::root(e, 1) + Cyclotomic::from_rational(e, Rational(2));
    CHECK(x * x.inverse() == Cyclotomic::one(e));
  }
  try {
    Cyclotomic::zero(6).inverse();
    FAIL("zero inverted");
  } catch (const Error&) {
  }
}

TEST_CASE("numeric embedding agrees with the exact value") {
  for (int e : {3, 4, 8}) {
    for (int k = 0; k < e; ++k) {
      std::complex<double> expect = std::polar(1.0, 2 * M_PI * k / e);
      std::complex<double> got = Cyclotomic::root(e, k).to_complex();
      CHECK(std::abs(expect - got) < 1e-12);
    }
  }
}

TEST_CASE("total order sorts 1 first among roots of unity") {
  for (int e : {4, 6, 8}) {
    for (int k = 1; k < e; ++k) {
      CHECK(Cyclotomic::compare(Cyclotomic::one(e), Cyclotomic::root(e, k)) < 0);
    }
  }
  CHECK(Cyclotomic::compare(Cyclotomic::one(4), Cyclotomic::one(4)) == 0);
}

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(12) == 4);
  // Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1, Phi_1 = x - 1.
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  // Degree of Phi_n is phi(n).
  for (int n : {2, 3, 5, 8, 12, 15}) {
    CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
  }
}

TEST_CASE("printing uses sparse polynomial form") {
  CHECK(Cyclotomic::from_rational(4, Rational(3)).str() == "3");
  CHECK(Cyclotomic::root(4, 1).str() == "z4");
  CHECK((-Cyclotomic::root(4, 1)).str() == "-z4");
  CHECK(Cyclotomic::zero(4).str() == "0");
}
