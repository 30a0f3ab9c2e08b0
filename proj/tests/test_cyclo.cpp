#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kb/cyclo.hpp"

using namespace kb;

static const double kPi = 3.14159265358979323846;

TEST_CASE("root powers embed as the canonical root of unity") {
  const long N = 20;
  for (long e : {0L, 1L, 7L, 13L, 19L, 25L, -3L}) {
    auto z = embed_double(CycloElem::root_power(N, e));
    double arg = 2.0 * kPi * static_cast<double>(((e % N) + N) % N) / N;
    CHECK(z.real() == doctest::Approx(std::cos(arg)).epsilon(1e-12));
    CHECK(z.imag() == doctest::Approx(std::sin(arg)).epsilon(1e-12));
  }
}

TEST_CASE("field degree") {
  CHECK(cyclo_degree(20) == 8);
  CHECK(cyclo_degree(24) == 8);
  CHECK(cyclo_degree(28) == 12);
  CHECK(cyclo_degree(48) == 16);
}

TEST_CASE("qpow is a homomorphism in the exponent") {
  RootChoice root(7, 3);
  CHECK(qpow(root, 1, 4).pow(4) == qpow(root, 1));
  CHECK(qpow(root, 3, 4) * qpow(root, 5, 4) == qpow(root, 2));
  CHECK(qpow(root, 1, 2) * qpow(root, -1, 2) == CycloElem::one(28));
  CHECK(qpow(root, 7) == CycloElem::one(28));  // q is an r-th root
}

TEST_CASE("quantum integers") {
  RootChoice root(5, 1);
  CHECK(qint(root, 0).is_zero());
  CHECK(qint(root, 1).is_one());
  CHECK(qint(root, 5).is_zero());  // [r] = 0
  CHECK(qint(root, -3) == -qint(root, 3));
  CHECK(qint(root, 4) == qint(root, 1));  // [r - n] = [n]
  // recursion [2][n] = [n+1] + [n-1]
  for (long n = 1; n <= 6; ++n)
    CHECK(qint(root, 2) * qint(root, n) ==
          qint(root, n + 1) + qint(root, n - 1));
  // numeric: [2] = 2 cos(pi/5) at t = 1
  auto z = embed_double(qint(root, 2));
  CHECK(z.real() == doctest::Approx(2 * std::cos(kPi / 5)).epsilon(1e-12));
  CHECK(z.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("arithmetic, inverses, conjugation") {
  RootChoice root(9, 5);
  const long N = root.modulus();
  CycloElem x = qint(root, 4) + Rational(3, 7) * qpow(root, 3, 4);
  CycloElem y = qpow(root, -5, 2) - CycloElem::from_rational(N, Rational(2));
  CHECK((x * y) * (x * y).inverse() == CycloElem::one(N));
  CHECK(conj_q(conj_q(x)) == x);
  CHECK(conj_q(x * y) == conj_q(x) * conj_q(y));
  CHECK(conj_q(x + y) == conj_q(x) + conj_q(y));
  CHECK(is_real(x * conj_q(x)));
  CHECK(is_real(x + conj_q(x)));
  CHECK_FALSE(is_real(qpow(root, 1, 4)));
}

TEST_CASE("sign_real") {
  RootChoice root(5, 1);
  CHECK(sign_real(CycloElem::zero(20)) == 0);
  CHECK(sign_real(CycloElem::from_rational(20, Rational(-3, 2))) == -1);
  // 2 cos(pi/5) - 1 > 0, 2 cos(2 pi / 5) - 1 < 0
  CycloElem one = CycloElem::one(20);
  CHECK(sign_real(qint(root, 2) - one) == 1);
  RootChoice root2(5, 3);
  CHECK(sign_real(qint(root2, 2) - one) == -1);
  // [5] = 0 exactly, caught by the exact zero test before intervals
  CHECK(sign_real(qint(root, 5)) == 0);
}

TEST_CASE("headline excess value at r=10, t=3") {
  // (q - q^{-1})(q^2 - q^{-2}) at q = exp(3 pi i / 5)
  // equals -4 sin(3 pi/5) sin(6 pi/5) = sqrt(5)
  RootChoice root(10, 3);
  CycloElem excess = (qpow(root, 1) - qpow(root, -1)) *
                     (qpow(root, 2) - qpow(root, -2));
  CHECK(is_real(excess));
  CHECK(sign_real(excess) == 1);
  auto z = embed_double(excess);
  CHECK(z.real() == doctest::Approx(2.2360679774997896).epsilon(1e-12));
  CHECK(z.real() ==
        doctest::Approx(-4 * std::sin(3 * kPi / 5) * std::sin(6 * kPi / 5))
            .epsilon(1e-12));
}

TEST_CASE("enclosures contain the point value") {
  RootChoice root(7, 3);
  CycloElem x = qint(root, 3) + qpow(root, 1, 4);
  auto z = embed_double(x);
  auto box = embed_enclosure(x, 128);
  CHECK(box.re_lo <= z.real());
  CHECK(z.real() <= box.re_hi);
  CHECK(box.im_lo <= z.imag());
  CHECK(z.imag() <= box.im_hi);
  // endpoints are rounded out to double, so the width bottoms out near ulp
  CHECK(box.re_hi - box.re_lo < 1e-15);
}

TEST_CASE("root choice validation") {
  CHECK_THROWS(RootChoice(10, 2));  // gcd(2, 40) != 1
  CHECK_THROWS(RootChoice(2, 1));   // r too small
  CHECK_THROWS(RootChoice(5, 25));  // gcd(25, 20) != 1
}
