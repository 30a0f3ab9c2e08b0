#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "kb/rational.hpp"

namespace kb {

/// Selects the root of unity every computation runs at: q^{1/4} is the
/// t-th power of the canonical primitive (4r)-th root, so q itself is a
/// primitive r-th root.  Requires gcd(t, 4r) = 1.
struct RootChoice {
  long r;
  long t;

  RootChoice(long r_, long t_);
  long modulus() const { return 4 * r; }
};

/// Element of Q(zeta_N), N = 4r, stored as a rational coefficient vector
/// of length phi(N) reduced modulo the N-th cyclotomic polynomial.
/// Values are canonical, so equality is coefficient-wise.
class CycloElem {
 public:
  CycloElem() = default;

  static CycloElem zero(long modulus);
  static CycloElem one(long modulus);
  static CycloElem from_rational(long modulus, const Rational& value);
  /// zeta^e, exponent taken modulo N.
  static CycloElem root_power(long modulus, long long exponent);
  static CycloElem from_coeffs(long modulus, std::vector<Rational> coeffs);

  long modulus() const { return modulus_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Valid only when is_rational().
  Rational rational_value() const;

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& rhs);
  CycloElem& operator-=(const CycloElem& rhs);
  CycloElem& operator*=(const CycloElem& rhs);

  CycloElem inverse() const;
  CycloElem pow(const Int& exponent) const;

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) {
    return a * b.inverse();
  }
  friend bool operator==(const CycloElem& a, const CycloElem& b);
  friend bool operator!=(const CycloElem& a, const CycloElem& b) {
    return !(a == b);
  }

 private:
  CycloElem(long modulus, std::vector<Rational> coeffs);

  long modulus_ = 0;
  std::vector<Rational> coeffs_;
};

CycloElem operator*(const Rational& a, const CycloElem& b);

/// q^{num/den} with den in {1, 2, 4}; always lands in Q(zeta_{4r}) because
/// q^{1/4} is a genuine element of the field.
CycloElem qpow(const RootChoice& root, long long num, long long den = 1);

/// Quantum integer [n], computed as the geometric sum
/// sum_{i=0..n-1} q^{(n-1-2i)/2}; [-n] = -[n].
CycloElem qint(const RootChoice& root, long n);

/// The Galois automorphism zeta -> zeta^{-1} (hence q -> q^{-1}); under the
/// canonical embedding this is complex conjugation.
CycloElem conj_q(const CycloElem& x);

bool is_real(const CycloElem& x);

/// Euler phi of the modulus, i.e. the degree of the field over Q.
long cyclo_degree(long modulus);

/// Numeric rendering at the canonical embedding zeta -> exp(2*pi*i/N).
/// Accurate to double precision (computed with guard bits).
std::complex<double> embed_double(const CycloElem& x);

/// Rigorous enclosure of the canonical embedding, computed with interval
/// arithmetic at the given working precision.
struct ComplexEnclosure {
  double re_lo, re_hi;
  double im_lo, im_hi;
};
ComplexEnclosure embed_enclosure(const CycloElem& x, long prec_bits);

/// Sign of a real element: exact zero test first, then interval evaluation
/// at the canonical embedding with precision doubling (64 up to 4096 bits).
/// Throws if the input is not conjugation-fixed or the cap is reached.
int sign_real(const CycloElem& x);

}  // namespace kb
