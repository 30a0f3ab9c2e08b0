#include "kb/cyclo.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace kb {

namespace {

// ---------------------------------------------------------------------------
// Integer polynomial helpers (coefficient index = degree).

using IPoly = std::vector<Int>;

void itrim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of monic-divisor polynomials over Z.
IPoly idiv_exact(IPoly num, const IPoly& den) {
  IPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (num.size() >= den.size() && !num.empty()) {
    Int c = num.back() / den.back();
    size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    itrim(num);
  }
  if (!num.empty()) throw std::logic_error("cyclotomic division not exact");
  return quot;
}

IPoly cyclotomic_poly(long n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  IPoly result(n + 1, 0);
  result[0] = -1;
  result[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    result = idiv_exact(std::move(result), cyclotomic_poly(d));
  }
  return result;
}

struct FieldContext {
  long n = 0;
  long degree = 0;
  std::vector<Rational> phi;  // monic, length degree + 1
};

const FieldContext& field_context(long n) {
  static std::mutex mu;
  static std::map<long, FieldContext> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("cyclotomic modulus must be >= 1");
  FieldContext ctx;
  ctx.n = n;
  IPoly phi = cyclotomic_poly(n);
  ctx.degree = static_cast<long>(phi.size()) - 1;
  ctx.phi.assign(phi.begin(), phi.end());
  return cache.emplace(n, std::move(ctx)).first->second;
}

void qtrim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder modulo the (monic) cyclotomic polynomial.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> p,
                                     const FieldContext& ctx) {
  qtrim(p);
  while (static_cast<long>(p.size()) > ctx.degree) {
    Rational c = p.back();
    size_t shift = p.size() - ctx.phi.size();
    for (size_t i = 0; i < ctx.phi.size(); ++i) p[shift + i] -= c * ctx.phi[i];
    qtrim(p);
  }
  p.resize(ctx.degree, Rational(0));
  return p;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Extended Euclid in Q[x]: returns (g, u) with u*a = g (mod m), g monic gcd.
std::pair<std::vector<Rational>, std::vector<Rational>> half_ext_gcd(
    std::vector<Rational> a, std::vector<Rational> m) {
  qtrim(a);
  qtrim(m);
  std::vector<Rational> r0 = std::move(m), r1 = std::move(a);
  std::vector<Rational> u0, u1 = {Rational(1)};  // u0 = 0
  while (!r1.empty()) {
    // quotient of r0 by r1
    std::vector<Rational> q;
    std::vector<Rational> rem = r0;
    if (rem.size() >= r1.size()) {
      q.assign(rem.size() - r1.size() + 1, Rational(0));
      while (rem.size() >= r1.size() && !rem.empty()) {
        Rational c = rem.back() / r1.back();
        size_t shift = rem.size() - r1.size();
        q[shift] = c;
        for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
        qtrim(rem);
      }
    }
    // u2 = u0 - q * u1
    std::vector<Rational> qu = poly_mul(q, u1);
    std::vector<Rational> u2 = u0;
    if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    qtrim(u2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {std::move(r0), std::move(u0)};
}

// ---------------------------------------------------------------------------
// Interval arithmetic over mpfr, enough for the sign certification.

struct Interval {
  mpfr_t lo, hi;
  explicit Interval(mpfr_prec_t prec) {
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
  }
  Interval(const Interval& o) {
    mpfr_init2(lo, mpfr_get_prec(o.lo));
    mpfr_init2(hi, mpfr_get_prec(o.hi));
    mpfr_set(lo, o.lo, MPFR_RNDD);
    mpfr_set(hi, o.hi, MPFR_RNDU);
  }
  Interval& operator=(const Interval&) = delete;
  ~Interval() {
    mpfr_clear(lo);
    mpfr_clear(hi);
  }

  void add(const Interval& o) {
    mpfr_add(lo, lo, o.lo, MPFR_RNDD);
    mpfr_add(hi, hi, o.hi, MPFR_RNDU);
  }
};

Interval interval_from_rational(const Rational& x, mpfr_prec_t prec) {
  Interval out(prec);
  const std::string num = numerator(x).str();
  const std::string den = denominator(x).str();
  mpfr_t n_lo, n_hi, d;
  mpfr_init2(n_lo, prec);
  mpfr_init2(n_hi, prec);
  mpfr_init2(d, prec);
  mpfr_set_str(n_lo, num.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(n_hi, num.c_str(), 10, MPFR_RNDU);
  // Denominator is positive; round it the opposite way of the target bound.
  mpfr_set_str(d, den.c_str(), 10, MPFR_RNDU);
  mpfr_div(out.lo, n_lo, d, MPFR_RNDD);
  mpfr_set_str(d, den.c_str(), 10, MPFR_RNDD);
  mpfr_div(out.hi, n_hi, d, MPFR_RNDU);
  mpfr_clear(n_lo);
  mpfr_clear(n_hi);
  mpfr_clear(d);
  return out;
}

// Enclosure of cos resp. sin of 2*pi*k/n.  The argument enclosure is a few
// ulps wide, so endpoint evaluation widened by the argument width is safe
// (the derivative is bounded by 1).
Interval trig_of_angle(long k, long n, bool want_sin, mpfr_prec_t prec) {
  mpfr_t a_lo, a_hi, t0, t1, w;
  mpfr_init2(a_lo, prec);
  mpfr_init2(a_hi, prec);
  mpfr_init2(t0, prec);
  mpfr_init2(t1, prec);
  mpfr_init2(w, prec);
  mpfr_const_pi(a_lo, MPFR_RNDD);
  mpfr_const_pi(a_hi, MPFR_RNDU);
  // 2*pi*k/n with directed rounding; k may be negative.
  if (k >= 0) {
    mpfr_mul_si(a_lo, a_lo, 2 * k, MPFR_RNDD);
    mpfr_mul_si(a_hi, a_hi, 2 * k, MPFR_RNDU);
  } else {
    mpfr_mul_si(a_lo, a_lo, 2 * k, MPFR_RNDU);
    mpfr_mul_si(a_hi, a_hi, 2 * k, MPFR_RNDD);
    mpfr_swap(a_lo, a_hi);
  }
  mpfr_div_si(a_lo, a_lo, n, MPFR_RNDD);
  mpfr_div_si(a_hi, a_hi, n, MPFR_RNDU);
  mpfr_sub(w, a_hi, a_lo, MPFR_RNDU);

  Interval out(prec);
  if (want_sin) {
    mpfr_sin(t0, a_lo, MPFR_RNDD);
    mpfr_sin(t1, a_hi, MPFR_RNDD);
  } else {
    mpfr_cos(t0, a_lo, MPFR_RNDD);
    mpfr_cos(t1, a_hi, MPFR_RNDD);
  }
  mpfr_min(out.lo, t0, t1, MPFR_RNDD);
  mpfr_sub(out.lo, out.lo, w, MPFR_RNDD);
  if (want_sin) {
    mpfr_sin(t0, a_lo, MPFR_RNDU);
    mpfr_sin(t1, a_hi, MPFR_RNDU);
  } else {
    mpfr_cos(t0, a_lo, MPFR_RNDU);
    mpfr_cos(t1, a_hi, MPFR_RNDU);
  }
  mpfr_max(out.hi, t0, t1, MPFR_RNDU);
  mpfr_add(out.hi, out.hi, w, MPFR_RNDU);
  mpfr_clear(a_lo);
  mpfr_clear(a_hi);
  mpfr_clear(t0);
  mpfr_clear(t1);
  mpfr_clear(w);
  return out;
}

Interval scaled_trig_sum(const CycloElem& x, bool want_sin,
                         mpfr_prec_t prec) {
  Interval acc(prec);
  const long n = x.modulus();
  mpfr_t t0, t1;
  mpfr_init2(t0, prec);
  mpfr_init2(t1, prec);
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    const Rational& c = x.coeffs()[i];
    if (c == 0) continue;
    Interval ci = interval_from_rational(c, prec);
    Interval ti = trig_of_angle(static_cast<long>(i), n, want_sin, prec);
    // product of two intervals: min/max over the four corner products
    Interval prod(prec);
    bool first = true;
    const mpfr_t* as[2] = {&ci.lo, &ci.hi};
    const mpfr_t* bs[2] = {&ti.lo, &ti.hi};
    for (auto a : as)
      for (auto b : bs) {
        mpfr_mul(t0, *a, *b, MPFR_RNDD);
        mpfr_mul(t1, *a, *b, MPFR_RNDU);
        if (first) {
          mpfr_set(prod.lo, t0, MPFR_RNDD);
          mpfr_set(prod.hi, t1, MPFR_RNDU);
          first = false;
        } else {
          mpfr_min(prod.lo, prod.lo, t0, MPFR_RNDD);
          mpfr_max(prod.hi, prod.hi, t1, MPFR_RNDU);
        }
      }
    acc.add(prod);
  }
  mpfr_clear(t0);
  mpfr_clear(t1);
  return acc;
}

constexpr long kMinPrecision = 64;
constexpr long kMaxPrecision = 4096;

}  // namespace

// ---------------------------------------------------------------------------
// RootChoice

RootChoice::RootChoice(long r_, long t_) : r(r_), t(t_) {
  if (r < 3) throw std::invalid_argument("RootChoice: r must be >= 3");
  if (t < 1 || t >= 4 * r) throw std::invalid_argument("RootChoice: t out of range");
  if (std::gcd(t, 4 * r) != 1)
    throw std::invalid_argument("RootChoice: gcd(t, 4r) must be 1");
}

// ---------------------------------------------------------------------------
// CycloElem

CycloElem::CycloElem(long modulus, std::vector<Rational> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {}

CycloElem CycloElem::zero(long modulus) {
  const auto& ctx = field_context(modulus);
  return CycloElem(modulus, std::vector<Rational>(ctx.degree, Rational(0)));
}

CycloElem CycloElem::one(long modulus) {
  return from_rational(modulus, Rational(1));
}

CycloElem CycloElem::from_rational(long modulus, const Rational& value) {
  CycloElem out = zero(modulus);
  if (!out.coeffs_.empty()) out.coeffs_[0] = value;
  return out;
}

CycloElem CycloElem::root_power(long modulus, long long exponent) {
  const auto& ctx = field_context(modulus);
  long long e = exponent % modulus;
  if (e < 0) e += modulus;
  std::vector<Rational> p(static_cast<size_t>(e) + 1, Rational(0));
  p.back() = 1;
  return CycloElem(modulus, reduce_mod_phi(std::move(p), ctx));
}

CycloElem CycloElem::from_coeffs(long modulus, std::vector<Rational> coeffs) {
  const auto& ctx = field_context(modulus);
  return CycloElem(modulus, reduce_mod_phi(std::move(coeffs), ctx));
}

bool CycloElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloElem::is_one() const {
  return is_rational() && coeffs_[0] == 1;
}

bool CycloElem::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return !coeffs_.empty();
}

Rational CycloElem::rational_value() const {
  if (!is_rational()) throw std::logic_error("CycloElem: not rational");
  return coeffs_[0];
}

CycloElem CycloElem::operator-() const {
  CycloElem out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloElem& CycloElem::operator+=(const CycloElem& rhs) {
  if (modulus_ != rhs.modulus_)
    throw std::invalid_argument("CycloElem: modulus mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& rhs) {
  if (modulus_ != rhs.modulus_)
    throw std::invalid_argument("CycloElem: modulus mismatch");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& rhs) {
  if (modulus_ != rhs.modulus_)
    throw std::invalid_argument("CycloElem: modulus mismatch");
  const auto& ctx = field_context(modulus_);
  coeffs_ = reduce_mod_phi(poly_mul(coeffs_, rhs.coeffs_), ctx);
  return *this;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw std::domain_error("CycloElem: division by zero");
  const auto& ctx = field_context(modulus_);
  auto [g, u] = half_ext_gcd(coeffs_, ctx.phi);
  // gcd with the irreducible cyclotomic polynomial is a nonzero constant
  if (g.size() != 1)
    throw std::logic_error("CycloElem: element not invertible");
  for (auto& c : u) c /= g[0];
  return CycloElem(modulus_, reduce_mod_phi(std::move(u), ctx));
}

CycloElem CycloElem::pow(const Int& exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycloElem result = one(modulus_);
  CycloElem base = *this;
  Int e = exponent;
  while (e > 0) {
    if ((e & 1) != 0) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
}

CycloElem operator*(const Rational& a, const CycloElem& b) {
  CycloElem out = b;
  std::vector<Rational> c = out.coeffs();
  for (auto& x : c) x *= a;
  return CycloElem::from_coeffs(b.modulus(), std::move(c));
}

// ---------------------------------------------------------------------------
// q-powers, quantum integers, conjugation

CycloElem qpow(const RootChoice& root, long long num, long long den) {
  if (den != 1 && den != 2 && den != 4)
    throw std::invalid_argument("qpow: denominator must be 1, 2 or 4");
  // q^{num/den} = zeta^{4 t num / den}; 4/den is integral by the check above.
  return CycloElem::root_power(root.modulus(), (4 / den) * root.t * num);
}

CycloElem qint(const RootChoice& root, long n) {
  if (n < 0) return -qint(root, -n);
  CycloElem sum = CycloElem::zero(root.modulus());
  for (long i = 0; i < n; ++i) sum += qpow(root, n - 1 - 2 * i, 2);
  return sum;
}

CycloElem conj_q(const CycloElem& x) {
  const long n = x.modulus();
  CycloElem out = CycloElem::zero(n);
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    out += x.coeffs()[i] *
           CycloElem::root_power(n, static_cast<long long>(n) - static_cast<long long>(i));
  }
  return out;
}

bool is_real(const CycloElem& x) { return conj_q(x) == x; }

long cyclo_degree(long modulus) { return field_context(modulus).degree; }

// ---------------------------------------------------------------------------
// Embedding and sign certification

ComplexEnclosure embed_enclosure(const CycloElem& x, long prec_bits) {
  Interval re = scaled_trig_sum(x, /*want_sin=*/false, prec_bits);
  Interval im = scaled_trig_sum(x, /*want_sin=*/true, prec_bits);
  ComplexEnclosure out;
  out.re_lo = mpfr_get_d(re.lo, MPFR_RNDD);
  out.re_hi = mpfr_get_d(re.hi, MPFR_RNDU);
  out.im_lo = mpfr_get_d(im.lo, MPFR_RNDD);
  out.im_hi = mpfr_get_d(im.hi, MPFR_RNDU);
  return out;
}

std::complex<double> embed_double(const CycloElem& x) {
  ComplexEnclosure e = embed_enclosure(x, 128);
  return {0.5 * (e.re_lo + e.re_hi), 0.5 * (e.im_lo + e.im_hi)};
}

int sign_real(const CycloElem& x) {
  if (!is_real(x)) throw std::invalid_argument("sign_real: input is not real");
  if (x.is_zero()) return 0;
  for (long prec = kMinPrecision; prec <= kMaxPrecision; prec *= 2) {
    Interval re = scaled_trig_sum(x, /*want_sin=*/false, prec);
    if (mpfr_sgn(re.lo) > 0) return 1;
    if (mpfr_sgn(re.hi) < 0) return -1;
  }
  throw std::runtime_error(
      "sign_real: interval still contains 0 at 4096-bit precision");
}

}  // namespace kb
