#include "hyplab/cyclotomic.hpp"

#include <algorithm>

#include <boost/multiprecision/gmp.hpp>

namespace hyplab {

namespace {

void require_same_p(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.p != b.p) throw HypError(Err::MixedConductor, "mixed cyclotomic conductors");
}

// accumulate c * zeta^e into coords, e already arbitrary
void add_zeta_power(std::vector<Int>& coords, int p, long e, const Int& c) {
  long r = e % p;
  if (r < 0) r += p;
  if (r < p - 1) {
    coords[r] += c;
  } else {
    // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    for (auto& x : coords) x -= c;
  }
}

}  // namespace

bool CyclotomicInteger::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

bool CyclotomicInteger::is_rational() const {
  for (std::size_t i = 1; i < coords.size(); ++i)
    if (coords[i] != 0) return false;
  return true;
}

CyclotomicInteger cyc_from_int(int p, const Int& n) {
  CyclotomicInteger z(p);
  z.coords[0] = n;
  return z;
}

CyclotomicInteger zeta_pow(int p, long k) {
  CyclotomicInteger z(p);
  add_zeta_power(z.coords, p, k, Int(1));
  return z;
}

CyclotomicInteger cyc_add(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  require_same_p(a, b);
  CyclotomicInteger r(a.p);
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = a.coords[i] + b.coords[i];
  return r;
}

CyclotomicInteger cyc_sub(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  require_same_p(a, b);
  CyclotomicInteger r(a.p);
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = a.coords[i] - b.coords[i];
  return r;
}

CyclotomicInteger cyc_neg(const CyclotomicInteger& a) {
  CyclotomicInteger r(a.p);
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = -a.coords[i];
  return r;
}

CyclotomicInteger cyc_mul(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  require_same_p(a, b);
  CyclotomicInteger r(a.p);
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords.size(); ++j) {
      if (b.coords[j] == 0) continue;
      add_zeta_power(r.coords, a.p, static_cast<long>(i + j), a.coords[i] * b.coords[j]);
    }
  }
  return r;
}

CyclotomicInteger cyc_galois(const CyclotomicInteger& a, long k) {
  long r = k % a.p;
  if (r < 0) r += a.p;
  if (r == 0) throw HypError(Err::MixedConductor, "galois exponent must be coprime to p");
  CyclotomicInteger out(a.p);
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    add_zeta_power(out.coords, a.p, static_cast<long>(i) * r, a.coords[i]);
  }
  return out;
}

CyclotomicInteger psi(FieldElement u) {
  int p = u.field->p();
  int t = u.field->trace_to_prime(u.idx);
  return zeta_pow(p, t);
}

ComplexInterval cyc_embed(const CyclotomicInteger& z, unsigned precision_bits) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits);
  ComplexInterval acc{RealInterval(prec), RealInterval(prec)};
  for (std::size_t k = 0; k < z.coords.size(); ++k) {
    if (z.coords[k] == 0) continue;
    auto [c, s] = cos_sin_2pi_frac(static_cast<long>(k), z.p, prec);
    RealInterval coeff = RealInterval::from_big(z.coords[k], prec);
    acc.re = acc.re.add(coeff.mul(c));
    acc.im = acc.im.add(coeff.mul(s));
  }
  return acc;
}

RealInterval cyc_abs(const CyclotomicInteger& z, unsigned precision_bits) {
  // pad the working precision to absorb the magnitude of the coordinates,
  // then refine until the requested absolute width is met
  unsigned mag = 8;
  for (const auto& c : z.coords) {
    unsigned b = static_cast<unsigned>(boost::multiprecision::msb(abs(c) + 1)) + 1;
    mag = std::max(mag, b);
  }
  unsigned working = precision_bits + mag + 16;
  for (;;) {
    RealInterval r = cyc_embed(z, working).abs();
    if (r.width_le_pow2(-static_cast<long>(precision_bits) + 4)) return r;
    working *= 2;
    if (working > (1u << 20)) return r;
  }
}

CyclotomicRational::CyclotomicRational(CyclotomicInteger n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw HypError(Err::MixedConductor, "zero denominator");
  if (den < 0) {
    den = -den;
    num = cyc_neg(num);
  }
  Int g = den;
  for (const auto& c : num.coords) g = boost::multiprecision::gcd(g, c);
  if (g > 1) {
    den /= g;
    for (auto& c : num.coords) c /= g;
  }
}

CyclotomicRational cycq_from(const CyclotomicInteger& a) { return CyclotomicRational(a, Int(1)); }

CyclotomicRational cycq_add(const CyclotomicRational& a, const CyclotomicRational& b) {
  CyclotomicInteger an = a.num, bn = b.num;
  for (auto& c : an.coords) c *= b.den;
  for (auto& c : bn.coords) c *= a.den;
  return CyclotomicRational(cyc_add(an, bn), a.den * b.den);
}

CyclotomicRational cycq_sub(const CyclotomicRational& a, const CyclotomicRational& b) {
  return cycq_add(a, cycq_neg(b));
}

CyclotomicRational cycq_neg(const CyclotomicRational& a) {
  return CyclotomicRational(cyc_neg(a.num), a.den);
}

CyclotomicRational cycq_mul(const CyclotomicRational& a, const CyclotomicRational& b) {
  return CyclotomicRational(cyc_mul(a.num, b.num), a.den * b.den);
}

CyclotomicRational cycq_inv(const CyclotomicRational& a) {
  if (a.is_zero()) throw HypError(Err::MixedConductor, "inverse of zero");
  int p = a.p();
  CyclotomicInteger conj_prod = cyc_from_int(p, 1);
  for (long k = 2; k < p; ++k) conj_prod = cyc_mul(conj_prod, cyc_galois(a.num, k));
  CyclotomicInteger norm = cyc_mul(a.num, conj_prod);
  if (!norm.is_rational())
    throw HypError(Err::MixedConductor, "norm is not rational");  // unreachable
  CyclotomicInteger num = conj_prod;
  for (auto& c : num.coords) c *= a.den;
  return CyclotomicRational(num, norm.rational_part());
}

CyclotomicRational cycq_div(const CyclotomicRational& a, const CyclotomicRational& b) {
  return cycq_mul(a, cycq_inv(b));
}

ComplexInterval cycq_embed(const CyclotomicRational& a, unsigned precision_bits) {
  ComplexInterval n = cyc_embed(a.num, precision_bits);
  RealInterval d = RealInterval::from_big(a.den, precision_bits);
  return {n.re.div(d), n.im.div(d)};
}

}  // namespace hyplab
