#ifndef HYPLAB_CYCLOTOMIC_HPP
#define HYPLAB_CYCLOTOMIC_HPP

#include <vector>

#include "hyplab/finite_field.hpp"
#include "hyplab/interval.hpp"
#include "hyplab/numbers.hpp"

namespace hyplab {

// Element of Z[zeta_p] in the power basis 1, z, ..., z^{p-2} of Z[x]/Phi_p.
struct CyclotomicInteger {
  int p = 2;
  std::vector<Int> coords;  // length p-1

  CyclotomicInteger() : coords(1, Int(0)) {}
  explicit CyclotomicInteger(int prime) : p(prime), coords(prime - 1, Int(0)) {}

  bool operator==(const CyclotomicInteger&) const = default;
  bool is_zero() const;
  bool is_rational() const;  // all zeta-coordinates vanish
  Int rational_part() const { return coords[0]; }
};

CyclotomicInteger cyc_from_int(int p, const Int& n);
CyclotomicInteger zeta_pow(int p, long k);  // zeta_p^k, exponent mod p

CyclotomicInteger cyc_add(const CyclotomicInteger& a, const CyclotomicInteger& b);
CyclotomicInteger cyc_sub(const CyclotomicInteger& a, const CyclotomicInteger& b);
CyclotomicInteger cyc_mul(const CyclotomicInteger& a, const CyclotomicInteger& b);
CyclotomicInteger cyc_neg(const CyclotomicInteger& a);

// Galois action sigma_k : zeta -> zeta^k, k coprime to p.
CyclotomicInteger cyc_galois(const CyclotomicInteger& a, long k);

// psi(u) = zeta_p^{Tr(u)} with the absolute trace down to F_p.
CyclotomicInteger psi(FieldElement u);

// Rigorous enclosure of |sigma(z)| under zeta_p -> exp(2*pi*i/p), of width
// at most 2^(-precision+4).
RealInterval cyc_abs(const CyclotomicInteger& z, unsigned precision_bits = 64);

// Complex embedding as a rectangle (re, im).
ComplexInterval cyc_embed(const CyclotomicInteger& z, unsigned precision_bits = 64);

// Element of Q(zeta_p) as numerator over a positive integer denominator,
// content-reduced. This is the coefficient field for recurrence fitting.
struct CyclotomicRational {
  CyclotomicInteger num;
  Int den = 1;

  CyclotomicRational() = default;
  explicit CyclotomicRational(int p) : num(p) {}
  CyclotomicRational(CyclotomicInteger n, Int d);

  int p() const { return num.p; }
  bool is_zero() const { return num.is_zero(); }
  bool operator==(const CyclotomicRational&) const = default;
};

CyclotomicRational cycq_from(const CyclotomicInteger& a);
CyclotomicRational cycq_add(const CyclotomicRational& a, const CyclotomicRational& b);
CyclotomicRational cycq_sub(const CyclotomicRational& a, const CyclotomicRational& b);
CyclotomicRational cycq_mul(const CyclotomicRational& a, const CyclotomicRational& b);
CyclotomicRational cycq_neg(const CyclotomicRational& a);
// Inverse by the product of the nontrivial Galois conjugates over the norm.
CyclotomicRational cycq_inv(const CyclotomicRational& a);
CyclotomicRational cycq_div(const CyclotomicRational& a, const CyclotomicRational& b);

ComplexInterval cycq_embed(const CyclotomicRational& a, unsigned precision_bits = 64);

}  // namespace hyplab

#endif
