#ifndef HYPLAB_INTERVAL_HPP
#define HYPLAB_INTERVAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "hyplab/numbers.hpp"

namespace hyplab {

// Closed real interval [lo, hi] with MPFR endpoints rounded outward, so every
// operation returns an enclosure of the exact result.
class RealInterval {
 public:
  RealInterval();
  explicit RealInterval(mpfr_prec_t prec);
  RealInterval(const RealInterval& o);
  RealInterval(RealInterval&& o) noexcept;
  RealInterval& operator=(const RealInterval& o);
  RealInterval& operator=(RealInterval&& o) noexcept;
  ~RealInterval();

  static RealInterval from_int(long v, mpfr_prec_t prec);
  static RealInterval from_big(const Int& v, mpfr_prec_t prec);
  static RealInterval from_rat(const Rat& v, mpfr_prec_t prec);
  static RealInterval from_double(double v, mpfr_prec_t prec);
  static RealInterval pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return prec_; }

  RealInterval add(const RealInterval& o) const;
  RealInterval sub(const RealInterval& o) const;
  RealInterval mul(const RealInterval& o) const;
  // Requires o to not contain 0.
  RealInterval div(const RealInterval& o) const;
  RealInterval neg() const;
  RealInterval square() const;
  RealInterval sqrt() const;  // lower endpoint clamped at 0
  RealInterval abs() const;
  // cos/sin over the whole interval; exact for tiny widths up to Lipschitz slack.
  RealInterval cos() const;
  RealInterval sin() const;

  bool contains_zero() const;
  bool contains_double(double v) const;
  // hi - lo <= 2^e
  bool width_le_pow2(long e) const;
  // this.hi <= o.lo  (certainly <=)
  bool certainly_le(const RealInterval& o) const;
  // this.lo > o.hi  (certainly >)
  bool certainly_gt(const RealInterval& o) const;
  // this.lo > o.hi + 2^e
  bool lo_gt_hi_plus_pow2(const RealInterval& o, long e) const;
  // this.hi <= o.hi + 2^e
  bool hi_le_hi_plus_pow2(const RealInterval& o, long e) const;

  double lo_d() const;
  double hi_d() const;
  double mid_d() const;

  // Decimal strings, lo rounded down and hi rounded up.
  std::string lo_str(int digits = 24) const;
  std::string hi_str(int digits = 24) const;

 private:
  RealInterval trig(int (*f)(mpfr_t, const mpfr_t, mpfr_rnd_t)) const;

  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
  friend class ComplexInterval;
};

struct ComplexInterval {
  RealInterval re, im;

  ComplexInterval add(const ComplexInterval& o) const { return {re.add(o.re), im.add(o.im)}; }
  ComplexInterval sub(const ComplexInterval& o) const { return {re.sub(o.re), im.sub(o.im)}; }
  ComplexInterval mul(const ComplexInterval& o) const {
    return {re.mul(o.re).sub(im.mul(o.im)), re.mul(o.im).add(im.mul(o.re))};
  }
  RealInterval abs() const { return re.square().add(im.square()).sqrt(); }
};

// Enclosure of cos(2*pi*k/n) and sin(2*pi*k/n).
std::pair<RealInterval, RealInterval> cos_sin_2pi_frac(long k, long n, mpfr_prec_t prec);

// Enclosure of q^(d/2) = sqrt(q^d).
RealInterval pow_half_int(unsigned long q, unsigned d, mpfr_prec_t prec);

}  // namespace hyplab

#endif
