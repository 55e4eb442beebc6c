#include "hyplab/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace hyplab {

namespace {
constexpr mpfr_prec_t kDefaultPrec = 64;
}

RealInterval::RealInterval() : RealInterval(kDefaultPrec) {}

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
  if (this == &o) return *this;
  mpfr_set_prec(lo_, o.prec_);
  mpfr_set_prec(hi_, o.prec_);
  prec_ = o.prec_;
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealInterval RealInterval::from_int(long v, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_big(const Int& v, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_z(r.lo_, v.backend().data(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.backend().data(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_rat(const Rat& v, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_, v.backend().data(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.backend().data(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_double(double v, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::pi(mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::add(const RealInterval& o) const {
  RealInterval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::sub(const RealInterval& o) const {
  RealInterval r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::mul(const RealInterval& o) const {
  RealInterval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // lo: min over the four corner products rounded down
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // hi: max over the four corner products rounded up
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RealInterval RealInterval::div(const RealInterval& o) const {
  RealInterval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RealInterval RealInterval::neg() const {
  RealInterval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::square() const {
  RealInterval r(prec_);
  if (contains_zero()) {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t a, b;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    mpfr_mul(a, lo_, lo_, MPFR_RNDU);
    mpfr_mul(b, hi_, hi_, MPFR_RNDU);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
    return r;
  }
  return mul(*this);
}

RealInterval RealInterval::sqrt() const {
  RealInterval r(prec_);
  if (mpfr_sgn(lo_) <= 0)
    mpfr_set_zero(r.lo_, 1);
  else
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::abs() const {
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return neg();
  RealInterval r(prec_);
  mpfr_set_zero(r.lo_, 1);
  mpfr_t a;
  mpfr_init2(a, prec_);
  mpfr_neg(a, lo_, MPFR_RNDU);
  mpfr_max(r.hi_, a, hi_, MPFR_RNDU);
  mpfr_clear(a);
  return r;
}

// |f'| <= 1 for sin/cos: enclose by f(lo) widened by the interval width.
RealInterval RealInterval::trig(int (*f)(mpfr_t, const mpfr_t, mpfr_rnd_t)) const {
  mpfr_t w, flo_d, flo_u;
  mpfr_init2(w, prec_);
  mpfr_init2(flo_d, prec_);
  mpfr_init2(flo_u, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  f(flo_d, lo_, MPFR_RNDD);
  f(flo_u, lo_, MPFR_RNDU);
  RealInterval out(prec_);
  mpfr_sub(out.lo_, flo_d, w, MPFR_RNDD);
  mpfr_add(out.hi_, flo_u, w, MPFR_RNDU);
  // clamp to [-1, 1]
  if (mpfr_cmp_si(out.lo_, -1) < 0) mpfr_set_si(out.lo_, -1, MPFR_RNDD);
  if (mpfr_cmp_si(out.hi_, 1) > 0) mpfr_set_si(out.hi_, 1, MPFR_RNDU);
  mpfr_clear(w);
  mpfr_clear(flo_d);
  mpfr_clear(flo_u);
  return out;
}

RealInterval RealInterval::cos() const { return trig(mpfr_cos); }
RealInterval RealInterval::sin() const { return trig(mpfr_sin); }

bool RealInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool RealInterval::contains_double(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool RealInterval::width_le_pow2(long e) const {
  mpfr_t w, b;
  mpfr_init2(w, prec_);
  mpfr_init2(b, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_set_si_2exp(b, 1, e, MPFR_RNDD);
  bool ok = mpfr_cmp(w, b) <= 0;
  mpfr_clear(w);
  mpfr_clear(b);
  return ok;
}

bool RealInterval::certainly_le(const RealInterval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }

bool RealInterval::certainly_gt(const RealInterval& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }

bool RealInterval::lo_gt_hi_plus_pow2(const RealInterval& o, long e) const {
  mpfr_t t;
  mpfr_init2(t, std::max(prec_, o.prec_));
  mpfr_set_si_2exp(t, 1, e, MPFR_RNDU);
  mpfr_add(t, t, o.hi_, MPFR_RNDU);
  bool r = mpfr_cmp(lo_, t) > 0;
  mpfr_clear(t);
  return r;
}

bool RealInterval::hi_le_hi_plus_pow2(const RealInterval& o, long e) const {
  mpfr_t t;
  mpfr_init2(t, std::max(prec_, o.prec_));
  mpfr_set_si_2exp(t, 1, e, MPFR_RNDU);
  mpfr_add(t, t, o.hi_, MPFR_RNDU);
  bool r = mpfr_cmp(hi_, t) <= 0;
  mpfr_clear(t);
  return r;
}

double RealInterval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double RealInterval::mid_d() const { return 0.5 * (lo_d() + hi_d()); }

static std::string fmt_mpfr(const mpfr_t v, int digits, char rnd) {
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dR%ce", digits, rnd);
  char* s = nullptr;
  mpfr_asprintf(&s, fmt, v);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string RealInterval::lo_str(int digits) const { return fmt_mpfr(lo_, digits, 'D'); }
std::string RealInterval::hi_str(int digits) const { return fmt_mpfr(hi_, digits, 'U'); }

std::pair<RealInterval, RealInterval> cos_sin_2pi_frac(long k, long n, mpfr_prec_t prec) {
  RealInterval angle = RealInterval::pi(prec).mul(RealInterval::from_rat(Rat(2 * k, n), prec));
  return {angle.cos(), angle.sin()};
}

RealInterval pow_half_int(unsigned long q, unsigned d, mpfr_prec_t prec) {
  Int qd = 1;
  for (unsigned i = 0; i < d; ++i) qd *= q;
  return RealInterval::from_big(qd, prec).sqrt();
}

}  // namespace hyplab
