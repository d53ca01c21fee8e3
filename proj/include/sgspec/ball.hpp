#pragma once

// Midpoint-radius interval arithmetic over MPFR with outward rounding.
//
// A Ball represents the set [mid - rad, mid + rad]. Every operation returns
// a ball whose interval encloses the exact image of the input intervals:
// midpoints are rounded to nearest, the rounding error is bounded by one ulp
// (zero when MPFR reports the result exact) and added to the propagated
// radius with upward rounding. Strict inequalities between quantities are
// certified only through certified_compare; an Overlap verdict never
// certifies anything.

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace sgspec {

class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class ToleranceNotReached : public std::runtime_error {
 public:
  explicit ToleranceNotReached(const std::string& what) : std::runtime_error(what) {}
};

class MismatchError : public std::runtime_error {
 public:
  explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};

class InsufficientValues : public std::runtime_error {
 public:
  explicit InsufficientValues(const std::string& what) : std::runtime_error(what) {}
};

class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

enum class Order { Less, Greater, Overlap };

class Ball {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;
  static constexpr mpfr_prec_t kRadiusPrecision = 64;

  Ball() : Ball(0, kDefaultPrecision) {}

  explicit Ball(long value, mpfr_prec_t precision = kDefaultPrecision) {
    mpfr_init2(mid_, std::max<mpfr_prec_t>(precision, MPFR_PREC_MIN));
    mpfr_init2(rad_, kRadiusPrecision);
    mpfr_set_si(mid_, value, MPFR_RNDN);  // exact: |value| << 2^64
    mpfr_set_zero(rad_, 1);
  }

  Ball(const Ball& other) {
    mpfr_init2(mid_, mpfr_get_prec(other.mid_));
    mpfr_init2(rad_, mpfr_get_prec(other.rad_));
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }

  Ball(Ball&& other) noexcept {
    mpfr_init2(mid_, MPFR_PREC_MIN);
    mpfr_init2(rad_, MPFR_PREC_MIN);
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
  }

  Ball& operator=(const Ball& other) {
    if (this != &other) {
      mpfr_set_prec(mid_, mpfr_get_prec(other.mid_));
      mpfr_set_prec(rad_, mpfr_get_prec(other.rad_));
      mpfr_set(mid_, other.mid_, MPFR_RNDN);
      mpfr_set(rad_, other.rad_, MPFR_RNDU);
    }
    return *this;
  }

  Ball& operator=(Ball&& other) noexcept {
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
    return *this;
  }

  ~Ball() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
  }

  // Exact point ball from a double (doubles are binary rationals).
  static Ball from_double(double value, mpfr_prec_t precision = kDefaultPrecision) {
    Ball b(0, std::max<mpfr_prec_t>(precision, 64));
    mpfr_set_d(b.mid_, value, MPFR_RNDN);
    return b;
  }

  // Enclosure of a decimal literal such as "1e-30" or "2.425".
  static Ball from_decimal(const std::string& text, mpfr_prec_t precision = kDefaultPrecision) {
    Ball b(0, precision);
    mpfr_t lo, hi;
    mpfr_init2(lo, precision);
    mpfr_init2(hi, precision);
    int bad_lo = mpfr_set_str(lo, text.c_str(), 10, MPFR_RNDD);
    int bad_hi = mpfr_set_str(hi, text.c_str(), 10, MPFR_RNDU);
    if (bad_lo == -1 || bad_hi == -1 || mpfr_nan_p(lo) || mpfr_nan_p(hi)) {
      mpfr_clear(lo);
      mpfr_clear(hi);
      throw DomainError("from_decimal: unparsable literal '" + text + "'");
    }
    b.assign_endpoints(lo, hi);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return b;
  }

  // Ball from verified endpoints lo <= hi (each exact as given).
  static Ball from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t precision) {
    Ball b(0, precision);
    b.assign_endpoints(lo, hi);
    return b;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }
  bool exact() const { return mpfr_zero_p(rad_); }

  double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  double rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

  void lower(mpfr_ptr out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
  void upper(mpfr_ptr out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

  double lower_double() const {
    mpfr_t t;
    mpfr_init2(t, precision());
    lower(t);
    double d = mpfr_get_d(t, MPFR_RNDD);
    mpfr_clear(t);
    return d;
  }

  double upper_double() const {
    mpfr_t t;
    mpfr_init2(t, precision());
    upper(t);
    double d = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return d;
  }

  bool contains_zero() const {
    if (exact()) return mpfr_zero_p(mid_);
    mpfr_t lo, hi;
    mpfr_init2(lo, precision());
    mpfr_init2(hi, precision());
    lower(lo);
    upper(hi);
    bool c = mpfr_sgn(lo) <= 0 && mpfr_sgn(hi) >= 0;
    mpfr_clear(lo);
    mpfr_clear(hi);
    return c;
  }

  bool is_nonnegative() const {
    mpfr_t lo;
    mpfr_init2(lo, precision());
    lower(lo);
    bool c = mpfr_sgn(lo) >= 0;
    mpfr_clear(lo);
    return c;
  }

  // Identical representation: same midpoint and radius values.
  static bool identical(const Ball& a, const Ball& b) {
    return mpfr_equal_p(a.mid_, b.mid_) && mpfr_equal_p(a.rad_, b.rad_);
  }

  mpfr_ptr mut_mid() { return mid_; }
  mpfr_ptr mut_rad() { return rad_; }

 private:
  void assign_endpoints(mpfr_srcptr lo, mpfr_srcptr hi) {
    // mid = round((lo+hi)/2); rad = max(mid-lo, hi-mid) rounded up, plus
    // nothing further: both differences are computed upward, so the
    // midpoint rounding is already absorbed.
    mpfr_add(mid_, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(mid_, mid_, 1, MPFR_RNDN);  // exact halving
    mpfr_t r1, r2;
    mpfr_init2(r1, kRadiusPrecision);
    mpfr_init2(r2, kRadiusPrecision);
    mpfr_sub(r1, mid_, lo, MPFR_RNDU);
    mpfr_sub(r2, hi, mid_, MPFR_RNDU);
    if (mpfr_cmp(r1, r2) >= 0) {
      mpfr_set(rad_, r1, MPFR_RNDU);
    } else {
      mpfr_set(rad_, r2, MPFR_RNDU);
    }
    if (mpfr_sgn(rad_) < 0) mpfr_set_zero(rad_, 1);
    mpfr_clear(r1);
    mpfr_clear(r2);
  }

  mpfr_t mid_;
  mpfr_t rad_;
};

namespace detail {

// One-ulp bound on the rounding error of `x`, or 0 when `ternary` says the
// rounded result was exact. MPFR's exponent range is effectively unbounded,
// so an inexact nonzero result always has a valid exponent.
inline void ulp_bound(mpfr_ptr out, mpfr_srcptr x, int ternary) {
  if (ternary == 0 || mpfr_zero_p(x)) {
    mpfr_set_zero(out, 1);
    return;
  }
  mpfr_set_ui_2exp(out, 1, mpfr_get_exp(x) - mpfr_get_prec(x), MPFR_RNDU);
}

inline mpfr_prec_t join_prec(const Ball& a, const Ball& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace detail

inline Ball add(const Ball& a, const Ball& b) {
  Ball r(0, detail::join_prec(a, b));
  int t = mpfr_add(r.mut_mid(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_t e;
  mpfr_init2(e, Ball::kRadiusPrecision);
  detail::ulp_bound(e, r.mid(), t);
  mpfr_add(r.mut_rad(), a.rad(), b.rad(), MPFR_RNDU);
  mpfr_add(r.mut_rad(), r.rad(), e, MPFR_RNDU);
  mpfr_clear(e);
  return r;
}

inline Ball sub(const Ball& a, const Ball& b) {
  Ball r(0, detail::join_prec(a, b));
  int t = mpfr_sub(r.mut_mid(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_t e;
  mpfr_init2(e, Ball::kRadiusPrecision);
  detail::ulp_bound(e, r.mid(), t);
  mpfr_add(r.mut_rad(), a.rad(), b.rad(), MPFR_RNDU);
  mpfr_add(r.mut_rad(), r.rad(), e, MPFR_RNDU);
  mpfr_clear(e);
  return r;
}

inline Ball neg(const Ball& a) {
  Ball r(a);
  mpfr_neg(r.mut_mid(), r.mid(), MPFR_RNDN);  // exact
  return r;
}

inline Ball mul(const Ball& a, const Ball& b) {
  Ball r(0, detail::join_prec(a, b));
  int t = mpfr_mul(r.mut_mid(), a.mid(), b.mid(), MPFR_RNDN);
  // |x y - ma mb| <= |ma| rb + |mb| ra + ra rb, then the midpoint ulp.
  mpfr_t e, am, bm, acc;
  mpfr_init2(e, Ball::kRadiusPrecision);
  mpfr_init2(am, Ball::kRadiusPrecision);
  mpfr_init2(bm, Ball::kRadiusPrecision);
  mpfr_init2(acc, Ball::kRadiusPrecision);
  detail::ulp_bound(e, r.mid(), t);
  mpfr_abs(am, a.mid(), MPFR_RNDU);
  mpfr_abs(bm, b.mid(), MPFR_RNDU);
  mpfr_mul(acc, am, b.rad(), MPFR_RNDU);
  mpfr_mul(am, bm, a.rad(), MPFR_RNDU);
  mpfr_add(acc, acc, am, MPFR_RNDU);
  mpfr_mul(am, a.rad(), b.rad(), MPFR_RNDU);
  mpfr_add(acc, acc, am, MPFR_RNDU);
  mpfr_add(acc, acc, e, MPFR_RNDU);
  mpfr_set(r.mut_rad(), acc, MPFR_RNDU);
  mpfr_clear(e);
  mpfr_clear(am);
  mpfr_clear(bm);
  mpfr_clear(acc);
  return r;
}

inline Ball div(const Ball& a, const Ball& b) {
  // Requires 0 outside the interval of b: |mb| - rb > 0.
  mpfr_t babs, den;
  mpfr_init2(babs, Ball::kRadiusPrecision);
  mpfr_init2(den, Ball::kRadiusPrecision);
  mpfr_abs(babs, b.mid(), MPFR_RNDD);
  mpfr_sub(den, babs, b.rad(), MPFR_RNDD);
  if (mpfr_sgn(den) <= 0) {
    mpfr_clear(babs);
    mpfr_clear(den);
    throw DomainError("div: divisor interval contains zero");
  }
  Ball r(0, detail::join_prec(a, b));
  int t = mpfr_div(r.mut_mid(), a.mid(), b.mid(), MPFR_RNDN);
  // |x/y - ma/mb| <= (ra |mb| + |ma| rb) / (|mb| (|mb| - rb)).
  mpfr_t e, num, tmp;
  mpfr_init2(e, Ball::kRadiusPrecision);
  mpfr_init2(num, Ball::kRadiusPrecision);
  mpfr_init2(tmp, Ball::kRadiusPrecision);
  detail::ulp_bound(e, r.mid(), t);
  mpfr_abs(tmp, b.mid(), MPFR_RNDU);
  mpfr_mul(num, a.rad(), tmp, MPFR_RNDU);
  mpfr_abs(tmp, a.mid(), MPFR_RNDU);
  mpfr_mul(tmp, tmp, b.rad(), MPFR_RNDU);
  mpfr_add(num, num, tmp, MPFR_RNDU);
  mpfr_mul(den, babs, den, MPFR_RNDD);
  mpfr_div(num, num, den, MPFR_RNDU);
  mpfr_add(num, num, e, MPFR_RNDU);
  mpfr_set(r.mut_rad(), num, MPFR_RNDU);
  mpfr_clear(babs);
  mpfr_clear(den);
  mpfr_clear(e);
  mpfr_clear(num);
  mpfr_clear(tmp);
  return r;
}

// Square root via monotone endpoints; exact inputs with exact roots come out
// with radius zero.
inline Ball sqrt(const Ball& a) {
  mpfr_prec_t prec = a.precision();
  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  a.lower(lo);
  a.upper(hi);
  if (mpfr_sgn(lo) < 0) {
    mpfr_clear(lo);
    mpfr_clear(hi);
    throw DomainError("sqrt: interval meets the negative axis");
  }
  mpfr_sqrt(lo, lo, MPFR_RNDD);
  mpfr_sqrt(hi, hi, MPFR_RNDU);
  Ball r = Ball::from_endpoints(lo, hi, prec);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return r;
}

// Multiplication by the exact integer 5^n. For n >= 0 the result is exact:
// both midpoint and radius are widened so that no rounding occurs, which
// keeps scaling identities bit-stable. Negative n divides by exact 5^{-n}
// (rounded, radius-tracked).
inline Ball scale_pow5(const Ball& a, long n) {
  if (n == 0) return a;
  unsigned long an = static_cast<unsigned long>(n < 0 ? -n : n);
  // 5^k needs ceil(k log2 5) < 2.33 k + 1 bits to be exact.
  mpfr_prec_t pow_prec = static_cast<mpfr_prec_t>(an * 7 / 3 + 8);
  mpfr_t p5;
  mpfr_init2(p5, pow_prec);
  int texp = mpfr_ui_pow_ui(p5, 5, an, MPFR_RNDN);
  if (texp != 0) {
    mpfr_clear(p5);
    throw std::logic_error("scale_pow5: power of five not exact");
  }
  Ball r(0, a.precision() + (n > 0 ? pow_prec : 0));
  if (n > 0) {
    mpfr_set_prec(r.mut_rad(), mpfr_get_prec(a.rad()) + pow_prec);
    int t1 = mpfr_mul(r.mut_mid(), a.mid(), p5, MPFR_RNDN);
    int t2 = mpfr_mul(r.mut_rad(), a.rad(), p5, MPFR_RNDU);
    if (t1 != 0 || t2 != 0) {
      mpfr_clear(p5);
      throw std::logic_error("scale_pow5: scaling not exact");
    }
  } else {
    int t = mpfr_div(r.mut_mid(), a.mid(), p5, MPFR_RNDN);
    mpfr_t e;
    mpfr_init2(e, Ball::kRadiusPrecision);
    detail::ulp_bound(e, r.mid(), t);
    mpfr_div(r.mut_rad(), a.rad(), p5, MPFR_RNDU);
    mpfr_add(r.mut_rad(), r.rad(), e, MPFR_RNDU);
    mpfr_clear(e);
  }
  mpfr_clear(p5);
  return r;
}

// Exact division by 2 (binary).
inline Ball halve(const Ball& a) {
  Ball r(a);
  mpfr_div_2ui(r.mut_mid(), r.mid(), 1, MPFR_RNDN);
  mpfr_div_2ui(r.mut_rad(), r.rad(), 1, MPFR_RNDU);
  return r;
}

inline Ball operator+(const Ball& a, const Ball& b) { return add(a, b); }
inline Ball operator-(const Ball& a, const Ball& b) { return sub(a, b); }
inline Ball operator*(const Ball& a, const Ball& b) { return mul(a, b); }
inline Ball operator/(const Ball& a, const Ball& b) { return div(a, b); }

inline Order certified_compare(const Ball& a, const Ball& b) {
  mpfr_t ea, eb;
  mpfr_init2(ea, std::max(a.precision(), b.precision()));
  mpfr_init2(eb, std::max(a.precision(), b.precision()));
  a.upper(ea);
  b.lower(eb);
  if (mpfr_cmp(ea, eb) < 0) {
    mpfr_clear(ea);
    mpfr_clear(eb);
    return Order::Less;
  }
  a.lower(ea);
  b.upper(eb);
  bool greater = mpfr_cmp(ea, eb) > 0;
  mpfr_clear(ea);
  mpfr_clear(eb);
  return greater ? Order::Greater : Order::Overlap;
}

inline bool certified_less(const Ball& a, const Ball& b) {
  return certified_compare(a, b) == Order::Less;
}

// Certifies a <= b: sup(a) <= inf(b). Holds with equality for exact balls.
inline bool certified_leq(const Ball& a, const Ball& b) {
  mpfr_t sa, ib;
  mpfr_init2(sa, std::max(a.precision(), b.precision()));
  mpfr_init2(ib, std::max(a.precision(), b.precision()));
  a.upper(sa);
  b.lower(ib);
  bool leq = mpfr_cmp(sa, ib) <= 0;
  mpfr_clear(sa);
  mpfr_clear(ib);
  return leq;
}

inline bool overlaps(const Ball& a, const Ball& b) {
  return certified_compare(a, b) == Order::Overlap;
}

// True when the exact value of `x` (given as mpfr) lies inside the ball.
inline bool contains(const Ball& b, mpfr_srcptr x) {
  mpfr_t lo, hi;
  mpfr_init2(lo, b.precision());
  mpfr_init2(hi, b.precision());
  b.lower(lo);
  b.upper(hi);
  bool in = mpfr_cmp(lo, x) <= 0 && mpfr_cmp(x, hi) <= 0;
  mpfr_clear(lo);
  mpfr_clear(hi);
  return in;
}

inline bool contains_si(const Ball& b, long x) {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_si(t, x, MPFR_RNDN);
  bool in = contains(b, t);
  mpfr_clear(t);
  return in;
}

// Decimal rendering. `significant` digits, scientific form, round to
// nearest/even — reproducible across platforms.
inline std::string decimal_string(mpfr_srcptr x, int significant) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*RNe", significant - 1, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

// Radius rendering rounds up so a printed radius is never an underestimate.
inline std::string radius_string(mpfr_srcptr x, int significant = 3) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*RUe", significant - 1, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

inline std::string fixed_string(mpfr_srcptr x, int decimals) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*RNf", decimals, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace sgspec
