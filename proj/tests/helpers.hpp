#pragma once

#include <random>
#include <string>

#include "sgspec/ball.hpp"

namespace sgspec::test {

// |midpoint - literal| <= tol, evaluated in mpfr.
inline bool mid_close(const Ball& b, const std::string& literal, const std::string& tol) {
  mpfr_t lit, t, d;
  mpfr_init2(lit, 256);
  mpfr_init2(t, 256);
  mpfr_init2(d, 256);
  mpfr_set_str(lit, literal.c_str(), 10, MPFR_RNDN);
  mpfr_set_str(t, tol.c_str(), 10, MPFR_RNDN);
  mpfr_sub(d, b.mid(), lit, MPFR_RNDN);
  mpfr_abs(d, d, MPFR_RNDN);
  bool ok = mpfr_cmp(d, t) <= 0;
  mpfr_clear(lit);
  mpfr_clear(t);
  mpfr_clear(d);
  return ok;
}

inline bool rad_below(const Ball& b, const std::string& tol) {
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_set_str(t, tol.c_str(), 10, MPFR_RNDN);
  bool ok = mpfr_cmp(b.rad(), t) <= 0;
  mpfr_clear(t);
  return ok;
}

// Interval [mid - rad, mid + rad] intersects [lo, hi] given as decimals.
inline bool meets_decimal_range(const Ball& b, const std::string& lo_s, const std::string& hi_s) {
  mpfr_t lo, hi, blo, bhi;
  mpfr_init2(lo, 256);
  mpfr_init2(hi, 256);
  mpfr_init2(blo, 256);
  mpfr_init2(bhi, 256);
  mpfr_set_str(lo, lo_s.c_str(), 10, MPFR_RNDD);
  mpfr_set_str(hi, hi_s.c_str(), 10, MPFR_RNDU);
  b.lower(blo);
  b.upper(bhi);
  bool ok = mpfr_cmp(bhi, lo) >= 0 && mpfr_cmp(blo, hi) <= 0;
  mpfr_clear(lo);
  mpfr_clear(hi);
  mpfr_clear(blo);
  mpfr_clear(bhi);
  return ok;
}

// Ball interval contained in [lo, hi].
inline bool inside_decimal_range(const Ball& b, const std::string& lo_s, const std::string& hi_s) {
  mpfr_t lo, hi, blo, bhi;
  mpfr_init2(lo, 256);
  mpfr_init2(hi, 256);
  mpfr_init2(blo, 256);
  mpfr_init2(bhi, 256);
  mpfr_set_str(lo, lo_s.c_str(), 10, MPFR_RNDU);
  mpfr_set_str(hi, hi_s.c_str(), 10, MPFR_RNDD);
  b.lower(blo);
  b.upper(bhi);
  bool ok = mpfr_cmp(blo, lo) >= 0 && mpfr_cmp(bhi, hi) <= 0;
  mpfr_clear(lo);
  mpfr_clear(hi);
  mpfr_clear(blo);
  mpfr_clear(bhi);
  return ok;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

}  // namespace sgspec::test
