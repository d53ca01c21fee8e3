#pragma once

// Eigenvalues of the limit operator. Every lineage that is eventually
// all-minus has the renormalized limit
//
//   F_l(a) = lim_k 5^{l+k} Phi_-^{(k)}(a),        a in [0,6),
//
// evaluated here with a certified tail: once x_k < 1 the increments
// 5^{l+k} (5 Phi_-(x_k) - x_k) shrink at least geometrically with ratio
// 20/(5+sqrt(25-4x))^2 <= 0.218 < 1/4, so the remaining tail is bounded by
// 4/3 of the current increment. The increment is computed in the
// cancellation-free form 5 Phi_-(x) - x = 4 x^2 / (5 + sqrt(25-4x))^2.
//
// Named constants (lowest 2-, 5- and 6-series limits plus the second lowest
// 5-series), the two recurrent large-gap ratios, and the dyadic interval
// decomposition built from them.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sgspec/spectra.hpp"

namespace sgspec {

namespace detail {

// G(a) = lim 5^k Phi_-^(k)(a) with final radius <= tol (an exact mpfr bound).
inline Ball raw_limit(const Ball& a, mpfr_srcptr tol, int max_iterations = 10000) {
  if (!a.is_nonnegative()) throw DomainError("renormalized_limit: seed below 0");
  {
    mpfr_t hi;
    mpfr_init2(hi, a.precision());
    a.upper(hi);
    bool ok = mpfr_cmp_si(hi, 6) < 0;
    mpfr_clear(hi);
    if (!ok) throw DomainError("renormalized_limit: seed must lie in [0,6)");
  }
  mpfr_prec_t prec = a.precision();
  mpfr_t half_tol, tail, sup_x, lo, hi;
  mpfr_init2(half_tol, mpfr_get_prec(tol));
  mpfr_div_2ui(half_tol, tol, 1, MPFR_RNDD);
  mpfr_init2(tail, Ball::kRadiusPrecision);
  mpfr_init2(sup_x, prec);
  mpfr_init2(lo, prec + 64);
  mpfr_init2(hi, prec + 64);

  struct Cleanup {
    mpfr_ptr a_, b_, c_, d_, e_;
    ~Cleanup() {
      mpfr_clear(a_);
      mpfr_clear(b_);
      mpfr_clear(c_);
      mpfr_clear(d_);
      mpfr_clear(e_);
    }
  } cleanup{half_tol, tail, sup_x, lo, hi};

  Ball x = a;
  Ball five(5, prec);
  Ball four(4, prec);
  for (int k = 0; k <= max_iterations; ++k) {
    Ball s = sqrt(sub(Ball(25, prec), mul(four, x)));
    Ball den = add(five, s);
    Ball increment = scale_pow5(div(mul(four, mul(x, x)), mul(den, den)), k);
    x.upper(sup_x);
    if (mpfr_cmp_si(sup_x, 1) < 0) {
      increment.upper(tail);
      mpfr_mul_ui(tail, tail, 4, MPFR_RNDU);
      mpfr_div_ui(tail, tail, 3, MPFR_RNDU);
      if (mpfr_cmp(tail, half_tol) <= 0) {
        Ball u = scale_pow5(x, k);
        u.lower(lo);
        u.upper(hi);
        mpfr_add(hi, hi, tail, MPFR_RNDU);
        Ball result = Ball::from_endpoints(lo, hi, prec);
        if (mpfr_cmp(result.rad(), tol) <= 0) return result;
        throw ToleranceNotReached(
            "renormalized_limit: radius floor above tolerance, raise the precision");
      }
    }
    x = div(add(x, x), den);  // Phi_-(x)
  }
  throw ToleranceNotReached("renormalized_limit: iteration cap reached");
}

// inner = tol / 5^level, rounded down; exact scaling then gives a final
// radius <= tol and bit-stable F_{l+1} = 5 F_l.
inline void inner_tolerance(mpfr_ptr out, const Ball& tol, int level) {
  mpfr_t t0, p5;
  mpfr_init2(t0, 64);
  tol.lower(t0);
  if (mpfr_sgn(t0) <= 0) {
    mpfr_clear(t0);
    throw DomainError("renormalized_limit: tolerance must be positive");
  }
  mpfr_init2(p5, static_cast<mpfr_prec_t>(level * 7 / 3 + 8));
  mpfr_ui_pow_ui(p5, 5, static_cast<unsigned long>(level), MPFR_RNDN);
  mpfr_div(out, t0, p5, MPFR_RNDD);
  mpfr_clear(t0);
  mpfr_clear(p5);
}

}  // namespace detail

inline Ball default_limit_tolerance() { return Ball::from_decimal("1e-30", 64); }

// F_level(a) with certified radius <= tol.
inline Ball renormalized_limit(const Ball& a, int level, const Ball& tol) {
  if (level < 0) throw DomainError("renormalized_limit: level must be >= 0");
  mpfr_t inner;
  mpfr_init2(inner, 64);
  detail::inner_tolerance(inner, tol, level);
  Ball g;
  try {
    g = detail::raw_limit(a, inner);
  } catch (...) {
    mpfr_clear(inner);
    throw;
  }
  mpfr_clear(inner);
  return scale_pow5(g, level);
}

inline Ball renormalized_limit(const Ball& a, int level) {
  return renormalized_limit(a, level, default_limit_tolerance());
}

enum class NamedConstant { Lambda0_2, Lambda0_5, Lambda1_5, Lambda6 };

inline const char* constant_name(NamedConstant c) {
  switch (c) {
    case NamedConstant::Lambda0_2: return "lambda0_2";
    case NamedConstant::Lambda0_5: return "lambda0_5";
    case NamedConstant::Lambda1_5: return "lambda1_5";
    case NamedConstant::Lambda6: return "lambda6";
  }
  return "?";
}

struct ConstantSet {
  Ball lambda0_2;  // F_1(2), lowest 2-series
  Ball lambda0_5;  // F_1(5), lowest 5-series
  Ball lambda1_5;  // F_2(Phi_+(5)), second lowest 5-series
  Ball lambda6;    // F_3(3), lowest 6-series of birth 2
  mpfr_prec_t precision;
};

namespace detail {

struct ConstantCache {
  std::mutex mutex;
  std::map<std::pair<mpfr_prec_t, std::string>, std::shared_ptr<const ConstantSet>> sets;
};

inline ConstantCache& constant_cache() {
  static ConstantCache cache;
  return cache;
}

}  // namespace detail

inline std::shared_ptr<const ConstantSet> constant_set(
    mpfr_prec_t precision = Ball::kDefaultPrecision, const Ball& tol = default_limit_tolerance()) {
  auto key = std::make_pair(precision, decimal_string(tol.mid(), 20));
  auto& cache = detail::constant_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.sets.find(key);
    if (it != cache.sets.end()) return it->second;
  }
  ConstantSet s{renormalized_limit(Ball(2, precision), 1, tol),
                renormalized_limit(Ball(5, precision), 1, tol),
                renormalized_limit(phi(Branch::Plus, Ball(5, precision)), 2, tol),
                renormalized_limit(Ball(3, precision), 3, tol), precision};
  if (!certified_less(s.lambda0_2, s.lambda0_5) || !certified_less(s.lambda0_5, s.lambda6)) {
    throw ToleranceNotReached("constant_set: ordering lambda0_2 < lambda0_5 < lambda6 overlaps");
  }
  auto made = std::make_shared<const ConstantSet>(std::move(s));
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto [it, inserted] = cache.sets.emplace(key, made);
  return it->second;
}

inline Ball named_constant(NamedConstant which, mpfr_prec_t precision = Ball::kDefaultPrecision,
                           const Ball& tol = default_limit_tolerance()) {
  auto s = constant_set(precision, tol);
  switch (which) {
    case NamedConstant::Lambda0_2: return s->lambda0_2;
    case NamedConstant::Lambda0_5: return s->lambda0_5;
    case NamedConstant::Lambda1_5: return s->lambda1_5;
    case NamedConstant::Lambda6: return s->lambda6;
  }
  throw std::logic_error("named_constant: unknown constant");
}

// r1 = lambda6 / (5 lambda0_5) ~ 2.4259,  r2 = 5 lambda1_5 / lambda6 ~ 1.2714.
inline std::pair<Ball, Ball> gap_ratios(mpfr_prec_t precision = Ball::kDefaultPrecision,
                                        const Ball& tol = default_limit_tolerance()) {
  auto s = constant_set(precision, tol);
  Ball r1 = div(s->lambda6, scale_pow5(s->lambda0_5, 1));
  Ball r2 = div(scale_pow5(s->lambda1_5, 1), s->lambda6);
  return {r1, r2};
}

// lambda_(N_m) = 5^{m-2} lambda6: the ordered-position eigenvalues bounding
// the recurrent large gaps, taken from their closed forms.
inline Ball ordered_gap_upper(int m, const ConstantSet& s) {
  return scale_pow5(s.lambda6, m - 2);
}

// lambda_(N_m - N_{m-1}) = 5^{m-1} lambda0_5: largest eigenvalue inside B_m.
inline Ball ordered_gap_lower(int m, const ConstantSet& s) {
  return scale_pow5(s.lambda0_5, m - 1);
}

struct DyadicInterval {
  int index;
  Ball lower;
  Ball upper;
};

inline DyadicInterval dyadic_interval(int m, mpfr_prec_t precision = Ball::kDefaultPrecision,
                                      const Ball& tol = default_limit_tolerance()) {
  if (m < 2) throw DomainError("dyadic_interval: index must be >= 2");
  auto s = constant_set(precision, tol);
  Ball lower = m == 2 ? Ball(0, precision) : ordered_gap_upper(m - 1, *s);
  return DyadicInterval{m, lower, ordered_gap_upper(m, *s)};
}

struct CertifiedBound {
  bool certified = false;
  Ball margin;  // strict-inequality slack; interval strictly positive when certified
};

// Distance between the eigenvalue-carrying parts of B_m and B_{m'} exceeds
// lambda_(N_{m'-1}) / 2.
inline CertifiedBound check_interval_separation(int m, int m_prime,
                                                mpfr_prec_t precision = Ball::kDefaultPrecision,
                                                const Ball& tol = default_limit_tolerance()) {
  if (!(2 <= m && m < m_prime)) {
    throw DomainError("check_interval_separation: need 2 <= m < m'");
  }
  auto s = constant_set(precision, tol);
  Ball distance = sub(ordered_gap_upper(m_prime - 1, *s), ordered_gap_lower(m, *s));
  Ball margin = sub(distance, halve(ordered_gap_upper(m_prime - 1, *s)));
  bool ok = certified_less(Ball(0, precision), margin);
  return CertifiedBound{ok, margin};
}

// lambda_(N_{m'-1}) < lambda + lambda' < lambda_(N_{m'}) for the extreme
// choices lambda = lambda_(N_m - N_{m-1}), lambda' = lambda_(N_{m'} - N_{m'-1}).
inline CertifiedBound check_sum_closure(int m, int m_prime,
                                        mpfr_prec_t precision = Ball::kDefaultPrecision,
                                        const Ball& tol = default_limit_tolerance()) {
  if (!(2 <= m && m <= m_prime)) {
    throw DomainError("check_sum_closure: need 2 <= m <= m'");
  }
  auto s = constant_set(precision, tol);
  Ball sum = add(ordered_gap_lower(m, *s), ordered_gap_lower(m_prime, *s));
  Ball upper_margin = sub(ordered_gap_upper(m_prime, *s), sum);
  Ball lower_margin = sub(sum, ordered_gap_upper(m_prime - 1, *s));
  Ball zero(0, precision);
  bool ok = certified_less(zero, upper_margin) && certified_less(zero, lower_margin);
  Ball margin = mpfr_cmp(upper_margin.mid(), lower_margin.mid()) <= 0 ? upper_margin : lower_margin;
  return CertifiedBound{ok, margin};
}

struct LimitEigenvalue {
  Ball value;
  EigenDescriptor descriptor;
  int fixation_level;  // generation of fixation of the all-minus continuation
};

// { F_L(a) : a in A_L^{bc} \ {6} }: exactly the limit eigenvalues whose
// lineage is fixed by level L, sorted and distinct.
inline std::vector<LimitEigenvalue> eigenvalues_up_to_fixation(
    int L, BoundaryCondition bc, const Ball& tol = default_limit_tolerance(),
    mpfr_prec_t precision = Ball::kDefaultPrecision) {
  if (bc == BoundaryCondition::Dirichlet && L < 1) {
    throw DomainError("eigenvalues_up_to_fixation: Dirichlet needs L >= 1");
  }
  if (bc == BoundaryCondition::Neumann && L < 0) {
    throw DomainError("eigenvalues_up_to_fixation: Neumann needs L >= 0");
  }
  SpectrumPtr spectrum = finite_spectrum(L, bc, precision);
  std::vector<LimitEigenvalue> out;
  for (const auto& e : spectrum->entries_without_six()) {
    out.push_back(LimitEigenvalue{renormalized_limit(e.value, L, tol), e.descriptor,
                                  e.descriptor.continued_fixation()});
  }
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (certified_compare(out[i].value, out[i + 1].value) != Order::Less) {
      throw ToleranceNotReached("eigenvalues_up_to_fixation: adjacent limits overlap");
    }
  }
  return out;
}

}  // namespace sgspec
