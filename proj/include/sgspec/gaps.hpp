#pragma once

// Instance certification of the gap lemmas and the minimal-spacing theorem.
//
// Every claim is checked with certified ball comparisons; Overlap triggers a
// retry at doubled precision up to a cap and an Inconclusive report when the
// cap is hit. Inconclusive never passes silently.
//
// Two spacings can coincide as exact reals, e.g. in the full Neumann set the
// pair (Phi_+ Phi_-^{(m-2)}(3), 5) ties the witness gap (0, Phi_-^{(m-1)}(3))
// through the equidistance identity 5 - Phi_+(y) = Phi_-(y). Such ties can
// never be separated numerically; the verifiers resolve them by rewriting
// the tied gap through the identity and checking that the rewritten value is
// the very same ball as the witness gap (identical arithmetic chain).
//
// Margin conventions per claim (always a strictly positive interval when the
// report says CertifiedTrue):
//   key1, key2           slack of the lemma's strict inequality
//   induction_step,
//   pre_lowest,
//   min_gap_theorem      runner-up adjacent gap minus the minimal gap
//   full_level_min       Dirichlet: spectral gap minus the full-set minimum
//                        (the remark's "strictly smaller"); Neumann and the
//                        m=1 base case: the minimal gap itself.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgspec/limits.hpp"

namespace sgspec {

enum class VerifyStatus { CertifiedTrue, Inconclusive };

inline const char* verify_status_name(VerifyStatus s) {
  return s == VerifyStatus::CertifiedTrue ? "CertifiedTrue" : "Inconclusive";
}

struct GapReport {
  std::string claim_id;
  std::vector<std::pair<std::string, long long>> params;
  VerifyStatus status = VerifyStatus::Inconclusive;
  std::optional<std::pair<EigenDescriptor, EigenDescriptor>> witness;
  std::optional<Ball> margin;
  mpfr_prec_t precision_bits = 0;
  std::string note;

  bool certified() const { return status == VerifyStatus::CertifiedTrue; }
};

struct MinSpacing {
  Ball gap;
  std::size_t lower_index = 0;
  std::size_t upper_index = 0;
  bool certified = false;         // gap certified <= every other adjacent gap
  std::vector<std::size_t> ties;  // adjacent-gap indices not separated from the minimum
};

// Minimal adjacent spacing of a sorted list. The reported pair is the first
// among the candidates that cannot be ruled out; `certified` demands that
// every other adjacent gap is certifiably >= the reported one (exact ties
// between radius-zero balls count). Unresolved overlaps are listed in `ties`.
inline MinSpacing min_spacing(const std::vector<Ball>& values) {
  if (values.size() < 2) {
    throw InsufficientValues("min_spacing: need at least two values");
  }
  std::vector<Ball> gaps;
  gaps.reserve(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    gaps.push_back(sub(values[i + 1], values[i]));
  }
  std::size_t best = 0;
  for (std::size_t j = 1; j < gaps.size(); ++j) {
    if (mpfr_cmp(gaps[j].mid(), gaps[best].mid()) < 0) best = j;
  }
  std::vector<std::size_t> undecided;
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    if (j == best) continue;
    if (!certified_leq(gaps[best], gaps[j])) undecided.push_back(j);
  }
  std::size_t report = best;
  for (std::size_t j : undecided) report = std::min(report, j);
  MinSpacing out{gaps[report], report, report + 1, undecided.empty(), {}};
  if (!undecided.empty()) {
    out.ties.push_back(best);
    for (std::size_t j : undecided) {
      if (j != report) out.ties.push_back(j);
    }
  }
  return out;
}

// Closed-form spectral gap Phi_-^{(m-1)}(5) - Phi_-^{(m-1)}(2), cross-checked
// against the first two entries of the constructed level-m spectrum.
inline Ball finite_gap_dirichlet(int m, mpfr_prec_t precision = Ball::kDefaultPrecision) {
  if (m < 1) throw DomainError("finite_gap_dirichlet: level must be >= 1");
  Ball closed = sub(phi_minus_iter(Ball(5, precision), m - 1),
                    phi_minus_iter(Ball(2, precision), m - 1));
  SpectrumPtr s = dirichlet_level(m, precision);
  Ball constructed = sub(s->at(1).value, s->at(0).value);
  if (!overlaps(closed, constructed) && !Ball::identical(closed, constructed)) {
    throw MismatchError("finite_gap_dirichlet: closed form disagrees with spectrum at m=" +
                        std::to_string(m));
  }
  return closed;
}

// Neumann spectral gap Phi_-^{(m-1)}(3) = smallest nonzero entry.
inline Ball finite_gap_neumann(int m, mpfr_prec_t precision = Ball::kDefaultPrecision) {
  if (m < 1) throw DomainError("finite_gap_neumann: level must be >= 1");
  Ball closed = phi_minus_iter(Ball(3, precision), m - 1);
  SpectrumPtr s = neumann_level(m, precision);
  if (!s->at(0).value.exact() || mpfr_sgn(s->at(0).value.mid()) != 0) {
    throw MismatchError("finite_gap_neumann: spectrum does not start at 0");
  }
  Ball constructed = s->at(1).value;
  if (!overlaps(closed, constructed) && !Ball::identical(closed, constructed)) {
    throw MismatchError("finite_gap_neumann: closed form disagrees with spectrum at m=" +
                        std::to_string(m));
  }
  return closed;
}

namespace detail {

// Retry `attempt` at prec, 2 prec, ... until it yields a report.
template <typename Fn>
GapReport escalate(mpfr_prec_t precision, int max_doublings, Fn&& attempt) {
  mpfr_prec_t p = precision;
  std::optional<GapReport> last;
  for (int round = 0; round <= max_doublings; ++round, p *= 2) {
    std::optional<GapReport> r = attempt(p);
    if (r) {
      if (r->certified()) return *r;
      last = std::move(r);
    }
  }
  if (last) return *last;
  GapReport r;
  r.status = VerifyStatus::Inconclusive;
  r.precision_bits = p / 2;
  r.note = "certification failed below the precision cap";
  return r;
}

inline Ball value_of_descriptor(const EigenDescriptor& d, mpfr_prec_t precision) {
  return phi_word(d.word, Ball(d.seed, precision));
}

inline EigenDescriptor extend_minus(EigenDescriptor d, int k) {
  for (int i = 0; i < k; ++i) d.word.append(Branch::Minus);
  return d;
}

// Gap between the exact eigenvalue 5 and a Phi_+ image, rewritten through
// equidistance: 5 - Phi_+(y) = Phi_+(0) - Phi_+(y) = Phi_-(y). Returns the
// rewritten ball so the caller can match it against a closed form.
inline std::optional<Ball> rewrite_gap_below_five(const SpectrumEntry& lower,
                                                  const SpectrumEntry& upper,
                                                  mpfr_prec_t precision) {
  if (!upper.value.exact() || mpfr_cmp_si(upper.value.mid(), 5) != 0) return std::nullopt;
  const BranchWord& w = lower.descriptor.word;
  if (w.empty() || w.at(w.size()) != Branch::Plus) return std::nullopt;
  EigenDescriptor parent{lower.descriptor.seed, lower.descriptor.birth, w.prefix(w.size() - 1)};
  return phi(Branch::Minus, value_of_descriptor(parent, precision));
}

}  // namespace detail

// Key ratio I: Phi_-^{(m-1)}(5)/(gap at m) < Phi_-^{(m)}(5)/(gap at m+1).
inline GapReport verify_key2(int m, mpfr_prec_t precision = Ball::kDefaultPrecision,
                             int max_doublings = 3) {
  if (m < 1) throw DomainError("verify_key2: m must be >= 1");
  return detail::escalate(precision, max_doublings, [&](mpfr_prec_t p) -> std::optional<GapReport> {
    GapReport r;
    r.claim_id = "key2";
    r.params = {{"m", m}};
    r.precision_bits = p;
    Ball f5 = Ball(5, p), f2 = Ball(2, p);
    Ball a = phi_minus_iter(f5, m - 1);
    Ball b5 = phi_minus_iter(f5, m), b2 = phi_minus_iter(f2, m);
    Ball c5 = phi(Branch::Minus, b5), c2 = phi(Branch::Minus, b2);
    Ball lhs = div(a, sub(b5, b2));
    Ball rhs = div(b5, sub(c5, c2));
    Ball margin = sub(rhs, lhs);
    r.margin = margin;
    r.status = certified_less(Ball(0, p), margin) ? VerifyStatus::CertifiedTrue
                                                  : VerifyStatus::Inconclusive;
    return r;
  });
}

// Key ratio II (two-level steps): the ratio Phi_-^{(m)}(2)/(gap at m+2) is
// strictly increasing in m; the margin equals the increment itself.
inline GapReport verify_key1(int m, mpfr_prec_t precision = Ball::kDefaultPrecision,
                             int max_doublings = 3) {
  if (m < 1) throw DomainError("verify_key1: m must be >= 1");
  return detail::escalate(precision, max_doublings, [&](mpfr_prec_t p) -> std::optional<GapReport> {
    GapReport r;
    r.claim_id = "key1";
    r.params = {{"m", m}};
    r.precision_bits = p;
    Ball f5 = Ball(5, p), f2 = Ball(2, p);
    auto ratio = [&](int level) {
      Ball num = phi_minus_iter(f2, level);
      Ball g5 = phi_minus_iter(f5, level + 2);
      Ball g2 = phi_minus_iter(f2, level + 2);
      return div(num, sub(g5, g2));
    };
    Ball margin = sub(ratio(m), ratio(m - 1));
    r.margin = margin;
    r.status = certified_less(Ball(0, p), margin) ? VerifyStatus::CertifiedTrue
                                                  : VerifyStatus::Inconclusive;
    return r;
  });
}

struct Table1Row {
  int gap_index;        // 1..11 over adjacent pairs of Phi_-^{(2)}(A_3 \ {6})
  Ball difference;      // spacing minus the level-5 spectral gap
};

// The induction-lemma base case: the 11 spacings of Phi_-^{(2)}(A_3^D \ {6})
// each reduced by the level-5 spectral gap. The first row is exactly zero:
// the first spacing is that gap, computed by the same arithmetic chain.
inline std::vector<Table1Row> table1(mpfr_prec_t precision = Ball::kDefaultPrecision) {
  SpectrumPtr s3 = dirichlet_level(3, precision);
  std::vector<SpectrumEntry> base = s3->entries_without_six();
  Ball gap1 = sub(phi_minus_iter(Ball(5, precision), 4), phi_minus_iter(Ball(2, precision), 4));
  std::vector<Ball> images;
  images.reserve(base.size());
  for (const auto& e : base) images.push_back(phi_minus_iter(e.value, 2));
  std::vector<Table1Row> rows;
  for (std::size_t i = 0; i + 1 < images.size(); ++i) {
    Ball spacing = sub(images[i + 1], images[i]);
    if (i == 0) {
      if (!Ball::identical(spacing, gap1)) {
        throw MismatchError("table1: first spacing is not the level-5 spectral gap");
      }
      rows.push_back(Table1Row{1, Ball(0, precision)});
    } else {
      rows.push_back(Table1Row{static_cast<int>(i) + 1, sub(spacing, gap1)});
    }
  }
  return rows;
}

// Auxiliary constant from case (d) of the induction step; certified > 1.
inline Ball induction_auxiliary_constant(mpfr_prec_t precision = Ball::kDefaultPrecision) {
  Ball two(2, precision), five(5, precision), tf(25, precision), four(4, precision);
  Ball num = div(phi_minus_iter(two, 3),
                 sub(phi_minus_iter(five, 5), phi_minus_iter(two, 5)));
  Ball y = phi_minus_iter(two, 2);
  Ball inner = phi(Branch::Minus, phi(Branch::Plus, y));
  Ball den = mul(sqrt(sub(tf, mul(four, inner))), sqrt(sub(tf, mul(four, phi(Branch::Plus, y)))));
  return div(num, den);
}

// Minimal spacing of Phi_-^{(k)}(A_m^D \ {6}) equals
// Phi_-^{(m+k-1)}(5) - Phi_-^{(m+k-1)}(2), attained at the images of the two
// smallest eigenvalues.
inline GapReport verify_pre_lowest(int m, int k, mpfr_prec_t precision = Ball::kDefaultPrecision,
                                   int max_doublings = 3) {
  if (m < 3 || k < 2) throw DomainError("verify_pre_lowest: need m >= 3 and k >= 2");
  return detail::escalate(precision, max_doublings, [&](mpfr_prec_t p) -> std::optional<GapReport> {
    GapReport r;
    r.claim_id = "pre_lowest";
    r.params = {{"m", m}, {"k", k}};
    r.precision_bits = p;
    SpectrumPtr s = dirichlet_level(m, p);
    std::vector<SpectrumEntry> base = s->entries_without_six();
    std::vector<Ball> images;
    images.reserve(base.size());
    for (const auto& e : base) images.push_back(phi_minus_iter(e.value, k));
    Ball expected = sub(phi_minus_iter(Ball(5, p), m + k - 1),
                        phi_minus_iter(Ball(2, p), m + k - 1));
    Ball first = sub(images[1], images[0]);
    if (!Ball::identical(first, expected)) {
      throw MismatchError("verify_pre_lowest: first image spacing is not the closed form");
    }
    r.witness = std::make_pair(detail::extend_minus(base[0].descriptor, k),
                               detail::extend_minus(base[1].descriptor, k));
    std::optional<Ball> runner;
    bool ok = true;
    for (std::size_t j = 1; j + 1 < images.size(); ++j) {
      Ball d = sub(images[j + 1], images[j]);
      if (!certified_less(first, d)) {
        ok = false;
        break;
      }
      if (!runner || mpfr_cmp(d.mid(), runner->mid()) < 0) runner = d;
    }
    if (ok && runner) {
      r.margin = sub(*runner, first);
      ok = certified_less(Ball(0, p), *r.margin);
    }
    r.status = ok ? VerifyStatus::CertifiedTrue : VerifyStatus::Inconclusive;
    return r;
  });
}

// The induction-step lemma (k = 2) plus the case-(d) auxiliary constant.
inline GapReport verify_induction_step(int m, mpfr_prec_t precision = Ball::kDefaultPrecision,
                                       int max_doublings = 3) {
  if (m < 3) throw DomainError("verify_induction_step: m must be >= 3");
  return detail::escalate(precision, max_doublings, [&](mpfr_prec_t p) -> std::optional<GapReport> {
    GapReport base = verify_pre_lowest(m, 2, p, 0);
    base.claim_id = "induction_step";
    base.params = {{"m", m}};
    if (!base.certified()) return base;
    Ball aux = induction_auxiliary_constant(p);
    if (!certified_less(Ball(1, p), aux)) {
      base.status = VerifyStatus::Inconclusive;
      base.note = "auxiliary constant not separated from 1";
      return base;
    }
    base.note = "auxiliary constant " + decimal_string(aux.mid(), 12) + " > 1 certified";
    return base;
  });
}

// Full-set minimal spacing of A_m (k = 0).
//
// Dirichlet, m >= 2: minimum Phi_-^{(m-1)}(2), attained between the largest
// 2-series eigenvalue Phi_+ Phi_-^{(m-2)}(2) and 5, certified strictly
// smaller than the spectral gap; the closing identity
// 5 - Phi_+ Phi_-^{(m-2)}(2) = Phi_-^{(m-1)}(2) is established by the
// equidistance rewrite. At m = 1 the set {2,5} has a single spacing, the
// spectral gap itself.
//
// Neumann: minimum Phi_-^{(m-1)}(3) attained at (0, Phi_-^{(m-1)}(3)); the
// pair (Phi_+ Phi_-^{(m-2)}(3), 5) ties it exactly and is resolved by the
// same rewrite.
inline GapReport verify_full_level_minimum(int m, BoundaryCondition bc,
                                           mpfr_prec_t precision = Ball::kDefaultPrecision,
                                           int max_doublings = 3) {
  if (m < 1) throw DomainError("verify_full_level_minimum: m must be >= 1");
  return detail::escalate(precision, max_doublings, [&](mpfr_prec_t p) -> std::optional<GapReport> {
    GapReport r;
    r.claim_id = "full_level_min";
    r.params = {{"m", m}, {"bc", bc == BoundaryCondition::Dirichlet ? 0 : 1}};
    r.precision_bits = p;
    SpectrumPtr s = finite_spectrum(m, bc, p);
    const auto& entries = s->entries();

    if (bc == BoundaryCondition::Dirichlet) {
      if (m == 1) {
        Ball gap = sub(entries[1].value, entries[0].value);
        r.witness = std::make_pair(entries[0].descriptor, entries[1].descriptor);
        r.margin = gap;
        r.note = "base case: single spacing, equal to the spectral gap";
        r.status = certified_less(Ball(0, p), gap) ? VerifyStatus::CertifiedTrue
                                                   : VerifyStatus::Inconclusive;
        return r;
      }
      Ball cf = phi_minus_iter(Ball(2, p), m - 1);
      std::size_t i5 = entries.size();
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].value.exact() && mpfr_cmp_si(entries[i].value.mid(), 5) == 0) i5 = i;
      }
      if (i5 == entries.size() || i5 == 0) {
        throw MismatchError("verify_full_level_minimum: eigenvalue 5 not found");
      }
      const SpectrumEntry& lower = entries[i5 - 1];
      std::optional<Ball> rewritten = detail::rewrite_gap_below_five(lower, entries[i5], p);
      if (!rewritten || !Ball::identical(*rewritten, cf)) {
        throw MismatchError("verify_full_level_minimum: closing identity failed");
      }
      bool ok = true;
      for (std::size_t j = 0; j + 1 < entries.size(); ++j) {
        if (j == i5 - 1) continue;
        Ball d = sub(entries[j + 1].value, entries[j].value);
        if (!certified_less(cf, d)) {
          ok = false;
          break;
        }
      }
      Ball spectral_gap = sub(phi_minus_iter(Ball(5, p), m - 1), cf);
      Ball margin = sub(spectral_gap, cf);
      ok = ok && certified_less(Ball(0, p), margin);
      r.witness = std::make_pair(lower.descriptor, entries[i5].descriptor);
      r.margin = margin;
      r.note = "minimum " + decimal_string(cf.mid(), 12) + " strictly below the spectral gap";
      r.status = ok ? VerifyStatus::CertifiedTrue : VerifyStatus::Inconclusive;
      return r;
    }

    // Neumann
    Ball cf = phi_minus_iter(Ball(3, p), m - 1);
    if (!entries[0].value.exact() || mpfr_sgn(entries[0].value.mid()) != 0) {
      throw MismatchError("verify_full_level_minimum: Neumann spectrum does not start at 0");
    }
    if (!Ball::identical(entries[1].value, cf)) {
      throw MismatchError("verify_full_level_minimum: smallest nonzero entry mismatch");
    }
    bool ok = true;
    bool tied = false;
    for (std::size_t j = 1; j + 1 < entries.size(); ++j) {
      Ball d = sub(entries[j + 1].value, entries[j].value);
      if (certified_leq(cf, d)) continue;
      std::optional<Ball> rewritten =
          detail::rewrite_gap_below_five(entries[j], entries[j + 1], p);
      if (rewritten && Ball::identical(*rewritten, cf)) {
        tied = true;
        continue;
      }
      ok = false;
      break;
    }
    r.witness = std::make_pair(entries[0].descriptor, entries[1].descriptor);
    r.margin = cf;
    if (tied) r.note = "exact tie with the spacing below 5, resolved by equidistance";
    ok = ok && certified_less(Ball(0, p), cf);
    r.status = ok ? VerifyStatus::CertifiedTrue : VerifyStatus::Inconclusive;
    return r;
  });
}

// Minimal spacing of the fixation-L truncation of the limit spectrum.
inline GapReport verify_min_gap_theorem(int L, BoundaryCondition bc,
                                        const Ball& tol = default_limit_tolerance(),
                                        mpfr_prec_t precision = Ball::kDefaultPrecision,
                                        int max_doublings = 3) {
  if (bc == BoundaryCondition::Dirichlet && L < 3) {
    throw DomainError("verify_min_gap_theorem: Dirichlet needs L >= 3");
  }
  if (bc == BoundaryCondition::Neumann && L < 1) {
    throw DomainError("verify_min_gap_theorem: Neumann needs L >= 1");
  }
  return detail::escalate(precision, max_doublings, [&](mpfr_prec_t p) -> std::optional<GapReport> {
    GapReport r;
    r.claim_id = "min_gap_theorem";
    r.params = {{"L", L}, {"bc", bc == BoundaryCondition::Dirichlet ? 0 : 1}};
    r.precision_bits = p;
    std::vector<LimitEigenvalue> vals = eigenvalues_up_to_fixation(L, bc, tol, p);
    Ball first = sub(vals[1].value, vals[0].value);
    auto cs = constant_set(p, tol);

    if (bc == BoundaryCondition::Dirichlet) {
      Ball expected = sub(cs->lambda0_5, cs->lambda0_2);
      if (!overlaps(first, expected)) {
        throw MismatchError("verify_min_gap_theorem: truncated gap does not match "
                            "lambda0_5 - lambda0_2");
      }
      if (vals[0].descriptor.seed != 2 || vals[0].descriptor.birth != 1 ||
          vals[1].descriptor.seed != 5 || vals[1].descriptor.birth != 1 ||
          vals[0].descriptor.word.last_plus_index() != 0 ||
          vals[1].descriptor.word.last_plus_index() != 0) {
        throw MismatchError("verify_min_gap_theorem: witness lineages are not the "
                            "lowest 2- and 5-series");
      }
      r.note = "gap equals lambda0_5 - lambda0_2 = " + decimal_string(expected.mid(), 12);
    } else {
      Ball twentyfive_first = scale_pow5(first, 2);
      if (!overlaps(twentyfive_first, cs->lambda6)) {
        throw MismatchError("verify_min_gap_theorem: Neumann gap times 25 does not match "
                            "lambda6");
      }
      if (vals[0].descriptor.seed != 0 || mpfr_sgn(vals[0].value.mid()) != 0) {
        throw MismatchError("verify_min_gap_theorem: Neumann witness must start at 0");
      }
      r.note = "gap is the lowest nonzero Neumann eigenvalue; 25 * gap = lambda6 "
               "(fixation normalization 5^{1-3})";
    }

    r.witness = std::make_pair(vals[0].descriptor, vals[1].descriptor);
    bool ok = true;
    std::optional<Ball> runner;
    for (std::size_t j = 1; j + 1 < vals.size(); ++j) {
      Ball d = sub(vals[j + 1].value, vals[j].value);
      if (!certified_less(first, d)) {
        ok = false;
        break;
      }
      if (!runner || mpfr_cmp(d.mid(), runner->mid()) < 0) runner = d;
    }
    if (runner) {
      r.margin = sub(*runner, first);
      ok = ok && certified_less(Ball(0, p), *r.margin);
    } else {
      r.margin = first;  // single spacing at this truncation
      ok = ok && certified_less(Ball(0, p), first);
    }
    r.status = ok ? VerifyStatus::CertifiedTrue : VerifyStatus::Inconclusive;
    return r;
  });
}

inline GapReport report_interval_separation(int m, int m_prime,
                                            mpfr_prec_t precision = Ball::kDefaultPrecision,
                                            const Ball& tol = default_limit_tolerance(),
                                            int max_doublings = 3) {
  return detail::escalate(precision, max_doublings, [&](mpfr_prec_t p) -> std::optional<GapReport> {
    GapReport r;
    r.claim_id = "dyadic_separation";
    r.params = {{"m", m}, {"m_prime", m_prime}};
    r.precision_bits = p;
    CertifiedBound b = check_interval_separation(m, m_prime, p, tol);
    r.margin = b.margin;
    r.status = b.certified ? VerifyStatus::CertifiedTrue : VerifyStatus::Inconclusive;
    return r;
  });
}

inline GapReport report_sum_closure(int m, int m_prime,
                                    mpfr_prec_t precision = Ball::kDefaultPrecision,
                                    const Ball& tol = default_limit_tolerance(),
                                    int max_doublings = 3) {
  return detail::escalate(precision, max_doublings, [&](mpfr_prec_t p) -> std::optional<GapReport> {
    GapReport r;
    r.claim_id = "dyadic_sum_closure";
    r.params = {{"m", m}, {"m_prime", m_prime}};
    r.precision_bits = p;
    CertifiedBound b = check_sum_closure(m, m_prime, p, tol);
    r.margin = b.margin;
    r.status = b.certified ? VerifyStatus::CertifiedTrue : VerifyStatus::Inconclusive;
    return r;
  });
}

// The k = 1 observation: the minimum over Phi_-(A_m^D \ {6}) is strictly
// below the k = 2 closed form. The attaining pair is reported in the note
// but deliberately not asserted (conjectural in the source material).
inline GapReport report_k1_minimum(int m, mpfr_prec_t precision = Ball::kDefaultPrecision,
                                   int max_doublings = 3) {
  if (m < 3) throw DomainError("report_k1_minimum: m must be >= 3");
  return detail::escalate(precision, max_doublings, [&](mpfr_prec_t p) -> std::optional<GapReport> {
    GapReport r;
    r.claim_id = "k1_remark";
    r.params = {{"m", m}};
    r.precision_bits = p;
    SpectrumPtr s = dirichlet_level(m, p);
    std::vector<SpectrumEntry> base = s->entries_without_six();
    std::vector<Ball> images;
    for (const auto& e : base) images.push_back(phi(Branch::Minus, e.value));
    MinSpacing ms = min_spacing(images);
    if (!ms.certified) {
      r.status = VerifyStatus::Inconclusive;
      return r;
    }
    Ball k2_form = sub(phi_minus_iter(Ball(5, p), m), phi_minus_iter(Ball(2, p), m));
    Ball margin = sub(k2_form, ms.gap);
    r.margin = margin;
    r.witness = std::make_pair(detail::extend_minus(base[ms.lower_index].descriptor, 1),
                               detail::extend_minus(base[ms.upper_index].descriptor, 1));
    r.note = "observed minimum at the reported pair; conjectured pair not asserted";
    r.status = certified_less(Ball(0, p), margin) ? VerifyStatus::CertifiedTrue
                                                  : VerifyStatus::Inconclusive;
    return r;
  });
}

}  // namespace sgspec
