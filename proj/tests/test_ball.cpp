#include "sgspec/ball.hpp"

#include <gmp.h>

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "helpers.hpp"

using namespace sgspec;
using sgspec::test::mid_close;
using sgspec::test::rad_below;

namespace {

// Small exact rational for oracle-side checks.
struct Rational {
  long long num;
  long long den;  // > 0
};

bool ball_contains_rational(const Ball& b, const Rational& r) {
  mpq_t q;
  mpq_init(q);
  mpq_set_si(q, r.num, static_cast<unsigned long>(r.den));
  mpq_canonicalize(q);
  mpfr_t lo, hi;
  mpfr_init2(lo, b.precision() + 64);
  mpfr_init2(hi, b.precision() + 64);
  b.lower(lo);
  b.upper(hi);
  bool ok = mpfr_cmp_q(lo, q) <= 0 && mpfr_cmp_q(hi, q) >= 0;
  mpfr_clear(lo);
  mpfr_clear(hi);
  mpq_clear(q);
  return ok;
}

Ball ball_of(const Rational& r, mpfr_prec_t prec) {
  return div(Ball(r.num, prec), Ball(r.den, prec));
}

}  // namespace

TEST_CASE("integer arithmetic is exact") {
  Ball five = add(Ball(2), Ball(3));
  REQUIRE(five.exact());
  REQUIRE(mpfr_cmp_si(five.mid(), 5) == 0);

  Ball root = sqrt(Ball(25));
  REQUIRE(root.exact());
  REQUIRE(mpfr_cmp_si(root.mid(), 5) == 0);
}

TEST_CASE("sqrt(17) is tightly enclosed") {
  Ball r = sqrt(Ball(17));
  REQUIRE(mid_close(r, "4.1231056256176605498214098559740770251472", "1e-35"));
  // radius <= 2^-(P-6) at P = 128
  mpfr_t bound;
  mpfr_init2(bound, 64);
  mpfr_set_ui_2exp(bound, 1, -(128 - 6), MPFR_RNDN);
  REQUIRE(mpfr_cmp(r.rad(), bound) <= 0);
  mpfr_clear(bound);
}

TEST_CASE("certified_compare basics") {
  REQUIRE(certified_compare(Ball(1), Ball(2)) == Order::Less);
  REQUIRE(certified_compare(Ball(2), Ball(1)) == Order::Greater);

  // a = [1,3], b = [2,4]
  Ball a = Ball::from_decimal("2");
  Ball b = Ball::from_decimal("3");
  mpfr_t one;
  mpfr_init2(one, 64);
  mpfr_set_ui(one, 1, MPFR_RNDN);
  mpfr_set(a.mut_rad(), one, MPFR_RNDU);
  mpfr_set(b.mut_rad(), one, MPFR_RNDU);
  mpfr_clear(one);
  REQUIRE(certified_compare(a, b) == Order::Overlap);
}

TEST_CASE("division by an interval containing zero is rejected") {
  Ball zeroish(0);
  REQUIRE_THROWS_AS(div(Ball(1), zeroish), DomainError);
}

TEST_CASE("sqrt of an interval meeting negatives is rejected") {
  REQUIRE_THROWS_AS(sqrt(Ball(-1)), DomainError);
}

TEST_CASE("scale_pow5 is exact for non-negative powers") {
  Ball x = div(Ball(1), Ball(3));
  Ball z = scale_pow5(x, 7);
  Ball direct = mul(x, Ball(78125));
  REQUIRE(overlaps(z, direct));
  // exactness: scaling twice equals scaling once
  Ball twice = scale_pow5(scale_pow5(x, 3), 4);
  REQUIRE(Ball::identical(z, twice));
}

TEST_CASE("enclosure monotonicity on random rationals") {
  std::mt19937_64 rng(20240811u);
  std::uniform_int_distribution<long long> num(-120, 120);
  std::uniform_int_distribution<long long> den(1, 40);
  const mpfr_prec_t low_prec = 24;
  for (int i = 0; i < 1000; ++i) {
    Rational a{num(rng), den(rng)};
    Rational b{num(rng), den(rng)};
    Ball ba = ball_of(a, low_prec), bb = ball_of(b, low_prec);

    Rational sum{a.num * b.den + b.num * a.den, a.den * b.den};
    REQUIRE(ball_contains_rational(add(ba, bb), sum));

    Rational dif{a.num * b.den - b.num * a.den, a.den * b.den};
    REQUIRE(ball_contains_rational(sub(ba, bb), dif));

    Rational prod{a.num * b.num, a.den * b.den};
    REQUIRE(ball_contains_rational(mul(ba, bb), prod));

    if (std::abs(b.num) >= 5) {
      Rational quot{a.num * b.den * (b.num > 0 ? 1 : -1),
                    a.den * std::abs(b.num)};
      REQUIRE(ball_contains_rational(div(ba, bb), quot));
    }
  }
}

TEST_CASE("sqrt enclosure on random non-negative rationals") {
  std::mt19937_64 rng(77u);
  std::uniform_int_distribution<long long> num(0, 200);
  std::uniform_int_distribution<long long> den(1, 40);
  for (int i = 0; i < 1000; ++i) {
    Rational a{num(rng), den(rng)};
    Ball r = sqrt(ball_of(a, 24));
    // inf(r)^2 <= a <= sup(r)^2
    mpfr_t lo, hi;
    mpfr_init2(lo, 96);
    mpfr_init2(hi, 96);
    r.lower(lo);
    r.upper(hi);
    mpfr_sqr(lo, lo, MPFR_RNDD);
    mpfr_sqr(hi, hi, MPFR_RNDU);
    mpq_t q;
    mpq_init(q);
    mpq_set_si(q, a.num, static_cast<unsigned long>(a.den));
    mpq_canonicalize(q);
    bool ok = mpfr_cmp_q(lo, q) <= 0 && mpfr_cmp_q(hi, q) >= 0;
    mpq_clear(q);
    mpfr_clear(lo);
    mpfr_clear(hi);
    REQUIRE(ok);
  }
}

TEST_CASE("precision refinement never widens the enclosure") {
  // Same expression DAG evaluated at increasing precision.
  mpfr_prec_t precs[] = {64, 128, 192, 256};
  mpfr_t prev;
  mpfr_init2(prev, 64);
  bool have_prev = false;
  for (mpfr_prec_t p : precs) {
    Ball x = sqrt(sub(Ball(25, p), mul(Ball(4, p), div(Ball(17, p), Ball(7, p)))));
    Ball y = div(mul(x, x), add(x, Ball(3, p)));
    if (have_prev) {
      REQUIRE(mpfr_cmp(y.rad(), prev) <= 0);
    }
    mpfr_set(prev, y.rad(), MPFR_RNDU);
    have_prev = true;
  }
  mpfr_clear(prev);
}

TEST_CASE("compare antisymmetry on random balls") {
  std::mt19937_64 rng(5u);
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    Ball a = Ball::from_double(val(rng));
    Ball b = Ball::from_double(val(rng));
    Order ab = certified_compare(a, b);
    Order ba = certified_compare(b, a);
    if (ab == Order::Less) REQUIRE(ba == Order::Greater);
    if (ab == Order::Greater) REQUIRE(ba == Order::Less);
    if (ab == Order::Overlap) REQUIRE(ba == Order::Overlap);
  }
}

TEST_CASE("decimal parsing produces an enclosure") {
  Ball t = Ball::from_decimal("0.1");
  Rational tenth{1, 10};
  REQUIRE(ball_contains_rational(t, tenth));
  REQUIRE_THROWS_AS(Ball::from_decimal("zz"), DomainError);
}
