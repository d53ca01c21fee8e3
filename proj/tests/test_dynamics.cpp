#include "sgspec/dynamics.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "helpers.hpp"

using namespace sgspec;
using sgspec::test::mid_close;
using sgspec::test::uniform;

TEST_CASE("forward map fixed points and examples") {
  REQUIRE(forward_map(Ball(0)).exact());
  REQUIRE(mpfr_cmp_si(forward_map(Ball(0)).mid(), 0) == 0);

  Ball six = forward_map(Ball(2));
  REQUIRE(six.exact());
  REQUIRE(mpfr_cmp_si(six.mid(), 6) == 0);

  REQUIRE(contains_si(forward_map(phi(Branch::Minus, Ball(2))), 2));
}

TEST_CASE("phi boundary values from the branch proposition") {
  Ball m6 = phi(Branch::Minus, Ball(6));
  REQUIRE(m6.exact());
  REQUIRE(mpfr_cmp_si(m6.mid(), 2) == 0);

  Ball p6 = phi(Branch::Plus, Ball(6));
  REQUIRE(p6.exact());
  REQUIRE(mpfr_cmp_si(p6.mid(), 3) == 0);

  Ball p0 = phi(Branch::Plus, Ball(0));
  REQUIRE(p0.exact());
  REQUIRE(mpfr_cmp_si(p0.mid(), 5) == 0);

  Ball m0 = phi(Branch::Minus, Ball(0));
  REQUIRE(m0.exact());
  REQUIRE(mpfr_cmp_si(m0.mid(), 0) == 0);

  REQUIRE(mid_close(phi(Branch::Minus, Ball(3)),
                    "0.697224362268005353440389366264752026874352", "1e-30"));
}

TEST_CASE("phi domain errors") {
  REQUIRE_THROWS_AS(phi(Branch::Minus, Ball(7)), DomainError);
  REQUIRE_THROWS_AS(phi(Branch::Plus, Ball(-1)), DomainError);
  REQUIRE_NOTHROW(phi(Branch::Minus, Ball::from_decimal("6.25")));
}

TEST_CASE("word composition examples") {
  REQUIRE(mid_close(phi_word(BranchWord::parse("--"), Ball(6)),
                    "0.4384471871911697250892950720129614874264", "1e-30"));
  REQUIRE(mid_close(phi_word(BranchWord::parse("--"), Ball(3)),
                    "0.143567179457051729939659852095055288847798", "1e-30"));
  // w_1 = '+', w_2 = '-' applied to 2: Phi_- Phi_+ (2)
  REQUIRE(mid_close(phi_word(BranchWord::parse("+-"), Ball(2)),
                    "1.20059737294741098977071351264242692322154", "1e-30"));
  // empty word is the identity
  REQUIRE(Ball::identical(phi_word(BranchWord{}, Ball(5)), Ball(5)));
}

TEST_CASE("iterated minus branch") {
  REQUIRE(mid_close(phi_minus_iter(Ball(5), 1), "1.38196601125010515179541316563436188227969",
                    "1e-30"));
  REQUIRE(Ball::identical(phi_minus_iter(Ball(2), 0), Ball(2)));
  REQUIRE(mid_close(phi_minus_iter(Ball(2), 4),
                    "0.00358676965823061258552997557383634670710841", "1e-30"));
  REQUIRE(Ball::identical(phi_minus_iter(Ball(2), 4),
                          phi_word(BranchWord::parse("----"), Ball(2))));
}

TEST_CASE("derivative of the minus branch") {
  // (25)^{-1/2} = 1/5: multiply back to certify
  Ball d0 = dphi_minus(Ball(0));
  REQUIRE(contains_si(mul(d0, Ball(5)), 1));
  Ball d4 = dphi_minus(Ball(4));
  REQUIRE(contains_si(mul(d4, Ball(3)), 1));
  Ball d6 = dphi_minus(Ball(6));
  REQUIRE(d6.exact());
  REQUIRE(mpfr_cmp_si(d6.mid(), 1) == 0);
}

TEST_CASE("inverse identity on 1000 samples") {
  std::mt19937_64 rng(101u);
  for (int i = 0; i < 1000; ++i) {
    Ball z = Ball::from_double(uniform(rng, 0.0, 6.0));
    REQUIRE(contains(forward_map(phi(Branch::Minus, z)), z.mid()));
    REQUIRE(contains(forward_map(phi(Branch::Plus, z)), z.mid()));
  }
}

TEST_CASE("branch separation and ranges on 1000 samples") {
  std::mt19937_64 rng(102u);
  Ball two(2), three(3), five(5);
  for (int i = 0; i < 1000; ++i) {
    Ball z = Ball::from_double(uniform(rng, 0.0, 6.0));
    Ball lo = phi(Branch::Minus, z);
    Ball hi = phi(Branch::Plus, z);
    REQUIRE(certified_less(lo, hi));
    REQUIRE(lo.is_nonnegative());
    REQUIRE(certified_leq(lo, two));
    REQUIRE(certified_leq(three, hi));
    REQUIRE(certified_leq(hi, five));
  }
}

TEST_CASE("gap identity Phi_+ - Phi_- = sqrt(25-4z) on 1000 samples") {
  std::mt19937_64 rng(103u);
  for (int i = 0; i < 1000; ++i) {
    Ball z = Ball::from_double(uniform(rng, 0.0, 6.0));
    Ball gap = sub(phi(Branch::Plus, z), phi(Branch::Minus, z));
    Ball root = sqrt(sub(Ball(25), mul(Ball(4), z)));
    REQUIRE((overlaps(gap, root) || Ball::identical(gap, root)));
  }
}

TEST_CASE("equidistance on 1000 samples") {
  std::mt19937_64 rng(104u);
  for (int i = 0; i < 1000; ++i) {
    double a = uniform(rng, 0.0, 6.0), b = uniform(rng, 0.0, 6.0);
    Ball x = Ball::from_double(std::min(a, b));
    Ball y = Ball::from_double(std::max(a, b));
    Ball lhs = sub(phi(Branch::Minus, y), phi(Branch::Minus, x));
    Ball rhs = sub(phi(Branch::Plus, x), phi(Branch::Plus, y));
    REQUIRE((overlaps(lhs, rhs) || Ball::identical(lhs, rhs)));
  }
}

TEST_CASE("convexity surrogate and contraction on 1000 samples") {
  std::mt19937_64 rng(105u);
  int checked = 0;
  while (checked < 1000) {
    double v[4] = {uniform(rng, 0.0, 6.0), uniform(rng, 0.0, 6.0), uniform(rng, 0.0, 6.0),
                   uniform(rng, 0.0, 6.0)};
    std::sort(v, v + 4);
    double w = v[0], x = v[1], y = v[2], z = v[3];
    if (x - w > z - y) continue;  // resample until the lemma's shape holds
    Ball lhs = sub(phi(Branch::Minus, Ball::from_double(x)), phi(Branch::Minus, Ball::from_double(w)));
    Ball rhs = sub(phi(Branch::Minus, Ball::from_double(z)), phi(Branch::Minus, Ball::from_double(y)));
    REQUIRE(certified_leq(lhs, rhs));
    // contraction: Phi_-(x) - Phi_-(w) <= x - w
    Ball width = sub(Ball::from_double(x), Ball::from_double(w));
    REQUIRE(certified_leq(lhs, width));
    ++checked;
  }
}

TEST_CASE("derivative matches central differences to O(h^2)") {
  std::mt19937_64 rng(106u);
  Ball h = Ball::from_decimal("1e-5");
  Ball two_h = mul(Ball(2), h);
  for (int i = 0; i < 200; ++i) {
    Ball z = Ball::from_double(uniform(rng, 0.1, 5.9));
    Ball fd = div(sub(phi(Branch::Minus, add(z, h)), phi(Branch::Minus, sub(z, h))), two_h);
    Ball err = sub(fd, dphi_minus(z));
    // |f''' | <= 12 on [0,6] so the defect is below 4 h^2 = 4e-10
    REQUIRE(certified_less(err, Ball::from_decimal("4e-10")));
    REQUIRE(certified_less(Ball::from_decimal("-4e-10"), err));
  }
}

TEST_CASE("word serialization round trip") {
  BranchWord w = BranchWord::parse("+--");
  REQUIRE(w.str() == "+--");
  REQUIRE(w.size() == 3);
  REQUIRE(w.at(1) == Branch::Plus);
  REQUIRE(w.at(2) == Branch::Minus);
  REQUIRE(w.last_plus_index() == 1);
  REQUIRE(BranchWord::parse("").empty());
  REQUIRE_THROWS_AS(BranchWord::parse("+x"), DomainError);
}
