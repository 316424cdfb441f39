#include "doctest.h"

#include <random>

#include "pfgr/ring.hpp"

using namespace pfgr;

namespace {

LPoly random_lpoly(std::mt19937_64& rng, unsigned max_degree = 40) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<int> nterms(0, 8);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  LPoly p;
  const int count = nterms(rng);
  for (int i = 0; i < count; ++i) {
    // Occasionally push coefficients well past 64 bits.
    mpz_class c = coeff(rng);
    if (i % 3 == 0) c *= mpz_class("123456789012345678901234567890");
    p.set(deg(rng), c);
  }
  return p;
}

LPoly random_nonnegative(std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> deg(0, 20);
  std::uniform_int_distribution<long> coeff(0, 50);
  LPoly p;
  for (int i = 0; i < 6; ++i) p.set(deg(rng), coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("lpoly_mul examples") {
  CHECK(lpoly_mul({1, 1}, {1, 1}) == LPoly{1, 2, 1});
  CHECK(lpoly_mul(projective_class(2), {1, 0, 1}) == LPoly{1, 1, 2, 1, 1});
  // Gr(2,5): partitions in a 2x3 box counted by size.
  CHECK(lpoly_mul(projective_class(4), {1, 0, 1}) == LPoly{1, 1, 2, 2, 2, 1, 1});
}

TEST_CASE("lpoly_mul degree is additive") {
  const LPoly a{3, 0, 2}, b{0, 1, 0, 5};
  CHECK(lpoly_mul(a, b).degree() == a.degree() + b.degree());
}

TEST_CASE("lpoly_div_exact") {
  CHECK(lpoly_div_exact({0, 0, 0, 1, 1}, LPoly::monomial(3)) == LPoly{1, 1});
  CHECK(lpoly_div_exact({1, 1, 2, 1, 1}, projective_class(2)) == LPoly{1, 0, 1});
  try {
    lpoly_div_exact({1, 1}, {1, 0, 1});
    FAIL("expected NonExactDivision");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonExactDivision);
  }
  CHECK_THROWS_AS(lpoly_div_exact({1}, LPoly{}), Error);
}

TEST_CASE("projective_class") {
  CHECK(projective_class(0) == LPoly{1});
  CHECK(projective_class(2) == LPoly{1, 1, 1});
  CHECK(projective_class(4) == LPoly{1, 1, 1, 1, 1});
  for (unsigned n = 0; n < 20; ++n) CHECK(projective_class(n).euler() == n + 1);
}

TEST_CASE("to_poincare") {
  CHECK(to_poincare({1, 1}) == TPoly{1, 0, 1});
  CHECK(to_poincare({1, 1, 2, 1, 1}) == TPoly{1, 0, 1, 0, 2, 0, 1, 0, 1});
  try {
    to_poincare({-1, 1});
    FAIL("expected NegativeCoefficient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeCoefficient);
  }
}

TEST_CASE("is_palindromic") {
  CHECK(is_palindromic(TPoly{1, 0, 1, 0, 2, 0, 1, 0, 1}, 4));
  CHECK_FALSE(is_palindromic(TPoly{1, 0, 1}, 2));
  CHECK(is_palindromic(TPoly{1}, 0));
  CHECK_FALSE(is_palindromic(TPoly{1, 0, 0, 0, 1}, 1));  // too long for d = 1
}

TEST_CASE("ring axioms on random supports up to degree 40") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const LPoly a = random_lpoly(rng), b = random_lpoly(rng), c = random_lpoly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK(lpoly_div_exact(a * b, b) == a);
  }
}

TEST_CASE("no zero coefficients are stored") {
  LPoly p{1, 2, 3};
  p -= LPoly{1, 2, 3};
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK((LPoly{1, 1} * LPoly{1, -1}).terms().size() == 2);
}

TEST_CASE("Poincare realization is multiplicative") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const LPoly a = random_nonnegative(rng), b = random_nonnegative(rng);
    CHECK(to_poincare(a * b) == to_poincare(a) * to_poincare(b));
    CHECK(to_poincare(a).poly().evaluate(1) == a.euler());
  }
}

TEST_CASE("evaluate") {
  const LPoly p{2, 0, -3, 1};
  CHECK(p.evaluate(2) == 2 - 12 + 8);
  CHECK(p.evaluate(-1) == 2 - 3 - 1);
  CHECK(LPoly::monomial(5).evaluate(3) == 243);
  CHECK(p.to_string() == "2 - 3*L^2 + L^3");
}
