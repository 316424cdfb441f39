#include "doctest.h"

#include <random>

#include "oracle/lr_oracle.hpp"
#include "pfgr/schubert.hpp"

using namespace pfgr;

namespace {

ChowClass s(int n, int a, int b = 0) { return ChowClass::schubert(n, {a, b}); }

// Gaussian binomial [n choose 2]_L by enumerating subsets {i < j} of {0..n-1}
// with weight (i) + (j-1); independent of the box enumeration in the library.
LPoly gaussian_binomial_n_choose_2(int n) {
  LPoly p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const unsigned w = static_cast<unsigned>(i + j - 1);
      p.set(w, p.coefficient(w) + 1);
    }
  return p;
}

}  // namespace

TEST_CASE("Partition2 validation") {
  CHECK_THROWS_AS(Partition2(1, 2), Error);
  CHECK_THROWS_AS(Partition2(0, -1), Error);
  CHECK(Partition2(3, 1).size() == 4);
  CHECK(box_partitions(4).size() == 6);
  CHECK(box_partitions(12).size() == 66);
}

TEST_CASE("grassmannian_class") {
  CHECK(grassmannian_class(4, GrassmannianMethod::Cells) == LPoly{1, 1, 2, 1, 1});
  CHECK(grassmannian_class(4, GrassmannianMethod::ProductFormula) == LPoly{1, 1, 2, 1, 1});
  CHECK(grassmannian_class(5, GrassmannianMethod::ProductFormula) == LPoly{1, 1, 2, 2, 2, 1, 1});
  CHECK_THROWS_AS(grassmannian_class(3), Error);
  for (int n = 4; n <= 14; ++n) {
    const LPoly cells = grassmannian_class(n, GrassmannianMethod::Cells);
    CHECK(cells == grassmannian_class(n, GrassmannianMethod::ProductFormula));
    CHECK(cells == gaussian_binomial_n_choose_2(n));
    CHECK(cells.degree() == 2 * (n - 2));
  }
}

TEST_CASE("hyperplane_section_class") {
  CHECK(hyperplane_section_class(4) == LPoly{1, 1, 1, 1});
  CHECK(hyperplane_section_class_by_subtraction(4) == LPoly{1, 1, 1, 1});
  CHECK(hyperplane_section_class(5) == projective_class(3) * LPoly{1, 0, 1});
  for (int n = 4; n <= 14; ++n) {
    const LPoly h = hyperplane_section_class(n);
    CHECK(h == isotropic_section_class(n, n % 2));
    CHECK(is_palindromic(to_poincare(h), static_cast<unsigned>(2 * n - 5)));
  }
  CHECK_THROWS_AS(hyperplane_section_class(2), Error);
}

TEST_CASE("Schubert-divisor subtraction only matches the smooth section for n = 4, 5") {
  for (int n = 4; n <= 14; ++n) {
    const bool agrees = hyperplane_section_class(n) == hyperplane_section_class_by_subtraction(n);
    CHECK(agrees == (n <= 5));
  }
  // n = 6: (1,1,2,2,2,2,2,1) is not palindromic, so it is no smooth 7-fold.
  CHECK(hyperplane_section_class_by_subtraction(6) == LPoly{1, 1, 2, 2, 2, 2, 2, 1});
}

TEST_CASE("isotropic_section_class") {
  // omega = 0: every plane is isotropic.
  for (int n = 4; n <= 9; ++n) CHECK(isotropic_section_class(n, n) == grassmannian_class(n));
  // Rank 2: the Schubert divisor, all cells but the big one.
  for (int n = 4; n <= 9; ++n)
    CHECK(isotropic_section_class(n, n - 2) ==
          grassmannian_class(n) - LPoly::monomial(static_cast<unsigned>(2 * n - 4)));
  // Corank 2 on C^6, stratified by hand: 1 + (1+L)(L+L^2+L^3+L^4) + L^4(1+L+L^2+L^3).
  CHECK(isotropic_section_class(6, 2) == LPoly{1, 1, 2, 2, 3, 2, 1, 1});
  CHECK_THROWS_AS(isotropic_section_class(6, 1), Error);
  CHECK_THROWS_AS(isotropic_section_class(6, 8), Error);
}

TEST_CASE("odd n: [P^{n-1}][H(2,n)] = [P^{n-2}][Gr(2,n)]") {
  for (int n = 5; n <= 13; n += 2)
    CHECK(projective_class(n - 1) * hyperplane_section_class(n) ==
          projective_class(n - 2) * grassmannian_class(n));
}

TEST_CASE("Pieri examples") {
  CHECK(multiply(s(4, 1), s(4, 1)) == s(4, 2) + s(4, 1, 1));
  CHECK(multiply(s(4, 1), s(4, 2, 1)) == s(4, 2, 2));
  for (int n = 4; n <= 8; ++n) {
    const ChowClass top = s(n, n - 2, n - 2);
    CHECK(multiply(top, s(n, 1)).is_zero());
    CHECK(multiply(top, ChowClass::one(n)) == top);
  }
}

TEST_CASE("integrate") {
  const auto ring = ChowRing::standard(4);
  CHECK(integrate(ring.power(s(4, 1), 4)) == 2);
  CHECK(integrate(multiply(s(4, 1), s(4, 1))) == 0);
  // Degree of Gr(2,n) is the Catalan number C_{n-2}.
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 4; n <= 9; ++n)
    CHECK(integrate(ChowRing::standard(n).power(s(n, 1), 2 * (n - 2))) == catalan[n - 2]);
}

TEST_CASE("duality pairing for n <= 10") {
  for (int n = 4; n <= 10; ++n) {
    const int w = n - 2;
    const auto basis = box_partitions(n);
    for (const auto& lam : basis)
      for (const auto& mu : basis) {
        if (lam.size() + mu.size() != 2 * w) continue;
        const mpq_class expected = (mu == Partition2(w - lam.b, w - lam.a)) ? 1 : 0;
        CHECK(integrate(multiply(ChowClass::schubert(n, lam), ChowClass::schubert(n, mu))) == expected);
      }
  }
}

TEST_CASE("Pieri/Giambelli table equals the Littlewood-Richardson oracle") {
  for (int n = 4; n <= 12; ++n) CHECK(*standard_table(n) == *oracle::littlewood_richardson_table(n));
}

TEST_CASE("multiplication is commutative, associative and graded") {
  std::mt19937_64 rng(99);
  for (int n : {5, 7, 9}) {
    const auto basis = box_partitions(n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    auto random_class = [&] {
      ChowClass x(n);
      for (int i = 0; i < 4; ++i) {
        mpq_class c(coeff(rng), 1 + (i % 3));
        c.canonicalize();
        x.set(basis[pick(rng)], c);
      }
      return x;
    };
    for (int trial = 0; trial < 30; ++trial) {
      const ChowClass a = random_class(), b = random_class(), c = random_class();
      CHECK(multiply(a, b) == multiply(b, a));
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
    for (const auto& lam : basis)
      for (const auto& mu : basis) {
        const ChowClass prod = multiply(ChowClass::schubert(n, lam), ChowClass::schubert(n, mu));
        if (lam.size() + mu.size() > 2 * (n - 2))
          CHECK(prod.is_zero());
        else
          CHECK(prod.is_homogeneous(lam.size() + mu.size()));
      }
  }
}

TEST_CASE("ambient mismatch") {
  try {
    multiply(s(4, 1), s(5, 1));
    FAIL("expected AmbientMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AmbientMismatch);
  }
}

TEST_CASE("betti") {
  CHECK(betti(8, 12) == 4);
  CHECK(betti(7, 4) == 2);
  CHECK(betti(4, 3) == 0);
  for (int n = 4; n <= 14; ++n) {
    const LPoly gr = grassmannian_class(n);
    for (int j = 0; j <= 4 * (n - 2); ++j) {
      const mpz_class expected = j % 2 == 0 ? gr.coefficient(static_cast<unsigned>(j / 2)) : mpz_class(0);
      CHECK(betti(n, j) == expected);
    }
  }
}

TEST_CASE("middle Betti differences used in the variable-cohomology count") {
  for (int n = 6; n <= 14; ++n)
    for (int kp = 1; kp <= 3; ++kp) {
      const long diff = betti(n, 2 * n - 4) - betti(n, 2 * n - 4 - 2 * kp);
      const long expected = n % 2 == 0 ? (kp + 1) / 2 : kp / 2;
      CHECK(diff == expected);
    }
}

TEST_CASE("seeded tables are not replaced") {
  auto first = standard_table(6);
  auto other = std::make_shared<const MultiplicationTable>(build_pieri_giambelli_table(6));
  CHECK(seed_standard_table(other) == first);
  CHECK(has_standard_table(6));
}
