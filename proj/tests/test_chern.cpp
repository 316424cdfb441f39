#include "doctest.h"

#include "oracle/lr_oracle.hpp"
#include "pfgr/chern.hpp"

using namespace pfgr;

namespace {

ChowClass s(int n, int a, int b = 0) { return ChowClass::schubert(n, {a, b}); }

}  // namespace

TEST_CASE("tautological_chern for n = 4") {
  const auto t = tautological_chern(4);
  CHECK(t.s_dual.rank == 2);
  CHECK(t.s_dual.c(1) == s(4, 1));
  CHECK(t.s_dual.c(2) == s(4, 1, 1));
  CHECK(t.q.rank == 2);
  CHECK(t.q.c(1) == s(4, 1));
  CHECK(t.q.c(2) == s(4, 2));
  CHECK_THROWS_AS(tautological_chern(3), Error);
}

TEST_CASE("Whitney identity c(S) c(Q) = 1") {
  for (int n = 4; n <= 12; ++n) {
    const auto ring = ChowRing::standard(n);
    const auto t = tautological_chern(ring);
    const ChowClass c_s = ChowClass::one(n) - t.s_dual.c(1) + t.s_dual.c(2);
    CHECK(ring.multiply(c_s, t.q.total()) == ChowClass::one(n));
    // c_i(Q) is the special Schubert class sigma_i.
    for (int i = 1; i <= n - 2; ++i) CHECK(t.q.c(i) == ChowClass::special(n, i));
  }
}

TEST_CASE("tensor_chern of line bundles") {
  const int n = 6;
  ChernData a{1, {s(n, 1)}};
  ChernData b{1, {mpq_class(3) * s(n, 1)}};
  const auto ab = tensor_chern(a, b);
  CHECK(ab.rank == 1);
  CHECK(ab.c(1) == mpq_class(4) * s(n, 1));

  ChernData other{1, {s(5, 1)}};
  try {
    tensor_chern(a, other);
    FAIL("expected AmbientMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AmbientMismatch);
  }
}

TEST_CASE("tensor with a line bundle matches the direct formula") {
  // c(E ⊗ L) = sum_i c_i(E) (1 + l)^{r - i} for a rank r bundle E.
  const int n = 7;
  const auto ring = ChowRing::standard(n);
  const auto t = tautological_chern(ring);
  const ChowClass l = s(n, 1);
  ChernData line{1, {l}};
  const auto prod = tensor_chern(t.s_dual, line, ring);
  const ChowClass one_plus_l = ChowClass::one(n) + l;
  ChowClass expected = ChowClass::zero(n);
  for (int i = 0; i <= 2; ++i) expected += ring.multiply(t.s_dual.c(i), ring.power(one_plus_l, 2 - i));
  CHECK(prod.total() == expected);
}

TEST_CASE("tangent bundle of Gr(2,n)") {
  for (int n = 4; n <= 12; ++n) {
    const auto tangent = tangent_chern(ChowRing::standard(n));
    CHECK(tangent.rank == 2 * (n - 2));
    CHECK(tangent.c(1) == mpq_class(n) * s(n, 1));
    if (n <= 10) CHECK(integrate(tangent.c(tangent.rank)) == n * (n - 1) / 2);
  }
}

TEST_CASE("euler_characteristic_ci") {
  CHECK(euler_characteristic_ci(4, 0) == 6);
  CHECK(euler_characteristic_ci(4, 1) == 4);
  CHECK(euler_characteristic_ci(7, 7) == -98);
  CHECK(euler_characteristic_ci(6, 8) == 14);  // deg Gr(2,6) points
  CHECK_THROWS_AS(euler_characteristic_ci(4, 5), Error);
  CHECK_THROWS_AS(euler_characteristic_ci(4, -1), Error);
}

TEST_CASE("chi_y_ci") {
  CHECK(chi_y_ci(4, 0) == YPoly{1, -1, 2, -1, 1});
  CHECK(chi_y_ci(6, 6) == YPoly{2, -20, 2});
  CHECK(chi_y_ci(7, 7).coefficient(0) == 0);
  CHECK(chi_y_ci(9, 9).coefficient(0) == 0);
  // Koszul: chi(O_X) = 1 - 8 chi(O(-7)) + chi(O(-8)) = 1 - 8 + 21 on Gr(2,7).
  CHECK(chi_y_ci(7, 8).coefficient(0) == 14);
  for (int n = 4; n <= 8; ++n)
    for (int k = 0; k <= 2 * (n - 2); ++k) {
      const YPoly chi = chi_y_ci(n, k);
      CHECK(chi.evaluate(-1) == euler_characteristic_ci(n, k));
      CHECK(chi.degree() <= 2 * (n - 2) - k);
      if (k < n) CHECK(chi.coefficient(0) == 1);  // Fano
    }
}

TEST_CASE("chi_y interpolation agrees with direct evaluation") {
  const auto& calc = standard_section_calculus(7);
  const YPoly chi = calc.chi_y(3);
  for (int y = 0; y <= 10; ++y) CHECK(mpq_class(chi.evaluate(y)) == calc.chi_y_at(3, y));
}

TEST_CASE("middle_hodge") {
  const auto k3 = middle_hodge(6, 6);
  CHECK(k3.dimension == 2);
  CHECK(k3.middle_hodge == std::vector<mpz_class>{1, 20, 1});
  CHECK(k3.middle_betti == 22);

  const auto cubic3 = middle_hodge(6, 5);
  CHECK(cubic3.middle_hodge == std::vector<mpz_class>{0, 5, 5, 0});
  CHECK(cubic3.middle_betti == 10);
  CHECK(cubic3.euler_char == -6);

  const auto cy3 = middle_hodge(7, 7);
  CHECK(cy3.middle_hodge == std::vector<mpz_class>{1, 50, 50, 1});
  CHECK(cy3.middle_betti == 102);
  CHECK(cy3.euler_char == -98);

  CHECK(middle_hodge(7, 8).middle_hodge.front() >= 1);
}

TEST_CASE("k = 0 reproduces the pure Tate data of Gr(2,n)") {
  for (int n = 4; n <= 9; ++n) {
    const auto h = middle_hodge(n, 0);
    const int d = 2 * (n - 2);
    for (int p = 0; p <= d; ++p) {
      const long expected = 2 * p == d ? betti(n, d) : 0;
      CHECK(h.middle_hodge[static_cast<std::size_t>(p)] == expected);
      CHECK(h.chi_y.coefficient(static_cast<unsigned>(p)) == (p % 2 == 0 ? 1 : -1) * betti(n, 2 * p));
    }
  }
}

TEST_CASE("Littlewood-Richardson engine gives the same Chern integrals") {
  for (int n = 4; n <= 7; ++n) {
    const SectionCalculus lr(ChowRing(oracle::littlewood_richardson_table(n)));
    const auto& standard = standard_section_calculus(n);
    for (int k = 0; k <= 2 * (n - 2); ++k) {
      CHECK(lr.euler_characteristic(k) == standard.euler_characteristic(k));
      CHECK(lr.chi_y(k) == standard.chi_y(k));
    }
  }
}
