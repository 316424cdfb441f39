// Acceptance run: one line per criterion, PASS or FAIL, with timing.
// Criteria that are known to be false as literally stated still run in full
// and print FAIL together with the offending cases.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/lr_oracle.hpp"
#include "pfgr/chern.hpp"
#include "pfgr/dsl.hpp"
#include "pfgr/pfaffian.hpp"
#include "pfgr/report.hpp"

using namespace pfgr;

namespace {

// Time budgets in seconds.
constexpr double kBudgetIdentities = 1.0;
constexpr double kBudgetHypersurfaces = 30.0;
constexpr double kBudgetSweep = 60.0;
constexpr double kNoBudget = 0.0;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
  void info(const std::string& what) { notes.push_back("info: " + what); }
};

std::string pk(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

std::string list(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + x;
  return out;
}

TPoly derived_y(const PGPair& p) { return derive_poincare_Y(p, poincare_X(p)); }

Outcome criterion1() {
  Outcome o;
  std::vector<std::string> subtraction_fails;
  for (int n = 4; n <= 14; ++n) {
    const LPoly cells = grassmannian_class(n, GrassmannianMethod::Cells);
    o.require(cells == grassmannian_class(n, GrassmannianMethod::ProductFormula), "cells != product at n=" + std::to_string(n));
    const LPoly h = hyperplane_section_class(n);
    o.require(h == isotropic_section_class(n, n % 2), "H product != stratification at n=" + std::to_string(n));
    if (h != hyperplane_section_class_by_subtraction(n)) subtraction_fails.push_back(std::to_string(n));
  }
  o.require(subtraction_fails.empty(), "[H] != [Gr] - L^{2n-4} - L^s for n = " + list(subtraction_fails));
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int n = 5; n <= 13; n += 2) o.require(check_l_equivalence(n), "identity fails at n=" + std::to_string(n));
  for (int n : {5, 7, 9}) {
    const auto p = make_pair(n, n);
    const TPoly px = poincare_X(p);
    o.require(derive_poincare_Y(p, px) == px, "P_Y != P_X at " + pk(n, n));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int n = 6; n <= 14; ++n)
    for (int kp = 1; kp <= 3; ++kp) {
      const long diff = betti(n, 2 * n - 4) - betti(n, 2 * n - 4 - 2 * kp);
      const long expected = n % 2 == 0 ? (kp + 1) / 2 : kp / 2;
      o.require(diff == expected, "Betti difference at n=" + std::to_string(n) + " k'=" + std::to_string(kp));
    }
  std::vector<std::string> passed, failed;
  for (int n = 6; n <= 12; ++n)
    for (int k : {2, 4, 6}) {
      if (!in_cork02_range(n, k)) continue;
      const auto p = make_section_pair(n, k);
      const bool ok = check_cork02(p);
      (ok ? passed : failed).push_back(pk(n, k) + (p.dim_y < 0 ? "[Y empty]" : ""));
    }
  o.require(failed.empty(), "check_cork02 false on " + list(failed));
  o.info("check_cork02 true on " + std::to_string(passed.size()) + " pairs");
  return o;
}

Outcome criterion4() {
  Outcome o;
  struct Case {
    int n, k, degree, ambient, middle;
    long betti, chi_y_side;
  };
  // chi_y_side: chi(X) for (6,5) and (8,4), chi(Y) otherwise.
  const Case cases[] = {{6, 5, 3, 4, 3, 10, -6}, {6, 6, 3, 5, 4, 23, 27}, {8, 4, 4, 3, 2, 22, 36}, {10, 5, 5, 4, 3, 204, -200}};
  for (const auto& c : cases) {
    const auto p = make_pair(c.n, c.k);
    const TPoly px = poincare_X(p);
    const TPoly py = derive_poincare_Y(p, px);
    const TPoly oracle = hypersurface_poincare_oracle(c.degree, c.ambient);
    o.require(py == oracle, pk(c.n, c.k) + " derived " + py.to_string() + " vs oracle " + oracle.to_string());
    o.require(py.coefficient(static_cast<unsigned>(c.middle)) == c.betti, pk(c.n, c.k) + " middle Betti");
    if (c.n == 6 && c.k == 5) o.require(euler_characteristic_ci(6, 5) == c.chi_y_side, "chi(X) at (6,5)");
    if (c.n == 8) {
      o.require(px.coefficient(8) == 24, "b_8(X) at (8,4)");
      o.require(euler_characteristic_ci(8, 4) == c.chi_y_side, "chi(X) at (8,4)");
    }
    if ((c.n == 6 && c.k == 6) || c.n == 10)
      o.require(hypersurface_euler(c.degree, c.ambient) == c.chi_y_side && py.poly().evaluate(-1) == c.chi_y_side,
                "chi(Y) at " + pk(c.n, c.k));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto p = make_pair(7, 7);
  const TPoly px = poincare_X(p);
  o.require(derive_poincare_Y(p, px) == px, "P_X != P_Y");
  o.require(px.coefficient(3) == 102, "b_3 = " + px.coefficient(3).get_str());
  const auto& standard = standard_section_calculus(7);
  const SectionCalculus lr(ChowRing(oracle::littlewood_richardson_table(7)));
  o.require(*standard_table(7) == *oracle::littlewood_richardson_table(7), "multiplication tables differ");
  for (const SectionCalculus* calc : {&standard, &lr}) {
    const auto h = calc->middle_hodge(7);
    o.require(h.euler_char == -98, "chi = " + h.euler_char.get_str());
    o.require(h.middle_hodge == std::vector<mpz_class>{1, 50, 50, 1}, "middle Hodge numbers");
    o.require(h.chi_y.coefficient(0) == 0, "chi_y(0) = " + h.chi_y.coefficient(0).get_str());
  }
  o.require(standard.chi_y(7) == lr.chi_y(7), "engines disagree on chi_y");
  o.require(main_theorem_status(p) == MainTheoremStatus::Applies, "main theorem status");
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (int n = 4; n <= 10; ++n) {
    const auto t = tangent_chern(ChowRing::standard(n));
    o.require(integrate(t.c(t.rank)) == n * (n - 1) / 2, "c_top at n=" + std::to_string(n));
  }
  int fano = 0;
  for (int n = 4; n <= 10; ++n)
    for (int k = 1; k <= 10; ++k) {
      try {
        make_pair(n, k);
      } catch (const Error&) {
        continue;
      }
      const YPoly chi = chi_y_ci(n, k);
      o.require(chi.evaluate(-1) == euler_characteristic_ci(n, k), "chi_y(-1) != chi at " + pk(n, k));
      if (k < n) {
        ++fano;
        o.require(chi.coefficient(0) == 1, "Fano chi(O) != 1 at " + pk(n, k));
      }
    }
  o.info(std::to_string(fano) + " Fano pairs with chi(O) = 1");
  for (auto [n, k] : {std::pair{7, 7}, {9, 9}})
    o.require(chi_y_ci(n, k).coefficient(0) == 0, "chi_y(0) != 0 at " + pk(n, k));
  for (auto [n, k] : {std::pair{6, 6}, {7, 8}}) {
    const mpz_class c0 = chi_y_ci(n, k).coefficient(0);
    o.require(c0 == 2, "chi_y(0) = " + c0.get_str() + " at " + pk(n, k) + ", expected 2");
    const mpz_class h20 = middle_hodge(n, k).middle_hodge.front();
    o.require(h20 >= 1, "h^{2,0} = " + h20.get_str() + " at " + pk(n, k));
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::string> points;
  int positive = 0;
  for (int n = 4; n <= 12; ++n)
    for (int k = 1; k <= 10; ++k) {
      PGPair p;
      try {
        p = make_pair(n, k);
      } catch (const Error&) {
        continue;
      }
      const TPoly y = derived_y(p);
      const bool shape = y.poly().all_nonnegative() && is_palindromic(y, static_cast<unsigned>(p.dim_y));
      const bool ends = y.coefficient(0) == 1 && y.coefficient(static_cast<unsigned>(2 * p.dim_y)) == 1;
      o.require(shape, "not a Poincare polynomial at " + pk(n, k));
      if (!ends) points.push_back(pk(n, k) + "=" + y.coefficient(0).get_str() + "pts");
      else ++positive;
    }
  o.require(points.empty(), "b_0 or b_top != 1 at " + list(points));
  o.info(std::to_string(positive) + " pairs with constant and top coefficient 1");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const LPoly gr = grassmannian_class(10);
  const TPoly pgr = to_poincare(gr);
  const TPoly px = poincare_X(make_pair(10, 5));
  const int r = 5;
  const TPoly z = cayley_trick_class(gr, px, pgr, r);
  o.require(is_palindromic(z, 19) && z.degree() == 38, "P(Z) not palindromic about 19");
  o.require(z.coefficient(0) == 1, "constant term");
  o.require(z == px.shifted(8) + pgr * to_poincare(projective_class(3)), "P(X) t^8 + P(Gr) P(P^3)");
  // h(S)(1-r) + sum_{i=0}^{r-2} h(U)(-i), summed term by term.
  SignedTPoly summands = px.poly().shifted(static_cast<unsigned>(2 * (r - 1)));
  for (int i = 0; i <= r - 2; ++i) summands += pgr.poly().shifted(static_cast<unsigned>(2 * i));
  o.require(summands == z.poly(), "summand structure");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto report = build_pair_report(make_pair(6, 6));
  o.require(report.poincare_x == TPoly{1, 0, 22, 0, 1}, "P_X = " + report.poincare_x.to_string());
  o.require(report.poincare_y == TPoly{1, 0, 1, 0, 23, 0, 1, 0, 1}, "P_Y = " + report.poincare_y.to_string());
  bool found = false;
  for (const auto& f : report.findings)
    if (f.id == "pfaffian_cubic_decomposition")
      found = f.message.find("(1,0,1,0,22,0,1,0,1)") != std::string::npos &&
              f.message.find("(1,0,1,0,23,0,1,0,1)") != std::string::npos;
  o.require(found, "finding missing");
  o.require(report.all_passed(), "checks failed");
  return o;
}

Outcome criterion10() {
  Outcome o;
  o.require(dsl::to_string(dsl::eval("Gr(2,5) == P(4) * SumEven(5)")) == "true", "example 1");
  o.require(dsl::to_string(dsl::eval("P(6)*H(2,7) == P(5)*Gr(2,7)")) == "true", "example 2");
  try {
    dsl::eval("(1 + L) div (1 + L*L)");
    o.require(false, "example 3 did not fail");
  } catch (const Error& e) {
    o.require(e.kind() == ErrorKind::EvalError && std::string(e.what()).find("non-exact division") != std::string::npos,
              std::string("example 3: ") + e.what());
  }
  try {
    dsl::eval("Gr(2,5) ==\n  P(4) *");
    o.require(false, "parse error not raised");
  } catch (const Error& e) {
    o.require(e.kind() == ErrorKind::ParseError && std::string(e.what()).find("line 2, column 9") != std::string::npos,
              std::string("parse error position: ") + e.what());
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "Grassmannian and hyperplane-section classes", kBudgetIdentities, criterion1},
      {2, "odd-n L-equivalence identity, P_Y = P_X for n = k", kNoBudget, criterion2},
      {3, "Betti differences and check_cork02 on the corank-2 list", kNoBudget, criterion3},
      {4, "hypersurface oracle agreement (n even)", kBudgetHypersurfaces, criterion4},
      {5, "(7,7) Calabi-Yau pair, two engines", kNoBudget, criterion5},
      {6, "characteristic-class sanity", kNoBudget, criterion6},
      {7, "derived P_Y shape over 4 <= n <= 12", kBudgetSweep, criterion7},
      {8, "Cayley trick for the (10,5) Fano 19-fold", kNoBudget, criterion8},
      {9, "(6,6) decomposition finding", kNoBudget, criterion9},
      {10, "class expression language", kNoBudget, criterion10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs >= c.budget) o.require(false, "over time budget");
    if (!o.pass) ++failures;
    std::printf("criterion %2d: %s  %.3fs%s  %s\n", c.id, o.pass ? "PASS" : "FAIL", secs,
                c.budget > 0 ? (" (< " + std::to_string(static_cast<int>(c.budget)) + "s)").c_str() : "", c.title);
    for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
  }
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
