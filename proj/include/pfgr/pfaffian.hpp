#pragma once

// Pfaffian-Grassmannian pairs X = Gr(2,V) ∩ P(U), Y = Pf ∩ P(U^perp) for a
// codimension-k subspace U of ∧²V, dim V = n. [X] and [Y] are not polynomials
// in L, so every relation involving them is checked on Poincare polynomials.

#include <gmpxx.h>

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pfgr/chern.hpp"
#include "pfgr/ring.hpp"

namespace pfgr {

struct PGPair {
  int n = 0;
  int k = 0;
  int dim_x = 0;
  int dim_y = 0;
  int s = 0;  // twist in the Grothendieck-ring relation
  int m = 0;  // (dim_x - dim_y) / 2
  bool smooth_range = false;

  friend bool operator==(const PGPair&, const PGPair&) = default;
};

// Throws OutOfSmoothRange (k > 6 for n even, k > 10 for n odd) or
// NegativeDimension (dim X or dim Y < 0).
PGPair make_pair(int n, int k);
// Same, but accepts an empty Y (dim Y < 0). For X-side quantities such as
// poincare_X on the quadric threefold (4,1).
PGPair make_section_pair(int n, int k);

struct FiberClasses {
  LPoly f1;  // fibre of Q over P(U^perp) \ Y: a smooth hyperplane section
  LPoly f2;  // fibre over Y: the section by a form of corank 2 (n even) or 3 (n odd)
};

FiberClasses fiber_classes(int n);

// [Q] = [Gr(2,n)][P^{k-2}] + [X] L^{k-1}, realized.
TPoly q_class_grassmannian_side(const PGPair& pair, const TPoly& poincare_x);
// [Q] = [P^{k-1}][H(2,n)] + [Y] L^s, realized.
TPoly q_class_pfaffian_side(const PGPair& pair, const TPoly& poincare_y);

// Solves [Y] L^s = [X] L^{k-1} + [P^{k-2}][Gr] - [P^{k-1}][H] for P(Y).
// When dim Y < 0 the result must vanish.
TPoly derive_poincare_Y(const PGPair& pair, const TPoly& poincare_x);

// Betti numbers of X: ambient ones off the middle, middle one from chi_top.
TPoly poincare_X(const PGPair& pair);

mpz_class variable_betti(const PGPair& pair);

// n even and k in {2,4}, or n odd and k in {2,4,6}.
bool in_cork02_range(int n, int k);
// dim H_var(X) = b_{dim Y}(Y) - 1. Throws NotInLemmaRange outside the list.
bool check_cork02(const PGPair& pair);

// [P^{n-1}][H(2,n)] == [P^{n-2}][Gr(2,n)] for odd n >= 5.
bool check_l_equivalence(int n);

enum class NLStatus { Satisfied, Unknown };
enum class MainTheoremStatus { Applies, NotCovered, HypothesisFails };
// How "nonzero transcendental cohomology" is decided from variable_betti > 0.
enum class TranscendentalBasis { Unconditional, ConditionalOnNL };

std::string_view to_string(NLStatus s);
std::string_view to_string(MainTheoremStatus s);
std::string_view to_string(TranscendentalBasis b);

NLStatus nl_status(int n, int k);
NLStatus nl_status(const PGPair& pair);
MainTheoremStatus main_theorem_status(const PGPair& pair);
// Odd k: X has odd dimension and all middle cohomology is transcendental.
TranscendentalBasis transcendental_basis(const PGPair& pair);

// Smooth degree-d hypersurface in P^N, computed on P^N alone.
mpz_class hypersurface_euler(int degree, int ambient_dim);
TPoly hypersurface_poincare_oracle(int degree, int ambient_dim);

// P(X_w) = P(S) t^{2(r-1)} + P(U) P(P^{r-2}) for the hyperplane-type divisor
// X_w in P(E), E of rank r over U with zero locus S.
TPoly cayley_trick_class(const LPoly& u_class, const TPoly& s_poincare, const TPoly& u_poincare, int r);

// ---------------------------------------------------------------------------
// Reports

enum class CheckStatus { Pass, Fail, Skip };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  std::string diagnostic;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Something the tool noticed that is not a failed check, e.g. a published
// decomposition whose Betti count disagrees with the computed one.
struct Finding {
  std::string id;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct PairReport {
  PGPair pair;
  TPoly poincare_x;
  TPoly poincare_y;
  mpz_class variable_betti;
  HodgeSummary hodge;
  NLStatus nl_status = NLStatus::Unknown;
  MainTheoremStatus main_theorem = MainTheoremStatus::NotCovered;
  TranscendentalBasis main_theorem_basis = TranscendentalBasis::Unconditional;
  std::vector<CheckResult> checks;
  std::vector<Finding> findings;

  bool all_passed() const;
};

// Identifiers of every check build_pair_report can run, in report order.
const std::vector<std::string>& registered_checks();

// Runs the selected checks (all when `selected` is empty).
PairReport build_pair_report(const PGPair& pair, const std::set<std::string>& selected = {});

}  // namespace pfgr
