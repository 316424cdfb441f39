#include "pfgr/pfaffian.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pfgr/schubert.hpp"

namespace pfgr {

namespace {

std::string pair_label(int n, int k) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

unsigned u(int x) { return static_cast<unsigned>(x); }

// [P^m] with [P^{-1}] = 0.
LPoly projective_or_empty(int m) { return m < 0 ? LPoly{} : projective_class(u(m)); }

SignedTPoly t_power(int e) { return SignedTPoly::monomial(u(2 * e)); }

}  // namespace

namespace {

PGPair build_pair(int n, int k, bool allow_empty_y) {
  if (n < 4) throw Error(ErrorKind::InvalidParameter, "n must be >= 4, got " + std::to_string(n));
  if (k < 1) throw Error(ErrorKind::InvalidParameter, "k must be >= 1, got " + std::to_string(k));
  const bool even = n % 2 == 0;
  const int k_max = even ? 6 : 10;
  if (k > k_max)
    throw Error(ErrorKind::OutOfSmoothRange,
                pair_label(n, k) + ": Y meets the singular locus of Pf for k > " + std::to_string(k_max));
  PGPair p;
  p.n = n;
  p.k = k;
  p.dim_x = 2 * (n - 2) - k;
  p.dim_y = even ? k - 2 : k - 4;
  p.s = twist_exponent(n);
  p.smooth_range = true;
  if (p.dim_x < 0 || (p.dim_y < 0 && !allow_empty_y))
    throw Error(ErrorKind::NegativeDimension,
                pair_label(n, k) + ": dim X = " + std::to_string(p.dim_x) + ", dim Y = " + std::to_string(p.dim_y));
  p.m = (p.dim_x - p.dim_y) / 2;
  if (p.m != p.s - k + 1)
    throw Error(ErrorKind::IdentityFailure, pair_label(n, k) + ": m != s - k + 1");
  return p;
}

}  // namespace

PGPair make_pair(int n, int k) { return build_pair(n, k, false); }

PGPair make_section_pair(int n, int k) { return build_pair(n, k, true); }

FiberClasses fiber_classes(int n) {
  FiberClasses f;
  f.f1 = hyperplane_section_class(n);
  f.f2 = f.f1 + LPoly::monomial(u(twist_exponent(n)));
  return f;
}

TPoly q_class_grassmannian_side(const PGPair& pair, const TPoly& poincare_x) {
  const TPoly gr = to_poincare(grassmannian_class(pair.n) * projective_or_empty(pair.k - 2));
  return gr + poincare_x.shifted(u(2 * (pair.k - 1)));
}

TPoly q_class_pfaffian_side(const PGPair& pair, const TPoly& poincare_y) {
  const TPoly h = to_poincare(projective_or_empty(pair.k - 1) * hyperplane_section_class(pair.n));
  return h + poincare_y.shifted(u(2 * pair.s));
}

TPoly derive_poincare_Y(const PGPair& pair, const TPoly& poincare_x) {
  if (!is_palindromic(poincare_x, u(pair.dim_x)))
    throw Error(ErrorKind::InvalidParameter,
                pair_label(pair.n, pair.k) + ": P_X = " + poincare_x.to_string() + " is not palindromic about " +
                    std::to_string(pair.dim_x));
  const LPoly tate = projective_or_empty(pair.k - 2) * grassmannian_class(pair.n) -
                     projective_or_empty(pair.k - 1) * hyperplane_section_class(pair.n);
  const SignedTPoly rhs = poincare_x.poly().shifted(u(2 * (pair.k - 1))) + realize_signed(tate);
  TPoly y(div_exact(rhs, t_power(pair.s)));
  if (pair.dim_y < 0) {
    if (!y.is_zero())
      throw Error(ErrorKind::IdentityFailure,
                  pair_label(pair.n, pair.k) + ": Y is empty but the relation gives P_Y = " + y.to_string());
    return y;
  }
  if (!is_palindromic(y, u(pair.dim_y)) || y.degree() != 2 * pair.dim_y)
    throw Error(ErrorKind::IdentityFailure,
                pair_label(pair.n, pair.k) + ": derived P_Y = " + y.to_string() + " is not a Poincare polynomial of dimension " +
                    std::to_string(pair.dim_y));
  return y;
}

TPoly poincare_X(const PGPair& pair) {
  const int d = pair.dim_x;
  std::vector<mpz_class> b(u(2 * d + 1));
  for (int j = 0; j < d; ++j) {
    b[u(j)] = betti(pair.n, j);
    b[u(2 * d - j)] = b[u(j)];
  }
  const mpz_class chi = euler_characteristic_ci(pair.n, pair.k);
  mpz_class rest = 0;
  for (int j = 0; j <= 2 * d; ++j)
    if (j != d) rest += (j % 2 == 0 ? 1 : -1) * b[u(j)];
  const mpz_class middle = (d % 2 == 0) ? chi - rest : rest - chi;
  const bool ok = middle >= 0 && (d % 2 == 0 ? middle >= betti(pair.n, d) : middle % 2 == 0);
  if (!ok)
    throw Error(ErrorKind::InconsistentEuler,
                pair_label(pair.n, pair.k) + ": chi = " + chi.get_str() + " forces b_" + std::to_string(d) + " = " +
                    middle.get_str());
  b[u(d)] = middle;
  return TPoly::from_dense(b);
}

mpz_class variable_betti(const PGPair& pair) {
  return poincare_X(pair).coefficient(u(pair.dim_x)) - betti(pair.n, pair.dim_x);
}

bool in_cork02_range(int n, int k) {
  if (n % 2 == 0) return k == 2 || k == 4;
  return k == 2 || k == 4 || k == 6;
}

bool check_cork02(const PGPair& pair) {
  if (!in_cork02_range(pair.n, pair.k))
    throw Error(ErrorKind::NotInLemmaRange, pair_label(pair.n, pair.k) + " is outside the corank-2 (n,k) list");
  const TPoly y = derive_poincare_Y(pair, poincare_X(pair));
  return variable_betti(pair) == y.coefficient(u(pair.dim_y)) - 1;
}

bool check_l_equivalence(int n) {
  if (n % 2 == 0 || n < 5)
    throw Error(ErrorKind::InvalidParameter, "L-equivalence identity needs odd n >= 5, got " + std::to_string(n));
  return projective_class(u(n - 1)) * hyperplane_section_class(n) ==
         projective_class(u(n - 2)) * grassmannian_class(n);
}

std::string_view to_string(NLStatus s) { return s == NLStatus::Satisfied ? "satisfied" : "unknown"; }

std::string_view to_string(MainTheoremStatus s) {
  switch (s) {
    case MainTheoremStatus::Applies: return "applies";
    case MainTheoremStatus::NotCovered: return "not_covered";
    case MainTheoremStatus::HypothesisFails: return "hypothesis_fails";
  }
  return "?";
}

std::string_view to_string(TranscendentalBasis b) {
  return b == TranscendentalBasis::Unconditional ? "unconditional" : "conditional_on_nl";
}

NLStatus nl_status(int n, int k) {
  const bool listed = k % 2 == 1 || (n % 2 == 0 && n >= 8 && k == 4) || (n % 2 == 1 && n >= 7 && k == 6) ||
                      (n == 6 && k == 6) || (n == 7 && k == 8);
  return listed ? NLStatus::Satisfied : NLStatus::Unknown;
}

NLStatus nl_status(const PGPair& pair) { return nl_status(pair.n, pair.k); }

MainTheoremStatus main_theorem_status(const PGPair& pair) {
  if (variable_betti(pair) == 0) return MainTheoremStatus::HypothesisFails;
  const bool range = pair.k <= 6 || (pair.n == 7 && pair.k == 7);
  if (range && nl_status(pair) == NLStatus::Satisfied) return MainTheoremStatus::Applies;
  return MainTheoremStatus::NotCovered;
}

TranscendentalBasis transcendental_basis(const PGPair& pair) {
  return pair.k % 2 == 1 ? TranscendentalBasis::Unconditional : TranscendentalBasis::ConditionalOnNL;
}

mpz_class hypersurface_euler(int degree, int ambient_dim) {
  if (degree < 1 || ambient_dim < 2)
    throw Error(ErrorKind::InvalidParameter, "hypersurface needs degree >= 1 and ambient dimension >= 2");
  // Coefficient of h^{N-1} in (1+h)^{N+1} / (1+dh).
  const unsigned top = u(ambient_dim - 1);
  mpz_class coeff = 0, binom, d_pow;
  for (unsigned i = 0; i <= top; ++i) {
    mpz_bin_uiui(binom.get_mpz_t(), u(ambient_dim + 1), i);
    mpz_pow_ui(d_pow.get_mpz_t(), mpz_class(-degree).get_mpz_t(), top - i);
    coeff += binom * d_pow;
  }
  return degree * coeff;
}

TPoly hypersurface_poincare_oracle(int degree, int ambient_dim) {
  const mpz_class chi = hypersurface_euler(degree, ambient_dim);
  const int dim = ambient_dim - 1;
  std::vector<mpz_class> b(u(2 * dim + 1));
  mpz_class rest = 0;
  for (int j = 0; j <= dim; ++j)
    if (2 * j != dim) {
      b[u(2 * j)] = 1;
      rest += 1;
    }
  b[u(dim)] = dim % 2 == 0 ? chi - rest : rest - chi;
  return TPoly::from_dense(b);
}

TPoly cayley_trick_class(const LPoly& u_class, const TPoly& s_poincare, const TPoly& u_poincare, int r) {
  if (r < 2) throw Error(ErrorKind::InvalidParameter, "bundle rank must be >= 2, got " + std::to_string(r));
  const int dim_u = u_class.degree();
  if (dim_u < 0) throw Error(ErrorKind::InvalidParameter, "base class is zero");
  if (to_poincare(u_class) != u_poincare || !is_palindromic(u_poincare, u(dim_u)))
    throw Error(ErrorKind::InvalidParameter, "P(U) = " + u_poincare.to_string() + " does not realize a smooth base of class " +
                                                 u_class.to_string());
  const TPoly result = s_poincare.shifted(u(2 * (r - 1))) + u_poincare * to_poincare(projective_class(u(r - 2)));
  const int dim_s = dim_u - r;
  const bool s_ok = dim_s < 0 ? s_poincare.is_zero() : is_palindromic(s_poincare, u(dim_s));
  const int dim_x = dim_u + r - 2;
  if (!s_ok || !is_palindromic(result, u(dim_x)))
    throw Error(ErrorKind::InvalidParameter,
                "inconsistent Cayley data: P(S) = " + s_poincare.to_string() + " for expected dim S = " +
                    std::to_string(dim_s) + "; P(X_w) = " + result.to_string() + " is not palindromic about " +
                    std::to_string(dim_x));
  return result;
}

// ---------------------------------------------------------------------------

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

bool PairReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

namespace {

struct CheckContext {
  const PGPair& pair;
  const TPoly& px;
  const TPoly& py;
  const HodgeSummary& hodge;
};

using CheckFn = std::function<CheckResult(const CheckContext&)>;

CheckResult verdict(bool ok, std::string diagnostic) {
  return {"", ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "" : std::move(diagnostic)};
}

CheckResult skipped(std::string why) { return {"", CheckStatus::Skip, std::move(why)}; }

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"grassmannian_class",
       [](const CheckContext& c) {
         const LPoly cells = grassmannian_class(c.pair.n, GrassmannianMethod::Cells);
         const LPoly product = grassmannian_class(c.pair.n, GrassmannianMethod::ProductFormula);
         return verdict(cells == product, "cells " + cells.to_string() + " vs product " + product.to_string());
       }},
      {"hyperplane_class",
       [](const CheckContext& c) {
         const LPoly h = hyperplane_section_class(c.pair.n);
         const LPoly strata = isotropic_section_class(c.pair.n, c.pair.n % 2);
         return verdict(h == strata, "product " + h.to_string() + " vs stratification " + strata.to_string());
       }},
      {"fiber_classes",
       [](const CheckContext& c) {
         const auto f = fiber_classes(c.pair.n);
         const LPoly f2 = isotropic_section_class(c.pair.n, c.pair.n % 2 + 2);
         return verdict(f.f2 == f2, "F1 + L^s = " + f.f2.to_string() + " vs stratified F2 = " + f2.to_string());
       }},
      {"theorem_k0",
       [](const CheckContext& c) {
         const TPoly easy = q_class_grassmannian_side(c.pair, c.px);
         const TPoly hard = q_class_pfaffian_side(c.pair, c.py);
         return verdict(easy == hard, "[Q] from Gr side " + easy.to_string() + " vs Pf side " + hard.to_string());
       }},
      {"poincare_y",
       [](const CheckContext& c) {
         const mpz_class b0 = c.py.coefficient(0);
         if (c.pair.dim_y == 0) {
           // Y is deg(Pf) reduced points.
           if (c.pair.n % 2 == 0)
             return verdict(b0 == c.pair.n / 2, "Y should be n/2 points, got " + b0.get_str());
           return verdict(b0 >= 1, "Y should be nonempty, got " + b0.get_str());
         }
         const mpz_class top = c.py.coefficient(u(2 * c.pair.dim_y));
         return verdict(b0 == 1 && top == 1, "P_Y = " + c.py.to_string() + " is not connected");
       }},
      {"poincare_x",
       [](const CheckContext& c) {
         const bool ok = is_palindromic(c.px, u(c.pair.dim_x)) && (c.pair.dim_x == 0 || c.px.coefficient(0) == 1) &&
                         c.px.coefficient(u(c.pair.dim_x)) == c.hodge.middle_betti;
         return verdict(ok, "P_X = " + c.px.to_string() + ", Hodge middle Betti " + c.hodge.middle_betti.get_str());
       }},
      {"hodge_symmetry",
       [](const CheckContext& c) {
         const auto& h = c.hodge.middle_hodge;
         bool ok = std::equal(h.begin(), h.end(), h.rbegin()) && c.hodge.chi_y.evaluate(-1) == c.hodge.euler_char;
         return verdict(ok, "middle Hodge numbers not symmetric or chi_y(-1) != chi");
       }},
      {"l_equivalence",
       [](const CheckContext& c) {
         if (c.pair.n % 2 == 0) return skipped("n even");
         return verdict(check_l_equivalence(c.pair.n), "[P^{n-1}][H] != [P^{n-2}][Gr]");
       }},
      {"cork0",
       [](const CheckContext& c) {
         if (c.pair.n != c.pair.k || c.pair.n % 2 == 0) return skipped("needs n = k odd");
         return verdict(c.py == c.px, "P_Y = " + c.py.to_string() + " differs from P_X");
       }},
      {"cork02",
       [](const CheckContext& c) {
         if (!in_cork02_range(c.pair.n, c.pair.k)) return skipped("outside the corank-2 (n,k) list");
         return verdict(check_cork02(c.pair), "variable Betti != b_{dim Y}(Y) - 1");
       }},
      {"hypersurface_oracle",
       [](const CheckContext& c) {
         if (c.pair.n % 2 == 1 || c.pair.dim_y < 1) return skipped("Y is not a hypersurface of positive dimension");
         const TPoly oracle = hypersurface_poincare_oracle(c.pair.n / 2, c.pair.k - 1);
         return verdict(oracle == c.py, "oracle " + oracle.to_string() + " vs derived " + c.py.to_string());
       }},
  };
  return table;
}

std::string betti_vector(const TPoly& p, int top) {
  std::ostringstream os;
  os << "(";
  for (int j = 0; j <= top; ++j) os << (j ? "," : "") << p.coefficient(u(j)).get_str();
  os << ")";
  return os.str();
}

void add_findings(PairReport& r) {
  const int n = r.pair.n;
  if (grassmannian_class(n) - LPoly::monomial(u(2 * n - 4)) != fiber_classes(n).f2) {
    r.findings.push_back({"schubert_divisor_fiber",
                          "[Gr(2," + std::to_string(n) + ")] - L^" + std::to_string(2 * n - 4) + " = " +
                              (grassmannian_class(n) - LPoly::monomial(u(2 * n - 4))).to_string() +
                              " differs from [F2] = [H] + L^s = " + fiber_classes(n).f2.to_string() +
                              "; the corank-2 fibre is not a Schubert divisor for n >= 6"});
  }
  if (n == 6 && r.pair.k == 6) {
    // h(S)(-1) + 1 + 1(-4) with S the K3 surface X.
    const TPoly literal = r.poincare_x.shifted(2) + TPoly{1} + TPoly::from_dense({0, 0, 0, 0, 0, 0, 0, 0, 1});
    if (literal != r.poincare_y)
      r.findings.push_back({"pfaffian_cubic_decomposition",
                            "Betti count of h(X)(-1) + 1 + 1(-4) is " + betti_vector(literal, 8) +
                                " but the derived cubic fourfold has " + betti_vector(r.poincare_y, 8) +
                                "; a Tate summand 1(-2) is missing from the decomposition"});
  }
}

}  // namespace

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : check_table()) out.push_back(name);
    return out;
  }();
  return names;
}

PairReport build_pair_report(const PGPair& pair, const std::set<std::string>& selected) {
  for (const auto& name : selected)
    if (std::find(registered_checks().begin(), registered_checks().end(), name) == registered_checks().end())
      throw Error(ErrorKind::InvalidParameter, "unknown check '" + name + "'");

  PairReport r;
  r.pair = pair;
  r.poincare_x = poincare_X(pair);
  r.poincare_y = derive_poincare_Y(pair, r.poincare_x);
  r.variable_betti = r.poincare_x.coefficient(u(pair.dim_x)) - betti(pair.n, pair.dim_x);
  r.hodge = middle_hodge(pair.n, pair.k);
  r.nl_status = nl_status(pair);
  r.main_theorem = main_theorem_status(pair);
  r.main_theorem_basis = transcendental_basis(pair);

  const CheckContext ctx{pair, r.poincare_x, r.poincare_y, r.hodge};
  for (const auto& [name, fn] : check_table()) {
    if (!selected.empty() && !selected.count(name)) continue;
    CheckResult res;
    try {
      res = fn(ctx);
    } catch (const Error& e) {
      res = {"", CheckStatus::Fail, std::string(to_string(e.kind())) + ": " + e.what()};
    }
    res.name = name;
    r.checks.push_back(std::move(res));
  }
  add_findings(r);
  return r;
}

}  // namespace pfgr
