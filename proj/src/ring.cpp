#include "pfgr/ring.hpp"

namespace pfgr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonExactDivision: return "NonExactDivision";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorKind::InconsistentEuler: return "InconsistentEuler";
    case ErrorKind::IdentityFailure: return "IdentityFailure";
    case ErrorKind::OutOfSmoothRange: return "OutOfSmoothRange";
    case ErrorKind::NegativeDimension: return "NegativeDimension";
    case ErrorKind::NotInLemmaRange: return "NotInLemmaRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EvalError: return "EvalError";
    case ErrorKind::CacheError: return "CacheError";
  }
  return "Unknown";
}

bool is_internal_inconsistency(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIntegralGenus:
    case ErrorKind::InconsistentEuler:
    case ErrorKind::IdentityFailure:
    case ErrorKind::NonExactDivision:
    case ErrorKind::NegativeCoefficient:
      return true;
    default:
      return false;
  }
}

LPoly lpoly_mul(const LPoly& a, const LPoly& b) { return a * b; }

LPoly lpoly_div_exact(const LPoly& a, const LPoly& b) { return div_exact(a, b); }

LPoly projective_class(unsigned n) {
  LPoly p;
  for (unsigned j = 0; j <= n; ++j) p.set(j, 1);
  return p;
}

SignedTPoly realize_signed(const LPoly& a) {
  SignedTPoly p;
  for (const auto& [d, c] : a.terms()) p.set(2 * d, c);
  return p;
}

TPoly to_poincare(const LPoly& a) {
  if (!a.all_nonnegative())
    throw Error(ErrorKind::NegativeCoefficient,
                "class " + a.to_string() + " has no Poincare realization");
  return TPoly(realize_signed(a));
}

bool is_palindromic(const SignedTPoly& p, unsigned d) {
  if (p.degree() > static_cast<int>(2 * d)) return false;
  for (unsigned j = 0; j <= 2 * d; ++j)
    if (p.coefficient(j) != p.coefficient(2 * d - j)) return false;
  return true;
}

bool is_palindromic(const TPoly& p, unsigned d) { return is_palindromic(p.poly(), d); }

}  // namespace pfgr
