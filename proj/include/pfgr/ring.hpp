#pragma once

// Exact arithmetic in Z[L] (classes of cellular varieties in the Grothendieck
// ring) and for Poincare polynomials in t.

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pfgr/error.hpp"

namespace pfgr {

struct LefschetzVar {
  static constexpr const char* symbol = "L";
};
struct TVar {
  static constexpr const char* symbol = "t";
};
struct YVar {
  static constexpr const char* symbol = "y";
};

// Sparse univariate polynomial with arbitrary-precision integer coefficients.
// Zero coefficients are never stored.
template <class Var>
class Poly {
 public:
  using Terms = std::map<unsigned, mpz_class>;

  Poly() = default;

  // Dense coefficients in ascending degree order.
  Poly(std::initializer_list<long> dense) {
    unsigned d = 0;
    for (long c : dense) set(d++, mpz_class(c));
  }

  static Poly from_dense(const std::vector<mpz_class>& dense) {
    Poly p;
    for (unsigned d = 0; d < dense.size(); ++d) p.set(d, dense[d]);
    return p;
  }

  static Poly constant(const mpz_class& c) { return monomial(0, c); }

  static Poly monomial(unsigned degree, const mpz_class& c = 1) {
    Poly p;
    p.set(degree, c);
    return p;
  }

  mpz_class coefficient(unsigned degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  void set(unsigned degree, const mpz_class& c) {
    if (c == 0)
      terms_.erase(degree);
    else
      terms_[degree] = c;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
  int low_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first); }

  std::vector<mpz_class> dense() const {
    std::vector<mpz_class> out(static_cast<std::size_t>(degree() + 1));
    for (const auto& [d, c] : terms_) out[d] = c;
    return out;
  }

  mpz_class evaluate(const mpz_class& at) const {
    mpz_class acc = 0;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      unsigned next = std::next(it) == terms_.rend() ? 0 : std::next(it)->first;
      acc += it->second;
      for (unsigned i = next; i < it->first; ++i) acc *= at;
    }
    return acc;
  }

  // Value at 1: the Euler characteristic of a cellular class.
  mpz_class euler() const {
    mpz_class s = 0;
    for (const auto& [d, c] : terms_) s += c;
    return s;
  }

  bool all_nonnegative() const {
    for (const auto& [d, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  Poly shifted(unsigned by) const {
    Poly p;
    for (const auto& [d, c] : terms_) p.terms_.emplace(d + by, c);
    return p;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [d, c] : o.terms_) set(d, coefficient(d) + c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [d, c] : o.terms_) set(d, coefficient(d) - c);
    return *this;
  }
  Poly operator-() const {
    Poly p;
    for (const auto& [d, c] : terms_) p.terms_.emplace(d, -c);
    return p;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) p.terms_[da + db] += ca * cb;
    std::erase_if(p.terms_, [](const auto& kv) { return kv.second == 0; });
    return p;
  }
  friend Poly operator*(const mpz_class& s, const Poly& a) { return constant(s) * a; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
      mpz_class mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (d == 0 || mag != 1) os << mag.get_str();
      if (d > 0) {
        if (mag != 1) os << "*";
        os << Var::symbol;
        if (d > 1) os << "^" << d;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

// Quotient q with q*b == a, or ErrorKind::NonExactDivision.
template <class Var>
Poly<Var> div_exact(Poly<Var> a, const Poly<Var>& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidParameter, "division by the zero polynomial");
  const unsigned db = static_cast<unsigned>(b.degree());
  const mpz_class lead = b.coefficient(db);
  Poly<Var> q;
  while (!a.is_zero() && a.degree() >= static_cast<int>(db)) {
    const unsigned da = static_cast<unsigned>(a.degree());
    const mpz_class ca = a.coefficient(da);
    if (!mpz_divisible_p(ca.get_mpz_t(), lead.get_mpz_t())) break;
    const mpz_class factor = ca / lead;
    Poly<Var> step = Poly<Var>::monomial(da - db, factor);
    q += step;
    a -= step * b;
  }
  if (!a.is_zero())
    throw Error(ErrorKind::NonExactDivision,
                "non-exact division: remainder " + a.to_string());
  return q;
}

using LPoly = Poly<LefschetzVar>;
using YPoly = Poly<YVar>;
using SignedTPoly = Poly<TVar>;

// Poincare polynomial: all coefficients are Betti numbers, hence >= 0.
class TPoly {
 public:
  TPoly() = default;
  TPoly(std::initializer_list<long> dense) : TPoly(SignedTPoly(dense)) {}
  explicit TPoly(SignedTPoly p) : p_(std::move(p)) {
    if (!p_.all_nonnegative())
      throw Error(ErrorKind::NegativeCoefficient,
                  "Poincare polynomial with a negative coefficient: " + p_.to_string());
  }

  static TPoly from_dense(const std::vector<mpz_class>& dense) {
    return TPoly(SignedTPoly::from_dense(dense));
  }

  const SignedTPoly& poly() const { return p_; }
  mpz_class coefficient(unsigned j) const { return p_.coefficient(j); }
  int degree() const { return p_.degree(); }
  bool is_zero() const { return p_.is_zero(); }
  std::vector<mpz_class> dense() const { return p_.dense(); }
  std::string to_string() const { return p_.to_string(); }

  TPoly shifted(unsigned by) const { return TPoly(p_.shifted(by), Trusted{}); }

  friend TPoly operator+(const TPoly& a, const TPoly& b) { return TPoly(a.p_ + b.p_, Trusted{}); }
  friend TPoly operator*(const TPoly& a, const TPoly& b) { return TPoly(a.p_ * b.p_, Trusted{}); }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.p_ == b.p_; }

 private:
  struct Trusted {};
  TPoly(SignedTPoly p, Trusted) : p_(std::move(p)) {}
  SignedTPoly p_;
};

LPoly lpoly_mul(const LPoly& a, const LPoly& b);
LPoly lpoly_div_exact(const LPoly& a, const LPoly& b);

// [P^n] = 1 + L + ... + L^n.
LPoly projective_class(unsigned n);

// Realization L -> t^2. Requires nonnegative coefficients.
TPoly to_poincare(const LPoly& a);

// Same realization without the sign requirement (virtual classes).
SignedTPoly realize_signed(const LPoly& a);

// Poincare duality about complex dimension d.
bool is_palindromic(const TPoly& p, unsigned d);
bool is_palindromic(const SignedTPoly& p, unsigned d);

}  // namespace pfgr
