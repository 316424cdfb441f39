#include "pfgr/chern.hpp"

#include <map>

namespace pfgr {

namespace {

// Truncated power series over Q, coefficient j of x^j.
using Series = std::vector<mpq_class>;

Series series_mul(const Series& a, const Series& b, std::size_t len) {
  Series out(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_inverse(const Series& a, std::size_t len) {
  Series out(len);
  out[0] = 1 / a[0];
  for (std::size_t j = 1; j < len; ++j) {
    mpq_class s = 0;
    for (std::size_t i = 1; i <= j && i < a.size(); ++i) s += a[i] * out[j - i];
    out[j] = -s / a[0];
  }
  return out;
}

// log of a series with constant term 1, as the antiderivative of a'/a.
Series series_log(const Series& a, std::size_t len) {
  Series deriv(len);
  for (std::size_t j = 1; j < a.size() && j <= len; ++j) deriv[j - 1] = a[j] * static_cast<long>(j);
  Series q = series_mul(deriv, series_inverse(a, len), len);
  Series out(len);
  for (std::size_t j = 1; j < len; ++j) out[j] = q[j - 1] / static_cast<long>(j);
  return out;
}

Series series_pow(const Series& a, int e, std::size_t len) {
  Series base = e < 0 ? series_inverse(a, len) : a;
  Series out(len);
  out[0] = 1;
  for (int i = 0; i < std::abs(e); ++i) out = series_mul(out, base, len);
  return out;
}

// Coefficients of a / (1 - e^{-a}).
Series todd_series(std::size_t len) {
  Series f(len);  // (1 - e^{-a}) / a = sum (-1)^j a^j / (j+1)!
  mpz_class fact = 1;
  for (std::size_t j = 0; j < len; ++j) {
    fact *= static_cast<unsigned long>(j + 1);
    f[j] = mpq_class(j % 2 == 0 ? 1 : -1, 1) / mpq_class(fact);
  }
  return series_inverse(f, len);
}

// Normalized Hirzebruch series x(1+y)/(1 - e^{-x(1+y)}) - x y, constant term 1.
Series chi_y_series(const mpq_class& y, std::size_t len) {
  const Series beta = todd_series(len);
  Series q(len);
  mpq_class scale = 1;
  for (std::size_t j = 0; j < len; ++j) {
    q[j] = beta[j] * scale;
    scale *= 1 + y;
  }
  if (len > 1) q[1] -= y;
  return q;
}

mpz_class require_integer(const mpq_class& v, ErrorKind kind, const std::string& what) {
  if (v.get_den() != 1) throw Error(kind, what + " is not integral: " + v.get_str());
  return v.get_num();
}

// Coefficients of the interpolating polynomial through (i, values[i]).
std::vector<mpq_class> interpolate(const std::vector<mpq_class>& values) {
  const std::size_t m = values.size();
  std::vector<mpq_class> dd(values);
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(level);
  // Horner on the Newton form with nodes 0,1,2,...
  std::vector<mpq_class> poly{dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * static_cast<long>(i);
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

ChowClass ChernData::c(int i) const {
  if (classes.empty()) throw Error(ErrorKind::InvalidParameter, "empty Chern data");
  const int n = classes.front().ambient_n();
  if (i == 0) return ChowClass::one(n);
  if (i < 0 || i > rank) return ChowClass::zero(n);
  return classes[static_cast<std::size_t>(i - 1)];
}

ChowClass ChernData::total() const {
  ChowClass out = c(0);
  for (const auto& ci : classes) out += ci;
  return out;
}

TautologicalBundles tautological_chern(const ChowRing& ring) {
  const int n = ring.ambient_n();
  const int dim = 2 * (n - 2);
  const ChowClass s1 = ChowClass::special(n, 1);
  const ChowClass s11 = ChowClass::schubert(n, {1, 1});

  TautologicalBundles out;
  out.s_dual.rank = 2;
  out.s_dual.classes = {s1, s11};

  // c(Q) = c(S)^{-1} = sum_m (sigma_1 - sigma_{1,1})^m
  const ChowClass u = s1 - s11;
  ChowClass inverse = ChowClass::one(n);
  ChowClass term = ChowClass::one(n);
  for (int m = 1; m <= dim; ++m) {
    term = ring.multiply(term, u);
    inverse += term;
  }
  out.q.rank = n - 2;
  for (int i = 1; i <= n - 2; ++i) out.q.classes.push_back(inverse.component(i));
  for (int i = n - 1; i <= dim; ++i)
    if (!inverse.component(i).is_zero())
      throw Error(ErrorKind::IdentityFailure,
                  "c(S)^{-1} has a nonzero component of degree " + std::to_string(i) +
                      " above rank(Q)");
  return out;
}

TautologicalBundles tautological_chern(int n) { return tautological_chern(ChowRing::standard(n)); }

std::vector<ChowClass> power_sums(const ChernData& e, int up_to, const ChowRing& ring) {
  const int n = ring.ambient_n();
  std::vector<ChowClass> p;
  p.reserve(static_cast<std::size_t>(up_to + 1));
  p.push_back(mpq_class(e.rank) * ChowClass::one(n));
  for (int j = 1; j <= up_to; ++j) {
    ChowClass pj = mpq_class(j % 2 == 1 ? j : -j) * e.c(j);
    for (int i = 1; i < j && i <= e.rank; ++i) {
      const ChowClass term = ring.multiply(e.c(i), p[static_cast<std::size_t>(j - i)]);
      if (i % 2 == 1)
        pj += term;
      else
        pj -= term;
    }
    p.push_back(std::move(pj));
  }
  return p;
}

ChernData from_power_sums(int rank, const std::vector<ChowClass>& p, const ChowRing& ring) {
  const int n = ring.ambient_n();
  const int dim = 2 * (n - 2);
  const int top = std::min(rank, dim);
  if (static_cast<int>(p.size()) <= top)
    throw Error(ErrorKind::InvalidParameter, "not enough power sums for the requested rank");
  std::vector<ChowClass> e{ChowClass::one(n)};
  for (int j = 1; j <= top; ++j) {
    ChowClass acc = ChowClass::zero(n);
    for (int i = 1; i <= j; ++i) {
      const ChowClass term = ring.multiply(e[static_cast<std::size_t>(j - i)], p[static_cast<std::size_t>(i)]);
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    acc *= mpq_class(1, j);
    e.push_back(std::move(acc));
  }
  ChernData out;
  out.rank = rank;
  for (int j = 1; j <= rank; ++j)
    out.classes.push_back(j <= top ? e[static_cast<std::size_t>(j)] : ChowClass::zero(n));
  return out;
}

ChernData tensor_chern(const ChernData& e, const ChernData& f, const ChowRing& ring) {
  if (e.classes.empty() || f.classes.empty())
    throw Error(ErrorKind::InvalidParameter, "tensor product of empty Chern data");
  const int n = ring.ambient_n();
  if (e.classes.front().ambient_n() != n || f.classes.front().ambient_n() != n)
    throw Error(ErrorKind::AmbientMismatch, "tensor factors live on different Grassmannians");
  const int rank = e.rank * f.rank;
  const int up = std::min(rank, 2 * (n - 2));
  const auto pe = power_sums(e, up, ring);
  const auto pf = power_sums(f, up, ring);

  // p_j(E ⊗ F) = sum_m binom(j,m) p_m(E) p_{j-m}(F)
  std::vector<ChowClass> pt;
  pt.reserve(static_cast<std::size_t>(up + 1));
  for (int j = 0; j <= up; ++j) {
    ChowClass acc = ChowClass::zero(n);
    mpz_class binom = 1;
    for (int m = 0; m <= j; ++m) {
      acc += mpq_class(binom) * ring.multiply(pe[static_cast<std::size_t>(m)], pf[static_cast<std::size_t>(j - m)]);
      binom = binom * (j - m) / (m + 1);
    }
    pt.push_back(std::move(acc));
  }
  return from_power_sums(rank, pt, ring);
}

ChernData tensor_chern(const ChernData& e, const ChernData& f) {
  if (e.classes.empty()) throw Error(ErrorKind::InvalidParameter, "empty Chern data");
  return tensor_chern(e, f, ChowRing::standard(e.classes.front().ambient_n()));
}

ChernData tangent_chern(const ChowRing& ring) {
  const auto taut = tautological_chern(ring);
  return tensor_chern(taut.s_dual, taut.q, ring);
}

// ---------------------------------------------------------------------------
// SectionCalculus

namespace {

// ∫ x * sigma_1^m for m = 0..dim, given the powers of sigma_1.
std::vector<mpq_class> integrals_against_powers(const ChowClass& x, const std::vector<ChowClass>& s1_powers) {
  const int n = x.ambient_n();
  const int w = n - 2;
  std::vector<mpq_class> out;
  out.reserve(s1_powers.size());
  for (const auto& pw : s1_powers) {
    // ∫ sigma_{a,b} * sigma_{c,d} = 1 iff (c,d) = (w-b, w-a).
    mpq_class acc = 0;
    for (const auto& [lam, coeff] : x.support()) acc += coeff * pw.coefficient({w - lam.b, w - lam.a});
    out.push_back(acc);
  }
  return out;
}

}  // namespace

SectionCalculus::SectionCalculus(ChowRing ring) : ring_(std::move(ring)), dim_(2 * (ring_.ambient_n() - 2)) {
  const int n = ring_.ambient_n();
  const ChernData tangent = tangent_chern(ring_);
  s1_powers_.push_back(ChowClass::one(n));
  const ChowClass s1 = ChowClass::special(n, 1);
  for (int m = 1; m <= dim_; ++m) s1_powers_.push_back(ring_.multiply(s1_powers_.back(), s1));
  chern_integrals_ = integrals_against_powers(tangent.total(), s1_powers_);
  tangent_power_sums_ = power_sums(tangent, dim_, ring_);
  genus_integrals_.resize(static_cast<std::size_t>(dim_ + 1));
}

void SectionCalculus::require_k(int k) const {
  if (k < 0 || k > dim_)
    throw Error(ErrorKind::InvalidParameter,
                "need 0 <= k <= " + std::to_string(dim_) + " for Gr(2," + std::to_string(ambient_n()) +
                    "), got k = " + std::to_string(k));
}

mpz_class SectionCalculus::euler_characteristic(int k) const {
  require_k(k);
  const std::size_t len = static_cast<std::size_t>(dim_ - k + 1);
  // c(T_X) = c(T_Gr) (1 + sigma_1)^{-k}, integrated against sigma_1^k.
  const Series normal = series_pow(Series{1, 1}, -k, len);
  mpq_class acc = 0;
  for (std::size_t j = 0; j < len; ++j) acc += normal[j] * chern_integrals_[k + j];
  return require_integer(acc, ErrorKind::IdentityFailure, "Euler characteristic");
}

const std::vector<mpq_class>& SectionCalculus::genus_integrals(int y) const {
  std::lock_guard lock(genus_mutex_);
  auto& slot = genus_integrals_[static_cast<std::size_t>(y)];
  if (slot) return *slot;

  const int n = ambient_n();
  const std::size_t len = static_cast<std::size_t>(dim_ + 1);
  const Series logq = series_log(chi_y_series(y, len), len);

  const auto& p = tangent_power_sums_;
  ChowClass z = ChowClass::zero(n);
  for (int j = 1; j <= dim_; ++j) z += logq[j] * p[static_cast<std::size_t>(j)];

  // Genus class exp(z); z is nilpotent of order dim+1.
  ChowClass genus = ChowClass::one(n);
  ChowClass term = ChowClass::one(n);
  for (int m = 1; m <= dim_; ++m) {
    term = ring_.multiply(term, z);
    term *= mpq_class(1, m);
    genus += term;
  }

  slot = std::make_unique<std::vector<mpq_class>>(integrals_against_powers(genus, s1_powers_));
  return *slot;
}

mpq_class SectionCalculus::chi_y_at(int k, int y) const {
  require_k(k);
  const auto& integrals = genus_integrals(y);
  const std::size_t len = static_cast<std::size_t>(dim_ - k + 1);
  const Series normal = series_pow(chi_y_series(y, len), -k, len);
  mpq_class acc = 0;
  for (std::size_t j = 0; j < len; ++j) acc += normal[j] * integrals[k + j];
  return acc;
}

YPoly SectionCalculus::chi_y(int k) const {
  require_k(k);
  const int dim_x = dim_ - k;
  std::vector<mpq_class> values;
  for (int y = 0; y <= dim_x; ++y) values.push_back(chi_y_at(k, y));
  const auto coeffs = interpolate(values);
  YPoly out;
  for (std::size_t p = 0; p < coeffs.size(); ++p)
    out.set(static_cast<unsigned>(p),
            require_integer(coeffs[p], ErrorKind::NonIntegralGenus, "chi_y coefficient of y^" + std::to_string(p)));
  // One extra node guards the degree bound.
  if (dim_x < dim_ && out.evaluate(dim_x + 1) != chi_y_at(k, dim_x + 1))
    throw Error(ErrorKind::IdentityFailure, "chi_y genus exceeds degree dim X");
  return out;
}

HodgeSummary SectionCalculus::middle_hodge(int k) const {
  const int n = ambient_n();
  HodgeSummary h;
  h.dimension = dim_ - k;
  const int d = h.dimension;
  h.euler_char = euler_characteristic(k);
  h.chi_y = chi_y(k);
  if (h.chi_y.evaluate(-1) != h.euler_char)
    throw Error(ErrorKind::IdentityFailure, "chi_y(-1) = " + h.chi_y.evaluate(-1).get_str() +
                                                " differs from the Euler characteristic " + h.euler_char.get_str());
  h.middle_betti = 0;
  for (int p = 0; p <= d; ++p) {
    const mpz_class chi_p = h.chi_y.coefficient(static_cast<unsigned>(p));
    mpz_class hpq;
    if (2 * p == d) {
      hpq = p % 2 == 0 ? chi_p : mpz_class(-chi_p);
    } else {
      // Off the middle row only h^{p,p} survives and equals b_{2p} of Gr(2,n)
      // (weak Lefschetz below the middle, duality above).
      const long tate = 2 * p < d ? betti(n, 2 * p) : betti(n, 2 * d - 2 * p);
      mpz_class rest = chi_p - (p % 2 == 0 ? tate : -tate);
      hpq = (d - p) % 2 == 0 ? rest : mpz_class(-rest);
    }
    if (hpq < 0)
      throw Error(ErrorKind::IdentityFailure,
                  "negative Hodge number h^{" + std::to_string(p) + "," + std::to_string(d - p) + "}");
    h.middle_hodge.push_back(hpq);
    h.middle_betti += hpq;
  }
  for (int p = 0; p <= d; ++p)
    if (h.middle_hodge[static_cast<std::size_t>(p)] != h.middle_hodge[static_cast<std::size_t>(d - p)])
      throw Error(ErrorKind::IdentityFailure, "middle Hodge numbers are not symmetric");
  return h;
}

const SectionCalculus& standard_section_calculus(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<SectionCalculus>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SectionCalculus>(ChowRing::standard(n));
  return *slot;
}

mpz_class euler_characteristic_ci(int n, int k) { return standard_section_calculus(n).euler_characteristic(k); }
YPoly chi_y_ci(int n, int k) { return standard_section_calculus(n).chi_y(k); }
HodgeSummary middle_hodge(int n, int k) { return standard_section_calculus(n).middle_hodge(k); }

}  // namespace pfgr
