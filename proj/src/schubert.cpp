#include "pfgr/schubert.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace pfgr {

Partition2::Partition2(int a_, int b_) : a(a_), b(b_) {
  if (b < 0 || a < b)
    throw Error(ErrorKind::InvalidParameter,
                "not a partition: (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

std::string Partition2::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

int box_index(const Partition2& p) { return p.a * (p.a + 1) / 2 + p.b; }

std::vector<Partition2> box_partitions(int n) {
  std::vector<Partition2> out;
  out.reserve(static_cast<std::size_t>(box_size(n)));
  for (int a = 0; a <= n - 2; ++a)
    for (int b = 0; b <= a; ++b) out.emplace_back(a, b);
  return out;
}

namespace {

void require_ambient(int n) {
  if (n < 4) throw Error(ErrorKind::InvalidParameter, "Gr(2,n) needs n >= 4, got " + std::to_string(n));
}

void require_same(const ChowClass& x, const ChowClass& y) {
  if (x.ambient_n() != y.ambient_n())
    throw Error(ErrorKind::AmbientMismatch,
                "classes live on Gr(2," + std::to_string(x.ambient_n()) + ") and Gr(2," +
                    std::to_string(y.ambient_n()) + ")");
}

}  // namespace

// ---------------------------------------------------------------------------
// ChowClass

ChowClass::ChowClass(int n) : n_(n) {
  require_ambient(n);
  coeffs_.resize(static_cast<std::size_t>(box_size(n)));
}

ChowClass ChowClass::schubert(int n, Partition2 p, const mpq_class& c) {
  ChowClass x(n);
  x.set(p, c);
  return x;
}

ChowClass ChowClass::special(int n, int p) {
  ChowClass x(n);
  if (p >= 0 && p <= n - 2) x.set({p, 0}, 1);
  return x;
}

mpq_class ChowClass::coefficient(const Partition2& p) const {
  if (!p.fits(n_)) return 0;
  return coeffs_[box_index(p)];
}

void ChowClass::set(const Partition2& p, const mpq_class& c) {
  if (!p.fits(n_))
    throw Error(ErrorKind::InvalidParameter,
                "sigma" + p.to_string() + " does not fit Gr(2," + std::to_string(n_) + ")");
  mpq_class& slot = coeffs_[box_index(p)];
  slot = c;
  slot.canonicalize();
}

std::vector<std::pair<Partition2, mpq_class>> ChowClass::support() const {
  std::vector<std::pair<Partition2, mpq_class>> out;
  for (const auto& p : box_partitions(n_))
    if (coeffs_[box_index(p)] != 0) out.emplace_back(p, coeffs_[box_index(p)]);
  return out;
}

bool ChowClass::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

ChowClass ChowClass::component(int d) const {
  ChowClass out(n_);
  for (const auto& p : box_partitions(n_))
    if (p.size() == d) out.coeffs_[box_index(p)] = coeffs_[box_index(p)];
  return out;
}

ChowClass ChowClass::truncated_below(int d) const {
  ChowClass out(n_);
  for (const auto& p : box_partitions(n_))
    if (p.size() < d) out.coeffs_[box_index(p)] = coeffs_[box_index(p)];
  return out;
}

bool ChowClass::is_homogeneous(int d) const {
  for (const auto& p : box_partitions(n_))
    if (p.size() != d && coeffs_[box_index(p)] != 0) return false;
  return true;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator*=(const mpq_class& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

ChowClass ChowClass::operator-() const {
  ChowClass out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string ChowClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : support()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.get_str() << "*";
    os << "s" << p.to_string();
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Multiplication

MultiplicationTable::MultiplicationTable(int n) : n_(n), size_(box_size(n)) {
  require_ambient(n);
  products_.resize(static_cast<std::size_t>(size_) * size_);
}

void MultiplicationTable::set_product(int i, int j, std::vector<Term> terms) {
  products_[static_cast<std::size_t>(i) * size_ + j] = std::move(terms);
}

std::vector<Partition2> pieri(int n, int p, const Partition2& lambda) {
  std::vector<Partition2> out;
  if (p < 0) return out;
  const int total = lambda.size() + p;
  // Horizontal strips that keep two rows: b <= d <= a <= c <= n-2.
  for (int d = lambda.b; d <= lambda.a; ++d) {
    const int c = total - d;
    if (c < lambda.a || c > n - 2 || c < d) continue;
    out.emplace_back(c, d);
  }
  return out;
}

namespace {

using Accum = std::map<int, long>;

void add_pieri(int n, int p, const Partition2& lambda, long coeff, Accum& acc) {
  for (const auto& nu : pieri(n, p, lambda)) acc[box_index(nu)] += coeff;
}

// sigma_p * sigma_q * sigma_lambda, applied right to left.
void add_double_pieri(int n, int p, int q, const Partition2& lambda, long coeff, Accum& acc) {
  for (const auto& mid : pieri(n, q, lambda)) add_pieri(n, p, mid, coeff, acc);
}

}  // namespace

MultiplicationTable build_pieri_giambelli_table(int n) {
  MultiplicationTable table(n);
  const auto basis = box_partitions(n);
  for (const auto& lambda : basis) {
    for (const auto& mu : basis) {
      Accum acc;
      if (mu.b == 0) {
        add_pieri(n, mu.a, lambda, 1, acc);
      } else {
        // sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}
        add_double_pieri(n, mu.a, mu.b, lambda, 1, acc);
        add_double_pieri(n, mu.a + 1, mu.b - 1, lambda, -1, acc);
      }
      std::vector<MultiplicationTable::Term> terms;
      for (const auto& [idx, c] : acc)
        if (c != 0) terms.emplace_back(idx, c);
      table.set_product(box_index(lambda), box_index(mu), std::move(terms));
    }
  }
  return table;
}

namespace {

struct TableRegistry {
  std::mutex mutex;
  std::map<int, std::shared_ptr<const MultiplicationTable>> tables;
};

TableRegistry& registry() {
  static TableRegistry r;
  return r;
}

}  // namespace

std::shared_ptr<const MultiplicationTable> standard_table(int n) {
  require_ambient(n);
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  auto it = r.tables.find(n);
  if (it != r.tables.end()) return it->second;
  auto table = std::make_shared<const MultiplicationTable>(build_pieri_giambelli_table(n));
  r.tables.emplace(n, table);
  return table;
}

std::shared_ptr<const MultiplicationTable> seed_standard_table(
    std::shared_ptr<const MultiplicationTable> table) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  auto [it, inserted] = r.tables.emplace(table->ambient_n(), std::move(table));
  return it->second;
}

bool has_standard_table(int n) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  return r.tables.contains(n);
}

ChowRing::ChowRing(std::shared_ptr<const MultiplicationTable> table) : table_(std::move(table)) {
  if (!table_) throw Error(ErrorKind::InvalidParameter, "null multiplication table");
}

ChowClass ChowRing::multiply(const ChowClass& x, const ChowClass& y) const {
  require_same(x, y);
  if (x.ambient_n() != ambient_n())
    throw Error(ErrorKind::AmbientMismatch, "class does not live on this ring");
  ChowClass out(ambient_n());
  auto& dst = out.dense();
  const auto& xs = x.dense();
  const auto& ys = y.dense();
  const int size = table_->size();
  mpq_class t;
  for (int i = 0; i < size; ++i) {
    if (xs[i] == 0) continue;
    for (int j = 0; j < size; ++j) {
      if (ys[j] == 0) continue;
      const auto& terms = table_->product(i, j);
      if (terms.empty()) continue;
      t = xs[i] * ys[j];
      for (const auto& [k, c] : terms) dst[k] += t * c;
    }
  }
  return out;
}

ChowClass ChowRing::power(const ChowClass& x, int e) const {
  ChowClass out = ChowClass::one(ambient_n());
  for (int i = 0; i < e; ++i) out = multiply(out, x);
  return out;
}

ChowClass multiply(const ChowClass& x, const ChowClass& y) {
  require_same(x, y);
  return ChowRing::standard(x.ambient_n()).multiply(x, y);
}

mpq_class integrate(const ChowClass& x) {
  const int w = x.ambient_n() - 2;
  return x.coefficient({w, w});
}

// ---------------------------------------------------------------------------
// Classes in Z[L]

LPoly sum_even_powers(int n) {
  require_ambient(n);
  const int top = n % 2 == 0 ? (n - 2) / 2 : (n - 3) / 2;
  LPoly p;
  for (int j = 0; j <= top; ++j) p.set(static_cast<unsigned>(2 * j), 1);
  return p;
}

int twist_exponent(int n) { return n % 2 == 0 ? n - 2 : n - 1; }

LPoly grassmannian_class(int n, GrassmannianMethod method) {
  require_ambient(n);
  if (method == GrassmannianMethod::Cells) {
    LPoly p;
    for (const auto& lam : box_partitions(n))
      p.set(static_cast<unsigned>(lam.size()), p.coefficient(static_cast<unsigned>(lam.size())) + 1);
    return p;
  }
  const unsigned proj = n % 2 == 0 ? static_cast<unsigned>(n - 2) : static_cast<unsigned>(n - 1);
  return projective_class(proj) * sum_even_powers(n);
}

LPoly hyperplane_section_class(int n) {
  require_ambient(n);
  const unsigned proj = n % 2 == 0 ? static_cast<unsigned>(n - 3) : static_cast<unsigned>(n - 2);
  return projective_class(proj) * sum_even_powers(n);
}

LPoly hyperplane_section_class_by_subtraction(int n) {
  require_ambient(n);
  return grassmannian_class(n, GrassmannianMethod::Cells) -
         LPoly::monomial(static_cast<unsigned>(2 * n - 4)) -
         LPoly::monomial(static_cast<unsigned>(twist_exponent(n)));
}

namespace {

// [P^m], with [P^{-1}] = 0.
LPoly proj_or_empty(int m) { return m < 0 ? LPoly{} : projective_class(static_cast<unsigned>(m)); }

// [Gr(2,c)] for any c >= 0, as sum over 0 <= i < j < c of L^{i+j-1}.
LPoly small_grassmannian(int c) {
  LPoly p;
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) {
      const unsigned w = static_cast<unsigned>(i + j - 1);
      p.set(w, p.coefficient(w) + 1);
    }
  return p;
}

}  // namespace

LPoly isotropic_section_class(int n, int corank) {
  require_ambient(n);
  if (corank < 0 || corank > n || (n - corank) % 2 != 0)
    throw Error(ErrorKind::InvalidParameter, "a skew form on C^" + std::to_string(n) +
                                                 " cannot have corank " + std::to_string(corank));
  const int c = corank;
  const int r = (n - c) / 2;
  // T inside the kernel.
  LPoly total = small_grassmannian(c);
  // T meets the kernel in a line l; T/l is any point of P(V/l) off P(K/l).
  if (c >= 1) total += proj_or_empty(c - 1) * (proj_or_empty(n - 2) - proj_or_empty(c - 2));
  // T meets the kernel trivially: an isotropic plane of the symplectic quotient
  // plus a lift Hom(T, K) = L^{2c}. Isotropic flags l ⊂ T give
  // [IG(2,2r)][P^1] = [P^{2r-1}][P^{2r-3}].
  if (r >= 2) {
    const LPoly ig = div_exact(proj_or_empty(2 * r - 1) * proj_or_empty(2 * r - 3), projective_class(1));
    total += ig.shifted(static_cast<unsigned>(2 * c));
  }
  return total;
}

long betti(int n, int j) {
  require_ambient(n);
  if (j < 0 || j % 2 != 0) return 0;
  long count = 0;
  for (const auto& lam : box_partitions(n))
    if (2 * lam.size() == j) ++count;
  return count;
}

}  // namespace pfgr
