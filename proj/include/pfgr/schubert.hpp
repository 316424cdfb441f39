#pragma once

// Chow ring of Gr(2,n) in the Schubert basis.

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pfgr/ring.hpp"

namespace pfgr {

// Two-row partition (a,b), a >= b >= 0, indexing sigma_{a,b}.
struct Partition2 {
  int a = 0;
  int b = 0;

  Partition2() = default;
  Partition2(int a_, int b_);

  int size() const { return a + b; }
  bool fits(int n) const { return a <= n - 2; }
  std::string to_string() const;

  friend auto operator<=>(const Partition2&, const Partition2&) = default;
};

// Partitions in the 2 x (n-2) box, in index order (see box_index).
std::vector<Partition2> box_partitions(int n);
int box_index(const Partition2& p);
inline int box_size(int n) { return n * (n - 1) / 2; }

// Graded element of A*(Gr(2,n)) with rational coefficients. Stored densely
// over the box basis; partitions outside the box never appear.
class ChowClass {
 public:
  explicit ChowClass(int n);

  static ChowClass zero(int n) { return ChowClass(n); }
  static ChowClass one(int n) { return schubert(n, {0, 0}); }
  static ChowClass schubert(int n, Partition2 p, const mpq_class& c = 1);
  // sigma_p; zero when p > n-2.
  static ChowClass special(int n, int p);

  int ambient_n() const { return n_; }
  int dimension() const { return 2 * (n_ - 2); }

  mpq_class coefficient(const Partition2& p) const;
  void set(const Partition2& p, const mpq_class& c);
  const std::vector<mpq_class>& dense() const { return coeffs_; }
  std::vector<mpq_class>& dense() { return coeffs_; }

  std::vector<std::pair<Partition2, mpq_class>> support() const;
  bool is_zero() const;
  // Part of degree exactly d.
  ChowClass component(int d) const;
  // All components of degree < d.
  ChowClass truncated_below(int d) const;
  bool is_homogeneous(int d) const;

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  ChowClass& operator*=(const mpq_class& s);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const mpq_class& s, ChowClass a) { return a *= s; }
  ChowClass operator-() const;
  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::vector<mpq_class> coeffs_;
};

// Structure constants sigma_lambda * sigma_mu = sum c * sigma_nu over the box.
class MultiplicationTable {
 public:
  using Term = std::pair<int, long>;  // (box index of nu, coefficient)

  explicit MultiplicationTable(int n);

  int ambient_n() const { return n_; }
  const std::vector<Term>& product(int i, int j) const { return products_[i * size_ + j]; }
  void set_product(int i, int j, std::vector<Term> terms);
  int size() const { return size_; }

  friend bool operator==(const MultiplicationTable& a, const MultiplicationTable& b) {
    return a.n_ == b.n_ && a.products_ == b.products_;
  }

 private:
  int n_;
  int size_;
  std::vector<std::vector<Term>> products_;
};

// Builds the table from the Pieri rule and the two-row Giambelli identity.
MultiplicationTable build_pieri_giambelli_table(int n);

// Pieri rule: the nu inside the box with sigma_p * sigma_lambda = sum sigma_nu.
std::vector<Partition2> pieri(int n, int p, const Partition2& lambda);

// Process-wide memo of Pieri/Giambelli tables, one per n, built once under a
// lock. The returned table is immutable and read without synchronization.
std::shared_ptr<const MultiplicationTable> standard_table(int n);
// Installs a table (e.g. loaded from disk) unless one is already present.
// Returns the table that ends up registered.
std::shared_ptr<const MultiplicationTable> seed_standard_table(
    std::shared_ptr<const MultiplicationTable> table);
bool has_standard_table(int n);

// Version of the multiplication engine; bumps invalidate on-disk caches.
inline constexpr int kEngineVersion = 1;

// A Chow ring of Gr(2,n) bound to one multiplication engine.
class ChowRing {
 public:
  explicit ChowRing(std::shared_ptr<const MultiplicationTable> table);
  static ChowRing standard(int n) { return ChowRing(standard_table(n)); }

  int ambient_n() const { return table_->ambient_n(); }
  const MultiplicationTable& table() const { return *table_; }

  ChowClass multiply(const ChowClass& x, const ChowClass& y) const;
  ChowClass power(const ChowClass& x, int e) const;

 private:
  std::shared_ptr<const MultiplicationTable> table_;
};

ChowClass multiply(const ChowClass& x, const ChowClass& y);

// Coefficient of the point class sigma_{n-2,n-2}.
mpq_class integrate(const ChowClass& x);

enum class GrassmannianMethod { Cells, ProductFormula };

// sum_{j} L^{2j} for j = 0..(n-2)/2 (n even) or 0..(n-3)/2 (n odd).
LPoly sum_even_powers(int n);

// Exponent s with F2 - F1 = L^s: n-2 for n even, n-1 for n odd.
int twist_exponent(int n);

LPoly grassmannian_class(int n, GrassmannianMethod method = GrassmannianMethod::ProductFormula);
// Product formula for a smooth Plucker hyperplane section H(2,n).
LPoly hyperplane_section_class(int n);
// [Gr(2,n)] - L^{2n-4} - L^s: the class obtained by treating every singular
// hyperplane section as a Schubert divisor. Agrees with the smooth section
// only for n = 4, 5; kept so callers can report the comparison.
LPoly hyperplane_section_class_by_subtraction(int n);

// Class of {T in Gr(2,n) : omega|_T = 0} for a skew form omega of the given
// corank (corank = n mod 2 gives the smooth section), by stratifying on
// dim(T ∩ ker omega).
LPoly isotropic_section_class(int n, int corank);

// b_j(Gr(2,n)).
long betti(int n, int j);

}  // namespace pfgr
