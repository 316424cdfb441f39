#pragma once

// Characteristic classes on Gr(2,n) and invariants of the linear sections
// X = Gr(2,n) ∩ H_1 ∩ ... ∩ H_k.

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <vector>

#include "pfgr/ring.hpp"
#include "pfgr/schubert.hpp"

namespace pfgr {

struct ChernData {
  int rank = 0;
  std::vector<ChowClass> classes;  // c_1 .. c_rank; c_0 = 1 implicit

  // c_i for i >= 0; zero above the rank.
  ChowClass c(int i) const;
  ChowClass total() const;
};

struct TautologicalBundles {
  ChernData s_dual;
  ChernData q;
};

TautologicalBundles tautological_chern(const ChowRing& ring);
TautologicalBundles tautological_chern(int n);

// Power sums p_1..p_up_to of the Chern roots, by Newton's identities.
std::vector<ChowClass> power_sums(const ChernData& e, int up_to, const ChowRing& ring);
// Inverse direction: elementary symmetric functions of the roots from their
// power sums. p[0] is ignored (it would be the rank).
ChernData from_power_sums(int rank, const std::vector<ChowClass>& p, const ChowRing& ring);

// c(E ⊗ F) via the splitting principle.
ChernData tensor_chern(const ChernData& e, const ChernData& f, const ChowRing& ring);
ChernData tensor_chern(const ChernData& e, const ChernData& f);

// T_Gr = S^dual ⊗ Q.
ChernData tangent_chern(const ChowRing& ring);

struct HodgeSummary {
  int dimension = 0;
  mpz_class euler_char;
  YPoly chi_y;
  mpz_class middle_betti;
  std::vector<mpz_class> middle_hodge;  // h^{p,d-p}, p = 0..d
};

// Euler characteristic, chi_y genus and middle Hodge numbers of the k-fold
// hyperplane sections of one Gr(2,n), all computed in a fixed Chow ring.
// The expensive per-ring data (Chern and genus integrals against powers of
// sigma_1) is built once and shared by every k.
class SectionCalculus {
 public:
  explicit SectionCalculus(ChowRing ring);

  int ambient_n() const { return ring_.ambient_n(); }
  const ChowRing& ring() const { return ring_; }

  mpz_class euler_characteristic(int k) const;
  YPoly chi_y(int k) const;
  // Value of the chi_y genus at a single rational y, without interpolation.
  mpq_class chi_y_at(int k, int y) const;
  HodgeSummary middle_hodge(int k) const;

 private:
  void require_k(int k) const;
  const std::vector<mpq_class>& genus_integrals(int y) const;

  ChowRing ring_;
  int dim_;
  std::vector<ChowClass> s1_powers_;
  std::vector<ChowClass> tangent_power_sums_;
  std::vector<mpq_class> chern_integrals_;  // ∫ c(T) sigma_1^m
  mutable std::mutex genus_mutex_;
  mutable std::vector<std::unique_ptr<std::vector<mpq_class>>> genus_integrals_;  // by y = 0..dim
};

// Memoized per n, Pieri/Giambelli engine.
const SectionCalculus& standard_section_calculus(int n);

mpz_class euler_characteristic_ci(int n, int k);
YPoly chi_y_ci(int n, int k);
HodgeSummary middle_hodge(int n, int k);

}  // namespace pfgr
