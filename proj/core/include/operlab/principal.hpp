#pragma once

#include <optional>

#include "operlab/liealg.hpp"

namespace operlab {

struct SingularCartan : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateKernel : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Principal sl2 triple in the torus gauge e = sum e_alpha, f = sum r_alpha f_alpha,
// h = sum r_alpha h_alpha. The gauge keeps every coefficient rational; the adapted
// Cartan involution picks up the character chi(beta) = prod r_i^{beta_i}.
struct PrincipalData {
  std::vector<Rat> r;                  // r_alpha per simple root
  std::vector<Rat> e, h, f;            // dense coordinates in the Chevalley basis
  std::vector<int> exponents;          // m_1 <= ... <= m_l
  std::vector<int> grade_dim;          // dim g_i for i = 0..m_l
  Rat kappa_ef, kappa_hh;
  int m_max = 0;
  std::vector<Rat> chi;                // per root index

  int grade_of_basis(const ChevAlgebra& a, int basis_idx) const {
    return basis_idx < a.rs.rank ? 0 : a.rs.heights[basis_idx - a.rs.rank];
  }
};

PrincipalData principal_triple(const ChevAlgebra& a);
std::vector<int> exponents(const PrincipalData& p);

// Adapted involution theta' for the gauged triple: theta'(e) = -f, theta'(h) = -h.
std::vector<Rat> adapted_theta(const ChevAlgebra& a, const PrincipalData& p,
                               const std::vector<Rat>& x);
std::vector<std::complex<double>> adapted_theta(const ChevAlgebra& a, const PrincipalData& p,
                                                const std::vector<std::complex<double>>& x);

// Highest-weight vectors e_{m_i} in V_e = ker ad(e), one per exponent, normalized by
// -kappa(e_ial, theta e_i) = kappa(e,f). Stored as exact direction vectors v_i with the
// normalization scale kept as its exact square sigma_i = kappa(e,f)/n_i, so that
// e_{m_i} = sqrt(sigma_i) v_i.
struct NormalizedBasis {
  std::vector<std::vector<Rat>> v;  // exact directions, leading coefficient positive
  std::vector<Rat> n;               // n_i = -kappa(v_i, theta' v_i) > 0
  std::vector<Rat> sigma;           // kappa(e,f) / n_i
  std::vector<double> scale;        // sqrt(sigma_i)
  std::vector<int> level;           // m_i
  int size() const { return static_cast<int>(v.size()); }
};

NormalizedBasis highest_weight_basis(const ChevAlgebra& a, const PrincipalData& p);

// Structural tensor c_{ijkl} = kappa([e_{m_i}, theta e_{m_j}], [e_{m_k}, theta e_{m_l}])
// (the scale used by the criteria; it vanishes unless m_i + m_k = m_j + m_l).
class CTensor {
 public:
  CTensor(const ChevAlgebra& a, const PrincipalData& p, const NormalizedBasis& nb);

  double value(int i, int j, int k, int l) const;          // 1-based indices
  std::optional<Rat> exact(int i, int j, int k, int l) const;
  Rat pair_kernel(int i, int j, int k, int l) const;       // kappa([v_i,th v_j],[v_k,th v_l])
  int size() const { return n_; }
  double max_sqrt_abs() const;                             // max |c|^{1/2} over valid indices

  // Bracket directions s_i s_j [v_i, theta' v_j] as double vectors, for the
  // Hermitian-square evaluation of the criteria quartic.
  const std::vector<double>& pair_vec(int i, int j) const {
    check(i);
    check(j);
    return pair_dbl_[idx(i, j)];
  }

 private:
  int n_ = 0;
  const NormalizedBasis* nb_;
  std::vector<std::vector<Rat>> pair_;  // [v_i, theta' v_j], exact
  std::vector<std::vector<double>> pair_dbl_;
  std::vector<Rat> kernel_;             // K_{ijkl}
  std::vector<int> levels_;
  int idx(int i, int j) const { return (i - 1) * n_ + (j - 1); }
  void check(int i) const {
    if (i < 1 || i > n_) throw IndexOutOfRange("c_tensor index out of range");
  }
};

// Exact reduced row echelon form; returns the kernel basis of an m x n matrix.
std::vector<std::vector<Rat>> rat_kernel(std::vector<std::vector<Rat>> mat, int ncols);
int rat_rank(std::vector<std::vector<Rat>> mat, int ncols);

}  // namespace operlab
