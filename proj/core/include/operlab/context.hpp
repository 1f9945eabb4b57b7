#pragma once

#include <complex>
#include <memory>

#include "operlab/constants.hpp"

namespace operlab {

// Everything derived from a Lie type that the pointwise geometry needs,
// built once and shared (immutable).
struct AlgebraContext {
  LieType type;
  ChevAlgebra alg;
  PrincipalData prin;
  NormalizedBasis basis;
  std::unique_ptr<CTensor> ct;
  WeylOrbits orbits;

  double kappa_ef = 0, sqrt_kappa_ef = 0;
  double sin_phi_S = 0, cos_phi_S = 0;  // short orbit (the single orbit when simply laced)
  double cos_phi_min = 0;
  double cos4_phi_theta = 0;
  double c_llll = 0;      // top diagonal c entry; equals c_l = m_l^2 k(h,h)/sin^2(phi_theta)
  double c_gmax = 0;      // max |c_ijkl|^{1/2}, for the simplified criterion
  int n_levels = 0;
  std::vector<int> levels;   // m_1..m_l
  std::vector<int> degrees;  // m_i + 1

  bool is_sl2() const { return type.family == 'A' && type.rank == 1; }

  // Hermitian square -kappa(x, theta' x) of a complex algebra vector (real, >= 0).
  double herm_sq(const std::vector<std::complex<double>>& x) const;

  static std::shared_ptr<const AlgebraContext> build(LieType t);
};

}  // namespace operlab
