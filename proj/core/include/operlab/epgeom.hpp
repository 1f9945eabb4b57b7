#pragma once

#include "operlab/context.hpp"
#include "operlab/hyperbolic.hpp"

namespace operlab {

struct NotImmersed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCyclic : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativeRadicand : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateMetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pointwise data of an oper's differential tuple at z: values, Chern gradients,
// and their hyperbolic norms, plus the algebra handle.
struct OperPoint {
  std::shared_ptr<const AlgebraContext> ctx;
  Cx z;
  double H = 0;
  std::vector<Cx> value;       // alpha_i(z), raw coefficients
  std::vector<Cx> grad_value;  // nabla alpha_i(z), raw (m_i+2)-differential values
  std::vector<double> norm;    // ||alpha_i|| at z
  std::vector<double> grad_norm;
  std::vector<Cx> A;           // alpha_i / H^{(m_i+1)/2} (|A_i| = norm_i)
  std::vector<Cx> B;           // grad / H^{(m_i+2)/2}

  // Differentials must be ordered by exponent and have degree m_i + 1.
  static OperPoint at(std::shared_ptr<const AlgebraContext> ctx,
                      const std::vector<DiskDifferential>& alphas, Cx z);
  // Synthetic point from prescribed normalized values (tests, epcheck).
  static OperPoint from_normalized(std::shared_ptr<const AlgebraContext> ctx, Cx z,
                                   const std::vector<Cx>& A, const std::vector<Cx>& B);

  bool is_cyclic(double tol = 1e-12) const;
  double sum_norm_sq() const;
  double sum_m_norm_sq() const;
  double norm1() const;           // norm of the exponent-1 component
  double sum_norm_sq_tail() const;  // sum over m_i >= 2 components
};

struct MetricAtPoint {
  Cx a;        // dz^2 coefficient
  double b;    // dz dzbar coefficient (dx^2 + dy^2 convention)
  double det_c() const { return std::norm(a) - 0.25 * b * b; }
};

MetricAtPoint induced_metric(const OperPoint& op);
bool immersion_check(const OperPoint& op);
double regularity_margin(const OperPoint& op);  // throws NotImmersed

// Hermitian-square quartic sum_{ijkl} c_ijkl alpha_i alpha_k *alpha_j *alpha_l
// in normalized values (>= 0 up to roundoff; guarded).
double quartic_sum(const OperPoint& op);

double second_form_cyclic_sq(const OperPoint& op);        // throws NotCyclic / Sl2Error
double second_form_general_bound_sq(const OperPoint& op);
double rlc_term(const OperPoint& op);
double rg_bound(const OperPoint& op);

// K^g of g = a dz^2 + b dz dzbar + conj from the conformal part gbar = b dz dzbar:
// K^g = K^gbar/(1 - 4|a|^2) + 2 |nabla^gbar a|^2 / (1 - 4|a|^2)^2, with both norms
// in the |alpha|^2 / beta^l convention of this library.
double curvature_comparison(double k_gbar, double a_norm_sq, double grad_a_norm_sq);
// Specialization: a holomorphic quadratic differential over the hyperbolic gbar = H.
double curvature_comparison(const DiskDifferential& a, Cx z);

// sl2: II = -(alpha1 dz^2 + H ||alpha1||^2 dz dzbar + conj) (x) h, so the norm
// depends on the quadratic differential alone.
struct Sl2SecondForm {
  Cx zz;         // coefficient of dz^2 (times h)
  double mixed;  // coefficient of dz dzbar (times h)
};
Sl2SecondForm sl2_second_form(Cx alpha1_value, double H);

// Diagnostic value of <II_zz, II_zzbar>: (1/2) sum over m_i - 1 = m_j - m_k of
// a_i *a_j a_k kappa([e_{m_i}, f], [theta e_{m_j}, e_{m_k}]), in normalized values
// with the overall H-weight factored out. Feeds no criterion.
Cx mixed_pairing_diagnostic(const OperPoint& op);

}  // namespace operlab
