#pragma once

#include <Eigen/Dense>

#include "operlab/context.hpp"
#include "operlab/hyperbolic.hpp"

namespace operlab {

struct StepUnderflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MismatchedBasepoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RayTooShort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Mat = Eigen::MatrixXcd;

enum class RepKind { adjoint, fundamental };  // fundamental only for family A

// Matrices of the chosen representation on the Chevalley basis.
struct Representation {
  RepKind kind = RepKind::adjoint;
  int dim = 0;
  std::vector<Mat> basis;  // per algebra basis index
  Mat of(const std::vector<Rat>& x) const;
  Mat of_scaled(const std::vector<Rat>& x, double s) const;
};
Representation adjoint_rep(const ChevAlgebra& a);
Representation sln_fundamental(const ChevAlgebra& a);  // family A only

// The flat oper connection D^alpha in the metric trivialization:
//   A_z = rho(-(dlog H) h + f + sum_i a_i(z) e_{m_i}),  A_zbar = H rho(e).
struct ConnectionField {
  std::shared_ptr<const AlgebraContext> ctx;
  std::vector<DiskDifferential> alphas;
  Representation rep;
  Mat Mh, Me, Mf;
  std::vector<Mat> Memi;  // scaled highest-weight images s_i rho(v_i)

  Mat a_z(Cx z) const;
  Mat a_zbar(Cx z) const;
  Mat a_along(Cx z, Cx zdot) const;
  // extended connection over (z, t) built by conjugating with exp(t h):
  Mat a_z_ext(Cx z, double t) const;
  Mat a_zbar_ext(Cx z, double t) const;
  Mat a_t() const { return -Mh; }
  // Drinfeld-Sokolov holomorphic lift coefficient rho(f + sum a_i e_{m_i}).
  Mat ds_coeff(Cx z) const;
};

ConnectionField make_connection(std::shared_ptr<const AlgebraContext> ctx,
                                std::vector<DiskDifferential> alphas,
                                RepKind kind = RepKind::adjoint);

struct FrameCurve {
  std::vector<Cx> path;      // polyline vertices
  std::vector<Mat> frames;   // parallel transport from path.front() to each vertex
  Cx basepoint() const { return path.front(); }
};

// Parallel transport of a frame along the polyline: P' = -A(z, zdot) P, adaptive
// Dormand-Prince 5(4). Throws StepUnderflow when adaptivity stalls.
FrameCurve integrate_frame(const ConnectionField& cf, const std::vector<Cx>& path,
                           double tol = 1e-9);

// Holomorphic DS lift along the polyline: G' = G rho(f + sum a_i e_{m_i}), G(start) = I.
FrameCurve integrate_lift(const ConnectionField& cf, const std::vector<Cx>& path,
                          double tol = 1e-9);

// Osc = G1 G2^{-1} at the endpoint of two lifts from a common basepoint/trivialization.
Mat osculating_map(const FrameCurve& f1, const FrameCurve& f2);

// Loop defect of the flat connection around the square of side s centered at z,
// measured with fixed midpoint-exponential steps (O(s^3) for a flat connection).
double loop_deviation(const ConnectionField& cf, Cx center, double side,
                      int steps_per_edge = 4);
// Same for the extended connection around a mixed (z, t) rectangle.
double extended_loop_deviation(const ConnectionField& cf, Cx center, double t0, double side,
                               int steps_per_edge = 4);
// || omega_bar(d/dt) - 2 h || in the adjoint representation at (z, t): returns the
// relative deviation of U^{-1}(U ad(h) - ad(h) U) from 2 ad(h).
double extended_mc_dt_residual(const ConnectionField& cf, Cx z);

// Developed Cartan involution at z (adjoint representation): J(s) = U conj(s),
// transported to the basepoint fiber. Residual = ||J J - id||.
struct InvolutionSample {
  Cx z;
  Mat developed;     // the conjugate-linear matrix U-hat
  double residual;   // || U-hat conj(U-hat) - I ||_F
};
Mat fiber_involution_adjoint(const ConnectionField& cf, Cx z);  // U_z
InvolutionSample developed_involution(const ConnectionField& cf, Cx z, double tol = 1e-9);

// PGL2 only: the Epstein-Poincare point in the upper half-space model of H^3.
struct SurfaceSample {
  Cx z;
  Cx w;              // boundary coordinate
  double t = 0;      // height
  double residual;   // involution / hermitianity residual
};
SurfaceSample ep_point_pgl2(const ConnectionField& cf, Cx z, double tol = 1e-10);
std::vector<SurfaceSample> ep_surface_pgl2(const ConnectionField& cf,
                                           const std::vector<Cx>& grid, double tol = 1e-10);

// Vanishing orders of the Schubert-type sections along a short ray from z0:
// sigma_i(z) = minor(rows 2..i+1, cols 1..i) of G(z0)^{-1} G(z); the log-log slope
// estimates the order, which equals the exponent m_i.
std::vector<double> transversality_orders(const ConnectionField& cf, Cx z0, Cx ray_dir,
                                          double ray_len = 1e-2, int samples = 12);

}  // namespace operlab
