#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace operlab {

using Cx = std::complex<double>;

struct OutsideDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CriticalPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StencilOutOfDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hyperbolic metric H(z) dz dzbar of curvature -2 on the unit disk.
inline double hyp_density(Cx z) {
  double t = 1.0 - std::norm(z);
  return 2.0 / (t * t);
}
inline Cx dlog_density(Cx z) {  // d/dz log H
  return 2.0 * std::conj(z) / (1.0 - std::norm(z));
}

// Holomorphic l-differential alpha(z) dz^l, alpha a polynomial.
struct DiskDifferential {
  int degree = 2;               // l >= 1
  std::vector<Cx> coeff{0.0};   // a_0 + a_1 z + ...
  double r_max = 0.95;

  Cx eval(Cx z) const {
    Cx s = 0;
    for (size_t k = coeff.size(); k-- > 0;) s = s * z + coeff[k];
    return s;
  }
  Cx deriv(Cx z) const {
    Cx s = 0;
    for (size_t k = coeff.size(); k-- > 1;) s = s * z + double(k) * coeff[k];
    return s;
  }
  DiskDifferential scaled(double t) const {
    DiskDifferential d = *this;
    for (auto& c : d.coeff) c *= t;
    return d;
  }
};

double hyp_norm(const DiskDifferential& d, Cx z);  // |alpha|(z) / H^{l/2}

// Chern-connection derivative nabla alpha = (alpha' - l (dlog H) alpha) dz^{l+1}.
// Not holomorphic, so exposed as an evaluator.
struct ChernDerivative {
  const DiskDifferential* base;
  Cx value(Cx z) const;
  double norm(Cx z) const;  // as an (l+1)-differential
};
inline ChernDerivative chern_derivative(const DiskDifferential& d) { return {&d}; }

// |  (1/2) Lap |alpha|^2 - 2 |nabla alpha|^2 - l K |alpha|^2 |  with K = -2,
// Laplacian by 5-point fourth-order central differences.
double bochner_residual(const DiskDifferential& d, Cx z, double fd_step);

// Plain polynomial map used for Schwarzian tests and coordinate changes.
struct Poly {
  std::vector<Cx> c;
  Cx eval(Cx z) const {
    Cx s = 0;
    for (size_t k = c.size(); k-- > 0;) s = s * z + c[k];
    return s;
  }
  Poly deriv() const {
    Poly d;
    for (size_t k = 1; k < c.size(); ++k) d.c.push_back(double(k) * c[k]);
    if (d.c.empty()) d.c.push_back(0.0);
    return d;
  }
};

struct Mobius {
  Cx a{1}, b{0}, c{0}, d{1};
  Cx eval(Cx z) const { return (a * z + b) / (c * z + d); }
  Cx deriv(Cx z) const {
    Cx t = c * z + d;
    return (a * d - b * c) / (t * t);
  }
  Mobius inverse() const { return {d, -b, -c, a}; }
};

Cx schwarzian(const Poly& phi, Cx z);    // throws CriticalPoint at phi'(z) = 0
Cx schwarzian(const Mobius& m, Cx z);    // identically zero (kept for the interface)

// Quadratic-differential component under a coordinate change z = phi(w):
// alpha1 in w-coordinates = alpha1(phi(w)) phi'(w)^2 - (1/2) S phi (w).
inline Cx alpha1_change(const std::function<Cx(Cx)>& alpha1, Cx phi_w, Cx dphi_w, Cx Sphi_w) {
  return alpha1(phi_w) * dphi_w * dphi_w - 0.5 * Sphi_w;
}

// Cauchy constant C(X) bounding |nabla alpha| <= C |alpha|_sup at injectivity radius inj.
struct CauchyC {
  double value;
  int branch;  // 1: coth/cosh branch, 2: optimized-radius branch
};
CauchyC cauchy_C(int l, double inj);

// sup of the hyperbolic norm of d over the closed hyperbolic disk of radius R about 0,
// by dense boundary/interior circle sampling (polynomials attain the sup on the boundary
// of the Euclidean disk only for the flat norm; the weighted norm needs interior circles).
double sup_hyp_norm(const DiskDifferential& d, double hyp_radius, int samples = 4096);

}  // namespace operlab
