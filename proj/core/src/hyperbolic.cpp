#include "operlab/hyperbolic.hpp"

#include <cmath>

namespace operlab {

double hyp_norm(const DiskDifferential& d, Cx z) {
  if (std::abs(z) > d.r_max + 1e-12) throw OutsideDomain("evaluation outside r_max");
  return std::abs(d.eval(z)) / std::pow(hyp_density(z), d.degree / 2.0);
}

Cx ChernDerivative::value(Cx z) const {
  return base->deriv(z) - double(base->degree) * dlog_density(z) * base->eval(z);
}

double ChernDerivative::norm(Cx z) const {
  return std::abs(value(z)) / std::pow(hyp_density(z), (base->degree + 1) / 2.0);
}

double bochner_residual(const DiskDifferential& d, Cx z, double h) {
  if (std::abs(z) + 2 * h > d.r_max) throw StencilOutOfDomain("stencil leaves the domain");
  auto nsq = [&](Cx w) {
    double n = std::abs(d.eval(w)) / std::pow(hyp_density(w), d.degree / 2.0);
    return n * n;
  };
  // fourth-order 5-point second differences along both axes
  auto dxx = [&](auto f, Cx dir) {
    return (-f(z + 2.0 * h * dir) + 16.0 * f(z + h * dir) - 30.0 * f(z) +
            16.0 * f(z - h * dir) - f(z - 2.0 * h * dir)) /
           (12.0 * h * h);
  };
  double lap_euc = dxx(nsq, Cx(1, 0)) + dxx(nsq, Cx(0, 1));
  double lap = lap_euc / hyp_density(z);  // Delta = (4/H) dz dzbar = (1/H) Delta_euc
  ChernDerivative cd{&d};
  double grad = cd.norm(z);
  double n = std::sqrt(nsq(z));
  return std::abs(0.5 * lap - 2.0 * grad * grad - d.degree * (-2.0) * n * n);
}

Cx schwarzian(const Poly& phi, Cx z) {
  Poly d1 = phi.deriv(), d2 = d1.deriv(), d3 = d2.deriv();
  Cx p1 = d1.eval(z);
  if (std::abs(p1) < 1e-14) throw CriticalPoint("phi'(z) = 0");
  Cx p2 = d2.eval(z), p3 = d3.eval(z);
  Cx q = p2 / p1;
  return p3 / p1 - 1.5 * q * q;
}

Cx schwarzian(const Mobius& m, Cx z) {
  if (std::abs(m.deriv(z)) < 1e-300) throw CriticalPoint("mobius derivative vanishes");
  return Cx(0, 0);
}

CauchyC cauchy_C(int l, double inj) {
  double x = std::tanh(inj / 2.0);
  double xstar = 1.0 / std::sqrt(2.0 * l + 1.0);
  if (x <= xstar) {
    double v = 0.5 * (std::cosh(inj / 2.0) / std::sinh(inj / 2.0)) *
               std::pow(std::cosh(inj / 2.0), 2.0 * l);
    return {v, 1};
  }
  double v = 0.5 * std::sqrt(2.0 * l + 1.0) * std::pow(1.0 + 1.0 / (2.0 * l), double(l));
  return {v, 2};
}

double sup_hyp_norm(const DiskDifferential& d, double hyp_radius, int samples) {
  double reuc = std::tanh(hyp_radius / 2.0);
  double best = 0;
  int nr = 64, na = std::max(64, samples / 64);
  for (int ir = 0; ir <= nr; ++ir) {
    double r = reuc * ir / nr;
    for (int ia = 0; ia < na; ++ia) {
      double t = 2.0 * M_PI * ia / na;
      Cx z = std::polar(r, t);
      double n = std::abs(d.eval(z)) / std::pow(hyp_density(z), d.degree / 2.0);
      best = std::max(best, n);
    }
  }
  return best;
}

}  // namespace operlab
