#include "operlab/hyperbolic.hpp"

#include <random>

#include "doctest.h"

using namespace operlab;

namespace {
DiskDifferential poly(int degree, std::vector<Cx> c, double rmax = 0.95) {
  DiskDifferential d;
  d.degree = degree;
  d.coeff = std::move(c);
  d.r_max = rmax;
  return d;
}

DiskDifferential random_poly(int degree, std::mt19937_64& rng, int deg_max = 6) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> nd(1, deg_max);
  std::vector<Cx> c(nd(rng) + 1);
  for (auto& x : c) x = Cx(u(rng), u(rng));
  return poly(degree, std::move(c));
}

// finite-difference Gaussian curvature of the conformal metric H dz dzbar
// (fourth-order 5-point Laplacian)
double fd_curvature_H(Cx z, double h) {
  auto logH = [](Cx w) { return std::log(hyp_density(w)); };
  auto dxx = [&](Cx dir) {
    return (-logH(z + 2.0 * h * dir) + 16.0 * logH(z + h * dir) - 30.0 * logH(z) +
            16.0 * logH(z - h * dir) - logH(z - 2.0 * h * dir)) /
           (12.0 * h * h);
  };
  double lap = dxx(Cx(1, 0)) + dxx(Cx(0, 1));
  return -lap / (2.0 * hyp_density(z));
}
}  // namespace

TEST_CASE("hyperbolic metric: H(0) = 2 and curvature -2 on a 20x20 grid") {
  CHECK(hyp_density(0) == 2.0);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      Cx z(-0.5 + 1.0 * i / 19.0, -0.5 + 1.0 * j / 19.0);
      CHECK(std::abs(fd_curvature_H(z, 1e-3) - (-2.0)) < 1e-6);
    }
}

TEST_CASE("hyp_norm: zero, constant, and linear examples") {
  auto zero = poly(2, {Cx(0, 0)});
  for (double x : {0.0, 0.3, -0.5}) CHECK(hyp_norm(zero, Cx(x, 0.1)) == 0.0);
  auto one = poly(2, {Cx(1, 0)});
  CHECK(hyp_norm(one, 0) == doctest::Approx(0.5).epsilon(1e-12));  // 1/H(0)
  auto idp = poly(2, {Cx(0, 0), Cx(1, 0)});
  CHECK(hyp_norm(idp, Cx(0.5, 0)) == doctest::Approx(9.0 / 64).epsilon(1e-12));
  CHECK_THROWS_AS(hyp_norm(one, Cx(0.97, 0)), OutsideDomain);
}

TEST_CASE("chern derivative: vanishing at the origin and monomial values") {
  auto c = poly(3, {Cx(2, 1)});
  ChernDerivative cd{&c};
  CHECK(std::abs(cd.value(0)) == 0.0);  // dlog H (0) = 0
  for (int k = 1; k <= 4; ++k) {
    std::vector<Cx> mono(k + 1, Cx(0, 0));
    mono[k] = 1;
    auto d = poly(2, mono);
    ChernDerivative cdk{&d};
    CHECK(std::abs(cdk.value(0)) == doctest::Approx(k == 1 ? 1.0 : 0.0));
  }
}

// The Cauchy estimate is stated in the curvature -1 normalization
// rho = 2/(1-|z|^2) (the K = -2 density is H = rho^2/2, which rescales the
// ratio by sqrt(2)); the test evaluates the norms in that normalization.
namespace {
double rho_norm(const DiskDifferential& d, Cx z) {
  double rho = 2.0 / (1.0 - std::norm(z));
  return std::abs(d.eval(z)) / std::pow(rho, double(d.degree));
}
double sup_rho_norm(const DiskDifferential& d, double hyp_radius) {
  double reuc = std::tanh(hyp_radius / 2.0);
  double best = 0;
  for (int ir = 0; ir <= 64; ++ir)
    for (int ia = 0; ia < 128; ++ia)
      best = std::max(best, rho_norm(d, std::polar(reuc * ir / 64.0, 2 * M_PI * ia / 128.0)));
  return best;
}
}  // namespace

TEST_CASE("cauchy bound: never violated over 200 random differentials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ldist(1, 4);
  const double radii[3] = {0.3, 0.6, 0.9};
  for (int trial = 0; trial < 200; ++trial) {
    int l = ldist(rng);
    auto d = random_poly(l, rng);
    ChernDerivative cd{&d};
    double lhs = std::abs(cd.value(0)) / std::pow(2.0, l + 1);  // rho-norm of nabla at 0
    for (double R : radii) {
      double C = 0.5 * (std::cosh(R / 2) / std::sinh(R / 2)) * std::pow(std::cosh(R / 2), 2.0 * l);
      double sup = sup_rho_norm(d, R);
      CHECK(lhs <= C * sup * (1.0 + 1e-9) + 1e-15);
    }
  }
}

TEST_CASE("bochner identity: residuals and step-halving order") {
  auto zero = poly(2, {Cx(0, 0)});
  CHECK(bochner_residual(zero, Cx(0.2, 0.2), 1e-3) == 0.0);
  auto z2 = poly(3, {Cx(0, 0), Cx(0, 0), Cx(1, 0)});
  CHECK(bochner_residual(z2, Cx(0.3, 0.1), 1e-3) < 1e-6);
  auto cst = poly(2, {Cx(1, 0)});
  CHECK(bochner_residual(cst, Cx(0, 0), 1e-3) < 1e-8);
  // observed order >= 1.9 under step halving (the stencil is 4th order)
  auto big = poly(3, {Cx(0.3, 0), Cx(0, 0), Cx(0, 0), Cx(0, 0), Cx(0, -2), Cx(3, 1)});
  double r1 = bochner_residual(big, Cx(0.45, 0.2), 8e-3);
  double r2 = bochner_residual(big, Cx(0.45, 0.2), 4e-3);
  REQUIRE(r2 > 1e-13);  // above roundoff floor
  double order = std::log2(r1 / r2);
  CHECK(order >= 1.9);
  CHECK_THROWS_AS(bochner_residual(big, Cx(0.94, 0), 1e-2), StencilOutOfDomain);
}

TEST_CASE("schwarzian: Mobius vanishing, z^2 at 1, cocycle, critical point") {
  Mobius m{Cx(2, 1), Cx(0, 3), Cx(1, 0), Cx(1, -1)};
  CHECK(schwarzian(m, Cx(0.2, 0.1)) == Cx(0, 0));
  Poly sq{{Cx(0, 0), Cx(0, 0), Cx(1, 0)}};
  CHECK(std::abs(schwarzian(sq, Cx(1, 0)) - Cx(-1.5, 0)) < 1e-12);
  CHECK_THROWS_AS(schwarzian(sq, Cx(0, 0)), CriticalPoint);

  // cocycle S(phi o psi) = (S phi o psi) (psi')^2 + S psi for polynomial pairs
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int trial = 0; trial < 25; ++trial) {
    Poly phi{{Cx(u(rng), u(rng)), Cx(1, 0), Cx(u(rng), u(rng)), Cx(u(rng), u(rng))}};
    Poly psi{{Cx(u(rng), u(rng)), Cx(1, 0), Cx(u(rng), u(rng))}};
    // compose phi(psi(z)) as a polynomial
    Poly comp{{Cx(0, 0)}};
    for (size_t k = phi.c.size(); k-- > 0;) {
      // comp = comp * psi + phi.c[k]
      std::vector<Cx> next(comp.c.size() + psi.c.size() - 1, Cx(0, 0));
      for (size_t i = 0; i < comp.c.size(); ++i)
        for (size_t j = 0; j < psi.c.size(); ++j) next[i + j] += comp.c[i] * psi.c[j];
      next[0] += phi.c[k];
      comp.c = std::move(next);
    }
    Cx z(u(rng), u(rng));
    Cx lhs = schwarzian(comp, z);
    Cx dpsi = psi.deriv().eval(z);
    Cx rhs = schwarzian(phi, psi.eval(z)) * dpsi * dpsi + schwarzian(psi, z);
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

namespace {
// Schwarzian of an arbitrary evaluable map via contour-integral derivatives
// (trapezoid rule on a small circle: spectrally accurate, independent of the
// polynomial differentiation path).
Cx schwarzian_contour(const std::function<Cx(Cx)>& f, Cx z, double r = 0.05) {
  const int n = 64;
  Cx d1 = 0, d2 = 0, d3 = 0;
  for (int k = 0; k < n; ++k) {
    Cx w = std::polar(r, 2 * M_PI * k / n);
    Cx v = f(z + w);
    d1 += v / w;
    d2 += v / (w * w);
    d3 += v / (w * w * w);
  }
  d1 /= n;
  d2 *= 2.0 / n;
  d3 *= 6.0 / n;
  Cx q = d2 / d1;
  return d3 / d1 - 1.5 * q * q;
}
}  // namespace

TEST_CASE("schwarzian cocycle against random Mobius maps (contour oracle)") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  Poly phi{{Cx(0.1, -0.2), Cx(1, 0), Cx(0.3, 0.1), Cx(-0.2, 0.25)}};
  for (int trial = 0; trial < 5; ++trial) {
    Mobius psi{Cx(1, 0), Cx(u(rng), u(rng)), Cx(u(rng) * 0.3, 0), Cx(1, 0)};
    Cx z(u(rng) * 0.5, u(rng) * 0.5);
    auto comp = [&](Cx w) { return phi.eval(psi.eval(w)); };
    Cx lhs = schwarzian_contour(comp, z);
    Cx dpsi = psi.deriv(z);
    Cx rhs = schwarzian(phi, psi.eval(z)) * dpsi * dpsi + schwarzian(psi, z);
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("alpha1 change of coordinates round-trips under phi o phi^{-1}") {
  Mobius phi{Cx(1, 0), Cx(0.3, 0.1), Cx(0.2, 0), Cx(1, 0)};
  Mobius inv = phi.inverse();
  auto alpha1 = [](Cx z) { return Cx(0.7, -0.2) + z * Cx(0.1, 0.4); };
  for (Cx z : {Cx(0.1, 0.2), Cx(-0.3, 0.05), Cx(0.0, 0.0)}) {
    // to w-coordinates through phi, back through phi^{-1}
    auto beta = [&](Cx w) {
      return alpha1_change(alpha1, phi.eval(w), phi.deriv(w), schwarzian(phi, w));
    };
    Cx back = alpha1_change(beta, inv.eval(z), inv.deriv(z), schwarzian(inv, z));
    CHECK(std::abs(back - alpha1(z)) < 1e-12);
  }
}

TEST_CASE("cauchy_C: branch selection and limits") {
  auto c31 = cauchy_C(3, 1.0);  // tanh(0.5) = 0.462 > 1/sqrt(7) = 0.378 -> branch 2
  CHECK(c31.branch == 2);
  CHECK(c31.value == doctest::Approx(0.5 * std::sqrt(7.0) * std::pow(7.0 / 6.0, 3)).epsilon(1e-12));
  CHECK(c31.value == doctest::Approx(2.100656).epsilon(1e-5));
  auto c1 = cauchy_C(1, 10.0);
  CHECK(c1.branch == 2);
  CHECK(c1.value == doctest::Approx(0.5 * std::sqrt(3.0) * 1.5).epsilon(1e-12));
  auto cs = cauchy_C(3, 0.5);  // tanh(0.25) = 0.245 <= 0.378 -> branch 1
  CHECK(cs.branch == 1);
  CHECK(cs.value == doctest::Approx(2.45784).epsilon(1e-4));
  // inj -> 0: C ~ 1/inj
  double inj = 1e-4;
  CHECK(cauchy_C(2, inj).value * inj == doctest::Approx(1.0).epsilon(1e-3));
}
