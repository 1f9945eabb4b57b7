#include "operlab/develop.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace operlab {

Mat Representation::of(const std::vector<Rat>& x) const {
  Mat m = Mat::Zero(dim, dim);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) m += to_double(x[i]) * basis[i];
  return m;
}

Mat Representation::of_scaled(const std::vector<Rat>& x, double s) const {
  Mat m = of(x);
  return s * m;
}

Representation adjoint_rep(const ChevAlgebra& a) {
  Representation rep;
  rep.kind = RepKind::adjoint;
  rep.dim = a.dim;
  rep.basis.resize(a.dim);
  for (int b = 0; b < a.dim; ++b) {
    Mat m = Mat::Zero(a.dim, a.dim);
    for (int x = 0; x < a.dim; ++x) {
      SparseVec s = a.bracket_basis(b, x);
      for (int k = 0; k < s.n; ++k) m(s.ent[k].first, x) += double(s.ent[k].second);
    }
    rep.basis[b] = std::move(m);
  }
  return rep;
}

Representation sln_fundamental(const ChevAlgebra& a) {
  if (a.rs.type.family != 'A')
    throw std::invalid_argument("fundamental representation implemented for family A");
  const int l = a.rs.rank, n = l + 1;
  Representation rep;
  rep.kind = RepKind::fundamental;
  rep.dim = n;
  rep.basis.assign(a.dim, Mat::Zero(n, n));
  for (int i = 0; i < l; ++i) {  // coroots
    Mat m = Mat::Zero(n, n);
    m(i, i) = 1;
    m(i + 1, i + 1) = -1;
    rep.basis[i] = std::move(m);
  }
  // simple root vectors
  std::vector<int> done(a.rs.roots.size(), 0);
  for (int i = 0; i < l; ++i) {
    RootCoord alpha(l, 0);
    alpha[i] = 1;
    int r = a.rs.root_index(alpha);
    Mat ep = Mat::Zero(n, n), em = Mat::Zero(n, n);
    ep(i, i + 1) = 1;
    em(i + 1, i) = 1;
    rep.basis[a.e_index(r)] = ep;
    rep.basis[a.e_index(a.rs.negative_of(r))] = em;
    done[r] = done[a.rs.negative_of(r)] = 1;
  }
  // higher roots by brackets, positives in height order, then negatives
  for (int r = 0; r < a.rs.n_positive; ++r) {
    if (done[r]) continue;
    // find a decomposition gamma = alpha_i + beta with beta already done
    for (int i = 0; i < l; ++i) {
      RootCoord beta = a.rs.roots[r];
      beta[i] -= 1;
      int rb = a.rs.root_index(beta);
      if (rb < 0 || !done[rb]) continue;
      RootCoord alpha(l, 0);
      alpha[i] = 1;
      int ra = a.rs.root_index(alpha);
      long long nv = a.n_constant(ra, rb);
      if (nv == 0) continue;
      const Mat& A = rep.basis[a.e_index(ra)];
      const Mat& B = rep.basis[a.e_index(rb)];
      rep.basis[a.e_index(r)] = (A * B - B * A) / double(nv);
      int nr = a.rs.negative_of(r);
      int nra = a.rs.negative_of(ra), nrb = a.rs.negative_of(rb);
      long long nneg = a.n_constant(nra, nrb);
      const Mat& An = rep.basis[a.e_index(nra)];
      const Mat& Bn = rep.basis[a.e_index(nrb)];
      rep.basis[a.e_index(nr)] = (An * Bn - Bn * An) / double(nneg);
      done[r] = done[nr] = 1;
      break;
    }
    if (!done[r]) throw std::logic_error("failed to build fundamental representation");
  }
  return rep;
}

ConnectionField make_connection(std::shared_ptr<const AlgebraContext> ctx,
                                std::vector<DiskDifferential> alphas, RepKind kind) {
  ConnectionField cf;
  cf.ctx = ctx;
  if (static_cast<int>(alphas.size()) != ctx->n_levels)
    throw std::invalid_argument("expected one differential per exponent");
  for (int i = 0; i < ctx->n_levels; ++i)
    if (alphas[i].degree != ctx->degrees[i])
      throw std::invalid_argument("differential degree mismatch");
  cf.alphas = std::move(alphas);
  cf.rep = kind == RepKind::adjoint ? adjoint_rep(ctx->alg) : sln_fundamental(ctx->alg);
  cf.Mh = cf.rep.of(ctx->prin.h);
  cf.Me = cf.rep.of(ctx->prin.e);
  cf.Mf = cf.rep.of(ctx->prin.f);
  for (int i = 0; i < ctx->n_levels; ++i)
    cf.Memi.push_back(cf.rep.of_scaled(ctx->basis.v[i], ctx->basis.scale[i]));
  return cf;
}

Mat ConnectionField::a_z(Cx z) const {
  Mat m = -dlog_density(z) * Mh + Mf;
  for (size_t i = 0; i < alphas.size(); ++i) {
    Cx a = alphas[i].eval(z);
    if (a != Cx(0, 0)) m += a * Memi[i];
  }
  return m;
}

Mat ConnectionField::a_zbar(Cx z) const { return hyp_density(z) * Me; }

Mat ConnectionField::a_along(Cx z, Cx zdot) const {
  return a_z(z) * zdot + a_zbar(z) * std::conj(zdot);
}

Mat ConnectionField::a_z_ext(Cx z, double t) const {
  Mat m = -dlog_density(z) * Mh + std::exp(-t) * Mf;
  for (size_t i = 0; i < alphas.size(); ++i) {
    Cx a = alphas[i].eval(z);
    if (a != Cx(0, 0)) m += a * std::exp(ctx->levels[i] * t) * Memi[i];
  }
  return m;
}

Mat ConnectionField::a_zbar_ext(Cx z, double t) const {
  return std::exp(t) * hyp_density(z) * Me;
}

Mat ConnectionField::ds_coeff(Cx z) const {
  Mat m = Mf;
  for (size_t i = 0; i < alphas.size(); ++i) {
    Cx a = alphas[i].eval(z);
    if (a != Cx(0, 0)) m += a * Memi[i];
  }
  return m;
}

namespace {

// Dormand-Prince 5(4) on  Y' = F(tau) Y  along [0,1], tau the segment parameter.
Mat rk45(const std::function<Mat(double, const Mat&)>& f, Mat y, double tol) {
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                      a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                      a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                      e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  double t = 0, h = 1e-3;
  const double hmax = 1e-2;
  while (t < 1.0) {
    h = std::min(h, 1.0 - t);
    Mat k1 = f(t, y);
    Mat k2 = f(t + c2 * h, y + h * a21 * k1);
    Mat k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    Mat k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    Mat k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    Mat k6 = f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    Mat y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    Mat k7 = f(t + h, y5);
    double err = (h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7)).norm();
    double sc = tol * std::max(1.0, y.norm());
    if (err <= sc) {
      t += h;
      y = std::move(y5);
    }
    double fac = err > 0 ? 0.9 * std::pow(sc / err, 0.2) : 2.0;
    h *= std::clamp(fac, 0.2, 5.0);
    h = std::min(h, hmax);
    if (h < 1e-14) throw StepUnderflow("adaptive step underflow");
  }
  return y;
}

}  // namespace

FrameCurve integrate_frame(const ConnectionField& cf, const std::vector<Cx>& path,
                           double tol) {
  FrameCurve fc;
  fc.path = path.empty() ? std::vector<Cx>{Cx(0, 0)} : path;
  int n = cf.rep.dim;
  Mat P = Mat::Identity(n, n);
  fc.frames.push_back(P);
  for (size_t s = 0; s + 1 < fc.path.size(); ++s) {
    Cx z0 = fc.path[s], dz = fc.path[s + 1] - z0;
    auto F = [&](double tau, const Mat& y) -> Mat {
      return -(cf.a_along(z0 + tau * dz, dz) * y);
    };
    P = rk45(F, P, tol);
    fc.frames.push_back(P);
  }
  return fc;
}

FrameCurve integrate_lift(const ConnectionField& cf, const std::vector<Cx>& path,
                          double tol) {
  FrameCurve fc;
  fc.path = path.empty() ? std::vector<Cx>{Cx(0, 0)} : path;
  int n = cf.rep.dim;
  Mat G = Mat::Identity(n, n);
  fc.frames.push_back(G);
  for (size_t s = 0; s + 1 < fc.path.size(); ++s) {
    Cx z0 = fc.path[s], dz = fc.path[s + 1] - z0;
    auto F = [&](double tau, const Mat& y) -> Mat {
      return y * (cf.ds_coeff(z0 + tau * dz) * dz);
    };
    G = rk45(F, G, tol);
    fc.frames.push_back(G);
  }
  return fc;
}

Mat osculating_map(const FrameCurve& f1, const FrameCurve& f2) {
  if (std::abs(f1.basepoint() - f2.basepoint()) > 1e-12)
    throw MismatchedBasepoint("frames do not share a basepoint trivialization");
  return f1.frames.back() * f2.frames.back().inverse();
}

namespace {

// Midpoint exponential steps: per-step defect O(h^3), so the closed-loop defect
// of a flat connection is O(side^3). The four edges use different step counts;
// with equal counts the mirror-image edge errors cancel pairwise and the defect
// would drop to O(side^4), hiding the scaling the flatness study measures.
Mat edge_transport(const ConnectionField& cf, Cx z0, Cx z1, int steps) {
  Mat P = Mat::Identity(cf.rep.dim, cf.rep.dim);
  Cx dz = (z1 - z0) / double(steps);
  for (int k = 0; k < steps; ++k) {
    Cx mid = z0 + (k + 0.5) * dz;
    Mat A = -cf.a_along(mid, dz);
    P = A.exp() * P;
  }
  return P;
}

}  // namespace

double loop_deviation(const ConnectionField& cf, Cx center, double side, int steps) {
  double s = side / 2;
  Cx c1 = center + Cx(-s, -s), c2 = center + Cx(s, -s), c3 = center + Cx(s, s),
     c4 = center + Cx(-s, s);
  Mat P = edge_transport(cf, c4, c1, steps + 3) * edge_transport(cf, c3, c4, steps + 2) *
          edge_transport(cf, c2, c3, steps + 1) * edge_transport(cf, c1, c2, steps);
  return (P - Mat::Identity(cf.rep.dim, cf.rep.dim)).norm();
}

namespace {

Mat ext_edge_z(const ConnectionField& cf, Cx z0, Cx z1, double t, int steps) {
  Mat P = Mat::Identity(cf.rep.dim, cf.rep.dim);
  Cx dz = (z1 - z0) / double(steps);
  for (int k = 0; k < steps; ++k) {
    Cx mid = z0 + (k + 0.5) * dz;
    Mat A = -(cf.a_z_ext(mid, t) * dz + cf.a_zbar_ext(mid, t) * std::conj(dz));
    P = A.exp() * P;
  }
  return P;
}

Mat ext_edge_t(const ConnectionField& cf, double t0, double t1) {
  Mat A = -cf.a_t() * (t1 - t0);
  return A.exp();  // A_t is constant in t: exact
}

}  // namespace

double extended_loop_deviation(const ConnectionField& cf, Cx center, double t0, double side,
                               int steps) {
  double s = side / 2;
  Cx za = center - Cx(s, 0), zb = center + Cx(s, 0);
  double ta = t0 - s, tb = t0 + s;
  Mat P = ext_edge_t(cf, tb, ta) * ext_edge_z(cf, zb, za, tb, steps + 1) *
          ext_edge_t(cf, ta, tb) * ext_edge_z(cf, za, zb, ta, steps);
  return (P - Mat::Identity(cf.rep.dim, cf.rep.dim)).norm();
}

Mat fiber_involution_adjoint(const ConnectionField& cf, Cx z) {
  if (cf.rep.kind != RepKind::adjoint)
    throw std::invalid_argument("fiber involution needs the adjoint representation");
  const auto& a = cf.ctx->alg;
  const auto& p = cf.ctx->prin;
  const int l = a.rs.rank;
  double H = hyp_density(z);
  Mat U = Mat::Zero(a.dim, a.dim);
  for (int i = 0; i < l; ++i) U(i, i) = -1;
  for (size_t r = 0; r < a.rs.roots.size(); ++r) {
    int nr = a.rs.negative_of(static_cast<int>(r));
    U(l + nr, l + r) = -to_double(p.chi[r]) * std::pow(H, -a.rs.heights[r]);
  }
  return U;
}

double extended_mc_dt_residual(const ConnectionField& cf, Cx z) {
  Mat U = fiber_involution_adjoint(cf, z);
  Mat lhs = U.inverse() * (U * cf.Mh - cf.Mh * U);
  Mat rhs = 2.0 * cf.Mh;
  return (lhs - rhs).norm() / std::max(1.0, rhs.norm());
}

InvolutionSample developed_involution(const ConnectionField& cf, Cx z, double tol) {
  std::vector<Cx> path = {Cx(0, 0), z};
  FrameCurve fc = integrate_frame(cf, path, tol);
  Mat T = fc.frames.back().inverse();  // transport fiber_z -> fiber_0
  Mat U = fiber_involution_adjoint(cf, z);
  Mat dev = T * U * T.conjugate().inverse();
  double res = (dev * dev.conjugate() - Mat::Identity(dev.rows(), dev.cols())).norm();
  return {z, dev, res};
}

namespace {

// Conjugate-linear fiber involution of the rank-2 fundamental SL2 bundle:
// J(s) = A(z) conj(s) with A = [[0, sqrt(2) H^{1/2}], [-H^{-1/2}/sqrt(2), 0]].
Eigen::Matrix2cd sl2_fiber_involution(Cx z) {
  double H = hyp_density(z);
  Eigen::Matrix2cd A;
  A << 0.0, std::sqrt(2.0) * std::sqrt(H), -1.0 / (std::sqrt(2.0) * std::sqrt(H)), 0.0;
  return A;
}

}  // namespace

SurfaceSample ep_point_pgl2(const ConnectionField& cf, Cx z, double tol) {
  if (!cf.ctx->is_sl2() || cf.rep.kind != RepKind::fundamental)
    throw std::invalid_argument("ep_point_pgl2 needs the SL2 fundamental connection");
  std::vector<Cx> path = {Cx(0, 0), z};
  FrameCurve fc = integrate_frame(cf, path, tol);
  Eigen::Matrix2cd T = fc.frames.back().inverse();
  Eigen::Matrix2cd A = sl2_fiber_involution(z);
  Eigen::Matrix2cd dev = T * A * T.conjugate().inverse();
  double res = (dev * dev.conjugate() + Eigen::Matrix2cd::Identity()).norm();  // J^2 = -1
  Eigen::Matrix2cd Om;
  Om << 0, 1, -1, 0;
  Eigen::Matrix2cd P = Om * dev;
  res = std::max(res, (P - P.adjoint()).norm() / std::max(1.0, P.norm()));
  P = 0.5 * (P + P.adjoint());  // hermitianize
  if (P(1, 1).real() < 0) P = -P;
  double det = (P(0, 0) * P(1, 1) - P(0, 1) * P(1, 0)).real();
  if (det <= 0) throw std::logic_error("non-definite hermitian form from involution");
  P /= std::sqrt(det);
  SurfaceSample s;
  s.z = z;
  s.w = P(0, 1) / P(1, 1).real();
  s.t = 1.0 / P(1, 1).real();
  s.residual = res;
  return s;
}

std::vector<SurfaceSample> ep_surface_pgl2(const ConnectionField& cf,
                                           const std::vector<Cx>& grid, double tol) {
  std::vector<SurfaceSample> out(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) out[i] = ep_point_pgl2(cf, grid[i], tol);
  return out;
}

std::vector<double> transversality_orders(const ConnectionField& cf, Cx z0, Cx ray_dir,
                                          double ray_len, int samples) {
  if (cf.rep.kind != RepKind::fundamental)
    throw std::invalid_argument("transversality orders need the fundamental representation");
  if (ray_len < 1e-6 || samples < 4) throw RayTooShort("ray too short for a slope estimate");
  Cx dir = ray_dir / std::abs(ray_dir);
  const int n = cf.rep.dim;
  std::vector<double> logs(samples), logsig;
  std::vector<std::vector<double>> sig(n - 1, std::vector<double>(samples));
  for (int k = 0; k < samples; ++k) {
    double s = ray_len * std::pow(10.0, -double(samples - 1 - k) / (samples - 1));
    logs[k] = std::log(s);
    std::vector<Cx> path = {z0, z0 + s * dir};
    FrameCurve fc = integrate_lift(cf, path, 1e-12);
    const Mat& G = fc.frames.back();
    for (int i = 1; i < n; ++i) {
      // minor on rows 2..i+1, cols 1..i
      Mat m(i, i);
      for (int r = 0; r < i; ++r)
        for (int c = 0; c < i; ++c) m(r, c) = G(r + 1, c);
      sig[i - 1][k] = std::abs(Cx(m.determinant()));
    }
  }
  std::vector<double> orders;
  for (int i = 0; i + 1 < n; ++i) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = samples;
    for (int k = 0; k < m; ++k) {
      double x = logs[k], y = std::log(std::max(sig[i][k], 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    orders.push_back((m * sxy - sx * sy) / (m * sxx - sx * sx));
  }
  return orders;
}

}  // namespace operlab
