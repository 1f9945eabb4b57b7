#include "operlab/epgeom.hpp"

#include <cmath>

namespace operlab {

double AlgebraContext::herm_sq(const std::vector<std::complex<double>>& x) const {
  auto tx = adapted_theta(alg, prin, x);
  Cx v = -alg.killing(x, tx);
  return v.real();
}

std::shared_ptr<const AlgebraContext> AlgebraContext::build(LieType t) {
  auto ctx = std::make_shared<AlgebraContext>();
  ctx->type = t;
  ctx->alg = build_chevalley(build_root_system(t));
  ctx->prin = principal_triple(ctx->alg);
  ctx->basis = highest_weight_basis(ctx->alg, ctx->prin);
  ctx->ct = std::make_unique<CTensor>(ctx->alg, ctx->prin, ctx->basis);
  ctx->orbits = weyl_orbits(ctx->alg.rs);

  ctx->kappa_ef = to_double(ctx->prin.kappa_ef);
  ctx->sqrt_kappa_ef = std::sqrt(ctx->kappa_ef);
  const auto& rs = ctx->alg.rs;
  int short_orbit = ctx->orbits.count == 2 ? 1 : 0;
  double s2 = to_double(sin_phi_orbit(rs, ctx->prin, ctx->orbits, short_orbit));
  ctx->sin_phi_S = std::sqrt(s2);
  ctx->cos_phi_S = std::sqrt(std::max(0.0, 1.0 - s2));
  ctx->cos_phi_min = std::sqrt(std::max(0.0, 1.0 - to_double(phi_min(rs, ctx->prin))));
  double st2 = to_double(sin_phi_theta(rs, ctx->prin));
  double ct2 = std::max(0.0, 1.0 - st2);
  ctx->cos4_phi_theta = ct2 * ct2;
  ctx->levels = ctx->prin.exponents;
  ctx->n_levels = static_cast<int>(ctx->levels.size());
  for (int m : ctx->levels) ctx->degrees.push_back(m + 1);
  int L = ctx->n_levels;
  ctx->c_llll = ctx->ct->value(L, L, L, L);
  ctx->c_gmax = ctx->ct->max_sqrt_abs();
  return ctx;
}

OperPoint OperPoint::at(std::shared_ptr<const AlgebraContext> ctx,
                        const std::vector<DiskDifferential>& alphas, Cx z) {
  if (static_cast<int>(alphas.size()) != ctx->n_levels)
    throw std::invalid_argument("expected one differential per exponent");
  OperPoint op;
  op.ctx = std::move(ctx);
  op.z = z;
  op.H = hyp_density(z);
  int L = op.ctx->n_levels;
  for (int i = 0; i < L; ++i) {
    if (alphas[i].degree != op.ctx->degrees[i])
      throw std::invalid_argument("differential " + std::to_string(i + 1) +
                                  " must have degree " + std::to_string(op.ctx->degrees[i]));
    if (std::abs(z) > alphas[i].r_max + 1e-12) throw OutsideDomain("z outside r_max");
    Cx v = alphas[i].eval(z);
    ChernDerivative cd{&alphas[i]};
    Cx g = cd.value(z);
    int m = op.ctx->levels[i];
    double wv = std::pow(op.H, (m + 1) / 2.0), wg = std::pow(op.H, (m + 2) / 2.0);
    op.value.push_back(v);
    op.grad_value.push_back(g);
    op.A.push_back(v / wv);
    op.B.push_back(g / wg);
    op.norm.push_back(std::abs(v) / wv);
    op.grad_norm.push_back(std::abs(g) / wg);
  }
  return op;
}

OperPoint OperPoint::from_normalized(std::shared_ptr<const AlgebraContext> ctx, Cx z,
                                     const std::vector<Cx>& A, const std::vector<Cx>& B) {
  OperPoint op;
  op.ctx = std::move(ctx);
  op.z = z;
  op.H = hyp_density(z);
  int L = op.ctx->n_levels;
  if (static_cast<int>(A.size()) != L || static_cast<int>(B.size()) != L)
    throw std::invalid_argument("normalized value count mismatch");
  op.A = A;
  op.B = B;
  for (int i = 0; i < L; ++i) {
    int m = op.ctx->levels[i];
    op.value.push_back(A[i] * std::pow(op.H, (m + 1) / 2.0));
    op.grad_value.push_back(B[i] * std::pow(op.H, (m + 2) / 2.0));
    op.norm.push_back(std::abs(A[i]));
    op.grad_norm.push_back(std::abs(B[i]));
  }
  return op;
}

bool OperPoint::is_cyclic(double tol) const {
  for (size_t i = 0; i + 1 < norm.size(); ++i)
    if (norm[i] > tol || grad_norm[i] > tol) return false;
  return true;
}

double OperPoint::sum_norm_sq() const {
  double s = 0;
  for (double n : norm) s += n * n;
  return s;
}
double OperPoint::sum_m_norm_sq() const {
  double s = 0;
  for (size_t i = 0; i < norm.size(); ++i) s += ctx->levels[i] * norm[i] * norm[i];
  return s;
}
double OperPoint::norm1() const { return norm.front(); }
double OperPoint::sum_norm_sq_tail() const {
  double s = 0;
  for (size_t i = 1; i < norm.size(); ++i) s += norm[i] * norm[i];
  return s;
}

MetricAtPoint induced_metric(const OperPoint& op) {
  MetricAtPoint g;
  g.a = 4.0 * op.ctx->kappa_ef * op.value.front();
  g.b = 8.0 * op.ctx->kappa_ef * op.H * (1.0 + 0.25 * op.sum_norm_sq());
  return g;
}

bool immersion_check(const OperPoint& op) {
  const double tol = 1e-12;
  if (std::abs(op.norm1() - 2.0) > tol) return true;
  for (size_t i = 1; i < op.value.size(); ++i)
    if (std::abs(op.value[i]) > tol) return true;
  return false;
}

double regularity_margin(const OperPoint& op) {
  if (!immersion_check(op)) throw NotImmersed("EP surface is not immersed at z");
  double u = 1.0 - op.norm1() / 2.0;
  double t = 0.25 * op.sum_norm_sq_tail();
  return u / std::sqrt(u * u + t) - op.ctx->cos_phi_min;
}

double quartic_sum(const OperPoint& op) {
  const auto& ctx = *op.ctx;
  int L = ctx.n_levels;
  std::vector<Cx> T(ctx.alg.dim, Cx(0, 0));
  for (int i = 1; i <= L; ++i)
    for (int j = 1; j <= L; ++j) {
      Cx w = op.A[i - 1] * std::conj(op.A[j - 1]);
      if (w == Cx(0, 0)) continue;
      const auto& P = ctx.ct->pair_vec(i, j);
      for (size_t k = 0; k < P.size(); ++k)
        if (P[k] != 0.0) T[k] += w * P[k];
    }
  double q = ctx.herm_sq(T);
  double scale = 1.0;
  for (double n : op.norm) scale = std::max(scale, n * n);
  if (q < -1e-10 * scale * scale)
    throw NegativeRadicand("quartic form evaluated negative: " + std::to_string(q));
  return std::max(q, 0.0);
}

double second_form_cyclic_sq(const OperPoint& op) {
  if (op.ctx->is_sl2()) throw Sl2Error("cyclic second form requires g != sl2");
  if (!op.is_cyclic()) throw NotCyclic("requires cyclic data (only the top differential)");
  double n = op.norm.back(), g = op.grad_norm.back();
  int ml = op.ctx->levels.back();
  double H = op.H, k = op.ctx->kappa_ef;
  return H * H * k / 16.0 *
         (2.0 * ml * n * n + 2.0 * g * g / (1.0 + 0.25 * n * n) +
          n * n * n * n * op.ctx->c_llll);
}

namespace {
double grad_quotient(const OperPoint& op) {
  double num = 0;
  int L = static_cast<int>(op.norm.size());
  for (int i = 0; i < L; ++i) num += op.grad_norm[i] * op.grad_norm[i];
  double cross = 0;
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L; ++j)
      cross += std::norm(op.B[i] * op.A[j] - op.A[i] * op.B[j]);
  num += 0.25 * cross;
  return num / (1.0 + 0.25 * op.sum_norm_sq());
}
}  // namespace

double second_form_general_bound_sq(const OperPoint& op) {
  double H = op.H, k = op.ctx->kappa_ef;
  double first = std::sqrt(op.sum_m_norm_sq() + grad_quotient(op));
  double second = 0.5 * std::sqrt(quartic_sum(op));
  double s = first + second;
  return H * H * k / 4.0 * s * s;
}

double rlc_term(const OperPoint& op) {
  double H = op.H, k = op.ctx->kappa_ef;
  return 4.0 * H * H * k * (1.0 - 0.5 * op.sum_m_norm_sq() + quartic_sum(op) / 16.0);
}

double rg_bound(const OperPoint& op) {
  double H = op.H, k = op.ctx->kappa_ef;
  return 4.0 * k * H * H * (1.0 - 0.25 * op.sum_m_norm_sq() + 0.25 * grad_quotient(op));
}

double curvature_comparison(double k_gbar, double a_norm_sq, double grad_a_norm_sq) {
  double den = 1.0 - 4.0 * a_norm_sq;
  if (den <= 0) throw DegenerateMetric("1 - 4|a|^2 <= 0");
  // Norms here follow the |alpha|^2 / beta^l convention used everywhere in this
  // library; the gradient coefficient is then 2 (it reads 4 in the Riemannian
  // weight g_{zzbar} = beta/2, the two being off by the factor noted under the
  // Bochner identity).
  return k_gbar / den + 2.0 * grad_a_norm_sq / (den * den);
}

double curvature_comparison(const DiskDifferential& a, Cx z) {
  if (a.degree != 2) throw std::invalid_argument("a must be a quadratic differential");
  double n = hyp_norm(a, z);
  ChernDerivative cd{&a};
  double g = cd.norm(z);
  return curvature_comparison(-2.0, n * n, g * g);
}

Cx mixed_pairing_diagnostic(const OperPoint& op) {
  const auto& ctx = *op.ctx;
  const auto& a = ctx.alg;
  Cx total(0, 0);
  for (int i = 0; i < ctx.n_levels; ++i)
    for (int j = 0; j < ctx.n_levels; ++j)
      for (int k = 0; k < ctx.n_levels; ++k) {
        if (ctx.levels[i] - 1 != ctx.levels[j] - ctx.levels[k]) continue;
        auto left = a.bracket(ctx.basis.v[i], ctx.prin.f);
        auto right = a.bracket(adapted_theta(a, ctx.prin, ctx.basis.v[j]), ctx.basis.v[k]);
        double kk = to_double(a.killing(left, right)) * ctx.basis.scale[i] *
                    ctx.basis.scale[j] * ctx.basis.scale[k];
        total += 0.5 * op.A[i] * std::conj(op.A[j]) * op.A[k] * kk;
      }
  return total;
}

Sl2SecondForm sl2_second_form(Cx alpha1_value, double H) {
  // II = -(alpha1 dz^2 + H ||alpha1||^2 dz dzbar + conj) (x) h. The mixed-term sign
  // is fixed by <II_zz, II_zzbar> being a positive multiple of alpha1, and matches
  // the finite-difference shape of the developed PGL2 surface.
  double nsq = std::norm(alpha1_value) / (H * H);
  return {-alpha1_value, -H * nsq};
}

}  // namespace operlab
