#include "operlab/criteria.hpp"

#include <cmath>

#include "operlab/parallel.hpp"

namespace operlab {

const char* status_name(Status s) {
  switch (s) {
    case Status::certified: return "certified";
    case Status::inconclusive: return "inconclusive";
    default: return "precondition-failed";
  }
}

CriterionReport criterion_general(const OperPoint& op, bool simplified) {
  const auto& ctx = *op.ctx;
  CriterionReport rep;
  rep.which = Which::general;
  double u = 1.0 - op.norm1() / 2.0;
  double tail = 0.25 * op.sum_norm_sq_tail();
  rep.angle_condition_ok =
      immersion_check(op) && u / std::sqrt(u * u + tail) >= ctx.cos_phi_min - 1e-15;

  if (!simplified) {
    rep.lhs = std::sqrt(op.sum_m_norm_sq() +
                        [&] {
                          double num = 0;
                          for (size_t i = 0; i < op.grad_norm.size(); ++i)
                            num += op.grad_norm[i] * op.grad_norm[i];
                          double cross = 0;
                          for (size_t i = 0; i < op.A.size(); ++i)
                            for (size_t j = i + 1; j < op.A.size(); ++j)
                              cross += std::norm(op.B[i] * op.A[j] - op.A[i] * op.B[j]);
                          return (num + 0.25 * cross) / (1.0 + 0.25 * op.sum_norm_sq());
                        }()) +
              0.5 * std::sqrt(quartic_sum(op));
    double bracket = ctx.cos_phi_S * std::abs(u) - ctx.sin_phi_S * std::sqrt(tail);
    rep.rhs = 2.0 * ctx.sqrt_kappa_ef * bracket * bracket;
    if (bracket < 0) rep.angle_condition_ok = false;
  } else {
    // Simplified form: looser LHS, RHS = 2 sqrt(k) cos^2(2 phi_S) * denominator.
    double sg = 0;
    for (double g : op.grad_norm) sg += g * g;
    rep.lhs = std::sqrt(op.sum_m_norm_sq() + sg) +
              0.5 * ctx.n_levels * ctx.c_gmax * op.sum_norm_sq();
    double cos2phi = 1.0 - 2.0 * ctx.sin_phi_S * ctx.sin_phi_S;
    rep.rhs = 2.0 * ctx.sqrt_kappa_ef * cos2phi * cos2phi * (u * u + tail);
  }
  rep.margin = rep.rhs - rep.lhs;
  if (!immersion_check(op)) {
    rep.status = Status::precondition_failed;
    rep.angle_condition_ok = false;
    return rep;
  }
  rep.status = (rep.margin >= 0 && rep.angle_condition_ok) ? Status::certified
                                                           : Status::inconclusive;
  return rep;
}

CriterionReport criterion_cyclic(const OperPoint& op) {
  const auto& ctx = *op.ctx;
  if (ctx.is_sl2()) throw Sl2Error("cyclic criterion requires g != sl2");
  if (!op.is_cyclic()) throw NotCyclic("cyclic criterion requires cyclic data");
  CriterionReport rep;
  rep.which = Which::cyclic;
  double n = op.norm.back(), g = op.grad_norm.back();
  int ml = ctx.levels.back();
  rep.lhs = 2.0 * ml * n * n + 2.0 * g * g / (1.0 + 0.25 * n * n) +
            n * n * n * n * ctx.c_llll;
  double bracket = ctx.cos_phi_S - ctx.sin_phi_S * n / 2.0;
  rep.rhs = 16.0 * ctx.kappa_ef * bracket * bracket * bracket * bracket;
  rep.angle_condition_ok = 1.0 / std::sqrt(1.0 + 0.25 * n * n) >= ctx.cos_phi_min - 1e-15;
  if (bracket < 0) rep.angle_condition_ok = false;
  rep.margin = rep.rhs - rep.lhs;
  rep.status = (rep.margin >= 0 && rep.angle_condition_ok) ? Status::certified
                                                           : Status::inconclusive;
  return rep;
}

double cauchy_threshold_sq(const AlgebraContext& ctx, double inj) {
  int ml = ctx.levels.back();
  double C = cauchy_C(ml + 1, inj).value;
  double cl = ctx.c_llll;
  double b = ml + C;
  return (-b + std::sqrt(b * b + 16.0 * cl * ctx.kappa_ef * ctx.cos4_phi_theta)) / cl;
}

CriterionReport criterion_cauchy(const AlgebraContext& ctx, double sup_norm, double inj) {
  if (ctx.is_sl2()) throw Sl2Error("cauchy criterion requires g != sl2");
  CriterionReport rep;
  rep.which = Which::cauchy;
  rep.lhs = sup_norm * sup_norm;
  rep.rhs = cauchy_threshold_sq(ctx, inj);
  rep.margin = rep.rhs - rep.lhs;
  rep.angle_condition_ok = true;
  rep.status = rep.margin >= 0 ? Status::certified : Status::inconclusive;
  return rep;
}

double cyclic_margin_const(const AlgebraContext& ctx, double t) {
  int ml = ctx.levels.back();
  double lhs = 2.0 * ml * t * t + ctx.c_llll * t * t * t * t;
  double bracket = ctx.cos_phi_S - ctx.sin_phi_S * t / 2.0;
  double rhs = bracket >= 0 ? 16.0 * ctx.kappa_ef * std::pow(bracket, 4) : 0.0;
  return rhs - lhs;
}

double cyclic_threshold(const AlgebraContext& ctx, double tol) {
  if (ctx.is_sl2()) throw Sl2Error("cyclic threshold requires g != sl2");
  double lo = 0.0, hi = 1e-3;
  while (cyclic_margin_const(ctx, hi) > 0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9) throw std::logic_error("no cyclic threshold found");
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (cyclic_margin_const(ctx, mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

bool homotopy_certified(const std::function<bool(double)>& certified_at, int levels) {
  for (int k = 1; k <= levels; ++k)
    if (!certified_at(double(k) / levels)) return false;
  return true;
}

GridReport certify_grid(std::shared_ptr<const AlgebraContext> ctx,
                        const std::vector<DiskDifferential>& alphas, int grid_n,
                        bool use_cyclic, bool simplified, int levels, double grid_radius) {
  if (grid_n <= 0) throw EmptyGrid("grid size must be positive");
  double rmax = 1.0;
  for (const auto& a : alphas) rmax = std::min(rmax, a.r_max);
  if (grid_radius > 0) rmax = std::min(rmax, grid_radius);

  std::vector<Cx> pts;
  for (int i = 0; i < grid_n; ++i)
    for (int j = 0; j < grid_n; ++j) {
      double x = grid_n == 1 ? 0.0 : -rmax + 2.0 * rmax * i / (grid_n - 1);
      double y = grid_n == 1 ? 0.0 : -rmax + 2.0 * rmax * j / (grid_n - 1);
      Cx z(x, y);
      if (std::abs(z) <= rmax) pts.push_back(z);
    }
  if (pts.empty()) throw EmptyGrid("no grid points inside the disk");

  auto eval = [&](double t, Cx z) {
    std::vector<DiskDifferential> scaled;
    scaled.reserve(alphas.size());
    for (const auto& a : alphas) scaled.push_back(a.scaled(t));
    OperPoint op = OperPoint::at(ctx, scaled, z);
    return use_cyclic ? criterion_cyclic(op) : criterion_general(op, simplified);
  };

  GridReport rep;
  rep.homotopy_levels = levels;
  rep.points.resize(pts.size());
  parallel_for(pts.size(), [&](size_t i) { rep.points[i] = {pts[i], eval(1.0, pts[i])}; });

  rep.pointwise_certified = true;
  rep.min_margin = rep.points.front().rep.margin;
  rep.max_margin = rep.min_margin;
  for (const auto& p : rep.points) {
    rep.pointwise_certified &= p.rep.status == Status::certified;
    rep.min_margin = std::min(rep.min_margin, p.rep.margin);
    rep.max_margin = std::max(rep.max_margin, p.rep.margin);
  }

  rep.aggregate_certified = rep.pointwise_certified;
  if (rep.aggregate_certified) {
    // connected-component witness along t * alpha
    std::vector<char> level_ok(levels, 0);
    parallel_for(static_cast<size_t>(levels), [&](size_t k) {
      double t = double(k + 1) / levels;
      bool ok = true;
      for (const auto& z : pts)
        if (eval(t, z).status != Status::certified) {
          ok = false;
          break;
        }
      level_ok[k] = ok;
    });
    for (char ok : level_ok) rep.aggregate_certified &= static_cast<bool>(ok);
  }
  return rep;
}

}  // namespace operlab
