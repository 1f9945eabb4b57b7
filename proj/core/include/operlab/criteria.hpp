#pragma once

#include <functional>

#include "operlab/epgeom.hpp"

namespace operlab {

struct EmptyGrid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Status { certified, inconclusive, precondition_failed };
enum class Which { general, cyclic, cauchy };

// One evaluated sufficient-condition inequality. These are one-directional:
// "inconclusive" never claims the holonomy is not Anosov.
struct CriterionReport {
  double lhs = 0, rhs = 0, margin = 0;
  Status status = Status::inconclusive;
  Which which = Which::general;
  bool angle_condition_ok = false;
};

const char* status_name(Status s);

CriterionReport criterion_general(const OperPoint& op, bool simplified = false);
CriterionReport criterion_cyclic(const OperPoint& op);  // throws Sl2Error / NotCyclic

// Injectivity-radius criterion for cyclic opers: certified iff
// sup_norm^2 <= (-(m_l + C) + sqrt((m_l + C)^2 + 16 c_l k(e,f) cos^4 phi_theta)) / c_l.
CriterionReport criterion_cauchy(const AlgebraContext& ctx, double sup_norm, double inj);
double cauchy_threshold_sq(const AlgebraContext& ctx, double inj);

// Closed-form cyclic margin at constant norm t with vanishing gradient, and the
// bisection root r* (largest certified constant norm). r* > 0 for every type != sl2.
double cyclic_margin_const(const AlgebraContext& ctx, double t);
double cyclic_threshold(const AlgebraContext& ctx, double tol = 1e-9);

// Connected-component witness: certified at every homotopy level t = k/levels, k = 1..levels.
bool homotopy_certified(const std::function<bool(double)>& certified_at, int levels);

struct GridPointReport {
  Cx z;
  CriterionReport rep;
};

struct GridReport {
  std::vector<GridPointReport> points;  // at t = 1
  bool aggregate_certified = false;
  bool pointwise_certified = false;     // all points certified at t = 1
  double min_margin = 0;
  double max_margin = 0;
  int homotopy_levels = 16;
};

// Evaluate the chosen criterion over a square grid in the disk plus the straight-line
// homotopy witness t*alpha, t in (0,1], at `levels` samples.
GridReport certify_grid(std::shared_ptr<const AlgebraContext> ctx,
                        const std::vector<DiskDifferential>& alphas, int grid_n,
                        bool use_cyclic, bool simplified = false, int levels = 16,
                        double grid_radius = -1.0);

}  // namespace operlab
