#ifndef GK_CHART_HPP
#define GK_CHART_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>
#include <Eigen/Dense>

#include "gk/jet.hpp"
#include "gk/sampler.hpp"

namespace gk {

// Fields are plain callables over jet coordinates; evaluating them with
// seeded jets yields exact directional derivatives.
using ScalarFn = std::function<D2(const JVec&)>;
// vector fields, coordinate maps, algebra-valued sections
using VecFn = std::function<JVec(const JVec&)>;
// metrics (n x n), algebra-valued 1-forms (d x n), group-valued maps (m x m)
using MatFn = std::function<JMat(const JVec&)>;

// Open axis-aligned box acting as a coordinate chart. `margin` is the
// interior shrink factor used when drawing sample points.
struct Chart {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
  double margin = 0.1;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const Eigen::VectorXd& x) const;
  void require_inside(const Eigen::VectorXd& x, const char* op) const;
  Eigen::VectorXd sample(Sampler& rng) const;

  static Chart box(std::initializer_list<double> lo, std::initializer_list<double> hi,
                   double margin = 0.1);
};

struct ChartTransition {
  int from = 0;
  int to = 0;
  VecFn forward;  // coordinates of chart `to` as a function of chart `from`
  std::function<bool(const Eigen::VectorXd&)> overlap;  // in `from` coordinates
};

struct Atlas {
  std::vector<Chart> charts;
  std::vector<ChartTransition> transitions;

  int dim() const { return charts.front().dim(); }
  int chart_count() const { return static_cast<int>(charts.size()); }
  const ChartTransition* find_transition(int from, int to) const;
  // Draw a point of `from`-chart overlap with `to`; empty if none found.
  std::optional<Eigen::VectorXd> sample_overlap(int from, int to, Sampler& rng,
                                                int max_tries = 200) const;
};

// d/dt f(x + t v) at t = 0, exact via jets.
double directional_derivative(const ScalarFn& f, const Chart& chart,
                              const Eigen::VectorXd& x, const Eigen::VectorXd& v);
Eigen::VectorXd directional_derivative(const VecFn& f, const Chart& chart,
                                       const Eigen::VectorXd& x, const Eigen::VectorXd& v);

// [X1, X2] = (DX2) X1 - (DX1) X2 in chart coordinates.
Eigen::VectorXd lie_bracket_base(const VecFn& x1, const VecFn& x2, const Chart& chart,
                                 const Eigen::VectorXd& x);

// d(eta)(v, w) for an algebra-valued 1-form given as a (rows x n) matrix
// field, with v, w extended as constant coordinate fields.
Eigen::VectorXd exterior_derivative_oneform(const MatFn& eta, const Chart& chart,
                                            const Eigen::VectorXd& x,
                                            const Eigen::VectorXd& v,
                                            const Eigen::VectorXd& w);

// (L_X g)(v, w) with v, w extended as constant coordinate fields:
//   X g(V, W) + g((DX) v, W) + g(V, (DX) w)
double lie_derivative_metric_base(const VecFn& x_field, const MatFn& g, const Chart& chart,
                                  const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                                  const Eigen::VectorXd& w);

double metric_eval_base(const MatFn& g, const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                        const Eigen::VectorXd& w);

// Coordinate basis plus `extra` seeded random directions.
std::vector<Eigen::VectorXd> probe_vectors(int n, Sampler& rng, int extra = 3);

// min eigenvalue over samples; a metric is accepted as SPD when this stays
// above 1e-10 and the asymmetry stays below 1e-12.
struct SpdCheck {
  double min_eigenvalue;
  double max_asymmetry;
};
SpdCheck check_metric_spd(const MatFn& g, const Chart& chart, Sampler& rng, int n_samples);

}  // namespace gk

#endif  // GK_CHART_HPP
