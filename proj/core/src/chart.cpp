#include "gk/chart.hpp"

#include <sstream>

#include "gk/errors.hpp"

namespace gk {

bool Chart::contains(const Eigen::VectorXd& x) const {
  if (x.size() != lo.size()) return false;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

void Chart::require_inside(const Eigen::VectorXd& x, const char* op) const {
  if (!contains(x)) {
    std::ostringstream oss;
    oss << op << ": point (" << x.transpose() << ") outside chart box";
    throw DomainError(oss.str());
  }
}

Eigen::VectorXd Chart::sample(Sampler& rng) const {
  Eigen::VectorXd x(lo.size());
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    const double w = hi[i] - lo[i];
    x[i] = lo[i] + w * (margin + (1.0 - 2.0 * margin) * rng.uniform());
  }
  return x;
}

Chart Chart::box(std::initializer_list<double> lo_list, std::initializer_list<double> hi_list,
                 double margin) {
  Chart c;
  c.lo = Eigen::Map<const Eigen::VectorXd>(lo_list.begin(), lo_list.size());
  c.hi = Eigen::Map<const Eigen::VectorXd>(hi_list.begin(), hi_list.size());
  c.margin = margin;
  for (Eigen::Index i = 0; i < c.lo.size(); ++i)
    if (!(c.lo[i] < c.hi[i])) throw std::invalid_argument("Chart::box: empty box");
  return c;
}

const ChartTransition* Atlas::find_transition(int from, int to) const {
  for (const auto& t : transitions)
    if (t.from == from && t.to == to) return &t;
  return nullptr;
}

std::optional<Eigen::VectorXd> Atlas::sample_overlap(int from, int to, Sampler& rng,
                                                     int max_tries) const {
  const ChartTransition* t = find_transition(from, to);
  if (!t) return std::nullopt;
  for (int i = 0; i < max_tries; ++i) {
    Eigen::VectorXd x = charts[from].sample(rng);
    if (!t->overlap || t->overlap(x)) {
      Eigen::VectorXd y = val(t->forward(jet_point(x)));
      if (charts[to].contains(y)) return x;
    }
  }
  return std::nullopt;
}

double directional_derivative(const ScalarFn& f, const Chart& chart,
                              const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
  chart.require_inside(x, "directional_derivative");
  return d_out(f(jet_dir(x, v)));
}

Eigen::VectorXd directional_derivative(const VecFn& f, const Chart& chart,
                                       const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
  chart.require_inside(x, "directional_derivative");
  return d_out(f(jet_dir(x, v)));
}

Eigen::VectorXd lie_bracket_base(const VecFn& x1, const VecFn& x2, const Chart& chart,
                                 const Eigen::VectorXd& x) {
  chart.require_inside(x, "lie_bracket_base");
  const Eigen::VectorXd v1 = val(x1(jet_point(x)));
  const Eigen::VectorXd v2 = val(x2(jet_point(x)));
  return d_out(x2(jet_dir(x, v1))) - d_out(x1(jet_dir(x, v2)));
}

Eigen::VectorXd exterior_derivative_oneform(const MatFn& eta, const Chart& chart,
                                            const Eigen::VectorXd& x,
                                            const Eigen::VectorXd& v,
                                            const Eigen::VectorXd& w) {
  chart.require_inside(x, "exterior_derivative_oneform");
  const Eigen::MatrixXd d_along_v = d_out(eta(jet_dir(x, v)));
  const Eigen::MatrixXd d_along_w = d_out(eta(jet_dir(x, w)));
  return d_along_v * w - d_along_w * v;
}

double metric_eval_base(const MatFn& g, const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                        const Eigen::VectorXd& w) {
  return v.dot(val(g(jet_point(x))) * w);
}

double lie_derivative_metric_base(const VecFn& x_field, const MatFn& g, const Chart& chart,
                                  const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                                  const Eigen::VectorXd& w) {
  chart.require_inside(x, "lie_derivative_metric_base");
  const Eigen::VectorXd xv = val(x_field(jet_point(x)));
  const double dg = v.dot(d_out(g(jet_dir(x, xv))) * w);
  const Eigen::VectorXd dx_v = d_out(x_field(jet_dir(x, v)));
  const Eigen::VectorXd dx_w = d_out(x_field(jet_dir(x, w)));
  const Eigen::MatrixXd gx = val(g(jet_point(x)));
  return dg + dx_v.dot(gx * w) + v.dot(gx * dx_w);
}

std::vector<Eigen::VectorXd> probe_vectors(int n, Sampler& rng, int extra) {
  std::vector<Eigen::VectorXd> probes;
  for (int i = 0; i < n; ++i) probes.push_back(Eigen::VectorXd::Unit(n, i));
  for (int i = 0; i < extra; ++i) probes.push_back(rng.uniform_vector(n, -1.0, 1.0));
  return probes;
}

SpdCheck check_metric_spd(const MatFn& g, const Chart& chart, Sampler& rng, int n_samples) {
  SpdCheck out{std::numeric_limits<double>::max(), 0.0};
  for (int i = 0; i < n_samples; ++i) {
    const Eigen::MatrixXd gx = val(g(jet_point(chart.sample(rng))));
    out.max_asymmetry = std::max(out.max_asymmetry, (gx - gx.transpose()).norm());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (gx + gx.transpose()));
    out.min_eigenvalue = std::min(out.min_eigenvalue, es.eigenvalues().minCoeff());
  }
  return out;
}

}  // namespace gk
