#include "gk/lie_group.hpp"

#include <cmath>
#include <stdexcept>

#include "gk/errors.hpp"

namespace gk {

namespace {

// C = X + iY  ->  [[X, -Y], [Y, X]]
Eigen::MatrixXd realify(const Eigen::MatrixXcd& c) {
  const Eigen::Index n = c.rows();
  Eigen::MatrixXd m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = c.real();
  m.topRightCorner(n, n) = -c.imag();
  m.bottomLeftCorner(n, n) = c.imag();
  m.bottomRightCorner(n, n) = c.real();
  return m;
}

Eigen::MatrixXcd derealify(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows() / 2;
  Eigen::MatrixXcd c(n, n);
  c.real() = m.topLeftCorner(n, n);
  c.imag() = m.bottomLeftCorner(n, n);
  return c;
}

Eigen::MatrixXd realified_i(int mc) {
  return realify(Eigen::MatrixXcd::Identity(mc, mc) * std::complex<double>(0, 1));
}

Eigen::MatrixXd denman_beavers_sqrt(const Eigen::MatrixXd& a) {
  Eigen::MatrixXd y = a;
  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  for (int it = 0; it < 30; ++it) {
    Eigen::MatrixXd yn = 0.5 * (y + z.inverse());
    Eigen::MatrixXd zn = 0.5 * (z + y.inverse());
    y = yn;
    z = zn;
    if ((y * y - a).norm() < 1e-15 * (1.0 + a.norm())) break;
  }
  return y;
}

}  // namespace

LieGroup LieGroup::circle() {
  LieGroup g;
  g.family_ = GroupFamily::Unitary;
  g.name_ = "U(1)";
  g.mc_ = 1;
  g.m_ = 2;
  g.d_ = 1;
  Eigen::MatrixXd e(2, 2);
  e << 0, -1, 1, 0;
  g.basis_ = {e};
  g.averaging_set_ = {Eigen::MatrixXd::Identity(2, 2)};
  g.finalize();
  return g;
}

LieGroup LieGroup::special_orthogonal(int n) {
  if (n < 2) throw std::invalid_argument("special_orthogonal: n must be >= 2");
  LieGroup g;
  g.family_ = GroupFamily::SpecialOrthogonal;
  g.name_ = "SO(" + std::to_string(n) + ")";
  g.m_ = n;
  g.d_ = n * (n - 1) / 2;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      e(q, p) = 1.0;
      e(p, q) = -1.0;
      g.basis_.push_back(e);
    }
  if (n == 2) {
    g.averaging_set_ = {Eigen::MatrixXd::Identity(2, 2)};
  } else {
    // even sign-diagonal subgroup: Ad averages to zero on so(n), n >= 3
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
      if (__builtin_popcountll(bits) % 2 != 0) continue;
      Eigen::VectorXd diag(n);
      for (int i = 0; i < n; ++i) diag[i] = (bits >> i) & 1 ? -1.0 : 1.0;
      g.averaging_set_.push_back(diag.asDiagonal());
    }
  }
  g.finalize();
  return g;
}

LieGroup LieGroup::special_unitary2() {
  LieGroup g;
  g.family_ = GroupFamily::SpecialUnitary;
  g.name_ = "SU(2)";
  g.mc_ = 2;
  g.m_ = 4;
  g.d_ = 3;
  using cd = std::complex<double>;
  const cd i(0, 1);
  Eigen::MatrixXcd s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -i, i, 0;
  s3 << 1, 0, 0, -1;
  // E_j = -(i/2) sigma_j gives [E_1, E_2] = E_3 cyclically
  g.basis_ = {realify(-0.5 * i * s1), realify(-0.5 * i * s2), realify(-0.5 * i * s3)};
  g.averaging_set_ = {Eigen::MatrixXd::Identity(4, 4)};
  g.finalize();
  for (int j = 0; j < 3; ++j)
    g.averaging_set_.push_back(g.exp(M_PI * Eigen::VectorXd::Unit(3, j)));
  return g;
}

void LieGroup::finalize() {
  // gram: negative trace form scaled so basis vectors have unit norm.
  const double s = -1.0 / (basis_[0] * basis_[0]).trace();
  gram_.resize(d_, d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) gram_(i, j) = -s * (basis_[i] * basis_[j]).trace();

  Eigen::MatrixXd fg(d_, d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) fg(i, j) = (basis_[i].transpose() * basis_[j]).trace();
  frob_gram_inv_ = fg.inverse();

  ad_basis_.resize(d_);
  for (int i = 0; i < d_; ++i) {
    ad_basis_[i].resize(d_, d_);
    for (int j = 0; j < d_; ++j) {
      Eigen::MatrixXd comm = basis_[i] * basis_[j] - basis_[j] * basis_[i];
      double res = 0.0;
      ad_basis_[i].col(j) = project(comm, &res);
      if (res > 1e-12)
        throw InternalConsistencyError(name_ + ": commutator leaves basis span");
    }
  }
}

Eigen::MatrixXd LieGroup::algebra_matrix(const Eigen::VectorXd& a) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(m_, m_);
  for (int i = 0; i < d_; ++i) m += a[i] * basis_[i];
  return m;
}

JMat LieGroup::algebra_matrix(const JVec& a) const {
  JMat m(m_, m_);
  m.setZero();
  for (int i = 0; i < d_; ++i)
    for (int c = 0; c < m_; ++c)
      for (int r = 0; r < m_; ++r) m(r, c) += a[i] * basis_[i](r, c);
  return m;
}

Eigen::VectorXd LieGroup::project(const Eigen::MatrixXd& m, double* residual) const {
  Eigen::VectorXd f(d_);
  for (int i = 0; i < d_; ++i) f[i] = (basis_[i].transpose() * m).trace();
  Eigen::VectorXd c = frob_gram_inv_ * f;
  if (residual) *residual = (m - algebra_matrix(c)).norm();
  return c;
}

JVec LieGroup::project(const JMat& m) const {
  JVec f(d_);
  for (int i = 0; i < d_; ++i) {
    D2 acc = d2_const(0.0);
    for (int c = 0; c < m_; ++c)
      for (int r = 0; r < m_; ++r) acc += basis_[i](r, c) * m(r, c);
    f[i] = acc;
  }
  JVec out(d_);
  for (int i = 0; i < d_; ++i) {
    D2 acc = d2_const(0.0);
    for (int j = 0; j < d_; ++j) acc += frob_gram_inv_(i, j) * f[j];
    out[i] = acc;
  }
  return out;
}

Eigen::MatrixXd LieGroup::exp(const Eigen::VectorXd& a) const {
  if (!a.allFinite()) throw std::invalid_argument("exp: non-finite algebra element");
  Eigen::MatrixXd x = algebra_matrix(a);
  // scaling and squaring with a fixed-order series on ||x/2^s|| <= 0.5
  int s = 0;
  double nrm = x.norm();
  while (nrm > 0.5 && s < 60) {
    x *= 0.5;
    nrm *= 0.5;
    ++s;
  }
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(m_, m_);
  Eigen::MatrixXd sum = term;
  for (int j = 1; j <= 18; ++j) {
    term = (term * x) / static_cast<double>(j);
    sum += term;
  }
  for (int j = 0; j < s; ++j) sum = sum * sum;
  return sum;
}

Eigen::VectorXd LieGroup::log(const Eigen::MatrixXd& k) const {
  const Eigen::MatrixXd id = identity();
  if ((k - id).norm() >= 1.0)
    throw PreconditionError("log: defined only on ||k - I|| < 1");
  Eigen::MatrixXd a = k;
  int s = 0;
  while ((a - id).norm() > 0.25 && s < 40) {
    a = denman_beavers_sqrt(a);
    ++s;
  }
  const Eigen::MatrixXd x = a - id;
  Eigen::MatrixXd term = x;
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(m_, m_);
  for (int j = 1; j <= 40; ++j) {
    sum += (j % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(j) * term;
    term = term * x;
  }
  sum *= std::pow(2.0, s);
  double res = 0.0;
  Eigen::VectorXd c = project(sum, &res);
  if (res > 1e-9) throw InternalConsistencyError("log: result leaves algebra span");
  return c;
}

Eigen::VectorXd LieGroup::adjoint(const Eigen::MatrixXd& k, const Eigen::VectorXd& a) const {
  Eigen::MatrixXd m = k * algebra_matrix(a) * k.transpose();
  double res = 0.0;
  Eigen::VectorXd c = project(m, &res);
  if (res > 1e-10 * (1.0 + a.norm()))
    throw InternalConsistencyError(name_ + ": Ad result leaves algebra span");
  return c;
}

JVec LieGroup::adjoint(const JMat& k, const JVec& a) const {
  JMat m = k * algebra_matrix(a) * k.transpose();
  return project(m);
}

Eigen::VectorXd LieGroup::bracket(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(d_);
  for (int i = 0; i < d_; ++i) out += a[i] * (ad_basis_[i] * b);
  return out;
}

JVec LieGroup::bracket(const JVec& a, const JVec& b) const {
  JVec out(d_);
  for (int k = 0; k < d_; ++k) out[k] = d2_const(0.0);
  for (int i = 0; i < d_; ++i)
    for (int k = 0; k < d_; ++k) {
      D2 acc = d2_const(0.0);
      for (int j = 0; j < d_; ++j) acc += ad_basis_[i](k, j) * b[j];
      out[k] += a[i] * acc;
    }
  return out;
}

double LieGroup::inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
  return a.dot(gram_ * b);
}

D2 LieGroup::inner(const JVec& a, const JVec& b) const {
  D2 acc = d2_const(0.0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) acc += a[i] * (gram_(i, j) * b[j]);
  return acc;
}

double LieGroup::group_constraint_residual(const Eigen::MatrixXd& k) const {
  double res = (k.transpose() * k - identity()).norm();
  switch (family_) {
    case GroupFamily::SpecialOrthogonal:
      res += std::abs(k.determinant() - 1.0);
      break;
    case GroupFamily::Unitary: {
      const Eigen::MatrixXd j = realified_i(mc_);
      res += (k * j - j * k).norm();
      break;
    }
    case GroupFamily::SpecialUnitary: {
      const Eigen::MatrixXd j = realified_i(mc_);
      res += (k * j - j * k).norm();
      res += std::abs(derealify(k).determinant() - std::complex<double>(1, 0));
      break;
    }
  }
  return res;
}

double LieGroup::algebra_constraint_residual(const Eigen::MatrixXd& e) const {
  double res = (e + e.transpose()).norm();
  if (family_ == GroupFamily::Unitary || family_ == GroupFamily::SpecialUnitary) {
    const Eigen::MatrixXd j = realified_i(mc_);
    res += (e * j - j * e).norm();
  }
  if (family_ == GroupFamily::SpecialUnitary)
    res += std::abs(derealify(e).trace());
  return res;
}

Eigen::VectorXd LieGroup::random_algebra_element(Sampler& rng, double scale) const {
  Eigen::VectorXd a(d_);
  for (int i = 0; i < d_; ++i) a[i] = rng.uniform(-scale, scale);
  return a;
}

Eigen::MatrixXd LieGroup::random_group_element(Sampler& rng, double scale) const {
  return exp(random_algebra_element(rng, scale));
}

}  // namespace gk
