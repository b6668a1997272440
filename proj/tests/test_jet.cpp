#include <doctest.h>

#include <cmath>

#include "gk/jet.hpp"

using namespace gk;

namespace {

// central-difference oracle, step 1e-5
template <class F>
double fd_derivative(F f, double x) {
  const double h = 1e-5;
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("jet arithmetic matches finite differences on composed functions") {
  auto f = [](auto x) { return sin(x) * exp(0.3 * x) + 1.0 / (1.0 + x * x); };
  for (double x0 : {-1.7, -0.2, 0.9, 2.4}) {
    const D2 r = f(d2_seed(x0, 1.0));
    const double fd = fd_derivative([&](double t) { return val(f(d2_const(t))); }, x0);
    CHECK(d_out(r) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("constant fields have zero derivative") {
  const D2 c = d2_const(4.2);
  const D2 x = d2_seed(1.0, 1.0);
  CHECK(d_out(c * x + c) == doctest::Approx(4.2));
  CHECK(d_out(c) == 0.0);
}

TEST_CASE("mixed second derivatives are exact") {
  // f(x, y) = sin(x y) => d2f/dxdy = cos(xy) - xy sin(xy)
  const double x0 = 0.7, y0 = -1.3;
  JVec p(2);
  p[0] = d2_seed(x0, 1.0, 0.0);  // outer direction: e_x
  p[1] = d2_seed(y0, 0.0, 1.0);  // inner direction: e_y
  const D2 f = sin(p[0] * p[1]);
  const double expected = std::cos(x0 * y0) - x0 * y0 * std::sin(x0 * y0);
  CHECK(d_mixed(f) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(d_out(f) == doctest::Approx(y0 * std::cos(x0 * y0)).epsilon(1e-13));
  CHECK(d_in(f) == doctest::Approx(x0 * std::cos(x0 * y0)).epsilon(1e-13));
}

TEST_CASE("division and pow propagate derivatives") {
  const D2 x = d2_seed(2.0, 1.0);
  CHECK(d_out(1.0 / x) == doctest::Approx(-0.25));
  CHECK(d_out(pow(x, 3.0)) == doctest::Approx(12.0));
  CHECK(d_out(sqrt(x)) == doctest::Approx(0.5 / std::sqrt(2.0)));
  const D2 y = d2_seed(1.0, 0.5);
  CHECK(d_out(atan2(y, x)) == doctest::Approx((2.0 * 0.5 - 1.0 * 1.0) / 5.0));
}

TEST_CASE("Eigen matrices over jets carry derivatives through products") {
  Eigen::MatrixXd k(2, 2), b(2, 2);
  k << 0.6, -0.8, 0.8, 0.6;
  b << 0.0, -1.0, 1.0, 0.0;
  const JMat kj = jet_group_dir(k, b);
  const JMat prod = kj.transpose() * kj;  // stays I to first order
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      CHECK(val(prod(r, c)) == doctest::Approx(r == c ? 1.0 : 0.0));
      CHECK(d_out(prod(r, c)) == doctest::Approx(0.0).epsilon(1e-14));
    }
  // d/dt (k exp(tb)) * e1 at t=0 equals k*b*e1
  const JVec e1 = jet_point(Eigen::Vector2d(1.0, 0.0));
  const JVec img = kj * e1;
  const Eigen::MatrixXd kb = k * b;
  CHECK(d_out(img[0]) == doctest::Approx(kb(0, 0)));
  CHECK(d_out(img[1]) == doctest::Approx(kb(1, 0)));
}
