#ifndef GK_JET_HPP
#define GK_JET_HPP

// Forward-mode derivative arithmetic on nested dual numbers.
//
// Dual<T> carries a value and one directional derivative; nesting it once
// (D2 = Dual<Dual<double>>) gives access to a second, independent direction,
// so mixed second derivatives are exact. All fields in this library are
// evaluated over D2, seeded by the helpers at the bottom of this header:
//
//   outer slot : the direction being differentiated (d_out)
//   inner slot : an optional second direction (d_in, d_mixed)
//
// Plain evaluation is the zero-seeded special case. Derivatives obtained
// this way are exact up to rounding; finite differences are kept only as a
// test oracle.

#include <cmath>
#include <type_traits>
#include <utility>
#include <Eigen/Core>

namespace gk {

template <class T>
struct Dual {
  T v{};  // value
  T d{};  // derivative along the seeded direction

  Dual() = default;
  Dual(T value) : v(std::move(value)) {}
  Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}

  template <class U, std::enable_if_t<std::is_arithmetic_v<U> && !std::is_same_v<U, T>, int> = 0>
  Dual(U value) : v(T(value)) {}

  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v = v * o.v; return *this; }
  Dual& operator/=(const Dual& o) {
    v = v / o.v;
    d = (d - v * o.d) / o.v;
    return *this;
  }
};

template <class T> Dual<T> operator+(Dual<T> a, const Dual<T>& b) { return a += b; }
template <class T> Dual<T> operator-(Dual<T> a, const Dual<T>& b) { return a -= b; }
template <class T> Dual<T> operator*(Dual<T> a, const Dual<T>& b) { return a *= b; }
template <class T> Dual<T> operator/(Dual<T> a, const Dual<T>& b) { return a /= b; }
template <class T> Dual<T> operator-(const Dual<T>& a) { return {T{} - a.v, T{} - a.d}; }
template <class T> Dual<T> operator+(const Dual<T>& a) { return a; }

template <class T> Dual<T> operator+(Dual<T> a, double b) { a.v += T(b); return a; }
template <class T> Dual<T> operator+(double a, Dual<T> b) { b.v += T(a); return b; }
template <class T> Dual<T> operator-(Dual<T> a, double b) { a.v -= T(b); return a; }
template <class T> Dual<T> operator-(double a, const Dual<T>& b) { return Dual<T>(T(a)) - b; }
template <class T> Dual<T> operator*(const Dual<T>& a, double b) { return {a.v * T(b), a.d * T(b)}; }
template <class T> Dual<T> operator*(double a, const Dual<T>& b) { return b * a; }
template <class T> Dual<T> operator/(const Dual<T>& a, double b) { return {a.v / T(b), a.d / T(b)}; }
template <class T> Dual<T> operator/(double a, const Dual<T>& b) { return Dual<T>(T(a)) / b; }

template <class T> bool operator==(const Dual<T>& a, const Dual<T>& b) { return a.v == b.v; }
template <class T> bool operator!=(const Dual<T>& a, const Dual<T>& b) { return a.v != b.v; }
template <class T> bool operator<(const Dual<T>& a, const Dual<T>& b) { return a.v < b.v; }
template <class T> bool operator>(const Dual<T>& a, const Dual<T>& b) { return a.v > b.v; }
template <class T> bool operator<=(const Dual<T>& a, const Dual<T>& b) { return a.v <= b.v; }
template <class T> bool operator>=(const Dual<T>& a, const Dual<T>& b) { return a.v >= b.v; }

using std::abs;
using std::atan2;
using std::cos;
using std::exp;
using std::log;
using std::pow;
using std::sin;
using std::sqrt;

template <class T> Dual<T> sin(const Dual<T>& x) { return {sin(x.v), x.d * cos(x.v)}; }
template <class T> Dual<T> cos(const Dual<T>& x) { return {cos(x.v), T{} - x.d * sin(x.v)}; }
template <class T> Dual<T> exp(const Dual<T>& x) { auto e = exp(x.v); return {e, x.d * e}; }
template <class T> Dual<T> log(const Dual<T>& x) { return {log(x.v), x.d / x.v}; }
template <class T> Dual<T> sqrt(const Dual<T>& x) {
  auto s = sqrt(x.v);
  return {s, x.d / (s + s)};
}
template <class T> Dual<T> pow(const Dual<T>& x, double p) {
  auto xpm1 = pow(x.v, p - 1.0);
  return {xpm1 * x.v, x.d * (T(p) * xpm1)};
}
template <class T> Dual<T> atan2(const Dual<T>& y, const Dual<T>& x) {
  auto r2 = x.v * x.v + y.v * y.v;
  return {atan2(y.v, x.v), (x.v * y.d - y.v * x.d) / r2};
}
template <class T> Dual<T> abs(const Dual<T>& x) { return x.v < T{} ? -x : x; }

using D1 = Dual<double>;
using D2 = Dual<D1>;

inline double val(const D2& x) { return x.v.v; }
inline double d_out(const D2& x) { return x.d.v; }    // derivative along the outer seed
inline double d_in(const D2& x) { return x.v.d; }     // derivative along the inner seed
inline double d_mixed(const D2& x) { return x.d.d; }  // second derivative, outer then inner

inline D2 d2_const(double v) { return D2{D1{v, 0.0}, D1{0.0, 0.0}}; }
inline D2 d2_seed(double v, double outer, double inner = 0.0, double mixed = 0.0) {
  return D2{D1{v, inner}, D1{outer, mixed}};
}

}  // namespace gk

namespace Eigen {
template <>
struct NumTraits<gk::D2> {
  using Real = gk::D2;
  using NonInteger = gk::D2;
  using Nested = gk::D2;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline gk::D2 epsilon() { return gk::d2_const(NumTraits<double>::epsilon()); }
  static inline gk::D2 dummy_precision() { return gk::d2_const(1e-12); }
  static inline gk::D2 highest() { return gk::d2_const(NumTraits<double>::highest()); }
  static inline gk::D2 lowest() { return gk::d2_const(NumTraits<double>::lowest()); }
  static inline int digits10() { return NumTraits<double>::digits10(); }
};
}  // namespace Eigen

namespace gk {

// Vectors/matrices of jets. Only ring operations are used on these; no
// decompositions are ever run over D2 scalars.
using JVec = Eigen::Matrix<D2, Eigen::Dynamic, 1>;
using JMat = Eigen::Matrix<D2, Eigen::Dynamic, Eigen::Dynamic>;

inline JVec jet_point(const Eigen::VectorXd& x) {
  JVec j(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) j[i] = d2_const(x[i]);
  return j;
}

// x + t v, differentiated in the outer slot.
inline JVec jet_dir(const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
  JVec j(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) j[i] = d2_seed(x[i], v[i]);
  return j;
}

// x + t v + s w: v in the outer slot, w in the inner slot. d_mixed of the
// result is the mixed partial along (v, w).
inline JVec jet_dir2(const Eigen::VectorXd& x, const Eigen::VectorXd& v,
                     const Eigen::VectorXd& w) {
  JVec j(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) j[i] = d2_seed(x[i], v[i], w[i]);
  return j;
}

inline JMat jet_matrix(const Eigen::MatrixXd& m) {
  JMat j(m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) j(r, c) = d2_const(m(r, c));
  return j;
}

// First-order jet of the curve t -> k exp(t b), velocity in the outer slot.
// The inner slot is left unseeded so it stays available for an independent
// base direction.
inline JMat jet_group_dir(const Eigen::MatrixXd& k, const Eigen::MatrixXd& b_hat) {
  Eigen::MatrixXd kb = k * b_hat;
  JMat j(k.rows(), k.cols());
  for (Eigen::Index c = 0; c < k.cols(); ++c)
    for (Eigen::Index r = 0; r < k.rows(); ++r)
      j(r, c) = D2{D1{k(r, c), 0.0}, D1{kb(r, c), 0.0}};
  return j;
}

inline Eigen::VectorXd val(const JVec& x) {
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = val(x[i]);
  return out;
}
inline Eigen::VectorXd d_out(const JVec& x) {
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = d_out(x[i]);
  return out;
}
inline Eigen::MatrixXd val(const JMat& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) out(r, c) = val(m(r, c));
  return out;
}
inline Eigen::MatrixXd d_out(const JMat& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) out(r, c) = d_out(m(r, c));
  return out;
}

}  // namespace gk



#endif  // GK_JET_HPP
