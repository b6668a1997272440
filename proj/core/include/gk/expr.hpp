#ifndef GK_EXPR_HPP
#define GK_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "gk/chart.hpp"
#include "gk/jet.hpp"

namespace gk {

// Arithmetic expressions in the chart variables x1..xn, evaluated over jets.
// Supported: + - * / ^, unary minus, parentheses, numeric literals, pi, and
// the functions sin cos exp sqrt log. This is the declarative surface through
// which user-defined bundle models are loaded.
class Expr {
 public:
  static Expr parse(const std::string& source);  // throws std::invalid_argument

  D2 eval(const JVec& vars) const;
  double eval(const Eigen::VectorXd& vars) const;

  // highest variable index used, 1-based; 0 when constant
  int max_var() const { return max_var_; }
  const std::string& source() const { return source_; }

 private:
  enum class Op : std::uint8_t { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp, Sqrt, Log };
  struct Node {
    Op op;
    double value = 0.0;  // Const
    int var = 0;         // Var (0-based)
    int a = -1, b = -1;  // child node indices
  };

  D2 eval_node(int idx, const JVec& vars) const;

  std::vector<Node> nodes_;
  int root_ = -1;
  int max_var_ = 0;
  std::string source_;

  friend class ExprParser;
};

// Convenience constructors for fields whose components are expressions.
ScalarFn expr_scalar(const std::string& source);
VecFn expr_vector(const std::vector<std::string>& components);
// rows x cols matrix field, entries in row-major order
MatFn expr_matrix(int rows, int cols, const std::vector<std::string>& entries);

}  // namespace gk

#endif  // GK_EXPR_HPP
