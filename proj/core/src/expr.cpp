#include "gk/expr.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace gk {

class ExprParser {
 public:
  explicit ExprParser(const std::string& src) : src_(src) {}

  Expr run() {
    Expr e;
    e.source_ = src_;
    nodes_ = &e.nodes_;
    max_var_ = &e.max_var_;
    pos_ = 0;
    e.root_ = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing characters");
    return e;
  }

 private:
  using Op = Expr::Op;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("expression '" + src_ + "': " + msg + " at offset " +
                                std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int add(Expr::Node n) {
    nodes_->push_back(n);
    return static_cast<int>(nodes_->size()) - 1;
  }

  int parse_expr() {
    int lhs = parse_term();
    while (true) {
      if (eat('+'))
        lhs = add({Op::Add, 0, 0, lhs, parse_term()});
      else if (eat('-'))
        lhs = add({Op::Sub, 0, 0, lhs, parse_term()});
      else
        return lhs;
    }
  }

  int parse_term() {
    int lhs = parse_factor();
    while (true) {
      if (eat('*'))
        lhs = add({Op::Mul, 0, 0, lhs, parse_factor()});
      else if (eat('/'))
        lhs = add({Op::Div, 0, 0, lhs, parse_factor()});
      else
        return lhs;
    }
  }

  int parse_factor() {
    int base = parse_unary();
    if (eat('^')) {
      int exponent = parse_unary();
      return add({Op::Pow, 0, 0, base, exponent});
    }
    return base;
  }

  int parse_unary() {
    if (eat('-')) return add({Op::Neg, 0, 0, parse_unary(), -1});
    return parse_primary();
  }

  int parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      int inner = parse_expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    fail("unexpected character");
  }

  int parse_number() {
    std::size_t end = pos_;
    while (end < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[end])) || src_[end] == '.' ||
            src_[end] == 'e' || src_[end] == 'E' ||
            ((src_[end] == '+' || src_[end] == '-') && end > pos_ &&
             (src_[end - 1] == 'e' || src_[end - 1] == 'E'))))
      ++end;
    const std::string tok = src_.substr(pos_, end - pos_);
    try {
      const double v = std::stod(tok);
      pos_ = end;
      return add({Op::Const, v, 0, -1, -1});
    } catch (const std::exception&) {
      fail("bad numeric literal '" + tok + "'");
    }
  }

  int parse_ident() {
    std::size_t end = pos_;
    while (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) ++end;
    const std::string name = src_.substr(pos_, end - pos_);
    pos_ = end;
    if (name == "pi") return add({Op::Const, M_PI, 0, -1, -1});
    if (name.size() >= 2 && name[0] == 'x') {
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i)
        digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
      if (digits) {
        const int idx = std::stoi(name.substr(1));
        if (idx < 1) fail("variable indices are 1-based");
        *max_var_ = std::max(*max_var_, idx);
        return add({Op::Var, 0, idx - 1, -1, -1});
      }
    }
    if (!eat('(')) fail("unknown identifier '" + name + "'");
    int arg = parse_expr();
    if (!eat(')')) fail("missing ')' after " + name);
    if (name == "sin") return add({Op::Sin, 0, 0, arg, -1});
    if (name == "cos") return add({Op::Cos, 0, 0, arg, -1});
    if (name == "exp") return add({Op::Exp, 0, 0, arg, -1});
    if (name == "sqrt") return add({Op::Sqrt, 0, 0, arg, -1});
    if (name == "log") return add({Op::Log, 0, 0, arg, -1});
    fail("unknown function '" + name + "'");
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  std::vector<Expr::Node>* nodes_ = nullptr;
  int* max_var_ = nullptr;
};

Expr Expr::parse(const std::string& source) { return ExprParser(source).run(); }

D2 Expr::eval_node(int idx, const JVec& vars) const {
  const Node& n = nodes_[idx];
  switch (n.op) {
    case Op::Const: return d2_const(n.value);
    case Op::Var:
      if (n.var >= vars.size())
        throw std::invalid_argument("expression '" + source_ + "' uses x" +
                                    std::to_string(n.var + 1) + " beyond chart dimension");
      return vars[n.var];
    case Op::Add: return eval_node(n.a, vars) + eval_node(n.b, vars);
    case Op::Sub: return eval_node(n.a, vars) - eval_node(n.b, vars);
    case Op::Mul: return eval_node(n.a, vars) * eval_node(n.b, vars);
    case Op::Div: return eval_node(n.a, vars) / eval_node(n.b, vars);
    case Op::Pow: {
      const Node& e = nodes_[n.b];
      const D2 base = eval_node(n.a, vars);
      if (e.op == Op::Const) {
        const double p = e.value;
        const int ip = static_cast<int>(std::lround(p));
        if (std::abs(p - ip) < 1e-14 && std::abs(ip) <= 16) {
          // integer powers by repeated multiplication (valid for any base)
          D2 acc = d2_const(1.0);
          for (int i = 0; i < std::abs(ip); ++i) acc *= base;
          return ip >= 0 ? acc : 1.0 / acc;
        }
        return pow(base, p);
      }
      return exp(eval_node(n.b, vars) * log(base));
    }
    case Op::Neg: return -eval_node(n.a, vars);
    case Op::Sin: return sin(eval_node(n.a, vars));
    case Op::Cos: return cos(eval_node(n.a, vars));
    case Op::Exp: return exp(eval_node(n.a, vars));
    case Op::Sqrt: return sqrt(eval_node(n.a, vars));
    case Op::Log: return log(eval_node(n.a, vars));
  }
  throw std::logic_error("unreachable");
}

D2 Expr::eval(const JVec& vars) const { return eval_node(root_, vars); }

double Expr::eval(const Eigen::VectorXd& vars) const { return val(eval(jet_point(vars))); }

ScalarFn expr_scalar(const std::string& source) {
  return [e = Expr::parse(source)](const JVec& x) { return e.eval(x); };
}

VecFn expr_vector(const std::vector<std::string>& components) {
  std::vector<Expr> parsed;
  parsed.reserve(components.size());
  for (const auto& c : components) parsed.push_back(Expr::parse(c));
  return [parsed](const JVec& x) {
    JVec out(parsed.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) out[i] = parsed[i].eval(x);
    return out;
  };
}

MatFn expr_matrix(int rows, int cols, const std::vector<std::string>& entries) {
  if (static_cast<int>(entries.size()) != rows * cols)
    throw std::invalid_argument("expr_matrix: need rows*cols entries");
  std::vector<Expr> parsed;
  parsed.reserve(entries.size());
  for (const auto& c : entries) parsed.push_back(Expr::parse(c));
  return [parsed, rows, cols](const JVec& x) {
    JMat out(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) out(r, c) = parsed[r * cols + c].eval(x);
    return out;
  };
}

}  // namespace gk
