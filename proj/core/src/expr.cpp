#include "papm/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "papm/errors.hpp"

namespace papm {

namespace {

enum class NodeKind { Number, Coord, Constant, Unary, Binary, Call, Power };

class NumberNode;
class CoordNode;
class ConstantNode;
class UnaryNode;
class BinaryNode;
class CallNode;
class PowerNode;

class NumberNode final : public Expression {
public:
  explicit NumberNode(double v) : value_(v) {}
  Jet2 evaluate_jet2(const std::vector<double>& p) const override {
    return Jet2::constant(static_cast<int>(p.size()), value_);
  }
  double evaluate_value(const std::vector<double>&) const override { return value_; }
  void print(std::string& out) const override {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value_);
    out += buf;
  }
  ExprPtr clone() const override { return std::make_unique<NumberNode>(value_); }
  bool equals(const Expression& other) const override;
  double value() const { return value_; }

private:
  double value_;
};

class CoordNode final : public Expression {
public:
  CoordNode(std::string name, int index) : name_(std::move(name)), index_(index) {}
  Jet2 evaluate_jet2(const std::vector<double>& p) const override {
    return Jet2::variable(static_cast<int>(p.size()), index_, p[index_]);
  }
  double evaluate_value(const std::vector<double>& p) const override {
    return p[index_];
  }
  void print(std::string& out) const override { out += name_; }
  ExprPtr clone() const override {
    return std::make_unique<CoordNode>(name_, index_);
  }
  bool equals(const Expression& other) const override;
  int index() const { return index_; }

private:
  std::string name_;
  int index_;
};

class ConstantNode final : public Expression {
public:
  ConstantNode(std::string name, double v) : name_(std::move(name)), value_(v) {}
  Jet2 evaluate_jet2(const std::vector<double>& p) const override {
    return Jet2::constant(static_cast<int>(p.size()), value_);
  }
  double evaluate_value(const std::vector<double>&) const override { return value_; }
  void print(std::string& out) const override { out += name_; }
  ExprPtr clone() const override {
    return std::make_unique<ConstantNode>(name_, value_);
  }
  bool equals(const Expression& other) const override;
  const std::string& name() const { return name_; }

private:
  std::string name_;
  double value_;
};

class UnaryNode final : public Expression {
public:
  explicit UnaryNode(ExprPtr operand) : operand_(std::move(operand)) {}
  Jet2 evaluate_jet2(const std::vector<double>& p) const override {
    return -operand_->evaluate_jet2(p);
  }
  double evaluate_value(const std::vector<double>& p) const override {
    return -operand_->evaluate_value(p);
  }
  void print(std::string& out) const override {
    out += "(-";
    operand_->print(out);
    out += ")";
  }
  ExprPtr clone() const override {
    return std::make_unique<UnaryNode>(operand_->clone());
  }
  bool equals(const Expression& other) const override;
  const Expression& operand() const { return *operand_; }

private:
  ExprPtr operand_;
};

class BinaryNode final : public Expression {
public:
  BinaryNode(char op, ExprPtr lhs, ExprPtr rhs)
      : op_(op), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}
  Jet2 evaluate_jet2(const std::vector<double>& p) const override {
    Jet2 a = lhs_->evaluate_jet2(p);
    Jet2 b = rhs_->evaluate_jet2(p);
    Jet2 r = combine(a, b);
    if (!r.finite()) throw OverflowError(to_string());
    return r;
  }
  double evaluate_value(const std::vector<double>& p) const override {
    double a = lhs_->evaluate_value(p);
    double b = rhs_->evaluate_value(p);
    switch (op_) {
      case '+': return a + b;
      case '-': return a - b;
      case '*': return a * b;
      default:
        if (b == 0.0) throw DomainError("/", 0.0);
        return a / b;
    }
  }
  void print(std::string& out) const override {
    out += "(";
    lhs_->print(out);
    out += ' ';
    out += op_;
    out += ' ';
    rhs_->print(out);
    out += ")";
  }
  ExprPtr clone() const override {
    return std::make_unique<BinaryNode>(op_, lhs_->clone(), rhs_->clone());
  }
  bool equals(const Expression& other) const override;
  char op() const { return op_; }
  const Expression& lhs() const { return *lhs_; }
  const Expression& rhs() const { return *rhs_; }

private:
  Jet2 combine(const Jet2& a, const Jet2& b) const {
    switch (op_) {
      case '+': return a + b;
      case '-': return a - b;
      case '*': return a * b;
      default: return a / b;
    }
  }
  char op_;
  ExprPtr lhs_;
  ExprPtr rhs_;
};

class CallNode final : public Expression {
public:
  CallNode(std::string name, ExprPtr arg)
      : name_(std::move(name)), arg_(std::move(arg)) {}
  Jet2 evaluate_jet2(const std::vector<double>& p) const override {
    Jet2 u = arg_->evaluate_jet2(p);
    Jet2 r = dispatch(u);
    if (!r.finite()) throw OverflowError(to_string());
    return r;
  }
  double evaluate_value(const std::vector<double>& p) const override {
    double v = arg_->evaluate_value(p);
    if (name_ == "sin") return std::sin(v);
    if (name_ == "cos") return std::cos(v);
    if (name_ == "tan") return std::tan(v);
    if (name_ == "exp") return std::exp(v);
    if (name_ == "tanh") return std::tanh(v);
    if (name_ == "ln") {
      if (v <= 0.0) throw DomainError("ln", v);
      return std::log(v);
    }
    // sqrt
    if (v <= 0.0) throw DomainError("sqrt", v);
    return std::sqrt(v);
  }
  void print(std::string& out) const override {
    out += name_;
    out += "(";
    arg_->print(out);
    out += ")";
  }
  ExprPtr clone() const override {
    return std::make_unique<CallNode>(name_, arg_->clone());
  }
  bool equals(const Expression& other) const override;
  const std::string& name() const { return name_; }
  const Expression& arg() const { return *arg_; }

private:
  Jet2 dispatch(const Jet2& u) const {
    if (name_ == "sin") return jet::sin(u);
    if (name_ == "cos") return jet::cos(u);
    if (name_ == "tan") return jet::tan(u);
    if (name_ == "exp") return jet::exp(u);
    if (name_ == "ln") return jet::ln(u);
    if (name_ == "tanh") return jet::tanh(u);
    return jet::sqrt(u);
  }
  std::string name_;
  ExprPtr arg_;
};

class PowerNode final : public Expression {
public:
  PowerNode(ExprPtr base, double exponent)
      : base_(std::move(base)), exponent_(exponent) {}
  Jet2 evaluate_jet2(const std::vector<double>& p) const override {
    Jet2 r = jet::pow(base_->evaluate_jet2(p), exponent_);
    if (!r.finite()) throw OverflowError(to_string());
    return r;
  }
  double evaluate_value(const std::vector<double>& p) const override {
    double v = base_->evaluate_value(p);
    double rounded = std::nearbyint(exponent_);
    if (rounded == exponent_) {
      if (v == 0.0 && exponent_ < 0.0) throw DomainError("^", v);
    } else if (v <= 0.0) {
      throw DomainError("^", v);
    }
    return std::pow(v, exponent_);
  }
  void print(std::string& out) const override {
    base_->print(out);
    out += "^";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", exponent_);
    out += buf;
  }
  ExprPtr clone() const override {
    return std::make_unique<PowerNode>(base_->clone(), exponent_);
  }
  bool equals(const Expression& other) const override;
  double exponent() const { return exponent_; }
  const Expression& base() const { return *base_; }

private:
  ExprPtr base_;
  double exponent_;
};

bool NumberNode::equals(const Expression& other) const {
  auto* o = dynamic_cast<const NumberNode*>(&other);
  return o && o->value_ == value_;
}

bool CoordNode::equals(const Expression& other) const {
  auto* o = dynamic_cast<const CoordNode*>(&other);
  return o && o->index_ == index_;
}

bool ConstantNode::equals(const Expression& other) const {
  auto* o = dynamic_cast<const ConstantNode*>(&other);
  return o && o->name_ == name_;
}

bool UnaryNode::equals(const Expression& other) const {
  auto* o = dynamic_cast<const UnaryNode*>(&other);
  return o && operand_->equals(*o->operand_);
}

bool BinaryNode::equals(const Expression& other) const {
  auto* o = dynamic_cast<const BinaryNode*>(&other);
  return o && o->op_ == op_ && lhs_->equals(*o->lhs_) && rhs_->equals(*o->rhs_);
}

bool CallNode::equals(const Expression& other) const {
  auto* o = dynamic_cast<const CallNode*>(&other);
  return o && o->name_ == name_ && arg_->equals(*o->arg_);
}

bool PowerNode::equals(const Expression& other) const {
  auto* o = dynamic_cast<const PowerNode*>(&other);
  return o && o->exponent_ == exponent_ && base_->equals(*o->base_);
}

const char* const kFunctions[] = {"sin", "cos", "tan", "exp", "ln", "sqrt", "tanh"};

bool is_function(const std::string& name) {
  return std::find(std::begin(kFunctions), std::end(kFunctions), name) !=
         std::end(kFunctions);
}

struct Token {
  enum Kind { Number, Ident, Op, LParen, RParen, End } kind;
  std::size_t pos;
  double number = 0.0;
  std::string text;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    Token t;
    t.pos = pos_;
    if (pos_ >= src_.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      const char* begin = src_.c_str() + pos_;
      char* end = nullptr;
      t.number = std::strtod(begin, &end);
      if (end == begin) throw SyntaxError(pos_, "number");
      pos_ += static_cast<std::size_t>(end - begin);
      t.kind = Token::Number;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      t.kind = Token::Ident;
      t.text = src_.substr(start, pos_ - start);
      return t;
    }
    if (c == '(') {
      ++pos_;
      t.kind = Token::LParen;
      return t;
    }
    if (c == ')') {
      ++pos_;
      t.kind = Token::RParen;
      return t;
    }
    if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      ++pos_;
      t.kind = Token::Op;
      t.text = std::string(1, c);
      return t;
    }
    throw SyntaxError(pos_, "expression character");
  }

private:
  const std::string& src_;
  std::size_t pos_ = 0;
};

class Parser {
public:
  Parser(const std::string& src, const std::vector<std::string>& coords)
      : lexer_(src), coords_(coords) {
    advance();
  }

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    if (cur_.kind != Token::End) throw SyntaxError(cur_.pos, "end of expression");
    return e;
  }

private:
  void advance() { cur_ = lexer_.next(); }

  bool at_op(char c) const {
    return cur_.kind == Token::Op && cur_.text[0] == c;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (at_op('+') || at_op('-')) {
      char op = cur_.text[0];
      advance();
      lhs = std::make_unique<BinaryNode>(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (at_op('*') || at_op('/')) {
      char op = cur_.text[0];
      advance();
      lhs = std::make_unique<BinaryNode>(op, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    if (at_op('-')) {
      advance();
      return std::make_unique<UnaryNode>(parse_factor());
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (!at_op('^')) return base;
    std::size_t caret = cur_.pos;
    advance();
    double sign = 1.0;
    if (at_op('-')) {
      sign = -1.0;
      advance();
    }
    if (cur_.kind != Token::Number) throw NonLiteralExponent(caret);
    double expo = sign * cur_.number;
    advance();
    if (at_op('^')) throw SyntaxError(cur_.pos, "single exponent");
    return std::make_unique<PowerNode>(std::move(base), expo);
  }

  ExprPtr parse_primary() {
    if (cur_.kind == Token::Number) {
      double v = cur_.number;
      advance();
      return std::make_unique<NumberNode>(v);
    }
    if (cur_.kind == Token::LParen) {
      advance();
      ExprPtr e = parse_expr();
      if (cur_.kind != Token::RParen) throw SyntaxError(cur_.pos, ")");
      advance();
      return e;
    }
    if (cur_.kind == Token::Ident) {
      std::string name = cur_.text;
      std::size_t pos = cur_.pos;
      advance();
      if (is_function(name)) {
        if (cur_.kind != Token::LParen) throw SyntaxError(cur_.pos, "(");
        advance();
        ExprPtr arg = parse_expr();
        if (cur_.kind != Token::RParen) throw SyntaxError(cur_.pos, ")");
        advance();
        return std::make_unique<CallNode>(name, std::move(arg));
      }
      if (name == "pi")
        return std::make_unique<ConstantNode>("pi", 3.14159265358979323846);
      if (name == "e")
        return std::make_unique<ConstantNode>("e", 2.71828182845904523536);
      auto it = std::find(coords_.begin(), coords_.end(), name);
      if (it == coords_.end()) throw UnknownIdentifier(name, pos);
      return std::make_unique<CoordNode>(
          name, static_cast<int>(it - coords_.begin()));
    }
    throw SyntaxError(cur_.pos, "number, name or (");
  }

  Lexer lexer_;
  const std::vector<std::string>& coords_;
  Token cur_;
};

} // namespace

ExprPtr parse_expression(const std::string& src,
                         const std::vector<std::string>& coords) {
  return Parser(src, coords).parse();
}

Jet2 finite_difference_jet2(const Expression& f, const std::vector<double>& p,
                            double h_grad, double h_hess) {
  int n = static_cast<int>(p.size());
  Jet2 r(n);
  r.value = f.evaluate_value(p);
  std::vector<double> q = p;
  for (int i = 0; i < n; ++i) {
    q[i] = p[i] + h_grad;
    double fp = f.evaluate_value(q);
    q[i] = p[i] - h_grad;
    double fm = f.evaluate_value(q);
    q[i] = p[i];
    r.grad[i] = (fp - fm) / (2.0 * h_grad);
  }
  for (int i = 0; i < n; ++i) {
    q[i] = p[i] + h_hess;
    double fp = f.evaluate_value(q);
    q[i] = p[i] - h_hess;
    double fm = f.evaluate_value(q);
    q[i] = p[i];
    r.set_hess(i, i, (fp - 2.0 * r.value + fm) / (h_hess * h_hess));
    for (int j = i + 1; j < n; ++j) {
      q[i] = p[i] + h_hess;
      q[j] = p[j] + h_hess;
      double fpp = f.evaluate_value(q);
      q[j] = p[j] - h_hess;
      double fpm = f.evaluate_value(q);
      q[i] = p[i] - h_hess;
      double fmm = f.evaluate_value(q);
      q[j] = p[j] + h_hess;
      double fmp = f.evaluate_value(q);
      q[i] = p[i];
      q[j] = p[j];
      r.set_hess(i, j, (fpp - fpm - fmp + fmm) / (4.0 * h_hess * h_hess));
    }
  }
  return r;
}

} // namespace papm
