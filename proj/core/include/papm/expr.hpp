#pragma once

// Scalar expression language for chart data.
//
// Grammar (precedence low to high):
//   expr    := term (("+" | "-") term)*
//   term    := factor (("*" | "/") factor)*
//   factor  := "-" factor | power
//   power   := primary ["^" ["-"] number]
//   primary := number | ident | ident "(" expr ")" | "(" expr ")"
//
// "^" binds tighter than unary minus (so "-x^2" is -(x^2)) and only accepts a
// literal exponent, optionally negated.  Identifiers are either coordinate
// names declared by the chart, the constants pi and e, or one of the function
// names sin cos tan exp ln sqrt tanh.  Unknown names fail at parse time.

#include <memory>
#include <string>
#include <vector>

#include "papm/jet.hpp"

namespace papm {

class Expression;
using ExprPtr = std::unique_ptr<Expression>;

class Expression {
public:
  virtual ~Expression() = default;

  // Value together with first and second derivatives at p, via jet arithmetic.
  virtual Jet2 evaluate_jet2(const std::vector<double>& p) const = 0;

  // Value only.  Kept separate from the jet path so finite differencing over
  // this entry point is an independent derivative oracle.
  virtual double evaluate_value(const std::vector<double>& p) const = 0;

  virtual void print(std::string& out) const = 0;
  virtual ExprPtr clone() const = 0;
  virtual bool equals(const Expression& other) const = 0;

  std::string to_string() const {
    std::string s;
    print(s);
    return s;
  }
};

// Parse src as an expression over the named coordinates.  Throws SyntaxError,
// UnknownIdentifier or NonLiteralExponent with a character position on bad
// input.
ExprPtr parse_expression(const std::string& src,
                         const std::vector<std::string>& coords);

// Second-order central finite differences of evaluate_value, for checking the
// jet path.  grad: (f(p+h e_i) - f(p-h e_i)) / 2h.  Hessian diagonal:
// (f(p+h e_i) - 2 f(p) + f(p-h e_i)) / h^2; off-diagonal: the four-point
// stencil / 4h^2.
Jet2 finite_difference_jet2(const Expression& f, const std::vector<double>& p,
                            double h_grad = 1e-6, double h_hess = 1e-4);

} // namespace papm
