#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace fraccore {

// Syntax error with the byte offset of the failure and the token that was
// expected there.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, size_t offset, std::string expected)
      : std::runtime_error(msg), offset(offset), expected(std::move(expected)) {}
  size_t offset;
  std::string expected;
};

// Domain failure during evaluation; names the offending subexpression.
class eval_error : public std::domain_error {
 public:
  explicit eval_error(const std::string& msg) : std::domain_error(msg) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, variable, unary_minus, binary, call };
  Kind kind = Kind::number;
  double num = 0.0;
  char op = 0;        // one of + - * / ^
  std::string fn;     // sin cos exp ln sqrt abs pow
  ExprPtr a, b;
  std::string text;   // source slice, used in error messages
};

// Grammar (loosest to tightest): + -  |  * /  |  unary -  |  ^ (right
// assoc, binds tighter than unary minus)  |  literals, x, calls, parens.
ExprPtr parse_expression(const std::string& src);

double eval_expression(const Expr& e, double x);
inline double eval_expression(const ExprPtr& e, double x) {
  return eval_expression(*e, x);
}

}  // namespace fraccore
