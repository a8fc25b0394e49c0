#include "fraccore/expr.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace fraccore {

namespace {

const char* const kFunctions[] = {"sin", "cos", "exp", "ln", "sqrt", "abs", "pow"};

bool is_function(const std::string& name) {
  for (const char* f : kFunctions)
    if (name == f) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  ExprPtr run() {
    ExprPtr e = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) fail(pos_, "end of input");
    return e;
  }

 private:
  const std::string& src_;
  size_t pos_ = 0;
  int depth_ = 0;

  [[noreturn]] void fail(size_t at, const std::string& expected) {
    throw parse_error("syntax error at offset " + std::to_string(at) +
                          ": expected " + expected,
                      at, expected);
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
            src_[pos_] == '\r'))
      ++pos_;
  }

  bool peek_char(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool eat_char(char c) {
    if (peek_char(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser* p) : p(p) {
      if (++p->depth_ > 2000)
        throw parse_error("expression too deeply nested at offset " +
                              std::to_string(p->pos_),
                          p->pos_, "shallower expression");
    }
    ~DepthGuard() { --p->depth_; }
    Parser* p;
  };

  ExprPtr make(Expr e, size_t begin, size_t end) {
    e.text = src_.substr(begin, end - begin);
    return std::make_shared<Expr>(std::move(e));
  }

  ExprPtr parse_sum() {
    size_t begin = (skip_ws(), pos_);
    ExprPtr lhs = parse_term();
    for (;;) {
      skip_ws();
      if (pos_ >= src_.size() || (src_[pos_] != '+' && src_[pos_] != '-')) break;
      char op = src_[pos_++];
      ExprPtr rhs = parse_term();
      Expr e;
      e.kind = Expr::Kind::binary;
      e.op = op;
      e.a = lhs;
      e.b = rhs;
      lhs = make(std::move(e), begin, pos_);
    }
    return lhs;
  }

  ExprPtr parse_term() {
    size_t begin = (skip_ws(), pos_);
    ExprPtr lhs = parse_unary();
    for (;;) {
      skip_ws();
      if (pos_ >= src_.size() || (src_[pos_] != '*' && src_[pos_] != '/')) break;
      char op = src_[pos_++];
      ExprPtr rhs = parse_unary();
      Expr e;
      e.kind = Expr::Kind::binary;
      e.op = op;
      e.a = lhs;
      e.b = rhs;
      lhs = make(std::move(e), begin, pos_);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    DepthGuard guard(this);
    skip_ws();
    size_t begin = pos_;
    if (eat_char('-')) {
      ExprPtr inner = parse_unary();
      Expr e;
      e.kind = Expr::Kind::unary_minus;
      e.a = inner;
      return make(std::move(e), begin, pos_);
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    DepthGuard guard(this);
    size_t begin = (skip_ws(), pos_);
    ExprPtr base = parse_primary();
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      ExprPtr expo = parse_unary();  // right-associative; allows 2^-3
      Expr e;
      e.kind = Expr::Kind::binary;
      e.op = '^';
      e.a = base;
      e.b = expo;
      return make(std::move(e), begin, pos_);
    }
    return base;
  }

  ExprPtr parse_primary() {
    DepthGuard guard(this);
    skip_ws();
    if (pos_ >= src_.size()) fail(pos_, "a value");
    size_t begin = pos_;
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_sum();
      if (!eat_char(')')) fail(pos_, "\")\"");
      return inner;
    }
    if ((c >= '0' && c <= '9') || c == '.') {
      const char* start = src_.c_str() + pos_;
      char* end = nullptr;
      double v = std::strtod(start, &end);
      if (end == start) fail(pos_, "a number");
      pos_ += end - start;
      Expr e;
      e.kind = Expr::Kind::number;
      e.num = v;
      return make(std::move(e), begin, pos_);
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      size_t idstart = pos_;
      while (pos_ < src_.size() &&
             ((src_[pos_] >= 'a' && src_[pos_] <= 'z') ||
              (src_[pos_] >= 'A' && src_[pos_] <= 'Z') ||
              (src_[pos_] >= '0' && src_[pos_] <= '9') || src_[pos_] == '_'))
        ++pos_;
      std::string name = src_.substr(idstart, pos_ - idstart);
      if (name == "x") {
        Expr e;
        e.kind = Expr::Kind::variable;
        return make(std::move(e), begin, pos_);
      }
      if (!is_function(name))
        fail(idstart, "\"x\" or one of sin, cos, exp, ln, sqrt, abs, pow");
      if (!eat_char('(')) fail(pos_, "\"(\"");
      ExprPtr first = parse_sum();
      ExprPtr second;
      if (name == "pow") {
        if (!eat_char(',')) fail(pos_, "\",\"");
        second = parse_sum();
      } else if (peek_char(',')) {
        fail(pos_, "\")\"");
      }
      if (!eat_char(')')) fail(pos_, "\")\"");
      Expr e;
      e.kind = Expr::Kind::call;
      e.fn = name;
      e.a = first;
      e.b = second;
      return make(std::move(e), begin, pos_);
    }
    fail(pos_, "a value");
  }
};

[[noreturn]] void domain_fail(const char* what, const Expr& e) {
  throw eval_error(std::string(what) + " in '" + e.text + "'");
}

double eval_pow(double a, double b, const Expr& e) {
  if (a == 0.0 && b < 0.0) domain_fail("zero raised to a negative power", e);
  if (a < 0.0 && b != std::floor(b))
    domain_fail("fractional power of a negative base", e);
  return std::pow(a, b);
}

}  // namespace

ExprPtr parse_expression(const std::string& src) {
  Parser p(src);
  return p.run();
}

double eval_expression(const Expr& e, double x) {
  double r = 0.0;
  switch (e.kind) {
    case Expr::Kind::number:
      r = e.num;
      break;
    case Expr::Kind::variable:
      r = x;
      break;
    case Expr::Kind::unary_minus:
      r = -eval_expression(*e.a, x);
      break;
    case Expr::Kind::binary: {
      double a = eval_expression(*e.a, x);
      double b = eval_expression(*e.b, x);
      switch (e.op) {
        case '+': r = a + b; break;
        case '-': r = a - b; break;
        case '*': r = a * b; break;
        case '/':
          if (b == 0.0) domain_fail("division by zero", e);
          r = a / b;
          break;
        case '^': r = eval_pow(a, b, e); break;
      }
      break;
    }
    case Expr::Kind::call: {
      double a = eval_expression(*e.a, x);
      if (e.fn == "sin") r = std::sin(a);
      else if (e.fn == "cos") r = std::cos(a);
      else if (e.fn == "exp") r = std::exp(a);
      else if (e.fn == "abs") r = std::fabs(a);
      else if (e.fn == "ln") {
        if (a <= 0.0) domain_fail("ln of a non-positive argument", e);
        r = std::log(a);
      } else if (e.fn == "sqrt") {
        if (a < 0.0) domain_fail("sqrt of a negative argument", e);
        r = std::sqrt(a);
      } else if (e.fn == "pow") {
        r = eval_pow(a, eval_expression(*e.b, x), e);
      }
      break;
    }
  }
  if (!std::isfinite(r)) domain_fail("non-finite result", e);
  return r;
}

}  // namespace fraccore
