#include "fbelos/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "fbelos/errors.hpp"

namespace fbelos::expr {

namespace {

constexpr double kSqrtSlack = 1e-12;

constexpr std::array<std::pair<std::string_view, Function>, 7> kFunctions{{
    {"sqrt", Function::Sqrt},
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"tan", Function::Tan},
    {"exp", Function::Exp},
    {"log", Function::Log},
    {"abs", Function::Abs},
}};

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

bool is_number(const NodePtr& n) { return n->kind == NodeKind::Number; }
bool is_literal(const NodePtr& n, double v) { return is_number(n) && n->number == v; }

double apply(BinaryOp op, double a, double b) {
  switch (op) {
    case BinaryOp::Add: return a + b;
    case BinaryOp::Sub: return a - b;
    case BinaryOp::Mul: return a * b;
    case BinaryOp::Div: return a / b;
    case BinaryOp::Pow: return std::pow(a, b);
  }
  return std::nan("");
}

char op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return '+';
    case BinaryOp::Sub: return '-';
    case BinaryOp::Mul: return '*';
    case BinaryOp::Div: return '/';
    case BinaryOp::Pow: return '^';
  }
  return '?';
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(v));
  std::string digits(buf.data(), end);
  if (std::signbit(v)) return "(-" + digits + ")";
  return digits;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    NodePtr root = expression();
    skip_space();
    if (pos_ < src_.size()) fail({"operator", "end of input"});
    return root;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_space();
    std::string found = pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
    throw SyntaxError(pos_, std::move(expected), found);
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = binary(c == '+' ? BinaryOp::Add : BinaryOp::Sub, lhs, term());
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      lhs = binary(c == '*' ? BinaryOp::Mul : BinaryOp::Div, lhs, unary());
    }
  }

  NodePtr unary() {
    if (peek() == '-') {
      ++pos_;
      return negate(unary());
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (peek() == '^') {
      ++pos_;
      return binary(BinaryOp::Pow, base, unary());
    }
    return base;
  }

  NodePtr primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expression();
      if (peek() != ')') fail({"')'"});
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail({"number", "identifier", "'('", "'-'"});
  }

  NodePtr literal() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail({"number"});
    }
    // An exponent only when digits follow, so that `2e` is left for the caller.
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || !std::isfinite(value)) {
      pos_ = start;
      fail({"finite number"});
    }
    return number(value);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") return variable();
    if (name == "pi") return constant(NamedConstant::Pi);
    if (name == "e") return constant(NamedConstant::E);
    for (const auto& [fname, fn] : kFunctions) {
      if (name != fname) continue;
      if (peek() != '(') fail({"'('"});
      ++pos_;
      NodePtr arg = expression();
      if (peek() != ')') fail({"')'"});
      ++pos_;
      return call(fn, arg);
    }
    throw UnknownIdentifier(std::string(name), start);
  }
};

// ---------------------------------------------------------------------------
// Evaluation

template <class Real>
Real constant_value(NamedConstant c) {
  return c == NamedConstant::Pi ? std::numbers::pi_v<Real> : std::numbers::e_v<Real>;
}

template <class Real>
[[noreturn]] void domain(const Node& n, Real arg, const char* what) {
  throw DomainError(serialize(n), static_cast<double>(arg), what);
}

template <class Real>
Real evaluate(const Node& n, Real x) {
  Real result = 0;
  switch (n.kind) {
    case NodeKind::Number:
      return static_cast<Real>(n.number);
    case NodeKind::Variable:
      return x;
    case NodeKind::Constant:
      return constant_value<Real>(n.constant);
    case NodeKind::Negate:
      return -evaluate(*n.lhs, x);
    case NodeKind::Binary: {
      const Real a = evaluate(*n.lhs, x);
      const Real b = evaluate(*n.rhs, x);
      switch (n.op) {
        case BinaryOp::Add: result = a + b; break;
        case BinaryOp::Sub: result = a - b; break;
        case BinaryOp::Mul: result = a * b; break;
        case BinaryOp::Div:
          if (b == 0) domain(n, b, "division by zero");
          result = a / b;
          break;
        case BinaryOp::Pow:
          if (a < 0 && std::trunc(b) != b) domain(n, a, "negative base with non-integer exponent");
          if (a == 0 && b < 0) domain(n, a, "zero raised to a negative power");
          result = std::pow(a, b);
          break;
      }
      break;
    }
    case NodeKind::Call: {
      const Real a = evaluate(*n.lhs, x);
      switch (n.function) {
        case Function::Sqrt:
          if (a < -static_cast<Real>(kSqrtSlack)) domain(n, a, "square root of a negative value");
          result = a < 0 ? Real(0) : std::sqrt(a);
          break;
        case Function::Sin: result = std::sin(a); break;
        case Function::Cos: result = std::cos(a); break;
        case Function::Tan: result = std::tan(a); break;
        case Function::Exp: result = std::exp(a); break;
        case Function::Log:
          if (a <= 0) domain(n, a, "logarithm of a non-positive value");
          result = std::log(a);
          break;
        case Function::Abs: result = std::fabs(a); break;
      }
      break;
    }
  }
  if (!std::isfinite(result)) domain(n, x, "non-finite result");
  return result;
}

// ---------------------------------------------------------------------------
// Differentiation. Zero terms and unit factors are dropped while the rules
// are applied; everything else is left to literal folding.

bool contains_abs(const Node& n) {
  if (n.kind == NodeKind::Call && n.function == Function::Abs) return true;
  if (n.lhs && contains_abs(*n.lhs)) return true;
  if (n.rhs && contains_abs(*n.rhs)) return true;
  return false;
}

NodePtr add(NodePtr a, NodePtr b) {
  if (is_literal(a, 0.0)) return b;
  if (is_literal(b, 0.0)) return a;
  return binary(BinaryOp::Add, std::move(a), std::move(b));
}

NodePtr sub(NodePtr a, NodePtr b) {
  if (is_literal(b, 0.0)) return a;
  if (is_literal(a, 0.0)) return negate(std::move(b));
  return binary(BinaryOp::Sub, std::move(a), std::move(b));
}

NodePtr mul(NodePtr a, NodePtr b) {
  if (is_literal(a, 0.0) || is_literal(b, 0.0)) return number(0.0);
  if (is_literal(a, 1.0)) return b;
  if (is_literal(b, 1.0)) return a;
  return binary(BinaryOp::Mul, std::move(a), std::move(b));
}

NodePtr div(NodePtr a, NodePtr b) {
  if (is_literal(a, 0.0)) return number(0.0);
  if (is_literal(b, 1.0)) return a;
  return binary(BinaryOp::Div, std::move(a), std::move(b));
}

NodePtr derive(const NodePtr& n) {
  switch (n->kind) {
    case NodeKind::Number:
    case NodeKind::Constant:
      return number(0.0);
    case NodeKind::Variable:
      return number(1.0);
    case NodeKind::Negate: {
      NodePtr d = derive(n->lhs);
      return is_literal(d, 0.0) ? d : negate(d);
    }
    case NodeKind::Binary: {
      const NodePtr& a = n->lhs;
      const NodePtr& b = n->rhs;
      switch (n->op) {
        case BinaryOp::Add: return add(derive(a), derive(b));
        case BinaryOp::Sub: return sub(derive(a), derive(b));
        case BinaryOp::Mul: return add(mul(derive(a), b), mul(a, derive(b)));
        case BinaryOp::Div: {
          NodePtr db = derive(b);
          if (is_literal(db, 0.0)) return div(derive(a), b);
          return div(sub(mul(derive(a), b), mul(a, db)), binary(BinaryOp::Pow, b, number(2.0)));
        }
        case BinaryOp::Pow: {
          if (!depends_on_x(*b)) {
            NodePtr lowered = binary(BinaryOp::Pow, a, binary(BinaryOp::Sub, b, number(1.0)));
            return mul(mul(b, lowered), derive(a));
          }
          NodePtr log_a = call(Function::Log, a);
          if (!depends_on_x(*a)) return mul(mul(n, log_a), derive(b));
          return mul(n, add(mul(derive(b), log_a), div(mul(b, derive(a)), a)));
        }
      }
      break;
    }
    case NodeKind::Call: {
      const NodePtr& a = n->lhs;
      NodePtr da = derive(a);
      switch (n->function) {
        case Function::Sqrt: return div(da, mul(number(2.0), n));
        case Function::Sin: return mul(call(Function::Cos, a), da);
        case Function::Cos: return mul(negate(call(Function::Sin, a)), da);
        case Function::Tan:
          return div(da, binary(BinaryOp::Pow, call(Function::Cos, a), number(2.0)));
        case Function::Exp: return mul(n, da);
        case Function::Log: return div(da, a);
        case Function::Abs: break;
      }
      throw NonDifferentiable("abs is not differentiable");
    }
  }
  throw NonDifferentiable("unsupported node");
}

}  // namespace

// ---------------------------------------------------------------------------

NodePtr number(double value) {
  Node n;
  n.kind = NodeKind::Number;
  n.number = value;
  return make(std::move(n));
}

NodePtr variable() {
  Node n;
  n.kind = NodeKind::Variable;
  return make(std::move(n));
}

NodePtr constant(NamedConstant c) {
  Node n;
  n.kind = NodeKind::Constant;
  n.constant = c;
  return make(std::move(n));
}

NodePtr negate(NodePtr operand) {
  if (is_number(operand)) return number(-operand->number);
  Node n;
  n.kind = NodeKind::Negate;
  n.lhs = std::move(operand);
  return make(std::move(n));
}

NodePtr binary(BinaryOp op, NodePtr lhs, NodePtr rhs) {
  if (is_number(lhs) && is_number(rhs)) {
    const double folded = apply(op, lhs->number, rhs->number);
    if (std::isfinite(folded)) return number(folded);
  }
  Node n;
  n.kind = NodeKind::Binary;
  n.op = op;
  n.lhs = std::move(lhs);
  n.rhs = std::move(rhs);
  return make(std::move(n));
}

NodePtr call(Function fn, NodePtr argument) {
  Node n;
  n.kind = NodeKind::Call;
  n.function = fn;
  n.lhs = std::move(argument);
  return make(std::move(n));
}

bool structurally_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Number: return a.number == b.number;
    case NodeKind::Variable: return true;
    case NodeKind::Constant: return a.constant == b.constant;
    case NodeKind::Negate: return structurally_equal(*a.lhs, *b.lhs);
    case NodeKind::Binary:
      return a.op == b.op && structurally_equal(*a.lhs, *b.lhs) &&
             structurally_equal(*a.rhs, *b.rhs);
    case NodeKind::Call: return a.function == b.function && structurally_equal(*a.lhs, *b.lhs);
  }
  return false;
}

bool depends_on_x(const Node& n) {
  if (n.kind == NodeKind::Variable) return true;
  if (n.lhs && depends_on_x(*n.lhs)) return true;
  if (n.rhs && depends_on_x(*n.rhs)) return true;
  return false;
}

std::string_view function_name(Function fn) {
  for (const auto& [name, f] : kFunctions)
    if (f == fn) return name;
  return "?";
}

std::string serialize(const Node& n) {
  switch (n.kind) {
    case NodeKind::Number: return format_number(n.number);
    case NodeKind::Variable: return "x";
    case NodeKind::Constant: return n.constant == NamedConstant::Pi ? "pi" : "e";
    case NodeKind::Negate: return "(-" + serialize(*n.lhs) + ")";
    case NodeKind::Binary:
      return "(" + serialize(*n.lhs) + " " + op_symbol(n.op) + " " + serialize(*n.rhs) + ")";
    case NodeKind::Call:
      return std::string(function_name(n.function)) + "(" + serialize(*n.lhs) + ")";
  }
  return "?";
}

ProfileExpr::ProfileExpr(NodePtr root, std::string source_text)
    : root_(std::move(root)), source_(std::move(source_text)) {}

ProfileExpr parse(std::string_view source) {
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (static_cast<unsigned char>(source[i]) >= 0x80)
      throw SyntaxError(i, {"ASCII expression character"}, "non-ASCII byte");
  }
  return ProfileExpr(Parser(source).parse(), std::string(source));
}

double eval(const ProfileExpr& e, double x) { return evaluate<double>(e.root(), x); }

long double eval_extended(const ProfileExpr& e, long double x) {
  return evaluate<long double>(e.root(), x);
}

ProfileExpr differentiate(const ProfileExpr& e) {
  if (contains_abs(e.root())) throw NonDifferentiable("abs is evaluable but not differentiable");
  NodePtr d = derive(e.root_ptr());
  return ProfileExpr(d, serialize(*d));
}

}  // namespace fbelos::expr
