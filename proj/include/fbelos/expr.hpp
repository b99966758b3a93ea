#pragma once

// Profile-expression language: parsing, evaluation and symbolic
// differentiation of real functions of a single variable `x`.
//
// Grammar (lowest to highest precedence):
//
//   expression := term (('+' | '-') term)*
//   term       := unary (('*' | '/') unary)*
//   unary      := '-' unary | power
//   power      := primary ('^' unary)?          right-associative
//   primary    := number | 'x' | 'pi' | 'e' | function '(' expression ')'
//               | '(' expression ')'
//   function   := sqrt | sin | cos | tan | exp | log | abs
//
// `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`.

#include <memory>
#include <string>
#include <string_view>

namespace fbelos::expr {

enum class NodeKind { Number, Variable, Constant, Negate, Binary, Call };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Sqrt, Sin, Cos, Tan, Exp, Log, Abs };
enum class NamedConstant { Pi, E };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable AST node. `lhs` is the operand of Negate and Call.
struct Node {
  NodeKind kind = NodeKind::Number;
  double number = 0.0;
  NamedConstant constant = NamedConstant::Pi;
  BinaryOp op = BinaryOp::Add;
  Function function = Function::Sqrt;
  NodePtr lhs;
  NodePtr rhs;
};

// Node builders. Operations whose operands are all numeric literals are
// folded into a literal when the result is finite.
NodePtr number(double value);
NodePtr variable();
NodePtr constant(NamedConstant c);
NodePtr negate(NodePtr operand);
NodePtr binary(BinaryOp op, NodePtr lhs, NodePtr rhs);
NodePtr call(Function fn, NodePtr argument);

bool structurally_equal(const Node& a, const Node& b);
bool depends_on_x(const Node& n);

/// Fully parenthesized infix form, re-parseable by `parse`.
std::string serialize(const Node& n);

std::string_view function_name(Function fn);

class ProfileExpr {
 public:
  ProfileExpr(NodePtr root, std::string source_text);

  const Node& root() const noexcept { return *root_; }
  const NodePtr& root_ptr() const noexcept { return root_; }
  const std::string& source_text() const noexcept { return source_; }

  std::string serialize() const { return expr::serialize(*root_); }

  friend bool operator==(const ProfileExpr& a, const ProfileExpr& b) {
    return structurally_equal(*a.root_, *b.root_);
  }

 private:
  NodePtr root_;
  std::string source_;
};

/// Throws SyntaxError or UnknownIdentifier.
ProfileExpr parse(std::string_view source);

/// Throws DomainError rather than returning NaN or an infinity. Square roots
/// of values in [-1e-12, 0) evaluate to 0.
double eval(const ProfileExpr& e, double x);
long double eval_extended(const ProfileExpr& e, long double x);

/// Symbolic derivative with respect to x. Throws NonDifferentiable when the
/// expression contains `abs`.
ProfileExpr differentiate(const ProfileExpr& e);

}  // namespace fbelos::expr
