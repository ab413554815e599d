#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace fracosc::expr {

// Grammar (whitespace insignificant):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | power
//   power   := primary ('^' factor)?          right-associative
//   primary := NUMBER | 't' | IDENT '(' expr ')' | '(' expr ')'
// NUMBER is decimal with optional fraction and exponent. Power binds tighter
// than a leading minus: "-t^2" is -(t^2), while "2^-1" is 0.5.

enum class BinaryOp { add, subtract, multiply, divide, power };
enum class Function { gamma, sin, cos, exp, sqrt };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Number {
  double value;
};
struct Variable {};
struct Negate {
  NodePtr operand;
};
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  Function function;
  NodePtr argument;
};

struct Node {
  std::variant<Number, Variable, Negate, Binary, Call> kind;
};

/// Structural equality; number literals compare by exact value.
[[nodiscard]] bool equal(const Node& a, const Node& b);

/// Parsed arithmetic expression in the single variable t. Immutable and
/// cheap to copy; evaluation is re-entrant.
class Expression {
 public:
  explicit Expression(NodePtr root);

  [[nodiscard]] const Node& root() const noexcept { return *root_; }

  /// Throws DomainError on division by zero or a gamma pole, NonFiniteError
  /// on any other non-finite intermediate.
  [[nodiscard]] double evaluate(double t) const;
  [[nodiscard]] double operator()(double t) const { return evaluate(t); }

  /// Fully parenthesised canonical form; parse(to_string()) reproduces the tree.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Expression& a, const Expression& b) { return equal(a.root(), b.root()); }

 private:
  NodePtr root_;
};

/// Throws ParseError (with a byte offset) on malformed input or an unknown function name.
[[nodiscard]] Expression parse(std::string_view source);

[[nodiscard]] inline double evaluate(const Expression& e, double t) { return e.evaluate(t); }

[[nodiscard]] std::string_view function_name(Function f) noexcept;

}  // namespace fracosc::expr
