#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "trikernel/scalar.hpp"

namespace trikernel {

/// Closed-form expression over the index variables `n` and `k`.
///
/// Grammar (integer literals only, rationals arise through `/`):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | primary
///   primary := INTEGER | 'n' | 'k' | '(' expr ')'
///
/// Expressions are immutable; copies share the tree.
class Expr {
 public:
  enum class Kind { Literal, VarN, VarK, Neg, Add, Sub, Mul, Div };

  /// Throws ParseError (with byte offset) or, for identifiers other than
  /// n and k, a ParseError carrying ErrorCode::UnknownVariable.
  static Expr parse(std::string_view source);

  static Expr literal(Scalar value);
  static Expr var_n();
  static Expr var_k();
  static Expr neg(Expr operand);
  static Expr binary(Kind op, Expr lhs, Expr rhs);

  Kind kind() const;
  /// Literal value; only meaningful for Kind::Literal.
  const Scalar& value() const;
  Expr lhs() const;
  Expr rhs() const;
  Expr operand() const { return lhs(); }

  /// Throws Error(DivisionByZero) when a divisor evaluates to zero.
  Scalar eval(long n, long k = 0) const;

  bool mentions_n() const;
  bool mentions_k() const;

  /// Fully parenthesized rendering. parse(render()) reproduces any tree whose
  /// literals are non-negative integers, which is every tree parse() builds.
  std::string render() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline Expr parse_expr(std::string_view source) { return Expr::parse(source); }

}  // namespace trikernel
