#include "trikernel/expr.hpp"

#include <cctype>

#include "trikernel/error.hpp"

namespace trikernel {

struct Expr::Node {
  Kind kind;
  Scalar value;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

bool is_binary(Expr::Kind kind) {
  return kind == Expr::Kind::Add || kind == Expr::Kind::Sub || kind == Expr::Kind::Mul ||
         kind == Expr::Kind::Div;
}

char op_char(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::Add: return '+';
    case Expr::Kind::Sub: return '-';
    case Expr::Kind::Mul: return '*';
    case Expr::Kind::Div: return '/';
    default: return '?';
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("expected operator or end of input");
    return e;
  }

 private:
  Expr expr() {
    Expr acc = term();
    for (;;) {
      skip_ws();
      if (peek('+')) {
        ++pos_;
        acc = Expr::binary(Expr::Kind::Add, acc, term());
      } else if (peek('-')) {
        ++pos_;
        acc = Expr::binary(Expr::Kind::Sub, acc, term());
      } else {
        return acc;
      }
    }
  }

  Expr term() {
    Expr acc = unary();
    for (;;) {
      skip_ws();
      if (peek('*')) {
        ++pos_;
        acc = Expr::binary(Expr::Kind::Mul, acc, unary());
      } else if (peek('/')) {
        ++pos_;
        acc = Expr::binary(Expr::Kind::Div, acc, unary());
      } else {
        return acc;
      }
    }
  }

  Expr unary() {
    skip_ws();
    if (peek('-')) {
      ++pos_;
      return Expr::neg(unary());
    }
    return primary();
  }

  Expr primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected integer, variable or '('");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      skip_ws();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return Expr::literal(Scalar::parse(src_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view ident = src_.substr(start, pos_ - start);
      if (ident == "n") return Expr::var_n();
      if (ident == "k") return Expr::var_k();
      throw ParseError(start, "unknown variable '" + std::string(ident) + "', expected n or k",
                       ErrorCode::UnknownVariable);
    }
    fail("expected integer, variable or '('");
  }

  bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < src_.size() ? std::string("'") + src_[pos_] + "'" : "end of input";
    throw ParseError(pos_, expected + ", found " + found);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr Expr::parse(std::string_view source) { return Parser(source).parse(); }

Expr Expr::literal(Scalar value) {
  return Expr(std::make_shared<const Node>(Node{Kind::Literal, std::move(value), nullptr, nullptr}));
}

Expr Expr::var_n() { return Expr(std::make_shared<const Node>(Node{Kind::VarN, {}, nullptr, nullptr})); }

Expr Expr::var_k() { return Expr(std::make_shared<const Node>(Node{Kind::VarK, {}, nullptr, nullptr})); }

Expr Expr::neg(Expr operand) {
  return Expr(std::make_shared<const Node>(Node{Kind::Neg, {}, std::move(operand.node_), nullptr}));
}

Expr Expr::binary(Kind op, Expr lhs, Expr rhs) {
  if (!is_binary(op)) throw Error(ErrorCode::BadDimension, "not a binary operator");
  return Expr(std::make_shared<const Node>(
      Node{op, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const Scalar& Expr::value() const { return node_->value; }

Expr Expr::lhs() const { return Expr(node_->lhs); }
Expr Expr::rhs() const { return Expr(node_->rhs); }

Scalar Expr::eval(long n, long k) const {
  struct Eval {
    long n, k;
    Scalar operator()(const Node& node) const {
      switch (node.kind) {
        case Kind::Literal: return node.value;
        case Kind::VarN: return Scalar(n);
        case Kind::VarK: return Scalar(k);
        case Kind::Neg: return -(*this)(*node.lhs);
        case Kind::Add: return (*this)(*node.lhs) + (*this)(*node.rhs);
        case Kind::Sub: return (*this)(*node.lhs) - (*this)(*node.rhs);
        case Kind::Mul: return (*this)(*node.lhs) * (*this)(*node.rhs);
        case Kind::Div: {
          Scalar den = (*this)(*node.rhs);
          if (den.is_zero()) {
            throw Error(ErrorCode::DivisionByZero,
                        "divisor is zero at n=" + std::to_string(n) + ", k=" + std::to_string(k), n,
                        k);
          }
          return (*this)(*node.lhs) / den;
        }
      }
      return {};
    }
  };
  return Eval{n, k}(*node_);
}

namespace {

bool mentions(const auto& node, auto var) {
  if (!node) return false;
  if (node->kind == var) return true;
  return mentions(node->lhs, var) || mentions(node->rhs, var);
}

}  // namespace

bool Expr::mentions_n() const { return mentions(node_, Kind::VarN); }
bool Expr::mentions_k() const { return mentions(node_, Kind::VarK); }

std::string Expr::render() const {
  const Node& node = *node_;
  switch (node.kind) {
    case Kind::Literal: return node.value.to_string();
    case Kind::VarN: return "n";
    case Kind::VarK: return "k";
    case Kind::Neg: return "-" + Expr(node.lhs).render();
    default:
      return "(" + Expr(node.lhs).render() + " " + op_char(node.kind) + " " +
             Expr(node.rhs).render() + ")";
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  if (x.kind == Expr::Kind::Literal) return x.value == y.value;
  if (x.lhs && !(Expr(x.lhs) == Expr(y.lhs))) return false;
  if (x.rhs && !(Expr(x.rhs) == Expr(y.rhs))) return false;
  return true;
}

}  // namespace trikernel
