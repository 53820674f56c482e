#include "mmexp/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "mmexp/error.hpp"

namespace mmexp {

struct Expression::Node {
  enum class Op { constant, variable, add, sub, mul, div, pow, neg, sin, cos, exp, log, abs };
  Op op = Op::constant;
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr leaf(Node::Op op, double value = 0.0) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->value = value;
  return n;
}

NodePtr branch(Node::Op op, NodePtr lhs, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression error at column " + std::to_string(pos_) + ": " + what, pos_);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = branch(Node::Op::add, lhs, term());
      } else if (accept('-')) {
        lhs = branch(Node::Op::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = branch(Node::Op::mul, lhs, unary());
      } else if (accept('/')) {
        lhs = branch(Node::Op::div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return branch(Node::Op::neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return branch(Node::Op::pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t count = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++count;
      }
      return count;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const std::size_t mark = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = mark;
    }
    const std::string text(src_.substr(start, pos_ - start));
    return leaf(Node::Op::constant, std::strtod(text.c_str(), nullptr));
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") return leaf(Node::Op::variable);
    Node::Op op;
    if (name == "sin") {
      op = Node::Op::sin;
    } else if (name == "cos") {
      op = Node::Op::cos;
    } else if (name == "exp") {
      op = Node::Op::exp;
    } else if (name == "log") {
      op = Node::Op::log;
    } else if (name == "abs") {
      op = Node::Op::abs;
    } else {
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    expect('(');
    NodePtr arg = expr();
    expect(')');
    return branch(op, std::move(arg));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

double eval(const Node& n, double x) {
  switch (n.op) {
    case Node::Op::constant: return n.value;
    case Node::Op::variable: return x;
    case Node::Op::add: return eval(*n.lhs, x) + eval(*n.rhs, x);
    case Node::Op::sub: return eval(*n.lhs, x) - eval(*n.rhs, x);
    case Node::Op::mul: return eval(*n.lhs, x) * eval(*n.rhs, x);
    case Node::Op::div: return eval(*n.lhs, x) / eval(*n.rhs, x);
    case Node::Op::pow: return std::pow(eval(*n.lhs, x), eval(*n.rhs, x));
    case Node::Op::neg: return -eval(*n.lhs, x);
    case Node::Op::sin: return std::sin(eval(*n.lhs, x));
    case Node::Op::cos: return std::cos(eval(*n.lhs, x));
    case Node::Op::exp: return std::exp(eval(*n.lhs, x));
    case Node::Op::log: return std::log(eval(*n.lhs, x));
    case Node::Op::abs: return std::abs(eval(*n.lhs, x));
  }
  return 0.0;
}

}  // namespace

Expression Expression::parse(std::string_view source) {
  Parser parser(source);
  NodePtr root = parser.parse();
  return Expression(std::string(source), std::move(root));
}

double Expression::operator()(double x) const { return eval(*root_, x); }

}  // namespace mmexp
