#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace mmexp {

/// A compiled arithmetic expression in one variable `x`.
///
/// Grammar (recursive descent, usual precedence, `^` right-associative):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' unary)?
///   primary := number | 'x' | func '(' expr ')' | '(' expr ')'
///   func    := sin | cos | exp | log | abs
/// Anything else raises ParseError with the 0-based column of the offending token.
class Expression {
 public:
  static Expression parse(std::string_view source);

  double operator()(double x) const;
  const std::string& source() const noexcept { return source_; }

  struct Node;

 private:
  Expression(std::string source, std::shared_ptr<const Node> root)
      : source_(std::move(source)), root_(std::move(root)) {}

  std::string source_;
  std::shared_ptr<const Node> root_;
};

}  // namespace mmexp
