#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ndyn/core.hpp"

namespace ndyn {

enum class NodeKind { Var, Const, Param, StepRef, Deriv, BinOp, Neg };

struct SchemeNode;
using NodePtr = std::shared_ptr<const SchemeNode>;

/// One node of a scheme expression. `name` holds the parameter or step name,
/// `order` the derivative order of p, `op` one of + - * /.
struct SchemeNode {
  NodeKind kind = NodeKind::Var;
  Complex value{};
  std::string name;
  int order = 0;
  char op = 0;
  NodePtr lhs;
  NodePtr rhs;
};

struct SchemeStep {
  std::string name;
  NodePtr expr;
};

/// A chain of named steps; the last one binds `next`.
struct SchemeExpr {
  std::vector<SchemeStep> steps;

  /// Parameter names in order of first appearance.
  std::vector<std::string> parameters() const;
};

/// SyntaxError and UnboundIdentifier raised by the parser carry a position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& message, std::string identifier = {});
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& identifier() const noexcept { return identifier_; }

 private:
  int line_;
  int column_;
  std::string identifier_;
};

SchemeExpr parse_scheme(std::string_view text);

/// Parses a complex literal such as "2", "-1.5", "3i" or "1.5+2i" with the
/// number grammar of the scheme language. Throws SyntaxError.
Complex parse_complex(std::string_view text);

/// Renders an expression back to scheme text (fully parenthesized binary ops).
std::string to_text(const NodePtr& node);
std::string to_text(const SchemeExpr& expr);

}  // namespace ndyn
