#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>

#include "ndyn/scheme.hpp"

namespace ndyn {

ParseError::ParseError(ErrorKind kind, int line, int column, const std::string& message, std::string identifier)
    : Error(kind, "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      identifier_(std::move(identifier)) {}

namespace {

enum class Tok { Number, Ident, Assign, Semi, Plus, Minus, Star, Slash, LParen, RParen, Prime, End };

struct Token {
  Tok type;
  std::string text;
  Complex value{};
  int line;
  int col;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    const int tl = line, tc = col;
    if (std::isdigit(static_cast<unsigned char>(ch)) || (ch == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
          j = k;
        }
      }
      double v = 0.0;
      const auto res = std::from_chars(src.data() + i, src.data() + j, v);
      if (res.ec != std::errc()) throw ParseError(ErrorKind::SyntaxError, tl, tc, "malformed number");
      bool imaginary = false;
      if (j < src.size() && src[j] == 'i' &&
          !(j + 1 < src.size() && (std::isalnum(static_cast<unsigned char>(src[j + 1])) || src[j + 1] == '_'))) {
        imaginary = true;
        ++j;
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), imaginary ? Complex(0.0, v) : Complex(v, 0.0), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), {}, tl, tc});
      advance(j - i);
      continue;
    }
    Tok t;
    switch (ch) {
      case '=': t = Tok::Assign; break;
      case ';': t = Tok::Semi; break;
      case '+': t = Tok::Plus; break;
      case '-': t = Tok::Minus; break;
      case '*': t = Tok::Star; break;
      case '/': t = Tok::Slash; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case '\'': t = Tok::Prime; break;
      default:
        throw ParseError(ErrorKind::SyntaxError, tl, tc, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({t, std::string(1, ch), {}, tl, tc});
    advance(1);
  }
  out.push_back({Tok::End, "", {}, line, col});
  return out;
}

NodePtr make_const(Complex v) {
  auto n = std::make_shared<SchemeNode>();
  n->kind = NodeKind::Const;
  n->value = v;
  return n;
}

NodePtr make_binop(char op, NodePtr l, NodePtr r) {
  auto n = std::make_shared<SchemeNode>();
  n->kind = NodeKind::BinOp;
  n->op = op;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

// Recursive descent over the token stream.
class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SchemeExpr scheme() {
    SchemeExpr out;
    std::set<std::string> bound;
    while (peek().type != Tok::End) {
      const Token& name = expect(Tok::Ident, "step name");
      if (name.text == "z" || name.text == "p")
        throw ParseError(ErrorKind::SyntaxError, name.line, name.col, "cannot rebind '" + name.text + "'");
      if (bound.count(name.text))
        throw ParseError(ErrorKind::SyntaxError, name.line, name.col, "duplicate binding '" + name.text + "'");
      if (!out.steps.empty() && out.steps.back().name == "next")
        throw ParseError(ErrorKind::SyntaxError, name.line, name.col, "statement after 'next'");
      expect(Tok::Assign, "'='");
      NodePtr e = expr(bound);
      expect(Tok::Semi, "';'");
      bound.insert(name.text);
      out.steps.push_back({name.text, std::move(e)});
    }
    if (out.steps.empty() || out.steps.back().name != "next") {
      const Token& t = peek();
      throw ParseError(ErrorKind::SyntaxError, t.line, t.col, "last statement must bind 'next'");
    }
    // Parameters that collide with a step name are forward or self references.
    for (const auto& use : param_uses_) {
      if (bound.count(use.name))
        throw ParseError(ErrorKind::UnboundIdentifier, use.line, use.col,
                         "'" + use.name + "' is used before it is bound", use.name);
    }
    return out;
  }

  NodePtr constant_expression() {
    std::set<std::string> none;
    NodePtr e = expr(none);
    if (peek().type != Tok::End) {
      const Token& t = peek();
      throw ParseError(ErrorKind::SyntaxError, t.line, t.col, "unexpected '" + t.text + "'");
    }
    return e;
  }

  const std::vector<std::string>& params_seen() const { return param_order_; }

 private:
  struct Use {
    std::string name;
    int line;
    int col;
  };

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  const Token& expect(Tok t, const char* what) {
    const Token& tok = peek();
    if (tok.type != t) {
      const std::string found = tok.type == Tok::End ? "end of input" : "'" + tok.text + "'";
      throw ParseError(ErrorKind::SyntaxError, tok.line, tok.col, std::string("expected ") + what + ", found " + found);
    }
    return next();
  }

  NodePtr expr(const std::set<std::string>& bound) {
    NodePtr lhs = term(bound);
    while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
      const char op = next().type == Tok::Plus ? '+' : '-';
      lhs = make_binop(op, lhs, term(bound));
    }
    return lhs;
  }

  NodePtr term(const std::set<std::string>& bound) {
    NodePtr lhs = factor(bound);
    while (peek().type == Tok::Star || peek().type == Tok::Slash) {
      const char op = next().type == Tok::Star ? '*' : '/';
      lhs = make_binop(op, lhs, factor(bound));
    }
    return lhs;
  }

  NodePtr factor(const std::set<std::string>& bound) {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Number:
        next();
        return make_const(t.value);
      case Tok::Minus: {
        next();
        auto n = std::make_shared<SchemeNode>();
        n->kind = NodeKind::Neg;
        n->lhs = factor(bound);
        return n;
      }
      case Tok::LParen: {
        next();
        NodePtr e = expr(bound);
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        return identifier(bound);
      default: {
        const std::string found = t.type == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(ErrorKind::SyntaxError, t.line, t.col, "expected an operand, found " + found);
      }
    }
  }

  NodePtr identifier(const std::set<std::string>& bound) {
    const Token& t = next();
    auto n = std::make_shared<SchemeNode>();
    if (t.text == "p") {
      int order = 0;
      while (peek().type == Tok::Prime) {
        next();
        ++order;
      }
      expect(Tok::LParen, "'(' after p");
      n->kind = NodeKind::Deriv;
      n->order = order;
      n->lhs = expr(bound);
      expect(Tok::RParen, "')'");
      return n;
    }
    if (peek().type == Tok::LParen || peek().type == Tok::Prime)
      throw ParseError(ErrorKind::UnboundIdentifier, t.line, t.col, "unknown function '" + t.text + "'", t.text);
    if (t.text == "z") {
      n->kind = NodeKind::Var;
      return n;
    }
    n->name = t.text;
    if (bound.count(t.text)) {
      n->kind = NodeKind::StepRef;
      return n;
    }
    if (t.text == "next")
      throw ParseError(ErrorKind::UnboundIdentifier, t.line, t.col, "'next' cannot be referenced", t.text);
    n->kind = NodeKind::Param;
    param_uses_.push_back({t.text, t.line, t.col});
    bool seen = false;
    for (const auto& p : param_order_) seen = seen || p == t.text;
    if (!seen) param_order_.push_back(t.text);
    return n;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Use> param_uses_;
  std::vector<std::string> param_order_;
};

Complex fold(const NodePtr& n, int line, int col) {
  switch (n->kind) {
    case NodeKind::Const: return n->value;
    case NodeKind::Neg: return -fold(n->lhs, line, col);
    case NodeKind::BinOp: {
      const Complex a = fold(n->lhs, line, col), b = fold(n->rhs, line, col);
      switch (n->op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default:
          if (b == Complex(0.0)) throw ParseError(ErrorKind::SyntaxError, line, col, "division by zero in literal");
          return a / b;
      }
    }
    default:
      throw ParseError(ErrorKind::SyntaxError, line, col, "complex literal may only contain numbers");
  }
}

void collect_params(const NodePtr& n, std::vector<std::string>& out) {
  if (!n) return;
  if (n->kind == NodeKind::Param) {
    bool seen = false;
    for (const auto& p : out) seen = seen || p == n->name;
    if (!seen) out.push_back(n->name);
  }
  collect_params(n->lhs, out);
  collect_params(n->rhs, out);
}

std::string number_text(Complex v) {
  char buf[80];
  if (v.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", v.real());
  } else if (v.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17gi", v.imag());
  } else {
    std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", v.real(), v.imag());
  }
  return buf;
}

}  // namespace

std::vector<std::string> SchemeExpr::parameters() const {
  std::vector<std::string> out;
  for (const auto& s : steps) collect_params(s.expr, out);
  return out;
}

SchemeExpr parse_scheme(std::string_view text) { return Parser(tokenize(text)).scheme(); }

Complex parse_complex(std::string_view text) {
  Parser parser(tokenize(text));
  const NodePtr e = parser.constant_expression();
  return fold(e, 1, 1);
}

std::string to_text(const NodePtr& n) {
  switch (n->kind) {
    case NodeKind::Var: return "z";
    case NodeKind::Const: return number_text(n->value);
    case NodeKind::Param:
    case NodeKind::StepRef: return n->name;
    case NodeKind::Deriv: return "p" + std::string(static_cast<std::size_t>(n->order), '\'') + "(" + to_text(n->lhs) + ")";
    case NodeKind::Neg: return "-(" + to_text(n->lhs) + ")";
    case NodeKind::BinOp: return "(" + to_text(n->lhs) + " " + n->op + " " + to_text(n->rhs) + ")";
  }
  return {};
}

std::string to_text(const SchemeExpr& expr) {
  std::string out;
  for (const auto& s : expr.steps) out += s.name + " = " + to_text(s.expr) + ";\n";
  return out;
}

}  // namespace ndyn
