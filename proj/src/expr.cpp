#include "fracosc/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <utility>

#include "fracosc/error.hpp"
#include "fracosc/special.hpp"

namespace fracosc::expr {

namespace {

constexpr std::array<std::pair<std::string_view, Function>, 5> kFunctions = {{
    {"gamma", Function::gamma},
    {"sin", Function::sin},
    {"cos", Function::cos},
    {"exp", Function::exp},
    {"sqrt", Function::sqrt},
}};

std::optional<Function> lookup_function(std::string_view name) {
  for (const auto& [n, f] : kFunctions) {
    if (n == name) return f;
  }
  return std::nullopt;
}

NodePtr make(auto kind) { return std::make_shared<const Node>(Node{std::move(kind)}); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse_all() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty expression");
    NodePtr e = parse_expr();
    skip_ws();
    if (!at_end()) throw ParseError(pos_, "expected operator or end of input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_ws() {
    while (!at_end() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Binary{BinaryOp::add, lhs, parse_term()});
      } else if (accept('-')) {
        lhs = make(Binary{BinaryOp::subtract, lhs, parse_term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      if (accept('*')) {
        lhs = make(Binary{BinaryOp::multiply, lhs, parse_factor()});
      } else if (accept('/')) {
        lhs = make(Binary{BinaryOp::divide, lhs, parse_factor()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_factor() {
    if (accept('-')) return make(Negate{parse_factor()});
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (accept('^')) return make(Binary{BinaryOp::power, base, parse_factor()});
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (is_digit(c)) return parse_number();
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (is_ident_start(c)) {
      while (!at_end() && is_ident_char(src_[pos_])) ++pos_;
      const std::string_view name = src_.substr(start, pos_ - start);
      if (name == "t") return make(Variable{});
      const auto fn = lookup_function(name);
      if (!fn) throw ParseError(start, "unknown function or variable '" + std::string(name) + "'");
      if (!accept('(')) throw ParseError(pos_, "expected '(' after function name");
      NodePtr arg = parse_expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return make(Call{*fn, arg});
    }
    throw ParseError(start, "expected number, 't', function call or '('");
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (is_digit(peek())) ++pos_;
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p >= src_.size() || !is_digit(src_[p])) throw ParseError(p, "expected exponent digits");
      pos_ = p;
      while (is_digit(peek())) ++pos_;
    }
    double value = 0.0;
    const char* first = src_.data() + start;
    const char* last = src_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
      throw ParseError(start, "number literal out of range");
    }
    return make(Number{value});
  }
};

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw NonFiniteError(std::string("expression: non-finite result from ") + what);
  return v;
}

double eval(const Node& node, double t) {
  struct Visitor {
    double t;
    double operator()(const Number& n) const { return n.value; }
    double operator()(const Variable&) const { return t; }
    double operator()(const Negate& n) const { return -eval(*n.operand, t); }
    double operator()(const Binary& b) const {
      const double l = eval(*b.lhs, t);
      const double r = eval(*b.rhs, t);
      switch (b.op) {
        case BinaryOp::add: return checked(l + r, "'+'");
        case BinaryOp::subtract: return checked(l - r, "'-'");
        case BinaryOp::multiply: return checked(l * r, "'*'");
        case BinaryOp::divide:
          if (r == 0.0) throw DomainError("expression: division by zero");
          return checked(l / r, "'/'");
        case BinaryOp::power: return checked(std::pow(l, r), "'^'");
      }
      return 0.0;
    }
    double operator()(const Call& c) const {
      const double a = eval(*c.argument, t);
      switch (c.function) {
        case Function::gamma: return checked(fracosc::gamma(a), "gamma");
        case Function::sin: return checked(std::sin(a), "sin");
        case Function::cos: return checked(std::cos(a), "cos");
        case Function::exp: return checked(std::exp(a), "exp");
        case Function::sqrt: return checked(std::sqrt(a), "sqrt");
      }
      return 0.0;
    }
  };
  return std::visit(Visitor{t}, node.kind);
}

char op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return '+';
    case BinaryOp::subtract: return '-';
    case BinaryOp::multiply: return '*';
    case BinaryOp::divide: return '/';
    case BinaryOp::power: return '^';
  }
  return '?';
}

void print(const Node& node, std::string& out) {
  struct Visitor {
    std::string& out;
    void operator()(const Number& n) const {
      std::array<char, 32> buf{};
      std::snprintf(buf.data(), buf.size(), "%.17g", n.value);
      out += buf.data();
    }
    void operator()(const Variable&) const { out += 't'; }
    void operator()(const Negate& n) const {
      out += "(-";
      print(*n.operand, out);
      out += ')';
    }
    void operator()(const Binary& b) const {
      out += '(';
      print(*b.lhs, out);
      out += ' ';
      out += op_symbol(b.op);
      out += ' ';
      print(*b.rhs, out);
      out += ')';
    }
    void operator()(const Call& c) const {
      out += function_name(c.function);
      out += '(';
      print(*c.argument, out);
      out += ')';
    }
  };
  std::visit(Visitor{out}, node.kind);
}

}  // namespace

std::string_view function_name(Function f) noexcept {
  for (const auto& [n, fn] : kFunctions) {
    if (fn == f) return n;
  }
  return "?";
}

bool equal(const Node& a, const Node& b) {
  if (a.kind.index() != b.kind.index()) return false;
  if (const auto* n = std::get_if<Number>(&a.kind)) return n->value == std::get<Number>(b.kind).value;
  if (std::holds_alternative<Variable>(a.kind)) return true;
  if (const auto* n = std::get_if<Negate>(&a.kind)) return equal(*n->operand, *std::get<Negate>(b.kind).operand);
  if (const auto* x = std::get_if<Binary>(&a.kind)) {
    const auto& y = std::get<Binary>(b.kind);
    return x->op == y.op && equal(*x->lhs, *y.lhs) && equal(*x->rhs, *y.rhs);
  }
  const auto& x = std::get<Call>(a.kind);
  const auto& y = std::get<Call>(b.kind);
  return x.function == y.function && equal(*x.argument, *y.argument);
}

Expression::Expression(NodePtr root) : root_(std::move(root)) {}

double Expression::evaluate(double t) const { return eval(*root_, t); }

std::string Expression::to_string() const {
  std::string out;
  print(*root_, out);
  return out;
}

Expression parse(std::string_view source) { return Expression(Parser(source).parse_all()); }

}  // namespace fracosc::expr
