#include <sumprod/expr.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace sumprod {

ExprPtr Expr::make_var(std::string n) {
  return std::make_shared<Expr>(Expr{Op::var, std::move(n), 0, nullptr, nullptr});
}
ExprPtr Expr::make_literal(long long v) {
  return std::make_shared<Expr>(Expr{Op::literal, {}, v, nullptr, nullptr});
}
ExprPtr Expr::make_add(ExprPtr l, ExprPtr r) {
  return std::make_shared<Expr>(Expr{Op::add, {}, 0, std::move(l), std::move(r)});
}
ExprPtr Expr::make_sub(ExprPtr l, ExprPtr r) {
  return std::make_shared<Expr>(Expr{Op::sub, {}, 0, std::move(l), std::move(r)});
}
ExprPtr Expr::make_mul(ExprPtr l, ExprPtr r) {
  return std::make_shared<Expr>(Expr{Op::mul, {}, 0, std::move(l), std::move(r)});
}
ExprPtr Expr::make_neg(ExprPtr c) {
  return std::make_shared<Expr>(Expr{Op::neg, {}, 0, std::move(c), nullptr});
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->op != b->op) return false;
  switch (a->op) {
    case Expr::Op::var: return a->name == b->name;
    case Expr::Op::literal: return a->value == b->value;
    case Expr::Op::neg: return expr_equal(a->lhs, b->lhs);
    default: return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
  }
}

std::string_view query_kind_name(QueryKind k) {
  switch (k) {
    case QueryKind::shannon: return "H";
    case QueryKind::min_entropy: return "Hmin";
    case QueryKind::collision: return "H2";
    case QueryKind::ruzsa: return "dR";
  }
  return "?";
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  QueryAst parse() {
    QueryAst ast;
    ast.kind = parse_kind();
    expect('[');
    skip_ws();
    if (peek() == ']') fail("empty query bracket");
    ast.components.push_back(parse_expr());
    while (peek() == ',') {
      ++pos_;
      ast.components.push_back(parse_expr());
    }
    expect(']');
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after ']'");
    ast.vars = collect_vars(ast.components);
    return ast;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw usage_error("syntax error at column " + std::to_string(pos_ + 1) +
                      ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  QueryKind parse_kind() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word == "H") return QueryKind::shannon;
    if (word == "Hmin") return QueryKind::min_entropy;
    if (word == "H2") return QueryKind::collision;
    if (word == "dR") return QueryKind::ruzsa;
    pos_ = start;
    fail("unknown query kind '" + std::string(word) + "'");
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        e = Expr::make_add(std::move(e), parse_term());
      } else if (c == '-') {
        ++pos_;
        e = Expr::make_sub(std::move(e), parse_term());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (peek() == '*') {
      ++pos_;
      e = Expr::make_mul(std::move(e), parse_factor());
    }
    return e;
  }

  ExprPtr parse_factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return Expr::make_neg(parse_factor());
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::string name(1, text_[pos_++]);
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        name += text_[pos_++];
      return Expr::make_var(std::move(name));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_++] - '0');
        if (v < 0) fail("integer literal overflow");
      }
      return Expr::make_literal(v);
    }
    fail("expected a variable, literal, '(' or '-'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Precedence: add/sub 1, mul 2, unary minus 3, atoms 4. A child is
// parenthesized when its level is below what its position requires;
// right operands require one level more than left ones (left assoc).
int expr_level(const Expr& e) {
  switch (e.op) {
    case Expr::Op::add:
    case Expr::Op::sub: return 1;
    case Expr::Op::mul: return 2;
    case Expr::Op::neg: return 3;
    default: return 4;
  }
}

void print_into(const ExprPtr& e, int required, std::string& out) {
  const bool parens = expr_level(*e) < required;
  if (parens) out += '(';
  switch (e->op) {
    case Expr::Op::var: out += e->name; break;
    case Expr::Op::literal: out += std::to_string(e->value); break;
    case Expr::Op::add:
      print_into(e->lhs, 1, out);
      out += '+';
      print_into(e->rhs, 2, out);
      break;
    case Expr::Op::sub:
      print_into(e->lhs, 1, out);
      out += '-';
      print_into(e->rhs, 2, out);
      break;
    case Expr::Op::mul:
      print_into(e->lhs, 2, out);
      out += '*';
      print_into(e->rhs, 3, out);
      break;
    case Expr::Op::neg:
      out += '-';
      print_into(e->lhs, 4, out);
      break;
  }
  if (parens) out += ')';
}

void collect_into(const ExprPtr& e, std::set<std::string>& names) {
  if (!e) return;
  if (e->op == Expr::Op::var) names.insert(e->name);
  collect_into(e->lhs, names);
  collect_into(e->rhs, names);
}

} // namespace

QueryAst parse_query(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const ExprPtr& e) {
  std::string out;
  print_into(e, 0, out);
  return out;
}

std::string print_query(const QueryAst& ast) {
  std::string out(query_kind_name(ast.kind));
  out += '[';
  for (std::size_t i = 0; i < ast.components.size(); ++i) {
    if (i > 0) out += ", ";
    print_into(ast.components[i], 0, out);
  }
  out += ']';
  return out;
}

std::vector<std::string> collect_vars(const std::vector<ExprPtr>& comps) {
  std::set<std::string> names;
  for (const auto& c : comps) collect_into(c, names);
  return {names.begin(), names.end()};
}

} // namespace sumprod
