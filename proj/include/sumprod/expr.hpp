#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <sumprod/errors.hpp>

namespace sumprod {

/* Expression trees for entropy queries over named independent variables.
   Integer literals stay symbolic here; they are embedded as constants of
   the ambient field at evaluation time, so one query text runs over both
   F_p and Q. No algebraic simplification anywhere: the printed form is a
   faithful witness of what was evaluated. */
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op { var, literal, add, sub, mul, neg };
  Op op;
  std::string name;       // var
  long long value = 0;    // literal
  ExprPtr lhs, rhs;       // neg uses lhs only

  static ExprPtr make_var(std::string n);
  static ExprPtr make_literal(long long v);
  static ExprPtr make_add(ExprPtr l, ExprPtr r);
  static ExprPtr make_sub(ExprPtr l, ExprPtr r);
  static ExprPtr make_mul(ExprPtr l, ExprPtr r);
  static ExprPtr make_neg(ExprPtr c);
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

enum class QueryKind { shannon, min_entropy, collision, ruzsa };

std::string_view query_kind_name(QueryKind k); // "H", "Hmin", "H2", "dR"

struct QueryAst {
  QueryKind kind = QueryKind::shannon;
  std::vector<ExprPtr> components;        // non-empty
  std::vector<std::string> vars;          // sorted unique referenced names
};

/// Grammar:  query := kind '[' expr (',' expr)* ']'
///           expr  := term (('+'|'-') term)*
///           term  := factor ('*' factor)*
///           factor:= var | int-literal | '(' expr ')' | '-' factor
///           var   := uppercase letter followed by optional digits
/// Syntax errors carry the 1-based column of the offending character.
QueryAst parse_query(std::string_view text);

/// Canonical text with minimal parentheses; parse(print(ast)) == ast.
std::string print_query(const QueryAst& ast);
std::string print_expr(const ExprPtr& e);

std::vector<std::string> collect_vars(const std::vector<ExprPtr>& comps);

} // namespace sumprod
