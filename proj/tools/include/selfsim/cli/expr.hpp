#pragma once

#include "selfsim/algebra.hpp"
#include "selfsim/germ.hpp"

#include <set>
#include <string>
#include <string_view>

namespace selfsim::cli {

// expr   := term (("+"|"-") term)*
// term   := (rational "*")? factor ("*" factor)* | rational
// factor := "p(" id "," gelem ")" | "s(" path "," gelem ")" | "adj(" expr ")" | "(" expr ")"
// path   := id ("." id)*      leftmost edge at the range end
// gelem  := int | id
// Throws ParseError (line 1, column of the token) or the lowering error.
Element parse_expr(const Algebra& alg, std::string_view text);

// The element with the degrees of its summands as written; a product that
// vanishes in the algebra keeps the degree its factors give it.
struct ParsedExpr {
  Element value;
  std::set<long> written_degrees;
};
ParsedExpr parse_expr_graded(const Algebra& alg, std::string_view text);

// Canonical text that parse_expr reads back: terms "c*s(alpha,g)*adj(s(beta,e))",
// or "c*p(v,g)" when alpha and beta are vertices.
std::string print_expr(const Algebra& alg, const Element& a);

// "[(alpha, g, beta), mu (rho)^inf]" (the format_germ output, x written in full)
// or "germ (alpha, g, beta) : mu (rho)^inf" with x = beta mu rho^inf.
GermPoint parse_germ(const SelfSimilarAction& act, std::string_view text);

}  // namespace selfsim::cli
