#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colorheis/aseries.hpp"
#include "colorheis/normal_series.hpp"
#include "colorheis/poly.hpp"

namespace colorheis {

/// AST for the surface grammar
///   expr   := '-'? term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := base ('^' uint)?
///   base   := 'A' | 'B' | 'x' | literal | '(' expr ')'
/// Juxtaposition means product; the order of A and B is preserved.
/// Literals are unsigned rational numbers ("2", "3/4") or 'i'.
struct Expr;

struct ExprBase
{
	enum class Kind
	{
		sym_a,
		sym_b,
		sym_x,
		literal,
		paren
	};
	Kind kind = Kind::sym_a;
	GaussianRational lit;        // literal
	std::shared_ptr<Expr> inner; // paren
};

struct ExprFactor
{
	ExprBase base;
	std::optional<unsigned> exponent;
};

struct ExprTerm
{
	std::vector<ExprFactor> factors;
};

struct Expr
{
	std::vector<int> signs; // +1 / -1, one per term; signs[0] is the leading sign
	std::vector<ExprTerm> terms;
};

/// throws ParseError with byte offset and expected-token set
Expr parse_expr(std::string_view text);

/// Canonical printing (explicit '*', one space around '+'/'-');
/// parse(print(e)) reproduces e.
std::string expr_to_text(const Expr &e);

/// Lowers into a sum of noncommutative words over {A, B}; rejects 'x'.
WordSum expr_to_words(const Expr &e);

/// Lowers into a commutative polynomial in x; rejects 'A' and 'B'.
Poly expr_to_poly(const Expr &e);

/// parse + lower, the usual entry points
Poly parse_poly(std::string_view text);
WordSum parse_words(std::string_view text);

/// ASeries literal: comma-separated "deg:coeff" pairs ("1:1,3:-1/2");
/// the empty string is the zero series.
ASeries parse_aseries_literal(std::string_view text,
                              int window = kExactWindow);
std::string aseries_to_literal(const ASeries &f);

} // namespace colorheis
