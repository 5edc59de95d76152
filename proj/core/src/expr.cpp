#include "colorheis/expr.hpp"

#include <cctype>
#include <stdexcept>

#include "colorheis/errors.hpp"

namespace colorheis {

namespace {

class Parser
{
public:
	explicit Parser(std::string_view text) : text_(text) {}

	Expr run()
	{
		skip_ws();
		Expr e = expr();
		skip_ws();
		if (pos_ != text_.size())
			fail("trailing input", "end of input");
		return e;
	}

private:
	std::string_view text_;
	std::size_t pos_ = 0;

	[[noreturn]] void fail(const char *msg, const char *expected)
	{
		throw ParseError(msg, pos_, expected);
	}

	void skip_ws()
	{
		while (pos_ < text_.size() &&
		       std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

	bool starts_base() const
	{
		char c = peek();
		return c == 'A' || c == 'B' || c == 'x' || c == 'i' || c == '(' ||
		       std::isdigit(static_cast<unsigned char>(c));
	}

	Expr expr()
	{
		Expr e;
		int sign = 1;
		if (peek() == '-')
		{
			sign = -1;
			++pos_;
			skip_ws();
		}
		e.signs.push_back(sign);
		e.terms.push_back(term());
		skip_ws();
		while (peek() == '+' || peek() == '-')
		{
			e.signs.push_back(peek() == '+' ? 1 : -1);
			++pos_;
			skip_ws();
			e.terms.push_back(term());
			skip_ws();
		}
		return e;
	}

	ExprTerm term()
	{
		ExprTerm t;
		t.factors.push_back(factor());
		for (;;)
		{
			skip_ws();
			if (peek() == '*')
			{
				++pos_;
				skip_ws();
				t.factors.push_back(factor());
			}
			else if (starts_base())
				t.factors.push_back(factor()); // juxtaposition
			else
				break;
		}
		return t;
	}

	ExprFactor factor()
	{
		ExprFactor f;
		f.base = base();
		skip_ws();
		if (peek() == '^')
		{
			++pos_;
			skip_ws();
			if (!std::isdigit(static_cast<unsigned char>(peek())))
				fail("exponent must be a bare unsigned integer",
				     "digits after '^'");
			f.exponent = static_cast<unsigned>(uint_lit());
		}
		return f;
	}

	unsigned long uint_lit()
	{
		std::size_t start = pos_;
		while (pos_ < text_.size() &&
		       std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		std::string digits(text_.substr(start, pos_ - start));
		if (digits.size() > 6)
			fail("exponent too large", "at most 6 digits");
		return std::stoul(digits);
	}

	ExprBase base()
	{
		ExprBase b;
		char c = peek();
		if (c == 'A')
		{
			b.kind = ExprBase::Kind::sym_a;
			++pos_;
		}
		else if (c == 'B')
		{
			b.kind = ExprBase::Kind::sym_b;
			++pos_;
		}
		else if (c == 'x')
		{
			b.kind = ExprBase::Kind::sym_x;
			++pos_;
		}
		else if (c == 'i')
		{
			b.kind = ExprBase::Kind::literal;
			b.lit = GaussianRational::i();
			++pos_;
		}
		else if (std::isdigit(static_cast<unsigned char>(c)))
		{
			b.kind = ExprBase::Kind::literal;
			unsigned long num = uint_lit();
			Integer n(num), d(1);
			if (peek() == '/')
			{
				++pos_;
				if (!std::isdigit(static_cast<unsigned char>(peek())))
					fail("bad rational literal", "digits after '/'");
				unsigned long den = uint_lit();
				if (den == 0)
					fail("zero denominator", "non-zero denominator");
				d = den;
			}
			b.lit = GaussianRational(Rational(n, d));
		}
		else if (c == '(')
		{
			++pos_;
			skip_ws();
			b.kind = ExprBase::Kind::paren;
			b.inner = std::make_shared<Expr>(expr());
			skip_ws();
			if (peek() != ')')
				fail("unclosed parenthesis", "')'");
			++pos_;
		}
		else
			fail("bad token", "'A', 'B', 'x', literal or '('");
		return b;
	}
};

std::string base_to_text(const ExprBase &b)
{
	switch (b.kind)
	{
	case ExprBase::Kind::sym_a:
		return "A";
	case ExprBase::Kind::sym_b:
		return "B";
	case ExprBase::Kind::sym_x:
		return "x";
	case ExprBase::Kind::literal:
		if (b.lit == GaussianRational::i())
			return "i";
		return b.lit.str();
	case ExprBase::Kind::paren:
		return "(" + expr_to_text(*b.inner) + ")";
	}
	throw std::logic_error("unknown base kind");
}

// generic evaluator over a (possibly noncommutative) value type
template <class V, class FromBase>
V eval_expr(const Expr &e, const FromBase &from_base, const V &zero,
            const V &one)
{
	V acc = zero;
	for (std::size_t t = 0; t < e.terms.size(); ++t)
	{
		V prod = one;
		for (const ExprFactor &f : e.terms[t].factors)
		{
			V b = f.base.kind == ExprBase::Kind::paren
			          ? eval_expr(*f.base.inner, from_base, zero, one)
			          : from_base(f.base);
			unsigned ex = f.exponent.value_or(1);
			V pw = one;
			for (unsigned i = 0; i < ex; ++i)
				pw = pw * b;
			prod = prod * pw;
		}
		if (e.signs[t] < 0)
			prod = -prod;
		acc = acc + prod;
	}
	return acc;
}

// word sums with the ring operations spelled out
struct WordsVal
{
	WordSum ws;

	friend WordsVal operator+(const WordsVal &a, const WordsVal &b)
	{
		WordsVal r = a;
		r.ws.insert(r.ws.end(), b.ws.begin(), b.ws.end());
		return r;
	}
	friend WordsVal operator*(const WordsVal &a, const WordsVal &b)
	{
		WordsVal r;
		for (const Word &wa : a.ws)
			for (const Word &wb : b.ws)
			{
				Word w;
				w.letters = wa.letters;
				w.letters.insert(w.letters.end(), wb.letters.begin(),
				                 wb.letters.end());
				w.coeff = wa.coeff * wb.coeff;
				r.ws.push_back(std::move(w));
			}
		return r;
	}
	WordsVal operator-() const
	{
		WordsVal r = *this;
		for (Word &w : r.ws)
			w.coeff = -w.coeff;
		return r;
	}
};

} // namespace

Expr parse_expr(std::string_view text) { return Parser(text).run(); }

std::string expr_to_text(const Expr &e)
{
	std::string s;
	for (std::size_t t = 0; t < e.terms.size(); ++t)
	{
		if (t == 0)
			s = e.signs[0] < 0 ? "-" : "";
		else
			s += e.signs[t] < 0 ? " - " : " + ";
		const auto &factors = e.terms[t].factors;
		for (std::size_t f = 0; f < factors.size(); ++f)
		{
			if (f > 0)
				s += "*";
			s += base_to_text(factors[f].base);
			if (factors[f].exponent)
				s += "^" + std::to_string(*factors[f].exponent);
		}
	}
	return s;
}

WordSum expr_to_words(const Expr &e)
{
	auto from_base = [](const ExprBase &b) -> WordsVal {
		switch (b.kind)
		{
		case ExprBase::Kind::sym_a:
			return {{Word{{Letter::A}, 1}}};
		case ExprBase::Kind::sym_b:
			return {{Word{{Letter::B}, 1}}};
		case ExprBase::Kind::sym_x:
			throw std::invalid_argument("'x' is not an operator symbol; "
			                            "expected an expression in A and B");
		case ExprBase::Kind::literal:
			return {{Word{{}, b.lit}}};
		default:
			throw std::logic_error("unreachable");
		}
	};
	WordsVal zero{};
	WordsVal one{{Word{{}, 1}}};
	WordSum ws = eval_expr(e, from_base, zero, one).ws;
	// drop explicit zero terms
	WordSum out;
	for (Word &w : ws)
		if (!w.coeff.is_zero())
			out.push_back(std::move(w));
	return out;
}

Poly expr_to_poly(const Expr &e)
{
	auto from_base = [](const ExprBase &b) -> Poly {
		switch (b.kind)
		{
		case ExprBase::Kind::sym_x:
			return Poly::monomial(1);
		case ExprBase::Kind::literal:
			return Poly::monomial(0, b.lit);
		case ExprBase::Kind::sym_a:
		case ExprBase::Kind::sym_b:
			throw std::invalid_argument("'A'/'B' are not polynomial symbols; "
			                            "expected an expression in x");
		default:
			throw std::logic_error("unreachable");
		}
	};
	return eval_expr(e, from_base, Poly::zero(), Poly::one());
}

Poly parse_poly(std::string_view text)
{
	return expr_to_poly(parse_expr(text));
}

WordSum parse_words(std::string_view text)
{
	return expr_to_words(parse_expr(text));
}

ASeries parse_aseries_literal(std::string_view text, int window)
{
	std::vector<std::pair<int, GaussianRational>> pairs;
	std::size_t pos = 0;
	// trim
	std::size_t end = text.size();
	while (pos < end && std::isspace(static_cast<unsigned char>(text[pos])))
		++pos;
	while (end > pos &&
	       std::isspace(static_cast<unsigned char>(text[end - 1])))
		--end;
	if (pos == end)
		return ASeries::zero(window);

	std::string_view body = text.substr(pos, end - pos);
	std::size_t start = 0;
	while (start <= body.size())
	{
		std::size_t comma = body.find(',', start);
		std::string_view item = body.substr(
		    start, comma == std::string_view::npos ? body.size() - start
		                                           : comma - start);
		std::size_t colon = item.find(':');
		if (colon == std::string_view::npos)
			throw ParseError("missing ':' in series literal", pos + start,
			                 "deg:coeff");
		int deg;
		try
		{
			deg = std::stoi(std::string(item.substr(0, colon)));
		}
		catch (const std::exception &)
		{
			throw ParseError("bad degree in series literal", pos + start,
			                 "unsigned integer");
		}
		GaussianRational c = GaussianRational::parse(item.substr(colon + 1));
		pairs.emplace_back(deg, c);
		if (comma == std::string_view::npos)
			break;
		start = comma + 1;
	}
	return ASeries::from_pairs(pairs, window);
}

std::string aseries_to_literal(const ASeries &f)
{
	std::string s;
	for (const auto &[deg, c] : f.coeffs())
	{
		if (!s.empty())
			s += ",";
		s += std::to_string(deg) + ":" + c.str();
	}
	return s;
}

} // namespace colorheis
