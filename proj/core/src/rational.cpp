#include "colorheis/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "colorheis/errors.hpp"

namespace colorheis {

namespace mp = boost::multiprecision;

Rational::Rational(const Integer &num, const Integer &den)
{
	if (den.is_zero())
		throw std::domain_error("rational with zero denominator");
	v_ = mp::cpp_rational(num);
	v_ /= mp::cpp_rational(den);
}

Integer Rational::numerator() const { return mp::numerator(v_); }
Integer Rational::denominator() const { return mp::denominator(v_); }

Rational Rational::operator-() const
{
	Rational r;
	r.v_ = -v_;
	return r;
}

Rational &Rational::operator+=(const Rational &o)
{
	v_ += o.v_;
	return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
	v_ -= o.v_;
	return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
	v_ *= o.v_;
	return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw std::domain_error("rational division by zero");
	v_ /= o.v_;
	return *this;
}

std::string Rational::str() const
{
	std::string s = numerator().str();
	if (!is_integer())
		s += "/" + denominator().str();
	return s;
}

Rational Rational::parse(std::string_view text)
{
	std::size_t b = 0, e = text.size();
	while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
		++b;
	while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
		--e;
	std::string_view body = text.substr(b, e - b);

	auto fail = [&](std::size_t off, const char *exp) -> Rational {
		throw ParseError("bad rational literal", b + off, exp);
	};

	std::size_t pos = 0;
	bool neg = false;
	if (pos < body.size() && (body[pos] == '+' || body[pos] == '-'))
		neg = body[pos++] == '-';

	auto digits = [&]() -> Integer {
		std::size_t start = pos;
		while (pos < body.size() &&
		       std::isdigit(static_cast<unsigned char>(body[pos])))
			++pos;
		if (pos == start)
			fail(start, "digits");
		return Integer(std::string(body.substr(start, pos - start)));
	};

	Integer num = digits();
	Integer den = 1;
	if (pos < body.size() && body[pos] == '/')
	{
		++pos;
		den = digits();
		if (den.is_zero())
			fail(pos, "non-zero denominator");
	}
	if (pos != body.size())
		fail(pos, "end of literal");
	if (neg)
		num = -num;
	return Rational(num, den);
}

Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational &r, unsigned e)
{
	Rational acc = 1;
	for (unsigned i = 0; i < e; ++i)
		acc *= r;
	return acc;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
	return os << r.str();
}

} // namespace colorheis
