#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace colorheis {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form: gcd(|numerator|, denominator) = 1,
/// denominator > 0, zero stored as 0/1.
class Rational
{
public:
	Rational() = default;
	template <class T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
	Rational(T n) : v_(n)
	{}
	Rational(const Integer &n) : v_(n) {}
	Rational(const Integer &num, const Integer &den);

	Integer numerator() const;
	Integer denominator() const;

	bool is_zero() const { return v_.is_zero(); }
	bool is_integer() const { return denominator() == 1; }
	int sign() const { return v_.sign(); }

	Rational operator-() const;
	Rational &operator+=(const Rational &o);
	Rational &operator-=(const Rational &o);
	Rational &operator*=(const Rational &o);
	Rational &operator/=(const Rational &o); // throws std::domain_error on /0

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b) = default;
	friend bool operator<(const Rational &a, const Rational &b)
	{
		return a.v_ < b.v_;
	}

	/// Canonical text form: "p" when the denominator is 1, else "p/q".
	std::string str() const;

	/// Parses "p" or "p/q" with an optional sign; tolerates surrounding
	/// whitespace. Throws ParseError on anything else.
	static Rational parse(std::string_view text);

private:
	boost::multiprecision::cpp_rational v_;
};

Rational abs(const Rational &r);
Rational pow(const Rational &r, unsigned e);

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace colorheis
