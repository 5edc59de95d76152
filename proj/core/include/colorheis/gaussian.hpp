#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "colorheis/rational.hpp"

namespace colorheis {

/// Element of the field Q(i): an exact complex number with rational real and
/// imaginary parts. Serves as the coefficient field everywhere.
class GaussianRational
{
public:
	GaussianRational() = default;
	GaussianRational(int n) : re_(n) {}
	GaussianRational(Rational re) : re_(std::move(re)) {}
	GaussianRational(Rational re, Rational im)
	    : re_(std::move(re)), im_(std::move(im))
	{}

	static GaussianRational i() { return GaussianRational(0, 1); }

	const Rational &re() const { return re_; }
	const Rational &im() const { return im_; }

	bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
	bool is_real() const { return im_.is_zero(); }

	GaussianRational conj() const { return GaussianRational(re_, -im_); }

	GaussianRational operator-() const { return {-re_, -im_}; }
	GaussianRational &operator+=(const GaussianRational &o);
	GaussianRational &operator-=(const GaussianRational &o);
	GaussianRational &operator*=(const GaussianRational &o);
	GaussianRational &operator/=(const GaussianRational &o);

	friend GaussianRational operator+(GaussianRational a,
	                                  const GaussianRational &b)
	{
		return a += b;
	}
	friend GaussianRational operator-(GaussianRational a,
	                                  const GaussianRational &b)
	{
		return a -= b;
	}
	friend GaussianRational operator*(GaussianRational a,
	                                  const GaussianRational &b)
	{
		return a *= b;
	}
	friend GaussianRational operator/(GaussianRational a,
	                                  const GaussianRational &b)
	{
		return a /= b;
	}

	friend bool operator==(const GaussianRational &a,
	                       const GaussianRational &b) = default;

	/// throws std::domain_error on zero
	GaussianRational inverse() const;

	/// Canonical whitespace-free form: "p/q", "p/q*i" or "p/q+r/s*i"
	/// (denominator omitted when 1, zero emitted as "0").
	std::string str() const;

	/// Tolerant parser for the forms above; also accepts "i", "-i", "2i"
	/// and embedded whitespace.
	static GaussianRational parse(std::string_view text);

private:
	Rational re_, im_;
};

GaussianRational pow(const GaussianRational &z, unsigned e);

std::ostream &operator<<(std::ostream &os, const GaussianRational &z);

} // namespace colorheis
