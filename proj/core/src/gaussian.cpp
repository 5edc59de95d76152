#include "colorheis/gaussian.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "colorheis/errors.hpp"

namespace colorheis {

GaussianRational &GaussianRational::operator+=(const GaussianRational &o)
{
	re_ += o.re_;
	im_ += o.im_;
	return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o)
{
	re_ -= o.re_;
	im_ -= o.im_;
	return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o)
{
	Rational re = re_ * o.re_ - im_ * o.im_;
	Rational im = re_ * o.im_ + im_ * o.re_;
	re_ = std::move(re);
	im_ = std::move(im);
	return *this;
}

GaussianRational GaussianRational::inverse() const
{
	if (is_zero())
		throw std::domain_error("inverse of zero");
	Rational n = re_ * re_ + im_ * im_;
	return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o)
{
	return *this *= o.inverse();
}

std::string GaussianRational::str() const
{
	if (is_zero())
		return "0";
	std::string s;
	if (!re_.is_zero())
		s = re_.str();
	if (!im_.is_zero())
	{
		if (!s.empty() && im_.sign() > 0)
			s += "+";
		s += im_.str() + "*i";
	}
	return s;
}

GaussianRational GaussianRational::parse(std::string_view text)
{
	// strip all whitespace; every remaining token is sign/digit/'/'/'*'/'i'
	std::string body;
	body.reserve(text.size());
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			body += ch;
	if (body.empty())
		throw ParseError("empty Gaussian rational literal", 0, "literal");

	// split into at most two top-level signed parts
	std::vector<std::string> parts;
	std::size_t start = 0;
	for (std::size_t p = 1; p < body.size(); ++p)
		if (body[p] == '+' || body[p] == '-')
		{
			parts.push_back(body.substr(start, p - start));
			start = p;
		}
	parts.push_back(body.substr(start));
	if (parts.size() > 2)
		throw ParseError("too many terms in Gaussian rational literal", 0,
		                 "at most one real and one imaginary part");

	bool have_re = false, have_im = false;
	Rational re, im;
	for (const std::string &part : parts)
	{
		if (!part.empty() && part.back() == 'i')
		{
			if (have_im)
				throw ParseError("duplicate imaginary part", 0, "single i term");
			std::string coeff = part.substr(0, part.size() - 1);
			if (!coeff.empty() && coeff.back() == '*')
				coeff.pop_back();
			if (coeff.empty() || coeff == "+")
				im = 1;
			else if (coeff == "-")
				im = -1;
			else
				im = Rational::parse(coeff);
			have_im = true;
		}
		else
		{
			if (have_re)
				throw ParseError("duplicate real part", 0, "single real term");
			re = Rational::parse(part);
			have_re = true;
		}
	}
	return GaussianRational(re, im);
}

GaussianRational pow(const GaussianRational &z, unsigned e)
{
	GaussianRational acc = 1;
	for (unsigned i = 0; i < e; ++i)
		acc *= z;
	return acc;
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &z)
{
	return os << z.str();
}

} // namespace colorheis
