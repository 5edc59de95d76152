#include "colorheis/poly.hpp"

#include <ostream>

#include "colorheis/numbers.hpp"

namespace colorheis {

Poly::Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs))
{
	prune();
}

void Poly::prune()
{
	while (!c_.empty() && c_.back().is_zero())
		c_.pop_back();
}

Poly Poly::monomial(int deg, GaussianRational c)
{
	if (c.is_zero() || deg < 0)
		return {};
	std::vector<GaussianRational> v(deg + 1);
	v[deg] = std::move(c);
	return Poly(std::move(v));
}

GaussianRational Poly::coeff(int deg) const
{
	if (deg < 0 || deg >= static_cast<int>(c_.size()))
		return {};
	return c_[deg];
}

Poly Poly::operator-() const
{
	Poly r = *this;
	for (auto &c : r.c_)
		c = -c;
	return r;
}

Poly &Poly::operator+=(const Poly &o)
{
	if (o.c_.size() > c_.size())
		c_.resize(o.c_.size());
	for (std::size_t d = 0; d < o.c_.size(); ++d)
		c_[d] += o.c_[d];
	prune();
	return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
	if (o.c_.size() > c_.size())
		c_.resize(o.c_.size());
	for (std::size_t d = 0; d < o.c_.size(); ++d)
		c_[d] -= o.c_[d];
	prune();
	return *this;
}

Poly operator*(const Poly &a, const Poly &b)
{
	if (a.is_zero() || b.is_zero())
		return {};
	std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
	for (std::size_t n = 0; n < a.c_.size(); ++n)
		for (std::size_t m = 0; m < b.c_.size(); ++m)
			v[n + m] += a.c_[n] * b.c_[m];
	return Poly(std::move(v));
}

Poly operator*(const GaussianRational &c, const Poly &p)
{
	Poly r = p;
	for (auto &x : r.c_)
		x *= c;
	r.prune();
	return r;
}

GaussianRational Poly::eval(const GaussianRational &x) const
{
	GaussianRational acc;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		acc = acc * x + *it;
	return acc;
}

Poly Poly::substitute_affine(const GaussianRational &a,
                             const GaussianRational &b) const
{
	// Horner in (a + b*x)
	Poly lin({a, b});
	Poly acc;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		acc = acc * lin + Poly::monomial(0, *it);
	return acc;
}

std::string Poly::str() const
{
	if (is_zero())
		return "0";
	std::string s;
	for (int d = degree(); d >= 0; --d)
	{
		const GaussianRational &c = c_[d];
		if (c.is_zero())
			continue;

		std::string body;
		if (d > 0)
			body = d == 1 ? "x" : "x^" + std::to_string(d);

		std::string term;
		bool mixed = !c.re().is_zero() && !c.im().is_zero();
		if (body.empty())
			term = mixed ? "(" + c.str() + ")" : c.str();
		else if (c == GaussianRational(1))
			term = body;
		else if (c == GaussianRational(-1))
			term = "-" + body;
		else if (mixed)
			term = "(" + c.str() + ")*" + body;
		else
			term = c.str() + "*" + body;

		if (s.empty())
			s = term;
		else if (term.front() == '-')
			s += " - " + term.substr(1);
		else
			s += " + " + term;
	}
	return s;
}

std::ostream &operator<<(std::ostream &os, const Poly &p)
{
	return os << p.str();
}

} // namespace colorheis
