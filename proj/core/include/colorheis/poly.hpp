#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "colorheis/gaussian.hpp"

namespace colorheis {

/// Dense univariate polynomial over Q(i); index = degree, trailing zero
/// coefficients pruned, zero polynomial = empty coefficient vector.
class Poly
{
public:
	Poly() = default;
	explicit Poly(std::vector<GaussianRational> coeffs);

	static Poly zero() { return {}; }
	static Poly one() { return monomial(0); }
	static Poly monomial(int deg, GaussianRational c = 1);

	/// -1 for the zero polynomial
	int degree() const { return static_cast<int>(c_.size()) - 1; }
	bool is_zero() const { return c_.empty(); }

	GaussianRational coeff(int deg) const;
	const std::vector<GaussianRational> &coeffs() const { return c_; }

	Poly operator-() const;
	Poly &operator+=(const Poly &o);
	Poly &operator-=(const Poly &o);
	friend Poly operator+(Poly a, const Poly &b) { return a += b; }
	friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
	friend Poly operator*(const Poly &a, const Poly &b);
	friend Poly operator*(const GaussianRational &c, const Poly &p);

	friend bool operator==(const Poly &a, const Poly &b) = default;

	GaussianRational eval(const GaussianRational &x) const;

	/// p(a + b*x), exact affine substitution
	Poly substitute_affine(const GaussianRational &a,
	                       const GaussianRational &b) const;

	/// Canonical text form in decreasing degree, e.g. "x^3 - 2*x + 1/2".
	std::string str() const;

private:
	std::vector<GaussianRational> c_;

	void prune();
};

std::ostream &operator<<(std::ostream &os, const Poly &p);

} // namespace colorheis
