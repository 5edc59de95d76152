#include "colorheis/polyop.hpp"

#include <vector>

#include "colorheis/errors.hpp"
#include "colorheis/numbers.hpp"

namespace colorheis {

Poly diff(const Poly &p)
{
	std::vector<GaussianRational> v;
	for (int d = 1; d <= p.degree(); ++d)
		v.push_back(GaussianRational(Rational(d)) * p.coeff(d));
	return Poly(std::move(v));
}

Poly mulx(const Poly &p)
{
	if (p.is_zero())
		return {};
	std::vector<GaussianRational> v(p.degree() + 2);
	for (int d = 0; d <= p.degree(); ++d)
		v[d + 1] = p.coeff(d);
	return Poly(std::move(v));
}

Poly shift(const Poly &p, const GaussianRational &h)
{
	return p.substitute_affine(h, 1);
}

Poly parity(const Poly &p) { return p.substitute_affine(0, -1); }

std::pair<Poly, Poly> even_odd_split(const Poly &p)
{
	std::vector<GaussianRational> ev, od;
	ev.resize(p.degree() + 1);
	od.resize(p.degree() + 1);
	for (int d = 0; d <= p.degree(); ++d)
		(d % 2 == 0 ? ev : od)[d] = p.coeff(d);
	return {Poly(std::move(ev)), Poly(std::move(od))};
}

Poly apply_series(const NormalSeries &s, const Poly &p)
{
	if (s.window() < p.degree())
		throw WindowUnderflow("series exact to " +
		                      std::to_string(s.window()) +
		                      ", polynomial degree " +
		                      std::to_string(p.degree()));
	// p, p', p'', ... up to the degree (all later ones vanish)
	std::vector<Poly> derivs{p};
	for (int k = 1; k <= p.degree(); ++k)
		derivs.push_back(diff(derivs.back()));

	Poly result;
	for (const auto &[key, c] : s.entries())
	{
		const auto &[j, k] = key;
		if (k >= static_cast<int>(derivs.size()))
			continue; // d^k p = 0
		Poly term = derivs[k];
		for (int t = 0; t < j; ++t)
			term = mulx(term);
		result += c * term;
	}
	return result;
}

Poly anticommutator_action(const NormalSeries &s1, const NormalSeries &s2,
                           const Poly &p)
{
	return apply_series(s1, apply_series(s2, p)) +
	       apply_series(s2, apply_series(s1, p));
}

bool realization_action_check(const Realization &r, int maxdeg)
{
	for (int n = 0; n <= maxdeg; ++n)
	{
		Poly p = Poly::monomial(n);
		if (anticommutator_action(r.a1, r.a2, p) != apply_series(r.a3, p))
			return false;
		if (!anticommutator_action(r.a1, r.a3, p).is_zero())
			return false;
		if (!anticommutator_action(r.a2, r.a3, p).is_zero())
			return false;
	}
	return true;
}

Poly euler_interp_residual(const Poly &p, const GaussianRational &alpha,
                           int widen)
{
	Poly acc;
	for (int n = 0; 2 * n <= p.degree() + widen; ++n)
	{
		GaussianRational c =
		    GaussianRational(euler_number(2 * n) /
		                     Rational(factorial(2 * n))) *
		    pow(alpha, 2 * n);
		Poly d = p;
		for (int t = 0; t < 2 * n; ++t)
			d = diff(d);
		acc += c * (shift(d, -alpha) + shift(d, alpha));
	}
	return p - GaussianRational(Rational(1, 2)) * acc;
}

Poly stirling_interp_residual(const Poly &p, int widen)
{
	Poly acc;
	for (int k = 0; k <= p.degree() + widen; ++k)
	{
		Poly inner;
		for (int l = 0; l <= k; ++l)
		{
			GaussianRational c(Rational(binomial(k, l)));
			if (l % 2 == 1)
				c = -c;
			GaussianRational step(Rational(2 * (k - l)));
			inner += c * (shift(p, -step) + shift(p, step));
		}
		GaussianRational outer(Rational(Integer(1), pow(Integer(2), k + 1)));
		if (k % 2 == 1)
			outer = -outer;
		acc += outer * inner;
	}
	return p - acc;
}

ActionTriple shifted_parity_action(const Poly &f)
{
	ActionTriple t;
	t.a1 = diff(f);
	t.a3 = f.substitute_affine(1, -1);

	Poly sum;
	Poly d = f;
	for (int n = 0; 2 * n <= f.degree(); ++n)
	{
		GaussianRational c(euler_number(2 * n) / Rational(factorial(2 * n)));
		sum += c * d.substitute_affine(0, -1);
		d = diff(diff(d));
	}
	t.a2 = mulx(t.a3) - GaussianRational(Rational(1, 2)) * sum;
	return t;
}

ActionTriple shifted_parity_action_differences(const Poly &f)
{
	ActionTriple t;
	t.a1 = diff(f);
	t.a3 = f.substitute_affine(1, -1);

	Poly sum;
	for (int k = 0; k <= f.degree(); ++k)
	{
		Poly inner;
		for (int l = 0; l <= k; ++l)
		{
			GaussianRational c(Rational(binomial(k, l)));
			if (l % 2 == 1)
				c = -c;
			// f(2(k-l)+1 - x)
			inner += c * f.substitute_affine(GaussianRational(
			                                     Rational(2 * (k - l) + 1)),
			                                 -1);
		}
		GaussianRational outer(Rational(Integer(1), pow(Integer(2), k + 1)));
		if (k % 2 == 1)
			outer = -outer;
		sum += outer * inner;
	}
	t.a2 = mulx(t.a3) - sum;
	return t;
}

} // namespace colorheis
