#include "colorheis/aseries.hpp"

#include <stdexcept>

#include "colorheis/errors.hpp"
#include "colorheis/numbers.hpp"

namespace colorheis {

ASeries::ASeries(int window) : window_(window)
{
	if (window < 0)
		throw WindowUnderflow("ASeries window " + std::to_string(window));
}

ASeries::ASeries(std::map<int, GaussianRational> coeffs, int window)
    : ASeries(window)
{
	for (auto &[deg, c] : coeffs)
	{
		if (c.is_zero())
			continue;
		if (deg < 0)
			throw std::invalid_argument("negative series degree");
		if (deg > window)
			throw std::invalid_argument("series degree beyond window");
		c_.emplace(deg, c);
	}
}

ASeries ASeries::one(int window)
{
	return ASeries({{0, GaussianRational(1)}}, window);
}

ASeries ASeries::monomial(int deg, GaussianRational c, int window)
{
	return ASeries({{deg, std::move(c)}}, window);
}

ASeries
ASeries::from_pairs(const std::vector<std::pair<int, GaussianRational>> &pairs,
                    int window)
{
	std::map<int, GaussianRational> m;
	for (const auto &[deg, c] : pairs)
	{
		if (m.count(deg))
			throw std::invalid_argument("duplicate series degree " +
			                            std::to_string(deg));
		m.emplace(deg, c);
	}
	return ASeries(std::move(m), window);
}

ASeries ASeries::from_poly(const Poly &p)
{
	std::map<int, GaussianRational> m;
	for (int d = 0; d <= p.degree(); ++d)
		m.emplace(d, p.coeff(d));
	return ASeries(std::move(m), kExactWindow);
}

ASeries ASeries::euler_gf(int window)
{
	if (window >= kExactWindow)
		throw std::invalid_argument("euler_gf needs a finite window");
	std::map<int, GaussianRational> m;
	for (int n = 0; 2 * n <= window; ++n)
		m.emplace(2 * n, GaussianRational(euler_number(2 * n) /
		                                  Rational(factorial(2 * n))));
	return ASeries(std::move(m), window);
}

ASeries ASeries::exp_gf(int window)
{
	if (window >= kExactWindow)
		throw std::invalid_argument("exp_gf needs a finite window");
	std::map<int, GaussianRational> m;
	for (int n = 0; n <= window; ++n)
		m.emplace(n, GaussianRational(Rational(Integer(1), factorial(n))));
	return ASeries(std::move(m), window);
}

GaussianRational ASeries::coeff(int deg) const
{
	auto it = c_.find(deg);
	return it == c_.end() ? GaussianRational() : it->second;
}

bool ASeries::is_odd() const
{
	for (const auto &[deg, c] : c_)
		if (deg % 2 == 0)
			return false;
	return true;
}

ASeries ASeries::truncated(int K) const
{
	if (K >= window_)
		return *this;
	std::map<int, GaussianRational> m;
	for (const auto &[deg, c] : c_)
		if (deg <= K)
			m.emplace(deg, c);
	return ASeries(std::move(m), K);
}

Poly ASeries::to_poly() const
{
	std::vector<GaussianRational> v;
	for (const auto &[deg, c] : c_)
	{
		if (static_cast<int>(v.size()) <= deg)
			v.resize(deg + 1);
		v[deg] = c;
	}
	return Poly(std::move(v));
}

std::string ASeries::str() const { return to_poly().str(); }

ASeries add(const ASeries &a, const ASeries &b)
{
	int w = window_min(a.window(), b.window());
	std::map<int, GaussianRational> m;
	for (const auto &[deg, c] : a.coeffs())
		if (deg <= w)
			m[deg] += c;
	for (const auto &[deg, c] : b.coeffs())
		if (deg <= w)
			m[deg] += c;
	return ASeries(std::move(m), w);
}

ASeries sub(const ASeries &a, const ASeries &b)
{
	return add(a, scale(GaussianRational(-1), b));
}

ASeries scale(const GaussianRational &c, const ASeries &a)
{
	std::map<int, GaussianRational> m;
	if (!c.is_zero())
		for (const auto &[deg, x] : a.coeffs())
			m.emplace(deg, c * x);
	return ASeries(std::move(m), a.window());
}

ASeries mul(const ASeries &a, const ASeries &b)
{
	int w = window_min(a.window(), b.window());
	std::map<int, GaussianRational> m;
	for (const auto &[da, ca] : a.coeffs())
		for (const auto &[db, cb] : b.coeffs())
		{
			if (da > w - db)
				break; // map iteration is degree-ascending
			m[da + db] += ca * cb;
		}
	return ASeries(std::move(m), w);
}

ASeries negate_argument(const ASeries &f)
{
	std::map<int, GaussianRational> m;
	for (const auto &[deg, c] : f.coeffs())
		m.emplace(deg, deg % 2 == 0 ? c : -c);
	return ASeries(std::move(m), f.window());
}

ASeries a_derivative(const ASeries &f)
{
	int w = window_sub(f.window(), 1);
	if (w < 0)
		throw WindowUnderflow("derivative of a window-0 series");
	std::map<int, GaussianRational> m;
	for (const auto &[deg, c] : f.coeffs())
		if (deg >= 1)
			m.emplace(deg - 1, GaussianRational(Rational(deg)) * c);
	return ASeries(std::move(m), w);
}

ASeries a_compose(const ASeries &outer, const ASeries &inner)
{
	if (!inner.coeff(0).is_zero())
		throw CompositionConstantTerm("composition argument has a non-zero "
		                              "constant term");
	int w = window_min(outer.window(), inner.window());
	// Only the stored outer coefficients with n <= w can reach degrees inside
	// the window: inner has zero constant term, so inner^n starts at degree n.
	ASeries result = ASeries::zero(w);
	ASeries pw = ASeries::one(w); // inner^n for the current exponent
	int pw_exponent = 0;
	for (const auto &[n, c] : outer.coeffs())
	{
		if (n > w)
			break;
		while (pw_exponent < n && !pw.is_zero())
		{
			pw = mul(pw, inner).truncated(w);
			++pw_exponent;
		}
		if (pw.is_zero() && n > 0)
			break;
		result = add(result, scale(c, pw));
	}
	return result;
}

namespace {

// sum_{n} f^{step*n} / (step*n)!  truncated to f's window; the shared body of
// a_exp (step 1) and a_cosh (step 2)
ASeries exp_like(const ASeries &f, int step, const char *what)
{
	if (!f.coeff(0).is_zero())
		throw CompositionConstantTerm(std::string(what) +
		                              " argument has a non-zero constant term");
	int w = f.window();
	if (w >= kExactWindow && !f.is_zero())
		throw std::invalid_argument(std::string(what) +
		                            " of an untruncated series has infinite "
		                            "support; truncate the argument first");
	ASeries result = ASeries::one(w);
	ASeries st = f;
	if (step > 1)
		st = mul(f, f).truncated(w);
	ASeries pw = ASeries::one(w);
	for (int n = step; n <= w; n += step)
	{
		pw = mul(pw, st).truncated(w);
		if (pw.is_zero())
			break; // f^n starts at degree >= n; all later terms vanish too
		result = add(result,
		             scale(GaussianRational(Rational(Integer(1), factorial(n))),
		                   pw));
	}
	return result;
}

} // namespace

ASeries a_exp(const ASeries &f) { return exp_like(f, 1, "exp"); }

ASeries a_cosh(const ASeries &f) { return exp_like(f, 2, "cosh"); }

bool equal_on_common_window(const ASeries &a, const ASeries &b)
{
	int w = window_min(a.window(), b.window());
	for (const auto &[deg, c] : a.coeffs())
		if (deg <= w && b.coeff(deg) != c)
			return false;
	for (const auto &[deg, c] : b.coeffs())
		if (deg <= w && a.coeff(deg) != c)
			return false;
	return true;
}

} // namespace colorheis
