#include "colorheis/normal_series.hpp"

#include <iterator>
#include <stdexcept>

#include "colorheis/errors.hpp"
#include "colorheis/numbers.hpp"

namespace colorheis {

NormalSeries::NormalSeries(EntryMap entries, int dbound, int window)
    : dbound_(dbound), window_(window)
{
	if (window < 0)
		throw WindowUnderflow("NormalSeries window " + std::to_string(window));
	for (auto &[key, c] : entries)
	{
		const auto &[j, k] = key;
		if (c.is_zero() || k > window)
			continue;
		if (j < 0 || k < 0)
			throw std::invalid_argument("negative normal-form exponent");
		if (j - k > dbound)
			throw std::invalid_argument("entry above the declared diagonal "
			                            "bound");
		e_.emplace(key, c);
	}
}

NormalSeries NormalSeries::zero(int window, int dbound)
{
	return NormalSeries({}, dbound, window);
}

NormalSeries NormalSeries::identity() { return monomial(0, 0); }
NormalSeries NormalSeries::gen_a() { return monomial(0, 1); }
NormalSeries NormalSeries::gen_b() { return monomial(1, 0); }

NormalSeries NormalSeries::monomial(int j, int k, GaussianRational c)
{
	if (c.is_zero())
		return zero(kExactWindow, j - k > 0 ? j - k : 0);
	return NormalSeries({{{j, k}, std::move(c)}}, j - k, kExactWindow);
}

GaussianRational NormalSeries::coeff(int j, int k) const
{
	auto it = e_.find({j, k});
	return it == e_.end() ? GaussianRational() : it->second;
}

NormalSeries NormalSeries::truncated(int K) const
{
	if (K >= window_)
		return *this;
	EntryMap m;
	for (const auto &[key, c] : e_)
		if (key.second <= K)
			m.emplace(key, c);
	return NormalSeries(std::move(m), dbound_, K);
}

std::string NormalSeries::str() const
{
	if (e_.empty())
		return "0";
	std::string s;
	for (auto it = e_.rbegin(); it != e_.rend(); ++it)
	{
		const auto &[j, k] = it->first;
		const GaussianRational &c = it->second;

		std::string body;
		if (j > 0)
			body = j == 1 ? "B" : "B^" + std::to_string(j);
		if (k > 0)
		{
			if (!body.empty())
				body += "*";
			body += k == 1 ? "A" : "A^" + std::to_string(k);
		}

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

NormalSeries reorder_monomial(int i, int j)
{
	if (i < 0 || j < 0)
		throw std::invalid_argument("negative monomial exponent");
	NormalSeries::EntryMap m;
	int top = i < j ? i : j;
	for (int nu = 0; nu <= top; ++nu)
	{
		Rational c(factorial(nu) * binomial(i, nu) * binomial(j, nu));
		m.emplace(NormalSeries::Key{j - nu, i - nu}, GaussianRational(c));
	}
	return NormalSeries(std::move(m), j - i, i);
}

namespace {

// tight diagonal bound of a coefficient map (0 for the zero series)
int support_dbound(const NormalSeries::EntryMap &m)
{
	int d = 0;
	bool first = true;
	for (const auto &[key, c] : m)
	{
		int diff = key.first - key.second;
		if (first || diff > d)
			d = diff;
		first = false;
	}
	return d;
}

void accumulate_word(NormalSeries::EntryMap &acc, const Word &w)
{
	// right-multiply a normal form by one letter at a time:
	//   (B^j A^k) A = B^j A^{k+1}
	//   (B^j A^k) B = B^{j+1} A^k + k B^j A^{k-1}
	NormalSeries::EntryMap cur{{{0, 0}, w.coeff}};
	if (w.coeff.is_zero())
		return;
	for (Letter l : w.letters)
	{
		NormalSeries::EntryMap next;
		for (const auto &[key, c] : cur)
		{
			const auto &[j, k] = key;
			if (l == Letter::A)
				next[{j, k + 1}] += c;
			else
			{
				next[{j + 1, k}] += c;
				if (k > 0)
					next[{j, k - 1}] += GaussianRational(Rational(k)) * c;
			}
		}
		cur = std::move(next);
	}
	for (const auto &[key, c] : cur)
		acc[key] += c;
}

} // namespace

NormalSeries normal_order(const WordSum &expr)
{
	NormalSeries::EntryMap acc;
	for (const Word &w : expr)
		accumulate_word(acc, w);
	for (auto it = acc.begin(); it != acc.end();)
		it = it->second.is_zero() ? acc.erase(it) : std::next(it);
	int d = support_dbound(acc);
	return NormalSeries(std::move(acc), d, kExactWindow);
}

NormalSeries normal_order(const Word &w) { return normal_order(WordSum{w}); }

NormalSeries add(const NormalSeries &a, const NormalSeries &b)
{
	int w = window_min(a.window(), b.window());
	int d = a.dbound() > b.dbound() ? a.dbound() : b.dbound();
	NormalSeries::EntryMap m;
	for (const auto &[key, c] : a.entries())
		if (key.second <= w)
			m[key] += c;
	for (const auto &[key, c] : b.entries())
		if (key.second <= w)
			m[key] += c;
	return NormalSeries(std::move(m), d, w);
}

NormalSeries sub(const NormalSeries &a, const NormalSeries &b)
{
	return add(a, scale(GaussianRational(-1), b));
}

NormalSeries scale(const GaussianRational &c, const NormalSeries &s)
{
	NormalSeries::EntryMap m;
	if (!c.is_zero())
		for (const auto &[key, x] : s.entries())
			m.emplace(key, c * x);
	return NormalSeries(std::move(m), s.dbound(), s.window());
}

NormalSeries mul(const NormalSeries &a, const NormalSeries &b)
{
	// B^j A^k * B^n A^m = sum_nu nu! C(k,nu) C(n,nu) B^{j+n-nu} A^{k+m-nu}.
	// With the diagonal bounds, an output coefficient at (r,s) only receives
	// contributions from first-factor entries with k <= s + max(d2,0) and
	// second-factor entries with m <= s, hence the window rule below.
	int d2eff = b.dbound() > 0 ? b.dbound() : 0;
	int kout = window_min(window_sub(a.window(), d2eff), b.window());
	if (kout < 0)
		throw WindowUnderflow("product has no exact window (K1=" +
		                      std::to_string(a.window()) +
		                      ", d2=" + std::to_string(b.dbound()) +
		                      ", K2=" + std::to_string(b.window()) + ")");
	int dout = a.dbound() + b.dbound();
	NormalSeries::EntryMap m;
	for (const auto &[ka, ca] : a.entries())
	{
		const auto &[j, k] = ka;
		for (const auto &[kb, cb] : b.entries())
		{
			const auto &[n, mm] = kb;
			GaussianRational prod = ca * cb;
			int top = k < n ? k : n;
			for (int nu = 0; nu <= top; ++nu)
			{
				int s = k + mm - nu;
				if (s > kout)
					continue;
				Rational f(factorial(nu) * binomial(k, nu) * binomial(n, nu));
				m[{j + n - nu, s}] += GaussianRational(f) * prod;
			}
		}
	}
	return NormalSeries(std::move(m), dout, kout);
}

NormalSeries t_series(int window)
{
	if (window < 0)
		throw WindowUnderflow("t_series window " + std::to_string(window));
	if (window >= kExactWindow)
		throw std::invalid_argument("t_series needs a finite window");
	NormalSeries::EntryMap m;
	Rational c = 1;
	for (int k = 0; k <= window; ++k)
	{
		m.emplace(NormalSeries::Key{k, k}, GaussianRational(c));
		c *= Rational(-2, k + 1);
	}
	return NormalSeries(std::move(m), 0, window);
}

NormalSeries lift_a_series(const ASeries &f)
{
	NormalSeries::EntryMap m;
	for (const auto &[deg, c] : f.coeffs())
		m.emplace(NormalSeries::Key{0, deg}, c);
	return NormalSeries(std::move(m), 0, f.window());
}

NormalSeries lift_b_series(const ASeries &g)
{
	// Truncating in B cannot be expressed by the A-exponent window, so only
	// polynomials (exact series) may be lifted into the B generator.
	if (g.window() < kExactWindow)
		throw std::invalid_argument("lift_b_series needs an exact polynomial "
		                            "argument");
	NormalSeries::EntryMap m;
	int d = 0;
	for (const auto &[deg, c] : g.coeffs())
	{
		m.emplace(NormalSeries::Key{deg, 0}, c);
		if (deg > d)
			d = deg;
	}
	return NormalSeries(std::move(m), d, kExactWindow);
}

NormalSeries b_mul(const NormalSeries &s)
{
	NormalSeries::EntryMap m;
	for (const auto &[key, c] : s.entries())
		m.emplace(NormalSeries::Key{key.first + 1, key.second}, c);
	return NormalSeries(std::move(m), s.dbound() + 1, s.window());
}

NormalSeries parity_flip(const NormalSeries &s)
{
	NormalSeries::EntryMap m;
	for (const auto &[key, c] : s.entries())
		m.emplace(key, (key.first + key.second) % 2 == 0 ? c : -c);
	return NormalSeries(std::move(m), s.dbound(), s.window());
}

NormalSeries commutator(const NormalSeries &a, const NormalSeries &b)
{
	return sub(mul(a, b), mul(b, a));
}

NormalSeries anticommutator(const NormalSeries &a, const NormalSeries &b)
{
	return add(mul(a, b), mul(b, a));
}

bool equal_on_common_window(const NormalSeries &a, const NormalSeries &b)
{
	int w = window_min(a.window(), b.window());
	for (const auto &[key, c] : a.entries())
		if (key.second <= w && b.coeff(key.first, key.second) != c)
			return false;
	for (const auto &[key, c] : b.entries())
		if (key.second <= w && a.coeff(key.first, key.second) != c)
			return false;
	return true;
}

} // namespace colorheis
