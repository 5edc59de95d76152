#include "colorheis/numbers.hpp"

#include <mutex>
#include <vector>

namespace colorheis {

Integer factorial(unsigned n)
{
	Integer r = 1;
	for (unsigned i = 2; i <= n; ++i)
		r *= i;
	return r;
}

Integer binomial(unsigned n, unsigned k)
{
	if (k > n)
		return 0;
	if (k > n - k)
		k = n - k;
	Integer r = 1;
	for (unsigned i = 0; i < k; ++i)
	{
		r *= n - i;
		r /= i + 1; // exact at each step: r is C(n, i+1) * remaining factor
	}
	return r;
}

namespace {

// idempotent prefix caches; values only ever appended under the lock
std::mutex number_cache_mutex;

const Rational &euler_cached(unsigned m) // E_{2m}
{
	static std::vector<Rational> cache{Rational(1)};
	std::lock_guard lock(number_cache_mutex);
	while (cache.size() <= m)
	{
		unsigned n = static_cast<unsigned>(cache.size());
		Rational s = 0;
		for (unsigned k = 0; k < n; ++k)
			s += Rational(binomial(2 * n, 2 * k)) * cache[k];
		cache.push_back(-s);
	}
	return cache[m];
}

const Rational &bernoulli_cached(unsigned n)
{
	static std::vector<Rational> cache{Rational(1)};
	std::lock_guard lock(number_cache_mutex);
	while (cache.size() <= n)
	{
		unsigned m = static_cast<unsigned>(cache.size());
		Rational s = 0;
		for (unsigned j = 0; j < m; ++j)
			s += Rational(binomial(m + 1, j)) * cache[j];
		cache.push_back(-s / Rational(m + 1));
	}
	return cache[n];
}

} // namespace

Rational euler_number(unsigned n)
{
	if (n % 2 == 1)
		return 0;
	return euler_cached(n / 2);
}

Rational bernoulli_number(unsigned n) { return bernoulli_cached(n); }

Poly euler_polynomial(unsigned k)
{
	std::vector<Poly> e(k + 1);
	for (unsigned n = 0; n <= k; ++n)
	{
		Poly p = Poly::monomial(n);
		Poly s;
		for (unsigned j = 0; j < n; ++j)
			s += GaussianRational(Rational(binomial(n, j))) * e[j];
		e[n] = p - GaussianRational(Rational(1, 2)) * s;
	}
	return e[k];
}

Poly bernoulli_polynomial(unsigned k)
{
	Poly p;
	for (unsigned j = 0; j <= k; ++j)
		p += Poly::monomial(k - j, GaussianRational(Rational(binomial(k, j)) *
		                                            bernoulli_number(j)));
	return p;
}

Integer stirling2(unsigned m, unsigned k)
{
	if (m == 0)
		return k == 0 ? 1 : 0;
	Integer s = 0;
	for (unsigned j = 0; j <= k; ++j)
	{
		Integer term = binomial(k, j) * pow(Integer(j), m);
		if ((k - j) % 2 == 1)
			s -= term;
		else
			s += term;
	}
	Integer kf = factorial(k);
	Integer q = s / kf;
	// the alternating sum is always divisible by k!
	if (q * kf != s)
		throw std::logic_error("stirling2: sum not divisible by k!");
	return q;
}

Integer stirling2_triangle(unsigned m, unsigned k)
{
	if (k > m)
		return 0;
	// row-by-row triangle, row m has entries 0..m
	std::vector<Integer> row{1}; // S(0,0)
	for (unsigned r = 1; r <= m; ++r)
	{
		std::vector<Integer> next(r + 1);
		for (unsigned c = 1; c <= r; ++c)
		{
			next[c] = c * (c < row.size() ? row[c] : Integer(0));
			next[c] += row[c - 1];
		}
		row = std::move(next);
	}
	return k < row.size() ? row[k] : Integer(0);
}

} // namespace colorheis
