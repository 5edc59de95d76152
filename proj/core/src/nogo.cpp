#include "colorheis/nogo.hpp"

#include <stdexcept>
#include <string>

#include "colorheis/errors.hpp"
#include "colorheis/normal_series.hpp"

namespace colorheis {

NoGoSystem build_nogo_system(int M, int N)
{
	NoGoSystem system;
	for (int j = 0; j <= M; ++j)
		for (int k = 0; k <= N; ++k)
		{
			std::size_t u = static_cast<std::size_t>(j) * (N + 1) + k;

			// contribution of the basis monomial X = B^j A^k to
			// X A^2 + 2 A X A + A^2 X
			WordSum q;
			Word w1, w2, w3;
			w1.letters.assign(j, Letter::B);
			w1.letters.insert(w1.letters.end(), k + 2, Letter::A);
			w2.letters.assign(1, Letter::A);
			w2.letters.insert(w2.letters.end(), j, Letter::B);
			w2.letters.insert(w2.letters.end(), k + 1, Letter::A);
			w2.coeff = 2;
			w3.letters.assign(2, Letter::A);
			w3.letters.insert(w3.letters.end(), j, Letter::B);
			w3.letters.insert(w3.letters.end(), k, Letter::A);
			q = {w1, w2, w3};

			NormalSeries expanded = normal_order(q);
			for (const auto &[key, c] : expanded.entries())
			{
				if (!c.im().is_zero())
					throw std::logic_error("complex coefficient in no-go "
					                       "expansion");
				system[key][u] += c.re();
			}
		}
	// drop rows that cancelled to zero entirely
	for (auto it = system.begin(); it != system.end();)
	{
		auto &row = it->second;
		for (auto rit = row.begin(); rit != row.end();)
			rit = rit->second.is_zero() ? row.erase(rit) : std::next(rit);
		it = row.empty() ? system.erase(it) : std::next(it);
	}
	return system;
}

namespace {

/// reduced row echelon form in place; returns the pivot column of each row
std::vector<std::size_t> rref(std::vector<std::vector<Rational>> &m)
{
	std::vector<std::size_t> pivots;
	if (m.empty())
		return pivots;
	std::size_t cols = m[0].size();
	std::size_t row = 0;
	for (std::size_t col = 0; col < cols && row < m.size(); ++col)
	{
		std::size_t sel = row;
		while (sel < m.size() && m[sel][col].is_zero())
			++sel;
		if (sel == m.size())
			continue;
		std::swap(m[sel], m[row]);
		Rational inv = Rational(1) / m[row][col];
		for (std::size_t c = col; c < cols; ++c)
			m[row][c] *= inv;
		for (std::size_t r = 0; r < m.size(); ++r)
		{
			if (r == row || m[r][col].is_zero())
				continue;
			Rational f = m[r][col];
			for (std::size_t c = col; c < cols; ++c)
				m[r][c] -= f * m[row][c];
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

} // namespace

NoGoReport polynomial_nogo(int M, int N, int bound)
{
	if (M < 0 || N < 0)
		throw std::invalid_argument("negative bidegree bound");
	if (M > bound || N > bound)
		throw BoundExceeded("no-go bidegree (" + std::to_string(M) + "," +
		                    std::to_string(N) + ") exceeds bound " +
		                    std::to_string(bound));

	NoGoSystem system = build_nogo_system(M, N);
	std::size_t cols = static_cast<std::size_t>(M + 1) * (N + 1);

	std::vector<std::vector<Rational>> mat;
	mat.reserve(system.size());
	for (const auto &[key, row] : system)
	{
		std::vector<Rational> dense(cols);
		for (const auto &[u, c] : row)
			dense[u] = c;
		mat.push_back(std::move(dense));
	}

	NoGoReport report;
	report.M = M;
	report.N = N;
	report.system_rows = mat.size();
	report.system_cols = cols;

	std::vector<std::size_t> pivots = rref(mat);
	report.nullity = cols - pivots.size();

	// basis vector per free column: x[free] = 1, x[pivot_c] = -R[r][free]
	std::vector<bool> is_pivot(cols, false);
	for (std::size_t p : pivots)
		is_pivot[p] = true;
	for (std::size_t f = 0; f < cols; ++f)
	{
		if (is_pivot[f])
			continue;
		std::vector<Rational> x(cols);
		x[f] = 1;
		for (std::size_t r = 0; r < pivots.size(); ++r)
			x[pivots[r]] = -mat[r][f];
		report.basis.push_back(std::move(x));
	}
	return report;
}

bool recurrence_closed_form_check(const std::vector<Rational> &c,
                                  const std::vector<Rational> &d, int J, int L)
{
	if (static_cast<int>(c.size()) < L + 1 ||
	    static_cast<int>(d.size()) < L + 1)
		throw std::invalid_argument("need L+1 boundary coefficients");
	if (!c[0].is_zero())
		throw std::invalid_argument("c_0 must be 0");

	for (int l = 0; l <= L; ++l)
	{
		// b_j = a_{j, j+l-1} along one diagonal; b_0 = c_l, b_1 = d_l
		Rational bprev = c[l];
		Rational bcur = d[l];
		Rational pw = 1; // (-2)^j / j!
		for (int j = 0; j <= J; ++j)
		{
			Rational expected =
			    pw * (d[l] + Rational(2 * j, j + 1) * c[l]);
			if (bcur != expected)
				return false;
			Rational bnext = -(Rational(4) * bprev +
			                   Rational(4 * (j + 1)) * bcur) /
			                 Rational((j + 1) * (j + 2));
			bprev = bcur;
			bcur = bnext;
			pw *= Rational(-2, j + 1);
		}
	}
	return true;
}

} // namespace colorheis
