#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "colorheis/gaussian.hpp"
#include "colorheis/poly.hpp"
#include "colorheis/window.hpp"

namespace colorheis {

/// Truncated formal power series in the single generator A. Coefficients are
/// exact (including the implicit zeros) for every degree <= window; nothing
/// is claimed beyond the window, and no entries are stored there.
class ASeries
{
public:
	/// zero series with an empty window
	ASeries() = default;
	/// zero series
	explicit ASeries(int window);
	/// throws WindowUnderflow on window < 0; prunes zero coefficients and
	/// rejects degrees outside [0, window]
	ASeries(std::map<int, GaussianRational> coeffs, int window);

	static ASeries zero(int window) { return ASeries(window); }
	static ASeries one(int window);
	static ASeries monomial(int deg, GaussianRational c, int window);
	static ASeries
	from_pairs(const std::vector<std::pair<int, GaussianRational>> &pairs,
	           int window = kExactWindow);
	/// polynomial viewed as a series; exact at every degree
	static ASeries from_poly(const Poly &p);

	/// E(t) = sum_n E_{2n}/(2n)! t^{2n}, the series inverse of cosh
	static ASeries euler_gf(int window);
	/// exp(t) itself (unit constant term); see a_exp for exp of a series
	static ASeries exp_gf(int window);

	int window() const { return window_; }
	const std::map<int, GaussianRational> &coeffs() const { return c_; }
	GaussianRational coeff(int deg) const;

	bool is_zero() const { return c_.empty(); }
	/// no non-zero coefficient at an even degree (within the window)
	bool is_odd() const;

	ASeries truncated(int K) const;
	Poly to_poly() const;

	/// strict equality: same window and the same stored coefficients
	friend bool operator==(const ASeries &a, const ASeries &b) = default;

	std::string str() const;

private:
	std::map<int, GaussianRational> c_;
	int window_ = 0;
};

ASeries add(const ASeries &a, const ASeries &b);
ASeries sub(const ASeries &a, const ASeries &b);
ASeries scale(const GaussianRational &c, const ASeries &a);
ASeries mul(const ASeries &a, const ASeries &b);

/// f(-A)
ASeries negate_argument(const ASeries &f);

/// term-wise derivative; window drops by one (throws WindowUnderflow when
/// nothing exact would remain)
ASeries a_derivative(const ASeries &f);

/// outer(inner); requires inner constant term zero (CompositionConstantTerm)
ASeries a_compose(const ASeries &outer, const ASeries &inner);

/// exp(f) and cosh(f); require f constant term zero
ASeries a_exp(const ASeries &f);
ASeries a_cosh(const ASeries &f);

/// coefficient-wise equality restricted to the common exact window
bool equal_on_common_window(const ASeries &a, const ASeries &b);

} // namespace colorheis
