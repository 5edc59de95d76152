#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "colorheis/aseries.hpp"
#include "colorheis/gaussian.hpp"
#include "colorheis/window.hpp"

namespace colorheis {

enum class Letter
{
	A,
	B
};

/// Scalar multiple of a finite word over {A, B}; the empty word is the unit.
struct Word
{
	std::vector<Letter> letters;
	GaussianRational coeff = 1;
};

using WordSum = std::vector<Word>;

/// Truncated series in (B,A)-normal form: sum a_{jk} B^j A^k, keyed by (j,k).
///
/// Two declared bounds make products coefficient-wise finite and honest:
///  - dbound d: a_{jk} = 0 whenever j - k > d (the diagonal-bounded class,
///    closed under multiplication with d additive);
///  - window K: the stored coefficients, together with the implicit zeros,
///    are exact for every (j,k) with k <= K. Nothing is stored beyond K.
class NormalSeries
{
public:
	using Key = std::pair<int, int>; // (j, k) of B^j A^k
	using EntryMap = std::map<Key, GaussianRational>;

	/// the zero series; exact everywhere
	NormalSeries() : dbound_(0), window_(kExactWindow) {}

	/// prunes zeros and entries beyond the window; throws WindowUnderflow on
	/// window < 0 and std::invalid_argument on an entry with j - k > dbound
	NormalSeries(EntryMap entries, int dbound, int window);

	static NormalSeries zero(int window = kExactWindow, int dbound = 0);
	static NormalSeries identity();
	/// the generators as exact one-letter series
	static NormalSeries gen_a();
	static NormalSeries gen_b();
	/// c * B^j A^k with the tight dbound j - k
	static NormalSeries monomial(int j, int k, GaussianRational c = 1);

	const EntryMap &entries() const { return e_; }
	int dbound() const { return dbound_; }
	int window() const { return window_; }

	GaussianRational coeff(int j, int k) const;
	bool is_zero() const { return e_.empty(); }

	NormalSeries truncated(int K) const;

	/// strict equality: same declared bounds and the same stored entries
	friend bool operator==(const NormalSeries &a,
	                       const NormalSeries &b) = default;

	/// Canonical text form, terms in decreasing (j,k), e.g. "B*A + 1".
	std::string str() const;

private:
	EntryMap e_;
	int dbound_;
	int window_;
};

/// Exact normal form of A^i B^j via the reordering sum
/// A^i B^j = sum_nu nu! C(i,nu) C(j,nu) B^{j-nu} A^{i-nu};
/// declared with dbound = j - i and window = i.
NormalSeries reorder_monomial(int i, int j);

/// Exact normal form of a finite word sum; result is independent of the
/// rewrite order.
NormalSeries normal_order(const WordSum &expr);
NormalSeries normal_order(const Word &w);

NormalSeries add(const NormalSeries &a, const NormalSeries &b);
NormalSeries sub(const NormalSeries &a, const NormalSeries &b);
NormalSeries scale(const GaussianRational &c, const NormalSeries &s);

/// Product with pessimistic exactness window
/// K_out = min(K1 - max(d2,0), K2); throws WindowUnderflow when K_out < 0.
NormalSeries mul(const NormalSeries &a, const NormalSeries &b);

/// T(A,B) = sum_k (-2)^k/k! B^k A^k up to k = window; squares to the
/// identity and anticommutes with both generators.
NormalSeries t_series(int window);

/// sum f_l A^l viewed as a normal series (entries (0,l), dbound 0)
NormalSeries lift_a_series(const ASeries &f);

/// sum g_l B^l viewed as a normal series (entries (l,0), dbound = top degree)
NormalSeries lift_b_series(const ASeries &g);

/// left multiplication by B: shifts j up by one, dbound + 1, window unchanged
NormalSeries b_mul(const NormalSeries &s);

/// substitution A -> -A, B -> -B: a_{jk} -> (-1)^{j+k} a_{jk}
NormalSeries parity_flip(const NormalSeries &s);

NormalSeries commutator(const NormalSeries &a, const NormalSeries &b);
NormalSeries anticommutator(const NormalSeries &a, const NormalSeries &b);

/// coefficient equality for all (j,k) with k <= min(K1, K2)
bool equal_on_common_window(const NormalSeries &a, const NormalSeries &b);

} // namespace colorheis
