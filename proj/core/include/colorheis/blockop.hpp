#pragma once

#include <array>
#include <optional>

#include "colorheis/normal_series.hpp"
#include "colorheis/poly.hpp"

namespace colorheis {

/// 2x2 matrix over Q(i), row-major; the constant layer of the tensor-product
/// constructions (Pauli matrices and friends).
class Mat2
{
public:
	Mat2() = default;
	Mat2(GaussianRational a, GaussianRational b, GaussianRational c,
	     GaussianRational d)
	    : m_{std::move(a), std::move(b), std::move(c), std::move(d)}
	{}

	static Mat2 zero() { return {}; }
	static Mat2 identity() { return {1, 0, 0, 1}; }
	static Mat2 pauli1() { return {0, 1, 1, 0}; }
	static Mat2 pauli2()
	{
		return {0, -GaussianRational::i(), GaussianRational::i(), 0};
	}
	static Mat2 pauli3() { return {1, 0, 0, -1}; }

	const GaussianRational &at(int r, int c) const { return m_[r * 2 + c]; }

	friend Mat2 operator+(const Mat2 &a, const Mat2 &b);
	friend Mat2 operator*(const Mat2 &a, const Mat2 &b);
	friend Mat2 operator*(const GaussianRational &c, const Mat2 &m);
	friend bool operator==(const Mat2 &a, const Mat2 &b) = default;

private:
	std::array<GaussianRational, 4> m_;
};

struct PolyPair
{
	Poly first, second;

	friend bool operator==(const PolyPair &a, const PolyPair &b) = default;
	bool is_zero() const { return first.is_zero() && second.is_zero(); }
};

/// 2x2 matrix of polynomial-space operators, each entry a normal-ordered
/// series applied via apply_series. Composition stays lazy: matrices are
/// only ever evaluated by applying them to polynomial pairs.
class BlockOp
{
public:
	BlockOp();
	BlockOp(NormalSeries e00, NormalSeries e01, NormalSeries e10,
	        NormalSeries e11);

	const NormalSeries &at(int r, int c) const { return e_[r * 2 + c]; }

	PolyPair apply(const PolyPair &v) const;

private:
	std::array<NormalSeries, 4> e_;
};

/// scalar 2x2 layer tensored with one operator: entries m[r][c] * op
BlockOp tensor(const Mat2 &m, const NormalSeries &op);

enum class BlockKind
{
	direct_sum,   // operator matrices assembled entry by entry
	pauli_tensor, // sigma1 (x) A, -i sigma2 (x) B, sigma3 (x) I
	shifted       // B-slot replaced by B - A^s (any s >= 0 still works)
};

/// The three block operators; `s` only applies to BlockKind::shifted.
std::array<BlockOp, 3> block_triple(BlockKind kind,
                                    std::optional<int> s = std::nullopt);

/// (P Q + Q P) v by double application
PolyPair anticommutator_apply(const BlockOp &p, const BlockOp &q,
                              const PolyPair &v);

} // namespace colorheis
