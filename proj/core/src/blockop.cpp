#include "colorheis/blockop.hpp"

#include <stdexcept>

#include "colorheis/polyop.hpp"

namespace colorheis {

Mat2 operator+(const Mat2 &a, const Mat2 &b)
{
	Mat2 r;
	for (int i = 0; i < 4; ++i)
		r.m_[i] = a.m_[i] + b.m_[i];
	return r;
}

Mat2 operator*(const Mat2 &a, const Mat2 &b)
{
	Mat2 r;
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			r.m_[i * 2 + j] =
			    a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
	return r;
}

Mat2 operator*(const GaussianRational &c, const Mat2 &m)
{
	Mat2 r;
	for (int i = 0; i < 4; ++i)
		r.m_[i] = c * m.m_[i];
	return r;
}

BlockOp::BlockOp()
    : e_{NormalSeries::zero(), NormalSeries::zero(), NormalSeries::zero(),
         NormalSeries::zero()}
{}

BlockOp::BlockOp(NormalSeries e00, NormalSeries e01, NormalSeries e10,
                 NormalSeries e11)
    : e_{std::move(e00), std::move(e01), std::move(e10), std::move(e11)}
{}

PolyPair BlockOp::apply(const PolyPair &v) const
{
	return {apply_series(e_[0], v.first) + apply_series(e_[1], v.second),
	        apply_series(e_[2], v.first) + apply_series(e_[3], v.second)};
}

BlockOp tensor(const Mat2 &m, const NormalSeries &op)
{
	return BlockOp(scale(m.at(0, 0), op), scale(m.at(0, 1), op),
	               scale(m.at(1, 0), op), scale(m.at(1, 1), op));
}

std::array<BlockOp, 3> block_triple(BlockKind kind, std::optional<int> s)
{
	NormalSeries a = NormalSeries::gen_a();
	NormalSeries b = NormalSeries::gen_b();
	NormalSeries id = NormalSeries::identity();
	NormalSeries zero = NormalSeries::zero();

	switch (kind)
	{
	case BlockKind::direct_sum:
		return {BlockOp(zero, a, a, zero), BlockOp(zero, scale(-1, b), b, zero),
		        BlockOp(id, zero, zero, scale(-1, id))};
	case BlockKind::pauli_tensor:
		return {tensor(Mat2::pauli1(), a),
		        tensor(-GaussianRational::i() * Mat2::pauli2(), b),
		        tensor(Mat2::pauli3(), id)};
	case BlockKind::shifted:
	{
		if (!s || *s < 0)
			throw std::invalid_argument("shifted block triple needs s >= 0");
		// B~ = B - A^s still satisfies [A, B~] = I
		NormalSeries bt = sub(b, NormalSeries::monomial(0, *s));
		return {BlockOp(zero, a, a, zero),
		        BlockOp(zero, scale(-1, bt), bt, zero),
		        BlockOp(id, zero, zero, scale(-1, id))};
	}
	}
	throw std::logic_error("unknown block kind");
}

PolyPair anticommutator_apply(const BlockOp &p, const BlockOp &q,
                              const PolyPair &v)
{
	PolyPair pq = p.apply(q.apply(v));
	PolyPair qp = q.apply(p.apply(v));
	return {pq.first + qp.first, pq.second + qp.second};
}

} // namespace colorheis
