#include "doctest.h"

#include "colorheis/blockop.hpp"
#include "test_support.hpp"

using namespace colorheis;
using testsupport::Rng;

namespace {

bool triple_relations_hold(const std::array<BlockOp, 3> &t, const PolyPair &v)
{
	PolyPair lhs1 = anticommutator_apply(t[0], t[1], v);
	PolyPair rhs1 = t[2].apply(v);
	if (!(lhs1 == rhs1))
		return false;
	if (!anticommutator_apply(t[0], t[2], v).is_zero())
		return false;
	if (!anticommutator_apply(t[1], t[2], v).is_zero())
		return false;
	return true;
}

} // namespace

TEST_CASE("pauli layer identities")
{
	Mat2 s1 = Mat2::pauli1(), s2 = Mat2::pauli2(), s3 = Mat2::pauli3();
	CHECK(s1 * s2 == GaussianRational::i() * s3);
	CHECK(s2 * s3 == GaussianRational::i() * s1);
	CHECK(s3 * s1 == GaussianRational::i() * s2);
	// any two different Pauli matrices anticommute
	CHECK(s1 * s2 + s2 * s1 == Mat2::zero());
	CHECK(s1 * s3 + s3 * s1 == Mat2::zero());
	CHECK(s2 * s3 + s3 * s2 == Mat2::zero());
	CHECK(s1 * s1 == Mat2::identity());
}

TEST_CASE("direct-sum triple on a fixed pair")
{
	auto t = block_triple(BlockKind::direct_sum);
	PolyPair v{Poly::monomial(2), Poly::monomial(3)};
	CHECK(triple_relations_hold(t, v));
}

TEST_CASE("pauli-tensor triple equals the direct-sum matrices")
{
	auto ds = block_triple(BlockKind::direct_sum);
	auto pt = block_triple(BlockKind::pauli_tensor);
	Rng rng(71);
	for (int trial = 0; trial < 10; ++trial)
	{
		PolyPair v{testsupport::rand_poly(rng, 6),
		           testsupport::rand_poly(rng, 6)};
		for (int i = 0; i < 3; ++i)
			CHECK(ds[i].apply(v) == pt[i].apply(v));
	}
}

TEST_CASE("randomized relation checks for all block kinds")
{
	Rng rng(72);
	auto ds = block_triple(BlockKind::direct_sum);
	auto pt = block_triple(BlockKind::pauli_tensor);
	auto s3 = block_triple(BlockKind::shifted, 3);
	for (int trial = 0; trial < 25; ++trial)
	{
		PolyPair v{testsupport::rand_poly(rng, 8),
		           testsupport::rand_poly(rng, 8)};
		CHECK(triple_relations_hold(ds, v));
		CHECK(triple_relations_hold(pt, v));
		CHECK(triple_relations_hold(s3, v));
	}
}

TEST_CASE("shifted block triple works for any exponent, even included")
{
	// the matrix construction only needs [A, B - A^s] = I, which holds for
	// every s >= 0
	Rng rng(73);
	for (int s : {0, 1, 2, 4})
	{
		auto t = block_triple(BlockKind::shifted, s);
		for (int trial = 0; trial < 5; ++trial)
		{
			PolyPair v{testsupport::rand_poly(rng, 8),
			           testsupport::rand_poly(rng, 8)};
			CHECK(triple_relations_hold(t, v));
		}
	}
	CHECK_THROWS_AS(block_triple(BlockKind::shifted), std::invalid_argument);
	CHECK_THROWS_AS(block_triple(BlockKind::shifted, -1),
	                std::invalid_argument);
}
