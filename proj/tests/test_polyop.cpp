#include "doctest.h"

#include "colorheis/errors.hpp"
#include "colorheis/numbers.hpp"
#include "colorheis/polyop.hpp"
#include "test_support.hpp"

using namespace colorheis;
using testsupport::Rng;

namespace {

ASeries zero_series() { return ASeries::from_poly(Poly::zero()); }
Poly x_to(int n) { return Poly::monomial(n); }

} // namespace

TEST_CASE("basic polynomial operators")
{
	Poly p = x_to(3); // x^3
	CHECK(diff(p) == GaussianRational(3) * x_to(2));
	CHECK(mulx(p) == x_to(4));
	CHECK(shift(x_to(2), GaussianRational(1)).str() == "x^2 + 2*x + 1");
	CHECK(parity(x_to(3) - x_to(2)) == -x_to(3) - x_to(2));

	auto [ev, od] = even_odd_split(x_to(3) + GaussianRational(2) * x_to(2) +
	                               Poly::one());
	CHECK(ev == GaussianRational(2) * x_to(2) + Poly::one());
	CHECK(od == x_to(3));

	CHECK(diff(Poly::zero()).is_zero());
	CHECK(shift(Poly::zero(), GaussianRational(5)).is_zero());
}

TEST_CASE("poly ring invariants")
{
	CHECK(Poly::zero().degree() == -1);
	CHECK(Poly({GaussianRational(1), GaussianRational(0)}).degree() == 0);

	Rng rng(60);
	for (int trial = 0; trial < 50; ++trial)
	{
		Poly p = testsupport::rand_poly(rng, 6);
		Poly q = testsupport::rand_poly(rng, 6);
		if (!p.is_zero() && !q.is_zero())
			CHECK((p * q).degree() == p.degree() + q.degree());
		CHECK(p - p == Poly::zero());
	}
}

TEST_CASE("apply_series basics")
{
	// T acts as the parity operator
	CHECK(apply_series(t_series(5), x_to(3)) == -x_to(3));
	// B T sends x^n to (-1)^n x^{n+1}
	CHECK(apply_series(b_mul(t_series(5)), x_to(2)) == x_to(3));
	CHECK(apply_series(b_mul(t_series(5)), x_to(3)) == -x_to(4));
	// derivative and multiplication generators
	CHECK(apply_series(NormalSeries::gen_a(), x_to(4)) ==
	      GaussianRational(4) * x_to(3));
	CHECK(apply_series(NormalSeries::gen_b(), x_to(4)) == x_to(5));

	CHECK_THROWS_AS(apply_series(t_series(2), x_to(3)), WindowUnderflow);
}

TEST_CASE("T e^A acts as reflection through 1/2")
{
	// (T e^A) p = p(1 - x)
	NormalSeries tea =
	    mul(t_series(8), lift_a_series(a_exp(ASeries::monomial(1, 1, 8))));
	Poly p = x_to(2) + Poly::one();
	CHECK(apply_series(tea, p) == p.substitute_affine(1, -1));

	Rng rng(61);
	for (int trial = 0; trial < 20; ++trial)
	{
		Poly q = testsupport::rand_poly(rng, 8);
		CHECK(apply_series(tea, q) == q.substitute_affine(1, -1));
	}
}

TEST_CASE("apply_series is a representation")
{
	Rng rng(62);
	for (int trial = 0; trial < 30; ++trial)
	{
		NormalSeries s1 = testsupport::rand_recipe(rng).materialize(12);
		NormalSeries s2 = testsupport::rand_recipe(rng).materialize(12);
		Poly p = testsupport::rand_poly(rng, 5);
		try
		{
			Poly via_mul = apply_series(mul(s1, s2), p);
			Poly via_apply = apply_series(s1, apply_series(s2, p));
			CHECK(via_mul == via_apply);
		}
		catch (const WindowUnderflow &)
		{
		}
	}
}

TEST_CASE("apply_series linearity")
{
	Rng rng(63);
	NormalSeries s = testsupport::rand_recipe(rng).materialize(10);
	Poly p = testsupport::rand_poly(rng, 6);
	Poly q = testsupport::rand_poly(rng, 6);
	GaussianRational c = testsupport::rand_gaussian(rng);
	CHECK(apply_series(s, p + q) == apply_series(s, p) + apply_series(s, q));
	CHECK(apply_series(s, c * p) == c * apply_series(s, p));
}

TEST_CASE("T acts as parity for arbitrary polynomials")
{
	Rng rng(64);
	for (int trial = 0; trial < 50; ++trial)
	{
		Poly p = testsupport::rand_poly(rng, 12);
		CHECK(apply_series(t_series(12), p) == parity(p));
	}
}

TEST_CASE("lifted exponential acts as the unit shift")
{
	NormalSeries e = lift_a_series(ASeries::exp_gf(10));
	Rng rng(65);
	for (int trial = 0; trial < 20; ++trial)
	{
		Poly p = testsupport::rand_poly(rng, 10);
		CHECK(apply_series(e, p) == shift(p, GaussianRational(1)));
	}
}

TEST_CASE("realization action check")
{
	// phi = psi = 0 realization, checked through the representation
	Realization r = build_three_rel(GaussianRational(1), zero_series(),
	                                zero_series(), 12);
	CHECK(realization_action_check(r, 10));

	// psi = A^3 (odd): still a realization
	Realization r3 = build_three_rel(GaussianRational(1), zero_series(),
	                                 ASeries::from_poly(x_to(3)), 12);
	CHECK(realization_action_check(r3, 10));

	// even s = 2: the third relation fails with residual exactly 2 p''
	Realization r2 = build_three_rel(GaussianRational(1), zero_series(),
	                                 ASeries::from_poly(x_to(2)), 12,
	                                 OddnessCheck::skip);
	CHECK_FALSE(realization_action_check(r2, 10));
	Rng rng(66);
	for (int trial = 0; trial < 10; ++trial)
	{
		Poly p = testsupport::rand_poly(rng, 8);
		Poly res = anticommutator_action(r2.a2, r2.a3, p);
		CHECK(res == GaussianRational(2) * diff(diff(p)));
	}
}

TEST_CASE("action of the A3 = 0 family")
{
	// A2 = T V(A) acting on x^n: sum_l v_l l! C(n,l) (-x)^{n-l}
	ASeries v = ASeries::from_pairs({{0, 2}, {1, 1}, {3, -1}});
	Realization r = build_two_rel(v, zero_series(), 10);
	for (int n = 0; n <= 8; ++n)
	{
		Poly expected;
		for (const auto &[l, vl] : v.coeffs())
		{
			if (l > n)
				continue;
			GaussianRational c =
			    vl * GaussianRational(Rational(factorial(l) *
			                                   binomial(n, l)));
			Poly m = parity(x_to(n - l));
			expected += c * m;
		}
		CHECK(apply_series(r.a2, x_to(n)) == expected);
	}
}

TEST_CASE("euler interpolation residual vanishes on polynomials")
{
	// p = x^2, alpha = 1 by hand: (1/2)[(x-1)^2 + (x+1)^2] - 1 = x^2
	CHECK(euler_interp_residual(x_to(2), GaussianRational(1)).is_zero());
	CHECK(euler_interp_residual(Poly::one(), GaussianRational(7)).is_zero());

	for (const Rational &alpha :
	     {Rational(1), Rational(2), Rational(1, 2)})
		for (int n = 0; n <= 12; ++n)
			CHECK(euler_interp_residual(x_to(n), GaussianRational(alpha))
			          .is_zero());

	// truncation safety: adding terms beyond deg p changes nothing
	Rng rng(67);
	for (int trial = 0; trial < 10; ++trial)
	{
		Poly p = testsupport::rand_poly(rng, 9);
		GaussianRational alpha(testsupport::rand_rational(rng, 3, 3));
		CHECK(euler_interp_residual(p, alpha) ==
		      euler_interp_residual(p, alpha, 3));
		CHECK(euler_interp_residual(p, alpha).is_zero());
	}
}

TEST_CASE("stirling interpolation residual vanishes on polynomials")
{
	CHECK(stirling_interp_residual(Poly::one()).is_zero());
	for (int n = 0; n <= 12; ++n)
		CHECK(stirling_interp_residual(x_to(n)).is_zero());

	Rng rng(68);
	for (int trial = 0; trial < 10; ++trial)
	{
		Poly p = testsupport::rand_poly(rng, 9);
		CHECK(stirling_interp_residual(p).is_zero());
		// widening the outer sum must not change the residual
		CHECK(stirling_interp_residual(p, 3).is_zero());
	}
}

TEST_CASE("closed functional form of the shift family")
{
	// A3 x = 1 - x
	ActionTriple t = shifted_parity_action(x_to(1));
	CHECK(t.a3.str() == "-x + 1");
	CHECK(t.a1 == Poly::one());

	// agreement with the series realization c=1, phi=A, psi=0
	Realization r =
	    build_three_rel(GaussianRational(1),
	                    ASeries::from_poly(x_to(1)), zero_series(), 14);
	Rng rng(69);
	for (int trial = 0; trial < 15; ++trial)
	{
		Poly f = testsupport::rand_poly(rng, 10);
		ActionTriple got = shifted_parity_action(f);
		CHECK(got.a1 == apply_series(r.a1, f));
		CHECK(got.a2 == apply_series(r.a2, f));
		CHECK(got.a3 == apply_series(r.a3, f));

		// and with the finite-difference form of the same operator
		ActionTriple alt = shifted_parity_action_differences(f);
		CHECK(alt.a1 == got.a1);
		CHECK(alt.a2 == got.a2);
		CHECK(alt.a3 == got.a3);
	}

	// the anticommutator identities in functional form
	for (int n = 0; n <= 10; ++n)
	{
		Poly f = x_to(n);
		ActionTriple g = shifted_parity_action(f);
		Poly r1 = diff(g.a2) + shifted_parity_action(diff(f)).a2 - g.a3;
		CHECK(r1.is_zero());
		Poly r3 = shifted_parity_action(g.a3).a2 +
		          shifted_parity_action(g.a2).a3;
		CHECK(r3.is_zero());
	}
}
