#include "doctest.h"

#include "colorheis/errors.hpp"
#include "colorheis/numbers.hpp"
#include "colorheis/poly.hpp"
#include "test_support.hpp"

using namespace colorheis;
using testsupport::Rng;

TEST_CASE("rational canonical form")
{
	CHECK(Rational(2, 4) == Rational(1, 2));
	CHECK(Rational(-2, 4).numerator() == -1);
	CHECK(Rational(2, -4).numerator() == -1);
	CHECK(Rational(2, -4).denominator() == 2);
	CHECK(Rational(0, 7).numerator() == 0);
	CHECK(Rational(0, 7).denominator() == 1);
	CHECK(Rational(6, 3).str() == "2");
	CHECK(Rational(-1, 2).str() == "-1/2");
	CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
	CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic stays in lowest terms")
{
	Rng rng(11);
	for (int i = 0; i < 200; ++i)
	{
		Rational a = testsupport::rand_rational(rng);
		Rational b = testsupport::rand_rational(rng);
		for (Rational r : {a + b, a - b, a * b})
		{
			CHECK(r.denominator() > 0);
			CHECK(boost::multiprecision::gcd(
			          boost::multiprecision::abs(r.numerator()),
			          r.denominator()) == 1);
		}
	}
}

TEST_CASE("rational parse round-trip")
{
	for (const char *s : {"0", "5", "-5", "1/2", "-7/3", "22/7"})
		CHECK(Rational::parse(s).str() == s);
	CHECK(Rational::parse(" 4/6 ") == Rational(2, 3));
	CHECK(Rational::parse("+3") == Rational(3));
	CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
	CHECK_THROWS_AS(Rational::parse("a"), ParseError);
	CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
}

TEST_CASE("gaussian rational field operations")
{
	GaussianRational i = GaussianRational::i();
	CHECK(i * i == GaussianRational(-1));
	CHECK((GaussianRational(1, 1) * GaussianRational(1, -1)) ==
	      GaussianRational(2));

	Rng rng(12);
	for (int n = 0; n < 100; ++n)
	{
		GaussianRational a = testsupport::rand_gaussian(rng);
		GaussianRational b = testsupport::rand_gaussian(rng);
		GaussianRational c = testsupport::rand_gaussian(rng);
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
		if (!a.is_zero())
			CHECK(a * a.inverse() == GaussianRational(1));
	}
	CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
}

TEST_CASE("gaussian rational text form")
{
	CHECK(GaussianRational(0).str() == "0");
	CHECK(GaussianRational(Rational(1, 2)).str() == "1/2");
	CHECK(GaussianRational(0, 1).str() == "1*i");
	CHECK(GaussianRational(Rational(1, 2), Rational(-3, 4)).str() ==
	      "1/2-3/4*i");
	CHECK(GaussianRational(Rational(1, 2), Rational(3, 4)).str() ==
	      "1/2+3/4*i");

	// canonical emission re-parses to the same value
	Rng rng(13);
	for (int n = 0; n < 100; ++n)
	{
		GaussianRational a = testsupport::rand_gaussian(rng);
		CHECK(GaussianRational::parse(a.str()) == a);
	}

	// tolerant forms
	CHECK(GaussianRational::parse("i") == GaussianRational(0, 1));
	CHECK(GaussianRational::parse("-i") == GaussianRational(0, -1));
	CHECK(GaussianRational::parse("2i") == GaussianRational(0, 2));
	CHECK(GaussianRational::parse("3/4*i + 1/2") ==
	      GaussianRational(Rational(1, 2), Rational(3, 4)));
	CHECK_THROWS_AS(GaussianRational::parse("1+2"), ParseError);
	CHECK_THROWS_AS(GaussianRational::parse("i+i"), ParseError);
}

TEST_CASE("binomial")
{
	CHECK(binomial(4, 2) == 6);
	CHECK(binomial(7, 0) == 1);
	CHECK(binomial(0, 0) == 1);
	CHECK(binomial(5, 7) == 0);
	CHECK(binomial(40, 20) == Integer("137846528820"));
}

TEST_CASE("euler numbers")
{
	CHECK(euler_number(0) == Rational(1));
	CHECK(euler_number(2) == Rational(-1));
	// frozen from the recurrence sum_k C(2n,2k) E_2k = [n=0]
	CHECK(euler_number(4) == Rational(5));
	CHECK(euler_number(6) == Rational(-61));
	CHECK(euler_number(8) == Rational(1385));
	for (unsigned k = 0; k <= 12; ++k)
		CHECK(euler_number(2 * k + 1).is_zero());
	for (unsigned k = 0; k <= 12; ++k)
		CHECK(euler_number(2 * k).is_integer());
}

TEST_CASE("bernoulli numbers")
{
	CHECK(bernoulli_number(0) == Rational(1));
	CHECK(bernoulli_number(1) == Rational(-1, 2));
	CHECK(bernoulli_number(2) == Rational(1, 6));
	CHECK(bernoulli_number(3) == Rational(0));
	CHECK(bernoulli_number(4) == Rational(-1, 30));
	for (unsigned k = 1; 2 * k + 1 <= 25; ++k)
		CHECK(bernoulli_number(2 * k + 1).is_zero());
}

TEST_CASE("euler and bernoulli polynomials")
{
	CHECK(euler_polynomial(0) == Poly::one());
	CHECK(euler_polynomial(2) ==
	      Poly::monomial(2) - Poly::monomial(1)); // x^2 - x
	CHECK(euler_polynomial(3).str() == "x^3 - 3/2*x^2 + 1/4");
	CHECK(bernoulli_polynomial(1).str() == "x - 1/2");
	CHECK(bernoulli_polynomial(2).str() == "x^2 - x + 1/6");
	CHECK(bernoulli_polynomial(3).str() == "x^3 - 3/2*x^2 + 1/2*x");

	// number/polynomial links: E_k = 2^k E_k(1/2), B_k = B_k(0)
	for (unsigned k = 0; k <= 12; ++k)
	{
		GaussianRational at_half =
		    euler_polynomial(k).eval(GaussianRational(Rational(1, 2)));
		CHECK(GaussianRational(Rational(pow(Integer(2), k))) * at_half ==
		      GaussianRational(euler_number(k)));
		CHECK(bernoulli_polynomial(k).eval(GaussianRational(0)) ==
		      GaussianRational(bernoulli_number(k)));
	}
}

TEST_CASE("euler number cosh identity")
{
	// sum_k C(2n,2k) E_2k = 1 at n = 0 and 0 for n >= 1
	for (unsigned n = 0; n <= 20; ++n)
	{
		Rational s = 0;
		for (unsigned k = 0; k <= n; ++k)
			s += Rational(binomial(2 * n, 2 * k)) * euler_number(2 * k);
		CHECK(s == (n == 0 ? Rational(1) : Rational(0)));
	}
}

TEST_CASE("stirling numbers")
{
	CHECK(stirling2(0, 0) == 1);
	CHECK(stirling2(0, 3) == 0);
	CHECK(stirling2(3, 2) == 3); // frozen from the explicit alternating sum
	CHECK(stirling2(2, 5) == 0);
	CHECK(stirling2(4, 2) == 7);
	CHECK(stirling2(5, 0) == 0);

	// the explicit-formula route and the triangle recurrence must agree
	for (unsigned m = 0; m <= 12; ++m)
		for (unsigned k = 0; k <= 14; ++k)
			CHECK(stirling2(m, k) == stirling2_triangle(m, k));
}

TEST_CASE("stirling transform parity")
{
	// with f_k = (-1)^k k! / 2^k: sum_k S(nu,k) f_k vanishes for even
	// nu >= 2; the raw nu = 0 sum is 1, while the f_0 = 0 convention
	// zeroes it
	auto weighted_sum = [](unsigned nu, bool zero_f0) {
		Rational s = 0;
		for (unsigned k = zero_f0 ? 1 : 0; k <= nu; ++k)
		{
			Rational f(factorial(k), pow(Integer(2), k));
			if (k % 2 == 1)
				f = -f;
			s += Rational(stirling2(nu, k)) * f;
		}
		return s;
	};
	for (unsigned nu = 2; nu <= 20; nu += 2)
		CHECK(weighted_sum(nu, false) == Rational(0));
	CHECK(weighted_sum(0, false) == Rational(1));
	CHECK(weighted_sum(0, true) == Rational(0));
}

