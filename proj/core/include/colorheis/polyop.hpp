#pragma once

#include <utility>

#include "colorheis/normal_series.hpp"
#include "colorheis/poly.hpp"
#include "colorheis/realization.hpp"

namespace colorheis {

Poly diff(const Poly &p);
Poly mulx(const Poly &p);
/// p(x + h), exact Taylor shift
Poly shift(const Poly &p, const GaussianRational &h);
/// p(-x)
Poly parity(const Poly &p);
/// (even part, odd part); p = first + second
std::pair<Poly, Poly> even_odd_split(const Poly &p);

/// Locally finite action sum a_{jk} x^j d^k p / dx^k. Exact; requires
/// s.window() >= deg p (WindowUnderflow), since only terms with k <= deg p
/// contribute.
Poly apply_series(const NormalSeries &s, const Poly &p);

/// (s1 s2 + s2 s1) p computed through the representation (double
/// application), not through series multiplication.
Poly anticommutator_action(const NormalSeries &s1, const NormalSeries &s2,
                           const Poly &p);

/// True iff all three color relations hold on every monomial x^n,
/// n <= maxdeg, under apply_series. An independent check of
/// verify_relations through the representation.
bool realization_action_check(const Realization &r, int maxdeg);

/// p(x) - 1/2 sum_n E_{2n}/(2n)! alpha^{2n} [p^{(2n)}(x-alpha) +
/// p^{(2n)}(x+alpha)], the sum truncated at 2n = deg p + widen (derivatives
/// beyond deg p vanish, so widening must not change the result). Zero for
/// every polynomial.
Poly euler_interp_residual(const Poly &p, const GaussianRational &alpha,
                           int widen = 0);

/// p(x) - sum_{k} (-1)^k/2^{k+1} sum_l (-1)^l C(k,l) [p(x-2(k-l)) +
/// p(x+2(k-l))], the outer sum truncated at k = deg p + widen (the k-th
/// finite difference of a degree-n polynomial vanishes for k > n). Zero for
/// every polynomial.
Poly stirling_interp_residual(const Poly &p, int widen = 0);

struct ActionTriple
{
	Poly a1, a2, a3;
};

/// The closed functional form of the reflection-and-shift realization:
///   A1 f = f',  A2 f = x f(1-x) - 1/2 sum_n E_{2n}/(2n)! f^{(2n)}(-x),
///   A3 f = f(1-x).
/// Agrees with apply_series on the series built from c=1, phi=A, psi=0.
ActionTriple shifted_parity_action(const Poly &f);

/// The same A2 written through the geometric expansion of the Euler
/// generating function, as nested finite differences of shifts:
///   A2 f = x f(1-x) - sum_k (-1)^k/2^{k+1} sum_l (-1)^l C(k,l)
///          f(2(k-l)+1-x),
/// truncated at k = deg f. Must agree with shifted_parity_action.
ActionTriple shifted_parity_action_differences(const Poly &f);

} // namespace colorheis
