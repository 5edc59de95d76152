#pragma once

#include "colorheis/poly.hpp"
#include "colorheis/rational.hpp"

namespace colorheis {

Integer factorial(unsigned n);

/// C(n,k); 0 when k > n.
Integer binomial(unsigned n, unsigned k);

/// Euler number E_n (integer-valued); 0 at odd n. Even values from the
/// triangular recurrence sum_k C(2m,2k) E_2k = [m=0], i.e. E(t)cosh(t) = 1.
Rational euler_number(unsigned n);

/// Bernoulli number B_n; B_1 = -1/2, zero at odd n >= 3. From the
/// triangular recurrence sum_{j<=n} C(n+1,j) B_j = [n=0].
Rational bernoulli_number(unsigned n);

/// Euler polynomial E_k(x): E_n(x) = x^n - (1/2) sum_{k<n} C(n,k) E_k(x).
Poly euler_polynomial(unsigned k);

/// Bernoulli polynomial B_k(x) = sum_j C(k,j) B_j x^{k-j}.
Poly bernoulli_polynomial(unsigned k);

/// Stirling number of the second kind by the explicit alternating sum
/// (1/k!) sum_j (-1)^{k-j} C(k,j) j^m, with S(0,0) = 1 and S(0,k) = 0 for
/// k >= 1. Vanishes for k > m.
Integer stirling2(unsigned m, unsigned k);

/// Same numbers by the triangle recurrence S(m,k) = k S(m-1,k) + S(m-1,k-1);
/// kept as an independent route so the two can be checked against each other.
Integer stirling2_triangle(unsigned m, unsigned k);

} // namespace colorheis
