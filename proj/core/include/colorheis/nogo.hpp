#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "colorheis/rational.hpp"

namespace colorheis {

/// One equation per normal-form monomial B^r A^s of the expanded quadratic
/// Q(A,B) = A2 A^2 + 2 A A2 A + A^2 A2: a sparse row over the unknowns
/// a_{jk}, indexed u = j*(N+1) + k.
using NoGoSystem =
    std::map<std::pair<int, int>, std::map<std::size_t, Rational>>;

/// Expands Q(A,B) symbolically for a general A2 = sum_{j<=M,k<=N} a_{jk}
/// B^j A^k and collects the coefficient equations.
NoGoSystem build_nogo_system(int M, int N);

struct NoGoReport
{
	int M = 0, N = 0;
	std::size_t system_rows = 0, system_cols = 0;
	std::size_t nullity = 0;
	/// nullspace basis, one flattened (M+1) x (N+1) coefficient matrix per
	/// element (row-major in j); expected empty
	std::vector<std::vector<Rational>> basis;
};

/// Solves the system exactly over the rationals. Throws BoundExceeded when
/// M or N exceeds `bound`.
NoGoReport polynomial_nogo(int M, int N, int bound = 8);

/// Checks the closed form a_{j+1,j+l} = (-2)^j/j! (d_l + 2j/(j+1) c_l)
/// against direct iteration of the recurrence
///   4 a_{jk} + 4(j+1) a_{j+1,k+1} + (j+1)(j+2) a_{j+2,k+2} = 0
/// from the boundary data a_{0,l-1} = c_l (c_0 = 0), a_{1l} = d_l,
/// for all j <= J and l <= L.
bool recurrence_closed_form_check(const std::vector<Rational> &c,
                                  const std::vector<Rational> &d, int J,
                                  int L);

} // namespace colorheis
