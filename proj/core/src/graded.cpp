#include "colorheis/graded.hpp"

namespace colorheis {

std::string GradeVector::str() const
{
	return "(" + std::to_string(bits_[0]) + "," + std::to_string(bits_[1]) +
	       "," + std::to_string(bits_[2]) + ")";
}

int commutation_factor(const GradeVector &g1, const GradeVector &g2)
{
	return dot(g1, g2) % 2 == 0 ? 1 : -1;
}

NormalSeries graded_bracket(const NormalSeries &x, const NormalSeries &y,
                            const GradeVector &gx, const GradeVector &gy)
{
	return commutation_factor(gx, gy) == 1 ? commutator(x, y)
	                                       : anticommutator(x, y);
}

} // namespace colorheis
