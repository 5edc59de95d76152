#pragma once

#include <array>
#include <string>

#include "colorheis/normal_series.hpp"

namespace colorheis {

/// Element of (Z_2)^3; the grading group of the three generators.
class GradeVector
{
public:
	GradeVector() = default;
	GradeVector(int b0, int b1, int b2)
	    : bits_{b0 & 1, b1 & 1, b2 & 1}
	{}

	int bit(int i) const { return bits_[i]; }

	friend GradeVector operator+(const GradeVector &a, const GradeVector &b)
	{
		return {a.bits_[0] ^ b.bits_[0], a.bits_[1] ^ b.bits_[1],
		        a.bits_[2] ^ b.bits_[2]};
	}

	friend bool operator==(const GradeVector &a,
	                       const GradeVector &b) = default;

	/// dot product over Z (before mod 2), e.g. (1,1,0).(1,1,0) = 2
	friend int dot(const GradeVector &a, const GradeVector &b)
	{
		return a.bits_[0] * b.bits_[0] + a.bits_[1] * b.bits_[1] +
		       a.bits_[2] * b.bits_[2];
	}

	std::string str() const;

private:
	std::array<int, 3> bits_{0, 0, 0};
};

/// (-1)^{g1.g2}
int commutation_factor(const GradeVector &g1, const GradeVector &g2);

/// Bracket of homogeneous elements in the enveloping algebra: a commutator
/// when the commutation factor is +1, an anticommutator when it is -1.
NormalSeries graded_bracket(const NormalSeries &x, const NormalSeries &y,
                            const GradeVector &gx, const GradeVector &gy);

} // namespace colorheis
