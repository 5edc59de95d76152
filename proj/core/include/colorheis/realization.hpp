#pragma once

#include <utility>
#include <variant>

#include "colorheis/aseries.hpp"
#include "colorheis/normal_series.hpp"

namespace colorheis {

/// Parameters of the two-relation family A2 = T V(A) + B T W(A),
/// A3 = T W(A); satisfies the first two color relations for any V, W.
struct TwoRelParams
{
	ASeries V, W;
};

/// Parameters of the full three-relation family
///   A2 = c T E(phi)[e^phi psi - phi'/2] + c B T e^phi,  A3 = c T e^phi,
/// with c != 0 and phi, psi odd.
struct ThreeRelParams
{
	GaussianRational c;
	ASeries phi, psi;
};

struct Realization
{
	NormalSeries a1, a2, a3;
	std::variant<TwoRelParams, ThreeRelParams> params;
	int window = 0;

	bool is_three_rel() const
	{
		return std::holds_alternative<ThreeRelParams>(params);
	}
};

enum class OddnessCheck
{
	enforced,
	skip // negative tests only
};

/// Both A2 and A3 exact to `window`; V and W must be exact at least that far.
Realization build_two_rel(const ASeries &V, const ASeries &W, int window);

/// Full three-relation family. Requires c != 0 (ZeroConstant; the A3 = 0
/// family is reached through build_two_rel with W = 0), phi and psi odd
/// (NotOddSeries unless the check is skipped), phi exact to window + 1 and
/// psi to window (WindowUnderflow).
Realization build_three_rel(const GaussianRational &c, const ASeries &phi,
                            const ASeries &psi, int window,
                            OddnessCheck check = OddnessCheck::enforced);

/// (A2, A3) of the three-relation family assembled by normal-series products
/// T * lift(E(phi)) * lift(...) rather than through the V/W route; the two
/// constructions must agree coefficient-wise.
std::pair<NormalSeries, NormalSeries>
three_rel_components_direct(const GaussianRational &c, const ASeries &phi,
                            const ASeries &psi, int window);

/// Defect series of the three color relations:
///   r1 = {A1,A2} - A3,  r2 = {A1,A3},  r3 = {A2,A3}.
struct ResidualReport
{
	NormalSeries r1, r2, r3;

	bool all_zero() const
	{
		return r1.is_zero() && r2.is_zero() && r3.is_zero();
	}
};

/// Computes the residuals; throws WindowUnderflow if any residual's exact
/// window would fall below min_window.
ResidualReport verify_relations(const Realization &r, int min_window);

/// Closed forms of the products in the three-relation family, in the
/// parametrization above:
///   A2 A3 = c^2 B - c^2 E(phi)[psi + e^phi phi'/2],   A3^2 = c^2 I.
/// Requires three-relation parameters.
struct ClosedForms
{
	NormalSeries a2a3, a3sq;
};
ClosedForms closed_form_products(const Realization &r);

/// Closed forms for the two-relation family:
///   A2 A3 = V(-A)W(A) + B W(-A)W(A),   A3^2 = W(-A)W(A).
ClosedForms two_rel_product_forms(const ASeries &V, const ASeries &W,
                                  int window);

} // namespace colorheis
