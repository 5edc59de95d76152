#include "colorheis/realization.hpp"

#include <string>

#include "colorheis/errors.hpp"

namespace colorheis {

namespace {

void require_window(const ASeries &f, int needed, const char *name)
{
	if (f.window() < needed)
		throw WindowUnderflow(std::string(name) + " exact only to " +
		                      std::to_string(f.window()) + ", need " +
		                      std::to_string(needed));
}

// V = c E(phi)[e^phi psi - phi'/2], W = c e^phi, both exact to `window`
std::pair<ASeries, ASeries> vw_from_three_rel(const GaussianRational &c,
                                              const ASeries &phi,
                                              const ASeries &psi, int window)
{
	require_window(phi, window + 1, "phi");
	require_window(psi, window, "psi");
	ASeries phi_w = phi.truncated(window);
	ASeries ephi = a_exp(phi_w);
	ASeries eser = a_compose(ASeries::euler_gf(window), phi_w);
	ASeries dphi = a_derivative(phi.truncated(window + 1));
	ASeries bracket = sub(mul(ephi, psi.truncated(window)),
	                      scale(GaussianRational(Rational(1, 2)), dphi));
	ASeries v = scale(c, mul(eser, bracket));
	ASeries w = scale(c, ephi);
	return {std::move(v), std::move(w)};
}

} // namespace

Realization build_two_rel(const ASeries &V, const ASeries &W, int window)
{
	require_window(V, window, "V");
	require_window(W, window, "W");
	NormalSeries t = t_series(window);
	NormalSeries tv = mul(t, lift_a_series(V.truncated(window)));
	NormalSeries tw = mul(t, lift_a_series(W.truncated(window)));
	Realization r;
	r.a1 = NormalSeries::gen_a();
	r.a2 = add(tv, b_mul(tw));
	r.a3 = tw;
	r.params = TwoRelParams{V.truncated(window), W.truncated(window)};
	r.window = window;
	return r;
}

Realization build_three_rel(const GaussianRational &c, const ASeries &phi,
                            const ASeries &psi, int window, OddnessCheck check)
{
	if (c.is_zero())
		throw ZeroConstant("c = 0; the A3 = 0 family is built with "
		                   "build_two_rel(V, 0)");
	if (check == OddnessCheck::enforced)
	{
		if (!phi.is_odd())
			throw NotOddSeries("phi has a non-zero even coefficient");
		if (!psi.is_odd())
			throw NotOddSeries("psi has a non-zero even coefficient");
	}
	auto [v, w] = vw_from_three_rel(c, phi, psi, window);
	Realization r = build_two_rel(v, w, window);
	r.params = ThreeRelParams{c, phi.truncated(window + 1),
	                          psi.truncated(window)};
	return r;
}

std::pair<NormalSeries, NormalSeries>
three_rel_components_direct(const GaussianRational &c, const ASeries &phi,
                            const ASeries &psi, int window)
{
	require_window(phi, window + 1, "phi");
	require_window(psi, window, "psi");
	ASeries phi_w = phi.truncated(window);
	ASeries ephi = a_exp(phi_w);
	ASeries eser = a_compose(ASeries::euler_gf(window), phi_w);
	ASeries dphi = a_derivative(phi.truncated(window + 1));
	ASeries bracket = sub(mul(ephi, psi.truncated(window)),
	                      scale(GaussianRational(Rational(1, 2)), dphi));

	NormalSeries t = t_series(window);
	NormalSeries te = mul(t, lift_a_series(eser));
	NormalSeries a2 = add(scale(c, mul(te, lift_a_series(bracket))),
	                      scale(c, b_mul(mul(t, lift_a_series(ephi)))));
	NormalSeries a3 = scale(c, mul(t, lift_a_series(ephi)));
	return {std::move(a2), std::move(a3)};
}

ResidualReport verify_relations(const Realization &r, int min_window)
{
	ResidualReport rep{
	    sub(anticommutator(r.a1, r.a2), r.a3),
	    anticommutator(r.a1, r.a3),
	    anticommutator(r.a2, r.a3),
	};
	for (const NormalSeries *res : {&rep.r1, &rep.r2, &rep.r3})
		if (res->window() < min_window)
			throw WindowUnderflow("residual exact only to " +
			                      std::to_string(res->window()) +
			                      ", requested " + std::to_string(min_window));
	return rep;
}

ClosedForms closed_form_products(const Realization &r)
{
	const auto *p = std::get_if<ThreeRelParams>(&r.params);
	if (p == nullptr)
		throw std::invalid_argument("closed_form_products needs a "
		                            "three-relation realization");
	int window = r.window;
	GaussianRational c2 = p->c * p->c;

	ASeries phi_w = p->phi.truncated(window);
	ASeries ephi = a_exp(phi_w);
	ASeries eser = a_compose(ASeries::euler_gf(window), phi_w);
	ASeries dphi = a_derivative(p->phi.truncated(window + 1));
	ASeries inner = add(p->psi.truncated(window),
	                    scale(GaussianRational(Rational(1, 2)),
	                          mul(ephi, dphi)));

	ClosedForms cf;
	cf.a2a3 = sub(NormalSeries::monomial(1, 0, c2),
	              scale(c2, lift_a_series(mul(eser, inner))));
	cf.a3sq = scale(c2, NormalSeries::identity()).truncated(window);
	return cf;
}

ClosedForms two_rel_product_forms(const ASeries &V, const ASeries &W,
                                  int window)
{
	require_window(V, window, "V");
	require_window(W, window, "W");
	ASeries v = V.truncated(window);
	ASeries w = W.truncated(window);
	ASeries ww = mul(negate_argument(w), w);
	ClosedForms cf;
	cf.a2a3 = add(lift_a_series(mul(negate_argument(v), w)),
	              b_mul(lift_a_series(ww)));
	cf.a3sq = lift_a_series(ww);
	return cf;
}

} // namespace colorheis
