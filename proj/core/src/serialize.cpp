#include "colorheis/serialize.hpp"

#include <stdexcept>

#include "colorheis/errors.hpp"

namespace colorheis {

using nlohmann::json;

json series_to_json(const NormalSeries &s)
{
	json entries = json::array();
	for (const auto &[key, c] : s.entries())
		entries.push_back(json::array({key.first, key.second, c.str()}));
	return json{{"dbound", s.dbound()},
	            {"window", s.window()},
	            {"entries", std::move(entries)}};
}

NormalSeries series_from_json(const json &j)
{
	NormalSeries::EntryMap m;
	for (const auto &e : j.at("entries"))
	{
		if (!e.is_array() || e.size() != 3)
			throw std::invalid_argument("series entry must be [j,k,\"coeff\"]");
		m[{e[0].get<int>(), e[1].get<int>()}] +=
		    GaussianRational::parse(e[2].get<std::string>());
	}
	return NormalSeries(std::move(m), j.at("dbound").get<int>(),
	                    j.at("window").get<int>());
}

json aseries_to_json(const ASeries &f)
{
	json coeffs = json::object();
	for (const auto &[deg, c] : f.coeffs())
		coeffs[std::to_string(deg)] = c.str();
	json out{{"window", f.window()}, {"coeffs", std::move(coeffs)}};
	if (f.is_odd() && !f.is_zero())
		out["odd"] = true;
	return out;
}

ASeries aseries_from_json(const json &j)
{
	std::map<int, GaussianRational> m;
	for (const auto &[key, val] : j.at("coeffs").items())
	{
		int deg = std::stoi(key);
		if (m.count(deg))
			throw std::invalid_argument("duplicate degree in series");
		m.emplace(deg, GaussianRational::parse(val.get<std::string>()));
	}
	ASeries f(std::move(m), j.at("window").get<int>());
	if (j.value("odd", false) && !f.is_odd())
		throw NotOddSeries("series marked odd has an even coefficient");
	return f;
}

json realization_to_json(const Realization &r)
{
	json out;
	if (const auto *p3 = std::get_if<ThreeRelParams>(&r.params))
	{
		out["c"] = p3->c.str();
		out["phi"] = aseries_to_json(p3->phi);
		out["psi"] = aseries_to_json(p3->psi);
	}
	else
	{
		const auto &p2 = std::get<TwoRelParams>(r.params);
		out["V"] = aseries_to_json(p2.V);
		out["W"] = aseries_to_json(p2.W);
	}
	out["window"] = r.window;
	return out;
}

Realization realization_from_json(const json &j)
{
	int window = j.at("window").get<int>();
	if (j.contains("c"))
	{
		GaussianRational c =
		    GaussianRational::parse(j.at("c").get<std::string>());
		return build_three_rel(c, aseries_from_json(j.at("phi")),
		                       aseries_from_json(j.at("psi")), window);
	}
	if (j.contains("V") || j.contains("W"))
		return build_two_rel(aseries_from_json(j.at("V")),
		                     aseries_from_json(j.at("W")), window);
	throw std::invalid_argument("realization JSON needs either c/phi/psi or "
	                            "V/W");
}

json nogo_report_to_json(const NoGoReport &r)
{
	json basis = json::array();
	for (const auto &vec : r.basis)
	{
		json v = json::array();
		for (const Rational &x : vec)
			v.push_back(x.str());
		basis.push_back(std::move(v));
	}
	return json{{"m", r.M},
	            {"n", r.N},
	            {"rows", r.system_rows},
	            {"cols", r.system_cols},
	            {"nullity", r.nullity},
	            {"basis", std::move(basis)}};
}

} // namespace colorheis
