// Command-line front end: every public operation of the library behind a
// small set of verbs, with machine-readable JSON emission for harnesses.
//
// Exit codes: 0 success / check verified, 1 verification failure,
// 2 usage or parse errors (including window underflow on a requested check).

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "colorheis/blockop.hpp"
#include "colorheis/errors.hpp"
#include "colorheis/expr.hpp"
#include "colorheis/graded.hpp"
#include "colorheis/nogo.hpp"
#include "colorheis/numbers.hpp"
#include "colorheis/polyop.hpp"
#include "colorheis/serialize.hpp"

using namespace colorheis;
using nlohmann::json;

namespace {

enum ExitCode
{
	exit_ok = 0,
	exit_failed_check = 1,
	exit_usage = 2
};

std::string read_payload(const std::string &path)
{
	if (path == "-")
	{
		std::ostringstream ss;
		ss << std::cin.rdbuf();
		return ss.str();
	}
	std::ifstream in(path);
	if (!in)
		throw std::invalid_argument("cannot open " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

// build/verify share the parameter surface of a realization
struct RealizationArgs
{
	std::string c = "1";
	std::optional<std::string> phi, psi, v, w;
	std::string file;
	int window = 12;

	bool has_params() const { return phi || psi || v || w; }

	Realization build() const
	{
		if (!file.empty())
		{
			json j = json::parse(read_payload(file));
			if (j.contains("result")) // tolerate the build wrapper
				j = j["result"];
			return realization_from_json(j);
		}
		if (v || w)
		{
			if (phi || psi)
				throw std::invalid_argument("give either phi/psi or V/W, "
				                            "not both");
			return build_two_rel(parse_aseries_literal(v.value_or("")),
			                     parse_aseries_literal(w.value_or("")),
			                     window);
		}
		return build_three_rel(GaussianRational::parse(c),
		                       parse_aseries_literal(phi.value_or("")),
		                       parse_aseries_literal(psi.value_or("")),
		                       window);
	}
};

void add_realization_options(CLI::App *cmd, RealizationArgs &args)
{
	cmd->add_option("--c", args.c, "scalar c of the three-relation family");
	cmd->add_option("--phi", args.phi,
	                "odd series literal deg:coeff[,deg:coeff...]");
	cmd->add_option("--psi", args.psi, "odd series literal");
	cmd->add_option("--V", args.v, "series literal of the two-relation V");
	cmd->add_option("--W", args.w, "series literal of the two-relation W");
	cmd->add_option("--file", args.file,
	                "realization JSON file ('-' for stdin)");
	cmd->add_option("--window", args.window, "exactness window")
	    ->check(CLI::Range(0, 64));
}

struct Emitter
{
	std::string mode = "text";

	bool is_json() const { return mode == "json"; }
	void attach(CLI::App *cmd)
	{
		cmd->add_option("--emit", mode, "output mode")
		    ->check(CLI::IsMember({"json", "text"}));
	}
};

json residuals_json(const ResidualReport &rep)
{
	return json{{"r1", series_to_json(rep.r1)},
	            {"r2", series_to_json(rep.r2)},
	            {"r3", series_to_json(rep.r3)}};
}

// deterministic generators matching the randomized verification recipe:
// odd support {1,3,5}, numerators/denominators bounded by 9
int draw(std::mt19937_64 &rng, int lo, int hi)
{
	return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational rand_rational(std::mt19937_64 &rng)
{
	return Rational(draw(rng, -9, 9), draw(rng, 1, 9));
}

Rational rand_nonzero_rational(std::mt19937_64 &rng)
{
	for (;;)
	{
		Rational r = rand_rational(rng);
		if (!r.is_zero())
			return r;
	}
}

ASeries rand_odd_series(std::mt19937_64 &rng)
{
	std::vector<std::pair<int, GaussianRational>> pairs;
	for (int deg : {1, 3, 5})
		pairs.emplace_back(deg, GaussianRational(rand_rational(rng)));
	return ASeries::from_pairs(pairs);
}

Poly rand_poly(std::mt19937_64 &rng, int maxdeg)
{
	std::vector<GaussianRational> c(draw(rng, 0, maxdeg) + 1);
	for (auto &x : c)
		x = GaussianRational(rand_rational(rng));
	return Poly(std::move(c));
}

int cmd_numbers(const std::vector<int> &euler, const std::vector<int> &bern,
                const std::vector<int> &stirling,
                const std::vector<int> &binom, const std::vector<int> &epoly,
                const std::vector<int> &bpoly, const Emitter &em)
{
	if (euler.empty() && bern.empty() && stirling.empty() && binom.empty() &&
	    epoly.empty() && bpoly.empty())
		throw std::invalid_argument("numbers: nothing requested");
	if (stirling.size() % 2 != 0 || binom.size() % 2 != 0)
		throw std::invalid_argument("--stirling/--binomial take pairs of "
		                            "arguments");

	json result = json::object();
	std::ostringstream text;
	auto put = [&](const std::string &head, const json &key,
	               const std::string &value) {
		result[head].push_back(json::array({key, value}));
		text << head << "(" << (key.is_array()
		                            ? std::to_string(key[0].get<int>()) +
		                                  "," +
		                                  std::to_string(key[1].get<int>())
		                            : std::to_string(key.get<int>()))
		     << ") = " << value << "\n";
	};

	for (int n : euler)
		put("euler", n, euler_number(n).str());
	for (int n : bern)
		put("bernoulli", n, bernoulli_number(n).str());
	for (std::size_t i = 0; i < stirling.size(); i += 2)
		put("stirling2", json::array({stirling[i], stirling[i + 1]}),
		    stirling2(stirling[i], stirling[i + 1]).str());
	for (std::size_t i = 0; i < binom.size(); i += 2)
		put("binomial", json::array({binom[i], binom[i + 1]}),
		    binomial(binom[i], binom[i + 1]).str());
	for (int n : epoly)
		put("euler_polynomial", n, euler_polynomial(n).str());
	for (int n : bpoly)
		put("bernoulli_polynomial", n, bernoulli_polynomial(n).str());

	if (em.is_json())
		std::cout << json{{"ok", true}, {"result", result}}.dump() << "\n";
	else
		std::cout << text.str();
	return exit_ok;
}

int cmd_normal_order(const std::string &expr, const Emitter &em)
{
	NormalSeries s = normal_order(parse_words(expr));
	if (em.is_json())
		std::cout << json{{"ok", true},
		                  {"input", expr},
		                  {"result", series_to_json(s)}}
		                 .dump()
		          << "\n";
	else
		std::cout << s.str() << "\n";
	return exit_ok;
}

int cmd_build(const RealizationArgs &args, const Emitter &em)
{
	Realization r = args.build();
	if (em.is_json())
		std::cout << json{{"ok", true}, {"result", realization_to_json(r)}}
		                 .dump()
		          << "\n";
	else
	{
		std::cout << "a1 = " << r.a1.str() << "\n";
		std::cout << "a2 = " << r.a2.str() << "\n";
		std::cout << "a3 = " << r.a3.str() << "\n";
		std::cout << "window = " << r.window << "\n";
	}
	return exit_ok;
}

int cmd_verify(const RealizationArgs &args, int random_cases,
               unsigned long seed, bool closed_forms, const Emitter &em)
{
	if (random_cases > 0)
	{
		std::mt19937_64 rng(seed);
		int failures = 0;
		for (int i = 0; i < random_cases; ++i)
		{
			GaussianRational c(rand_nonzero_rational(rng));
			Realization r = build_three_rel(c, rand_odd_series(rng),
			                                rand_odd_series(rng),
			                                args.window);
			bool ok = verify_relations(r, args.window - 1).all_zero();
			if (ok && closed_forms)
			{
				ClosedForms cf = closed_form_products(r);
				ok = equal_on_common_window(mul(r.a2, r.a3), cf.a2a3) &&
				     equal_on_common_window(mul(r.a3, r.a3), cf.a3sq);
			}
			if (!ok)
				++failures;
		}
		bool ok = failures == 0;
		if (em.is_json())
			std::cout << json{{"ok", ok},
			                  {"cases", random_cases},
			                  {"seed", seed},
			                  {"failures", failures}}
			                 .dump()
			          << "\n";
		else
			std::cout << (ok ? "ok" : "FAILED") << " (" << random_cases
			          << " random cases)\n";
		return ok ? exit_ok : exit_failed_check;
	}

	Realization r = args.build();
	ResidualReport rep = verify_relations(r, r.window - 1);
	bool ok = rep.all_zero();
	std::string closed_note;
	if (ok && closed_forms && r.is_three_rel())
	{
		ClosedForms cf = closed_form_products(r);
		ok = equal_on_common_window(mul(r.a2, r.a3), cf.a2a3) &&
		     equal_on_common_window(mul(r.a3, r.a3), cf.a3sq);
		closed_note = ok ? "" : " (closed-form product mismatch)";
	}
	if (em.is_json())
		std::cout << json{{"ok", ok},
		                  {"inputs", realization_to_json(r)},
		                  {"residuals", residuals_json(rep)}}
		                 .dump()
		          << "\n";
	else
	{
		std::cout << (ok ? "ok" : "FAILED") << closed_note << "\n";
		if (!rep.r1.is_zero())
			std::cout << "r1 = " << rep.r1.str() << "\n";
		if (!rep.r2.is_zero())
			std::cout << "r2 = " << rep.r2.str() << "\n";
		if (!rep.r3.is_zero())
			std::cout << "r3 = " << rep.r3.str() << "\n";
	}
	return ok ? exit_ok : exit_failed_check;
}

int cmd_nogo(int m, int n, int bound, const Emitter &em)
{
	NoGoReport report = polynomial_nogo(m, n, bound);
	bool ok = report.nullity == 0;
	if (em.is_json())
		std::cout << json{{"ok", ok}, {"result", nogo_report_to_json(report)}}
		                 .dump()
		          << "\n";
	else
		std::cout << "system " << report.system_rows << "x"
		          << report.system_cols << ", nullity " << report.nullity
		          << (ok ? " (only the zero solution)" : "") << "\n";
	return ok ? exit_ok : exit_failed_check;
}

int cmd_apply(const std::string &series_file, bool use_t,
              const std::string &expr, int window, const std::string &poly,
              const std::string &poly_file, const Emitter &em)
{
	int sources = (!series_file.empty()) + use_t + (!expr.empty());
	if (sources != 1)
		throw std::invalid_argument("apply: give exactly one of --series, "
		                            "--t, --expr");
	NormalSeries s = NormalSeries::zero();
	if (!series_file.empty())
		s = series_from_json(json::parse(read_payload(series_file)));
	else if (use_t)
		s = t_series(window);
	else
		s = normal_order(parse_words(expr));

	if (poly.empty() == poly_file.empty())
		throw std::invalid_argument("apply: give exactly one of --poly, "
		                            "--poly-file");
	Poly p = parse_poly(poly.empty() ? read_payload(poly_file) : poly);

	Poly out = apply_series(s, p);
	if (em.is_json())
		std::cout << json{{"ok", true},
		                  {"input", p.str()},
		                  {"result", out.str()}}
		                 .dump()
		          << "\n";
	else
		std::cout << out.str() << "\n";
	return exit_ok;
}

int cmd_interp(const std::string &kind, const std::string &alpha, int maxdeg,
               int widen, const std::string &poly, const Emitter &em)
{
	GaussianRational a = GaussianRational::parse(alpha);
	std::vector<Poly> targets;
	for (int n = 0; n <= maxdeg; ++n)
		targets.push_back(Poly::monomial(n));
	if (!poly.empty())
		targets.push_back(parse_poly(poly));

	int failures = 0;
	std::string first_bad;
	for (const Poly &p : targets)
	{
		Poly res = kind == "euler" ? euler_interp_residual(p, a, widen)
		                           : stirling_interp_residual(p, widen);
		if (!res.is_zero())
		{
			++failures;
			if (first_bad.empty())
				first_bad = p.str();
		}
	}
	bool ok = failures == 0;
	if (em.is_json())
		std::cout << json{{"ok", ok},
		                  {"kind", kind},
		                  {"alpha", a.str()},
		                  {"maxdeg", maxdeg},
		                  {"widen", widen},
		                  {"failures", failures}}
		                 .dump()
		          << "\n";
	else
		std::cout << (ok ? "ok" : "FAILED at " + first_bad) << " (" << kind
		          << ", degree <= " << maxdeg << ")\n";
	return ok ? exit_ok : exit_failed_check;
}

int cmd_blocks(const std::string &kind, int s, int maxdeg, int pairs,
               unsigned long seed, const Emitter &em)
{
	std::array<BlockOp, 3> triple =
	    kind == "direct-sum"
	        ? block_triple(BlockKind::direct_sum)
	        : kind == "pauli" ? block_triple(BlockKind::pauli_tensor)
	                          : block_triple(BlockKind::shifted, s);

	std::mt19937_64 rng(seed);
	int failures = 0;
	for (int i = 0; i < pairs; ++i)
	{
		PolyPair v{rand_poly(rng, maxdeg), rand_poly(rng, maxdeg)};
		PolyPair lhs = anticommutator_apply(triple[0], triple[1], v);
		bool ok = lhs == triple[2].apply(v) &&
		          anticommutator_apply(triple[0], triple[2], v).is_zero() &&
		          anticommutator_apply(triple[1], triple[2], v).is_zero();
		if (!ok)
			++failures;
	}
	bool ok = failures == 0;
	if (em.is_json())
		std::cout << json{{"ok", ok},
		                  {"kind", kind},
		                  {"pairs", pairs},
		                  {"seed", seed},
		                  {"failures", failures}}
		                 .dump()
		          << "\n";
	else
		std::cout << (ok ? "ok" : "FAILED") << " (" << kind << ", " << pairs
		          << " pairs)\n";
	return ok ? exit_ok : exit_failed_check;
}

int cmd_recurrence(int J, int L, unsigned long seed, int trials,
                   const std::string &c_text, const std::string &d_text,
                   const Emitter &em)
{
	auto parse_seq = [](const std::string &text) {
		std::vector<Rational> out;
		std::stringstream ss(text);
		std::string item;
		while (std::getline(ss, item, ','))
			out.push_back(Rational::parse(item));
		return out;
	};

	bool ok = true;
	if (!c_text.empty() || !d_text.empty())
	{
		ok = recurrence_closed_form_check(parse_seq(c_text),
		                                  parse_seq(d_text), J, L);
	}
	else
	{
		std::mt19937_64 rng(seed);
		for (int t = 0; t < trials && ok; ++t)
		{
			std::vector<Rational> c(L + 1), d(L + 1);
			for (int l = 1; l <= L; ++l)
				c[l] = rand_rational(rng);
			for (int l = 0; l <= L; ++l)
				d[l] = rand_rational(rng);
			ok = recurrence_closed_form_check(c, d, J, L);
		}
	}
	if (em.is_json())
		std::cout << json{{"ok", ok}, {"J", J}, {"L", L}}.dump() << "\n";
	else
		std::cout << (ok ? "ok" : "FAILED") << "\n";
	return ok ? exit_ok : exit_failed_check;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact realizations of the color Heisenberg relations in "
	             "normal-ordered series over the Heisenberg generators"};
	app.require_subcommand(1);

	// numbers
	std::vector<int> euler, bern, stirling, binom, epoly, bpoly;
	Emitter em_numbers;
	auto *numbers = app.add_subcommand("numbers",
	                                   "special-number kernels (Euler, "
	                                   "Bernoulli, Stirling, binomial)");
	numbers->add_option("--euler", euler, "Euler number E_n")
	    ->check(CLI::NonNegativeNumber);
	numbers->add_option("--bernoulli", bern, "Bernoulli number B_n")
	    ->check(CLI::NonNegativeNumber);
	numbers->add_option("--stirling", stirling,
	                    "Stirling number S(m,k); takes m k")
	    ->check(CLI::NonNegativeNumber);
	numbers->add_option("--binomial", binom, "binomial C(n,k); takes n k")
	    ->check(CLI::NonNegativeNumber);
	numbers->add_option("--euler-poly", epoly, "Euler polynomial E_k(x)")
	    ->check(CLI::NonNegativeNumber);
	numbers->add_option("--bernoulli-poly", bpoly,
	                    "Bernoulli polynomial B_k(x)")
	    ->check(CLI::NonNegativeNumber);
	em_numbers.attach(numbers);

	// normal-order
	std::string no_expr;
	Emitter em_no;
	auto *norder = app.add_subcommand("normal-order",
	                                  "rewrite an expression in A, B into "
	                                  "(B,A)-normal form");
	norder->add_option("expr", no_expr, "expression, e.g. \"A*B - B*A\"")
	    ->required();
	em_no.attach(norder);

	// build
	RealizationArgs build_args;
	Emitter em_build;
	auto *build = app.add_subcommand("build",
	                                 "construct a realization from "
	                                 "parameters");
	add_realization_options(build, build_args);
	em_build.attach(build);

	// verify
	RealizationArgs verify_args;
	int random_cases = 0;
	unsigned long verify_seed = 1;
	bool closed_forms = false;
	Emitter em_verify;
	auto *verify = app.add_subcommand("verify",
	                                  "check the three color relations for "
	                                  "a realization");
	add_realization_options(verify, verify_args);
	verify->add_option("--random", random_cases,
	                   "verify this many random (c, phi, psi) cases");
	verify->add_option("--seed", verify_seed, "random seed");
	verify->add_flag("--closed-forms", closed_forms,
	                 "also cross-check the closed product forms");
	em_verify.attach(verify);

	// nogo
	int nogo_m = 4, nogo_n = 4, nogo_bound = 8;
	Emitter em_nogo;
	auto *nogo = app.add_subcommand("nogo",
	                                "polynomial no-go: nullity of the exact "
	                                "coefficient system");
	nogo->add_option("--M", nogo_m, "B-degree bound")->required();
	nogo->add_option("--N", nogo_n, "A-degree bound")->required();
	nogo->add_option("--bound", nogo_bound, "largest allowed bidegree");
	em_nogo.attach(nogo);

	// apply
	std::string apply_series_file, apply_expr, apply_poly, apply_poly_file;
	bool apply_t = false;
	int apply_window = 12;
	Emitter em_apply;
	auto *apply = app.add_subcommand("apply",
	                                 "apply a normal-ordered series to a "
	                                 "polynomial");
	apply->add_option("--series", apply_series_file,
	                  "series JSON file ('-' for stdin)");
	apply->add_flag("--t", apply_t, "use the parity series T");
	apply->add_option("--expr", apply_expr, "expression in A, B");
	apply->add_option("--window", apply_window, "window for --t")
	    ->check(CLI::Range(0, 64));
	apply->add_option("--poly", apply_poly, "polynomial in x");
	apply->add_option("--poly-file", apply_poly_file,
	                  "polynomial file ('-' for stdin)");
	em_apply.attach(apply);

	// interp
	std::string interp_kind, interp_alpha = "1", interp_poly;
	int interp_maxdeg = 12, interp_widen = 0;
	Emitter em_interp;
	auto *interp = app.add_subcommand("interp",
	                                  "interpolation-identity residual "
	                                  "checks on polynomials");
	interp->add_option("--kind", interp_kind, "euler or stirling")
	    ->required()
	    ->check(CLI::IsMember({"euler", "stirling"}));
	interp->add_option("--alpha", interp_alpha,
	                   "step of the euler identity (rational)");
	interp->add_option("--maxdeg", interp_maxdeg, "check monomials up to "
	                                              "this degree");
	interp->add_option("--widen", interp_widen,
	                   "extend the truncation, result must not change");
	interp->add_option("--poly", interp_poly, "also check this polynomial");
	em_interp.attach(interp);

	// blocks
	std::string blocks_kind = "direct-sum";
	int blocks_s = 3, blocks_maxdeg = 8, blocks_pairs = 50;
	unsigned long blocks_seed = 1;
	Emitter em_blocks;
	auto *blocks = app.add_subcommand("blocks",
	                                  "2x2 block realizations on polynomial "
	                                  "pairs");
	blocks->add_option("--kind", blocks_kind, "direct-sum, pauli or shifted")
	    ->check(CLI::IsMember({"direct-sum", "pauli", "shifted"}));
	blocks->add_option("--s", blocks_s, "exponent of the shifted B-slot");
	blocks->add_option("--maxdeg", blocks_maxdeg, "degree bound of the "
	                                              "random pairs");
	blocks->add_option("--pairs", blocks_pairs, "number of random pairs");
	blocks->add_option("--seed", blocks_seed, "random seed");
	em_blocks.attach(blocks);

	// recurrence-check
	int rec_j = 10, rec_l = 10, rec_trials = 20;
	unsigned long rec_seed = 1;
	std::string rec_c, rec_d;
	Emitter em_rec;
	auto *rec = app.add_subcommand("recurrence-check",
	                               "closed form of the coefficient "
	                               "recurrence vs direct iteration");
	rec->add_option("--J", rec_j, "diagonal length");
	rec->add_option("--L", rec_l, "number of diagonals");
	rec->add_option("--seed", rec_seed, "random seed");
	rec->add_option("--trials", rec_trials, "number of random seedings");
	rec->add_option("--c", rec_c, "explicit c sequence, comma-separated");
	rec->add_option("--d", rec_d, "explicit d sequence, comma-separated");
	em_rec.attach(rec);

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp &e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e);
		return exit_usage;
	}

	try
	{
		if (numbers->parsed())
			return cmd_numbers(euler, bern, stirling, binom, epoly, bpoly,
			                   em_numbers);
		if (norder->parsed())
			return cmd_normal_order(no_expr, em_no);
		if (build->parsed())
			return cmd_build(build_args, em_build);
		if (verify->parsed())
			return cmd_verify(verify_args, random_cases, verify_seed,
			                  closed_forms, em_verify);
		if (nogo->parsed())
			return cmd_nogo(nogo_m, nogo_n, nogo_bound, em_nogo);
		if (apply->parsed())
			return cmd_apply(apply_series_file, apply_t, apply_expr,
			                 apply_window, apply_poly, apply_poly_file,
			                 em_apply);
		if (interp->parsed())
			return cmd_interp(interp_kind, interp_alpha, interp_maxdeg,
			                  interp_widen, interp_poly, em_interp);
		if (blocks->parsed())
			return cmd_blocks(blocks_kind, blocks_s, blocks_maxdeg,
			                  blocks_pairs, blocks_seed, em_blocks);
		if (rec->parsed())
			return cmd_recurrence(rec_j, rec_l, rec_seed, rec_trials, rec_c,
			                      rec_d, em_rec);
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return exit_usage;
	}
	return exit_usage;
}
