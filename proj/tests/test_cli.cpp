// End-to-end checks of the installed command surface: spawn the real binary,
// capture stdout and the exit status.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "colorheis/serialize.hpp"

using nlohmann::json;

namespace {

struct RunResult
{
	int status = -1;
	std::string out;
};

RunResult run_cli(const std::string &args, const std::string &stdin_payload = "")
{
	std::string cmd = std::string(COLORHEIS_CLI_PATH) + " " + args +
	                  " 2>/dev/null";
	if (!stdin_payload.empty())
	{
		std::string escaped;
		for (char c : stdin_payload)
		{
			if (c == '\'')
				escaped += "'\\''";
			else
				escaped += c;
		}
		cmd = "printf '%s' '" + escaped + "' | " + cmd;
	}
	RunResult r;
	FILE *pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	std::array<char, 512> buf;
	while (fgets(buf.data(), buf.size(), pipe) != nullptr)
		r.out += buf.data();
	int rc = pclose(pipe);
	r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
	while (!r.out.empty() && r.out.back() == '\n')
		r.out.pop_back();
	return r;
}

} // namespace

TEST_CASE("normal-order")
{
	RunResult r = run_cli("normal-order \"A*B\"");
	CHECK(r.status == 0);
	CHECK(r.out == "B*A + 1");

	r = run_cli("normal-order \"A*B - B*A\"");
	CHECK(r.status == 0);
	CHECK(r.out == "1");

	r = run_cli("normal-order \"A*B\" --emit json");
	CHECK(r.status == 0);
	json j = json::parse(r.out);
	CHECK(j["ok"] == true);
	CHECK(j["result"]["entries"].size() == 2);
}

TEST_CASE("parse errors exit with 2")
{
	CHECK(run_cli("normal-order \"A^(2)\"").status == 2);
	CHECK(run_cli("normal-order \"A*B\" --bogus-flag").status == 2);
	CHECK(run_cli("nonsense-verb").status == 2);
	CHECK(run_cli("numbers").status == 2);
	// x is not part of the operator alphabet
	CHECK(run_cli("normal-order \"x\"").status == 2);
}

TEST_CASE("numbers")
{
	RunResult r = run_cli("numbers --euler 4 --bernoulli 2 --stirling 3 2");
	CHECK(r.status == 0);
	CHECK(r.out.find("euler(4) = 5") != std::string::npos);
	CHECK(r.out.find("bernoulli(2) = 1/6") != std::string::npos);
	CHECK(r.out.find("stirling2(3,2) = 3") != std::string::npos);

	r = run_cli("numbers --euler-poly 2 --emit json");
	CHECK(r.status == 0);
	json j = json::parse(r.out);
	CHECK(j["ok"] == true);
	CHECK(j["result"]["euler_polynomial"][0][1] == "x^2 - x");
}

TEST_CASE("verify a known realization")
{
	// phi = A, psi = 0 (the reflection family)
	RunResult r = run_cli("verify --c 1 --phi \"1:1\" --psi \"\" --window 12");
	CHECK(r.status == 0);
	CHECK(r.out == "ok");

	r = run_cli("verify --c 1 --phi \"1:1\" --psi \"\" --window 12 "
	            "--closed-forms --emit json");
	CHECK(r.status == 0);
	json j = json::parse(r.out);
	CHECK(j["ok"] == true);
	CHECK(j["residuals"]["r3"]["entries"].empty());
}

TEST_CASE("verify failure exits with 1")
{
	// a generic two-relation pair leaves the third relation unsatisfied
	RunResult r = run_cli("verify --V \"0:1,1:1\" --W \"0:1\" --window 10");
	CHECK(r.status == 1);

	r = run_cli("verify --V \"0:1,1:1\" --W \"0:1\" --window 10 --emit json");
	CHECK(r.status == 1);
	json j = json::parse(r.out);
	CHECK(j["ok"] == false);
	CHECK_FALSE(j["residuals"]["r3"]["entries"].empty());
}

TEST_CASE("verify rejects invalid parameters with 2")
{
	CHECK(run_cli("verify --c 0 --phi \"\" --psi \"\"").status == 2);
	CHECK(run_cli("verify --c 1 --phi \"2:1\" --psi \"\"").status == 2);
	CHECK(run_cli("verify --c x --phi \"\" --psi \"\"").status == 2);
}

TEST_CASE("randomized verify")
{
	RunResult r =
	    run_cli("verify --random 5 --seed 7 --window 10 --emit json");
	CHECK(r.status == 0);
	json j = json::parse(r.out);
	CHECK(j["ok"] == true);
	CHECK(j["failures"] == 0);

	// deterministic for a fixed seed
	RunResult r2 =
	    run_cli("verify --random 5 --seed 7 --window 10 --emit json");
	CHECK(r2.out == r.out);
}

TEST_CASE("build then verify through a pipe")
{
	RunResult built =
	    run_cli("build --c 1 --phi \"1:1,3:-1/2\" --psi \"5:2\" "
	            "--window 10 --emit json");
	REQUIRE(built.status == 0);
	json j = json::parse(built.out);
	std::string payload = j["result"].dump();

	RunResult verified = run_cli("verify --file -", payload);
	CHECK(verified.status == 0);

	// the emitted JSON re-parses bit-exactly into the file format
	CHECK(colorheis::realization_to_json(
	          colorheis::realization_from_json(j["result"]))
	          .dump() == payload);
}

TEST_CASE("nogo")
{
	RunResult r = run_cli("nogo --M 4 --N 4 --emit json");
	CHECK(r.status == 0);
	json j = json::parse(r.out);
	CHECK(j["ok"] == true);
	CHECK(j["result"]["nullity"] == 0);

	CHECK(run_cli("nogo --M 9 --N 1").status == 2); // bound exceeded
}

TEST_CASE("apply")
{
	RunResult r = run_cli("apply --t --window 12 --poly \"x^3\"");
	CHECK(r.status == 0);
	CHECK(r.out == "-x^3");

	r = run_cli("apply --expr \"B\" --poly \"x^2 + 1\"");
	CHECK(r.status == 0);
	CHECK(r.out == "x^3 + x");

	// window too small for the requested degree: loud failure
	CHECK(run_cli("apply --t --window 2 --poly \"x^3\"").status == 2);

	// polynomial payload on stdin
	r = run_cli("apply --t --window 8 --poly-file -", "x^2 - x");
	CHECK(r.status == 0);
	CHECK(r.out == "x^2 + x");

	// series JSON payload on stdin: B*A acts as x d/dx
	RunResult no = run_cli("normal-order \"B*A\" --emit json");
	REQUIRE(no.status == 0);
	std::string series = json::parse(no.out)["result"].dump();
	r = run_cli("apply --series - --poly \"x^4\"", series);
	CHECK(r.status == 0);
	CHECK(r.out == "4*x^4");
}

TEST_CASE("interp")
{
	CHECK(run_cli("interp --kind euler --alpha 1 --maxdeg 12").status == 0);
	CHECK(run_cli("interp --kind euler --alpha 1/2 --maxdeg 10 --widen 3")
	          .status == 0);
	CHECK(run_cli("interp --kind stirling --maxdeg 12").status == 0);
	RunResult r = run_cli("interp --kind stirling --maxdeg 8 --emit json");
	CHECK(r.status == 0);
	CHECK(json::parse(r.out)["failures"] == 0);
}

TEST_CASE("blocks")
{
	CHECK(run_cli("blocks --kind direct-sum --pairs 10 --seed 3").status ==
	      0);
	CHECK(run_cli("blocks --kind pauli --pairs 10 --seed 3").status == 0);
	CHECK(run_cli("blocks --kind shifted --s 3 --pairs 10 --seed 3").status ==
	      0);
}

TEST_CASE("recurrence-check")
{
	CHECK(run_cli("recurrence-check --J 10 --L 10 --seed 5 --trials 5")
	          .status == 0);
	CHECK(run_cli("recurrence-check --c \"0,1/2\" --d \"1,-1\" --J 6 --L 1")
	          .status == 0);
	// c_0 != 0 violates the boundary convention
	CHECK(run_cli("recurrence-check --c \"1\" --d \"1\" --J 2 --L 0")
	          .status == 2);
}
