#include "doctest.h"

#include "fragsat/atp.hpp"
#include "fragsat/errors.hpp"
#include "fragsat/fol.hpp"

using namespace fragsat;

namespace {

const char *kRefutation =
    "% SZS status Unsatisfiable for probe\n"
    "% SZS output start Refutation\n"
    "fof(f1, axiom, (! [X] : (artist(X) => beekeeper(X))), file('/tmp/probe.p', s3)).\n"
    "fof(f2, axiom, (? [X] : (artist(X) & ~beekeeper(X))), file('/tmp/probe.p', s7)).\n"
    "cnf(c1, plain, (~artist(X0) | beekeeper(X0)), inference(clausify, [], [f1])).\n"
    "cnf(c2, plain, (artist(sk0)), inference(clausify, [], [f2])).\n"
    "cnf(c3, plain, (~beekeeper(sk0)), inference(clausify, [], [f2])).\n"
    "cnf(c4, plain, (beekeeper(sk0)), inference(resolution, [], [c1, c2])).\n"
    "cnf(c5, plain, ($false), inference(resolution, [], [c3, c4])).\n"
    "% SZS output end Refutation\n";

} // namespace

TEST_SUITE("atp") {

TEST_CASE("template parsing substitutes file and timeout") {
	ProverConfig cfg = prover_config_from_template("vampire -t {timeout} --mode casc {file}", 7.2);
	REQUIRE(cfg.command.size() == 6);
	CHECK(cfg.command[0] == "vampire");
	CHECK(cfg.command[2] == "{timeout}");
	CHECK(cfg.command[5] == "{file}");
	CHECK(cfg.timeout_seconds == 7.2);

	// {file} is appended when the template omits it.
	ProverConfig bare = prover_config_from_template("eprover --auto", 1.0);
	REQUIRE(bare.command.size() == 3);
	CHECK(bare.command.back() == "{file}");

	CHECK_THROWS_AS(prover_config_from_template("", 1.0), ParseError);
	CHECK_THROWS_AS(prover_config_from_template("p {file} {file}", 1.0), ParseError);
}

TEST_CASE("proof stats count lines and distinct premises") {
	ProofStats st = proof_stats(kRefutation, 20);
	CHECK(st.l == 7);
	CHECK(st.d == 2);
	auto names = used_axiom_names(kRefutation);
	REQUIRE(names.size() == 2);
	CHECK(names[0] == "s3");
	CHECK(names[1] == "s7");
}

TEST_CASE("proof stats without a refutation block throw") {
	CHECK_THROWS_AS(proof_stats("% SZS status Satisfiable for probe\n", 20), NoProofFound);
}

TEST_CASE("duplicate premise references are deduplicated") {
	std::string raw =
	    "% SZS output start Refutation\n"
	    "fof(f1, axiom, (p), file('x.p', s1)).\n"
	    "fof(f2, axiom, (~p), file('x.p', s1)).\n"
	    "cnf(c1, plain, ($false), inference(resolution, [], [f1, f2])).\n"
	    "% SZS output end Refutation\n";
	CHECK(proof_stats(raw, 5).d == 1);
	CHECK(proof_stats(raw, 5).l == 3);
}

TEST_CASE("run_prover end to end against the bundled prover") {
	auto prover = find_prover(5.0);
	REQUIRE_MESSAGE(prover.has_value(), "fragprove should sit next to the test binary");

	std::string unsat = "fof(s1, axiom, ! [X] : (artist(X) => beekeeper(X))).\n"
	                    "fof(s2, axiom, ? [X] : (artist(X) & ~beekeeper(X))).\n";
	ProverResult r = run_prover(unsat, *prover);
	CHECK(r.status == Szs::Unsatisfiable);
	CHECK(r.status_word == "Unsatisfiable");
	ProofStats st = proof_stats(r.raw, 2);
	CHECK(st.d == 2);
	CHECK(st.l >= 3);

	std::string sat = "fof(s1, axiom, ? [X] : artist(X)).\n";
	CHECK(run_prover(sat, *prover).status == Szs::Satisfiable);
}

TEST_CASE("prover failures map to the documented errors") {
	ProverConfig missing;
	missing.command = {"/nonexistent/prover", "{file}"};
	missing.timeout_seconds = 2.0;
	CHECK_THROWS_AS(run_prover("fof(s1, axiom, p).\n", missing), ProverUnavailable);

	ProverConfig silent = prover_config_from_template("true {file}", 2.0);
	CHECK_THROWS_AS(run_prover("fof(s1, axiom, p).\n", silent), UnparseableOutput);
}

TEST_CASE("szs names round trip") {
	CHECK(szs_name(Szs::Unsatisfiable) == "Unsatisfiable");
	CHECK(szs_name(Szs::Satisfiable) == "Satisfiable");
	CHECK(szs_name(Szs::Timeout) == "Timeout");
}

} // TEST_SUITE
