#include "doctest.h"

#include "fragsat/errors.hpp"
#include "fragsat/fol.hpp"

using namespace fragsat;

namespace {

Sentence term(const std::string &t) { return parse_term(t, default_vocabulary()); }

std::string tptp_of(const std::string &t) {
	return formula_to_tptp(*translate(term(t), default_vocabulary()));
}

} // namespace

TEST_SUITE("fol") {

TEST_CASE("translations of the four families") {
	CHECK(tptp_of("all(+artist,+beekeeper)") == "![X]: (artist(X) => beekeeper(X))");
	CHECK(tptp_of("all(-artist,-beekeeper)") == "![X]: (~artist(X) => ~beekeeper(X))");
	CHECK(tptp_of("exists(+artist,-beekeeper)") == "?[X]: (artist(X) & ~beekeeper(X))");
	CHECK(tptp_of("rel(all,+artist,exists,+beekeeper,+chase)") ==
	      "![X]: (artist(X) => (?[Y]: (beekeeper(Y) & chase(X,Y))))");
	CHECK(tptp_of("rel(exists,+artist,all,+beekeeper,-chase)") ==
	      "?[X]: (artist(X) & (![Y]: (beekeeper(Y) => ~chase(X,Y))))");
	CHECK(tptp_of("relcl(all,artist,+beekeeper,-carpenter)") ==
	      "![X]: ((artist(X) & beekeeper(X)) => ~carpenter(X))");
	CHECK(tptp_of("relcl(exists,artist,-beekeeper,+carpenter)") ==
	      "?[X]: (artist(X) & ~beekeeper(X) & carpenter(X))");
}

TEST_CASE("to_tptp numbers axioms from one") {
	std::vector<Sentence> ss = {term("all(+artist,+beekeeper)"),
	                            term("exists(+artist,-beekeeper)")};
	std::string text = to_tptp(ss, default_vocabulary());
	CHECK(text.find("fof(s1, axiom, ![X]: (artist(X) => beekeeper(X))).") != std::string::npos);
	CHECK(text.find("fof(s2, axiom, ?[X]: (artist(X) & ~beekeeper(X))).") != std::string::npos);
}

TEST_CASE("anonymous export uses index symbols") {
	std::vector<Sentence> ss = {term("rel(all,+artist,all,+beekeeper,-chase)")};
	std::string text = to_tptp_anonymous(ss);
	CHECK(text.find("p0(") != std::string::npos);  // artist is noun 0
	CHECK(text.find("p1(") != std::string::npos);  // beekeeper is noun 1
	CHECK(text.find("r0(") != std::string::npos);  // chase is verb 0
	CHECK(text.find("artist") == std::string::npos);
}

TEST_CASE("parse_fof reads back what to_tptp writes") {
	std::vector<Sentence> ss = {term("all(+artist,+beekeeper)"),
	                            term("rel(exists,+artist,exists,+beekeeper,+chase)"),
	                            term("relcl(all,artist,+beekeeper,-carpenter)")};
	auto lines = parse_fof(to_tptp(ss, default_vocabulary()));
	REQUIRE(lines.size() == 3);
	CHECK(lines[0].name == "s1");
	CHECK(lines[0].role == "axiom");
	for (size_t i = 0; i < lines.size(); ++i)
		CHECK(formula_to_tptp(*lines[i].formula) ==
		      formula_to_tptp(*translate(ss[i], default_vocabulary())));
}

TEST_CASE("parse_fof handles cnf lines, $false, and annotations") {
	auto lines = parse_fof("cnf(c3, plain, ($false), inference(resolution, [], [c1, c2])).\n"
	                       "fof(f1, axiom, (p(a)), file('/tmp/x.p', s2)).\n");
	REQUIRE(lines.size() == 2);
	CHECK(lines[0].name == "c3");
	CHECK(lines[0].formula->kind == FKind::Or);
	CHECK(lines[0].formula->kids.empty());
	CHECK(lines[0].source.find("inference(resolution") != std::string::npos);
	CHECK(lines[1].source.find("file('/tmp/x.p', s2)") != std::string::npos);
}

TEST_CASE("parse_fof rejects garbage") {
	CHECK_THROWS_AS(parse_fof("fof(s1, axiom, p("), ParseError);
	CHECK_THROWS_AS(parse_fof("fof(s1 axiom p)."), ParseError);
}

TEST_CASE("tptp_symbol sanitizes words") {
	CHECK(tptp_symbol("artist") == "artist");
	CHECK(tptp_symbol("vice-regent") == "vice_regent");
}

} // TEST_SUITE
