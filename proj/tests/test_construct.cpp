#include "doctest.h"

#include <set>
#include <stdexcept>

#include "fragsat/construct.hpp"
#include "fragsat/errors.hpp"
#include "fragsat/fol.hpp"

using namespace fragsat;

namespace {

std::set<int32_t> noun_set(const std::vector<Sentence> &phi) {
	std::set<int32_t> out;
	for (const auto &s : phi) {
		if (const auto *syl = std::get_if<Syllogistic>(&s)) {
			out.insert(syl->subject.noun);
			out.insert(syl->predicate.noun);
		} else if (const auto *rel = std::get_if<Relational>(&s)) {
			out.insert(rel->subject.noun);
			out.insert(rel->object.noun);
		}
	}
	return out;
}

} // namespace

TEST_SUITE("construct") {

TEST_CASE("chain cores trip exactly their violation kind") {
	struct Row {
		ChainKind kind;
		const char *name;
		size_t sentences;
		size_t nouns;
	};
	for (const Row &row : {Row{ChainKind::PathI, "path-i", 4, 4},
	                       Row{ChainKind::PathII, "path-ii", 4, 4},
	                       Row{ChainKind::PathIII, "path-iii", 4, 4},
	                       Row{ChainKind::Mutual, "mutual", 6, 5}}) {
		CAPTURE(row.name);
		ChainSpec spec;
		spec.d = 3;
		spec.kind = row.kind;
		Rng rng(7);
		std::vector<Sentence> core = build_chain(spec, 12, rng);
		CHECK(core.size() == row.sentences);
		CHECK(noun_set(core).size() == row.nouns);
		Verdict v = decide_graph(core);
		REQUIRE(v.status == Status::Unsatisfiable);
		REQUIRE(v.config.has_value());
		CHECK(v.config->kind_name() == row.name);
		CHECK(v.config->size == 3);
	}
}

TEST_CASE("chain shapes at d = 2") {
	ChainSpec spec;
	spec.d = 2;

	spec.kind = ChainKind::PathIII;
	Rng rng(1);
	auto core = build_chain(spec, 3, rng);
	REQUIRE(core.size() == 3);
	auto s0 = std::get<Syllogistic>(core[0]);
	auto s1 = std::get<Syllogistic>(core[1]);
	auto s2 = std::get<Syllogistic>(core[2]);
	CHECK(s0.q == Quant::Universal);
	CHECK(s1.q == Quant::Universal);
	CHECK(s2.q == Quant::Existential);
	// p₀ → p₁ → p₂ with trigger ∃(p₀, ¬p₂).
	CHECK(s0.predicate == s1.subject);
	CHECK(s2.subject == s0.subject);
	CHECK(s2.predicate == s1.predicate.complement());
	CHECK(s0.subject.positive);
	CHECK(s1.predicate.positive);

	spec.kind = ChainKind::PathI;
	Rng rng2(1);
	core = build_chain(spec, 3, rng2);
	s0 = std::get<Syllogistic>(core[0]);
	s1 = std::get<Syllogistic>(core[1]);
	s2 = std::get<Syllogistic>(core[2]);
	// p₀ → p₁ → ¬p₀ with trigger ∃(p₀, q).
	CHECK(s1.predicate == s0.subject.complement());
	CHECK(s2.subject == s0.subject);
	CHECK(s2.predicate.positive);

	spec.kind = ChainKind::PathII;
	Rng rng3(1);
	core = build_chain(spec, 3, rng3);
	s2 = std::get<Syllogistic>(core[2]);
	// Trigger ∃(q, p₀): the chain hangs off the predicate.
	CHECK(s2.predicate == std::get<Syllogistic>(core[0]).subject);

	spec.kind = ChainKind::Mutual;
	spec.d = 1;
	Rng rng4(1);
	core = build_chain(spec, 4, rng4);
	REQUIRE(core.size() == 2);
	s0 = std::get<Syllogistic>(core[0]);
	s1 = std::get<Syllogistic>(core[1]);
	CHECK(s0.subject == s1.predicate);
	CHECK(s0.predicate == s0.subject.complement());
	CHECK(s1.subject == s0.subject.complement());
	Verdict v = decide_graph(core);
	REQUIRE(v.config.has_value());
	CHECK(v.config->kind_name() == "mutual");
	CHECK(v.config->size == 1);
}

TEST_CASE("build_chain guards its inputs") {
	ChainSpec spec;
	spec.d = 3;
	Rng rng(2);
	CHECK_THROWS_AS(build_chain(spec, 3, rng), VocabTooSmall); // needs d+1 = 4
	spec.d = 0;
	CHECK_THROWS_AS(build_chain(spec, 10, rng), std::invalid_argument);
}

TEST_CASE("constructed syllogistic instances hit the target exactly") {
	GenParams params = default_params(Fragment::SDag, 20);
	ChainSpec spec;
	spec.d = 4;
	spec.s = 20;

	Instance unsat = make_constructed_syllogistic(spec, params, 42);
	CHECK(unsat.fragment == Fragment::SDag);
	CHECK(unsat.construction == "chain");
	CHECK(unsat.sentences.size() == 20);
	REQUIRE(unsat.label.has_value());
	CHECK(*unsat.label == Status::Unsatisfiable);
	REQUIRE(unsat.config.has_value());
	CHECK(unsat.config->size == 4);
	for (const auto &s : unsat.sentences) CHECK(fragment_leq(fragment_of(s), Fragment::SDag));
	Verdict again = decide_graph(unsat.sentences);
	CHECK(again.status == Status::Unsatisfiable);
	CHECK(again.config->size == 4); // padding may not shrink the minimal core

	Instance rerun = make_constructed_syllogistic(spec, params, 42);
	CHECK(rerun.sentences == unsat.sentences);

	spec.target = Status::Satisfiable;
	Instance sat = make_constructed_syllogistic(spec, params, 43);
	CHECK(*sat.label == Status::Satisfiable);
	CHECK_FALSE(sat.config.has_value());
	CHECK(sat.sentences.size() == 20);
	CHECK(decide_graph(sat.sentences).status == Status::Satisfiable);
}

TEST_CASE("constructed syllogistic rejects impossible specs") {
	GenParams params = default_params(Fragment::SDag, 20);
	ChainSpec spec;
	spec.d = 5;
	spec.s = 4; // core alone needs d+1 = 6
	CHECK_THROWS_AS(make_constructed_syllogistic(spec, params, 1), std::invalid_argument);
}

TEST_CASE("forall-forall cores have the documented layout") {
	ForallForallSpec spec;
	spec.d = 1;
	Rng rng(5);
	auto core = build_forall_forall(spec, 6, 1, rng);
	REQUIRE(core.size() == 6);
	int universal_syl = 0, existential_syl = 0, rel_pos = 0, rel_neg = 0;
	for (const auto &s : core) {
		if (const auto *syl = std::get_if<Syllogistic>(&s))
			++(syl->q == Quant::Universal ? universal_syl : existential_syl);
		else if (const auto *rel = std::get_if<Relational>(&s)) {
			CHECK(rel->sq == Quant::Universal);
			CHECK(rel->oq == Quant::Universal);
			++(rel->verb_positive ? rel_pos : rel_neg);
		}
	}
	CHECK(universal_syl == 2);
	CHECK(existential_syl == 2);
	CHECK(rel_pos == 1);
	CHECK(rel_neg == 1);
	CHECK(noun_set(core).size() == 6);

	spec.d = 2;
	Rng rng2(5);
	core = build_forall_forall(spec, 12, 2, rng2);
	CHECK(core.size() == 12);
	CHECK(noun_set(core).size() == 12);

	Rng rng3(5);
	CHECK_THROWS_AS(build_forall_forall(spec, 11, 1, rng3), VocabTooSmall);
	CHECK_THROWS_AS(build_forall_forall(spec, 12, 0, rng3), VocabTooSmall);
	spec.witness_polarities = std::vector<bool>{true}; // needs 2(d−1) = 2
	CHECK_THROWS_AS(build_forall_forall(spec, 12, 1, rng3), std::invalid_argument);
}

TEST_CASE("constructed relational instances verified end to end") {
	auto prover = find_prover(10.0);
	REQUIRE_MESSAGE(prover.has_value(), "bundled fragprove should sit next to the test binary");

	GenParams params = default_params(Fragment::R, 10);
	ForallForallSpec spec;
	spec.d = 1;
	spec.s = 10;

	Instance unsat = make_constructed_relational(spec, params, 7, *prover);
	CHECK(unsat.fragment == Fragment::R);
	CHECK(unsat.construction == "forallforall");
	CHECK(unsat.sentences.size() == 10);
	CHECK(*unsat.label == Status::Unsatisfiable);
	REQUIRE(unsat.proof.has_value());
	CHECK(unsat.proof->l >= 3);
	CHECK(unsat.proof->d >= 2);
	CHECK(unsat.proof->d <= 6);
	REQUIRE(unsat.config.has_value());
	CHECK(unsat.config->kind_name() == "forallforall");
	CHECK(unsat.config->size == 6);
	ProverResult re = run_prover(to_tptp_anonymous(unsat.sentences), *prover);
	CHECK(re.status == Szs::Unsatisfiable);

	spec.target = Status::Satisfiable;
	spec.s = 6;
	Instance sat = make_constructed_relational(spec, params, 8, *prover);
	CHECK(*sat.label == Status::Satisfiable);
	CHECK(sat.sentences.size() == 6);
	CHECK_FALSE(sat.config.has_value());
	ProverResult re_sat = run_prover(to_tptp_anonymous(sat.sentences), *prover);
	CHECK(re_sat.status == Szs::Satisfiable);

	spec.s = 3; // below the 6d core
	CHECK_THROWS_AS(make_constructed_relational(spec, params, 9, *prover), std::invalid_argument);
}

} // TEST_SUITE
