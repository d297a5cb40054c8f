#include "doctest.h"

#include "fragsat/decide.hpp"
#include "fragsat/errors.hpp"
#include "fragsat/gen.hpp"
#include "fragsat/rng.hpp"

using namespace fragsat;

namespace {

Sentence term(const std::string &t) { return parse_term(t, default_vocabulary()); }

std::vector<Sentence> terms(std::initializer_list<const char *> ts) {
	std::vector<Sentence> out;
	for (const char *t : ts) out.push_back(term(t));
	return out;
}

// A three-edge implication chain against one existential: the canonical
// minimal-unsat shape.
std::vector<Sentence> chain_instance() {
	return terms({"all(+artist,+beekeeper)", "all(+beekeeper,+carpenter)",
	              "all(+carpenter,-dentist)", "exists(+artist,+dentist)"});
}

// Smallest domain bound that keeps the oracle conclusive on monadic input.
int oracle_domain(const std::vector<Sentence> &phi) {
	int k = 0;
	for (const auto &s : phi) {
		if (const auto *syl = std::get_if<Syllogistic>(&s)) k += syl->q == Quant::Existential;
		else if (const auto *rc = std::get_if<Relative>(&s)) k += rc->q == Quant::Existential;
	}
	return std::max(1, k);
}

} // namespace

TEST_SUITE("decide") {

TEST_CASE("the chain instance is unsatisfiable everywhere, minimal path of three") {
	auto phi = chain_instance();
	Verdict g = decide_graph(phi);
	CHECK(g.status == Status::Unsatisfiable);
	REQUIRE(g.config.has_value());
	CHECK(g.config->kind_name() == "path-iii");
	CHECK(g.config->size == 3);

	CHECK(decide_monadic(phi).status == Status::Unsatisfiable);
	CHECK(bounded_model_search(phi, 4).status == Status::Unsatisfiable);

	// Dropping any one sentence restores satisfiability (the path is minimal).
	for (size_t i = 0; i < phi.size(); ++i) {
		auto sub = phi;
		sub.erase(sub.begin() + static_cast<long>(i));
		CHECK(decide_graph(sub).status == Status::Satisfiable);
	}
}

TEST_CASE("mutual universal configuration") {
	auto phi = terms({"all(+artist,-artist)", "all(-artist,+artist)"});
	Verdict g = decide_graph(phi);
	CHECK(g.status == Status::Unsatisfiable);
	REQUIRE(g.config.has_value());
	CHECK(g.config->kind_name() == "mutual");
	CHECK(g.config->size == 1);
	CHECK(decide_monadic(phi).status == Status::Unsatisfiable);
	// Either sentence alone is satisfiable (empty or full extension).
	CHECK(decide_graph({phi[0]}).status == Status::Satisfiable);
	CHECK(decide_graph({phi[1]}).status == Status::Satisfiable);
}

TEST_CASE("satisfiable classics") {
	CHECK(decide_graph(terms({"all(+artist,+beekeeper)", "all(+beekeeper,-carpenter)",
	                          "exists(+artist,-carpenter)"}))
	          .status == Status::Satisfiable);
	Verdict v = bounded_model_search(
	    terms({"all(+artist,+beekeeper)", "exists(+artist,+beekeeper)"}), 4);
	CHECK(v.status == Status::Satisfiable);
	REQUIRE(v.witness.has_value());
	CHECK(v.witness->satisfies_all(
	    terms({"all(+artist,+beekeeper)", "exists(+artist,+beekeeper)"})));
}

TEST_CASE("graph rejects non-syllogistic input") {
	CHECK_THROWS_AS(decide_graph(terms({"rel(all,+artist,all,+beekeeper,+chase)"})),
	                WrongFragment);
	CHECK_THROWS_AS(decide_monadic(terms({"rel(all,+artist,all,+beekeeper,+chase)"})),
	                WrongFragment);
}

TEST_CASE("monadic handles relative clauses") {
	auto unsat = terms({"relcl(all,artist,+beekeeper,-carpenter)",
	                    "relcl(exists,artist,+beekeeper,+carpenter)"});
	CHECK(decide_monadic(unsat).status == Status::Unsatisfiable);
	CHECK(bounded_model_search(unsat, 4).status == Status::Unsatisfiable);

	auto sat = terms({"relcl(all,artist,+beekeeper,-carpenter)",
	                  "relcl(exists,artist,-beekeeper,+carpenter)"});
	CHECK(decide_monadic(sat).status == Status::Satisfiable);
	CHECK(bounded_model_search(sat, 4).status == Status::Satisfiable);
}

TEST_CASE("empty instance is satisfiable") {
	CHECK(decide_graph({}).status == Status::Satisfiable);
	CHECK(decide_monadic({}).status == Status::Satisfiable);
	CHECK(bounded_model_search({}, 2).status == Status::Satisfiable);
}

TEST_CASE("oracle budget and conclusiveness") {
	GenParams p = default_params(Fragment::SDag, 8);
	p.n = 5;
	Rng rng(5);
	Instance inst = generate_instance(Fragment::SDag, p, 77);
	CHECK_THROWS_AS(bounded_model_search(inst.sentences, 4, /*budget=*/0), BudgetExceeded);

	// Relational sentences make negative answers inconclusive.
	auto rel = terms({"rel(all,+artist,all,+beekeeper,-chase)",
	                  "rel(all,+beekeeper,exists,+artist,+chase)",
	                  "exists(+beekeeper,+beekeeper)"});
	CHECK(bounded_model_search(rel, 1).status == Status::Unknown);
}

TEST_CASE("three deciders agree on random small instances") {
	Rng seeds(2024);
	GenParams p = default_params(Fragment::SDag, 6);
	p.n = 4;
	for (int i = 0; i < 1500; ++i) {
		Instance inst = generate_instance(Fragment::SDag, p, seeds.next());
		Status g = decide_graph(inst.sentences).status;
		Status m = decide_monadic(inst.sentences).status;
		// The oracle is conclusive only with max_domain >= #existentials.
		Status o = bounded_model_search(inst.sentences, oracle_domain(inst.sentences)).status;
		CAPTURE(i);
		CHECK(g == m);
		CHECK(m == o);
	}
}

TEST_CASE("monadic agrees with the oracle on relative clauses") {
	Rng seeds(2025);
	for (Fragment f : {Fragment::SRel, Fragment::SRelNeg}) {
		GenParams p = default_params(f, 6);
		p.n = 4;
		for (int i = 0; i < 750; ++i) {
			Instance inst = generate_instance(f, p, seeds.next());
			Status m = decide_monadic(inst.sentences).status;
			Status o =
			    bounded_model_search(inst.sentences, oracle_domain(inst.sentences)).status;
			CAPTURE(i);
			CHECK(m == o);
		}
	}
}

TEST_CASE("unsatisfiability is monotone under sentence addition") {
	Rng seeds(7);
	GenParams p = default_params(Fragment::SDag, 10);
	p.n = 5;
	int checked = 0;
	for (int i = 0; i < 300; ++i) {
		Instance inst = generate_instance(Fragment::SDag, p, seeds.next());
		// Find the first unsat prefix, then every extension must stay unsat.
		for (size_t k = 1; k <= inst.sentences.size(); ++k) {
			std::vector<Sentence> prefix(inst.sentences.begin(),
			                             inst.sentences.begin() + static_cast<long>(k));
			if (decide_graph(prefix).status == Status::Unsatisfiable) {
				for (size_t k2 = k; k2 <= inst.sentences.size(); ++k2) {
					std::vector<Sentence> ext(inst.sentences.begin(),
					                          inst.sentences.begin() + static_cast<long>(k2));
					CHECK(decide_graph(ext).status == Status::Unsatisfiable);
				}
				++checked;
				break;
			}
		}
	}
	CHECK(checked > 50); // the sweep actually exercised unsat prefixes
}

TEST_CASE("graph configs are verified minimal witnesses") {
	Rng seeds(13);
	GenParams p = default_params(Fragment::SDag, 12);
	p.n = 6;
	for (int i = 0; i < 200; ++i) {
		Instance inst = generate_instance(Fragment::SDag, p, seeds.next());
		Verdict g = decide_graph(inst.sentences);
		if (g.status != Status::Unsatisfiable) continue;
		REQUIRE(g.config.has_value());
		CHECK(g.config->size >= 1);
		if (const auto *pv = std::get_if<PathViolation>(&g.config->detail)) {
			CHECK(pv->path.size() == static_cast<size_t>(g.config->size) + 1);
			CHECK(pv->sentence >= 0);
			CHECK(pv->sentence < static_cast<int>(inst.sentences.size()));
		}
	}
}

TEST_CASE("decide dispatch honors the method argument") {
	auto phi = chain_instance();
	const Vocabulary &v = default_vocabulary();
	CHECK(decide(phi, Method::Graph, v).status == Status::Unsatisfiable);
	CHECK(decide(phi, Method::Monadic, v).status == Status::Unsatisfiable);
	CHECK(decide(phi, Method::Oracle, v).status == Status::Unsatisfiable);
	CHECK(method_from_name("graph") == Method::Graph);
	CHECK(method_name(Method::Atp) == "atp");
	CHECK_FALSE(method_from_name("tarot").has_value());
}

TEST_CASE("atp backend agrees via the bundled prover") {
	auto prover = find_prover(5.0);
	REQUIRE_MESSAGE(prover.has_value(), "fragprove should sit next to the test binary");
	DecideOptions opts;
	opts.prover = *prover;
	const Vocabulary &v = default_vocabulary();
	CHECK(decide(chain_instance(), Method::Atp, v, opts).status == Status::Unsatisfiable);
	CHECK(decide(terms({"all(+artist,+beekeeper)", "exists(+artist,+beekeeper)"}), Method::Atp, v,
	             opts)
	          .status == Status::Satisfiable);
	// Relational reasoning, beyond the monadic deciders.
	CHECK(decide(terms({"rel(exists,+artist,all,+beekeeper,-hate)",
	                    "rel(all,+beekeeper,exists,+artist,+hate)",
	                    "all(+artist,+beekeeper)"}),
	             Method::Atp, v, opts)
	          .status == Status::Unsatisfiable);
}

} // TEST_SUITE
