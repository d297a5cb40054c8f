#include "fragsat/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fragsat/errors.hpp"
#include "fragsat/fol.hpp"

namespace fragsat {

namespace {

Literal pos(int32_t n) { return {n, true}; }
Literal neg(int32_t n) { return {n, false}; }

Syllogistic uni(Literal a, Literal b) { return {Quant::Universal, a, b}; }
Syllogistic exi(Literal a, Literal b) { return {Quant::Existential, a, b}; }

std::vector<int32_t> draw_nouns(int k, int n_nouns, Rng &rng) {
	if (k > n_nouns)
		throw VocabTooSmall("construction needs " + std::to_string(k) +
		                    " distinct nouns but the slice has " + std::to_string(n_nouns));
	std::vector<int32_t> pool(static_cast<size_t>(n_nouns));
	std::iota(pool.begin(), pool.end(), 0);
	for (int i = 0; i < k; ++i) {
		size_t j = static_cast<size_t>(i) + static_cast<size_t>(rng.below(pool.size() - i));
		std::swap(pool[static_cast<size_t>(i)], pool[j]);
	}
	pool.resize(static_cast<size_t>(k));
	return pool;
}

} // namespace

std::vector<Sentence> build_chain(const ChainSpec &spec, int n_nouns, Rng &rng) {
	if (spec.d < 1) throw std::invalid_argument("chain length d must be at least 1");
	int d = spec.d;
	std::vector<Sentence> core;

	if (spec.kind == ChainKind::Mutual) {
		// o ⇒ ō via x₁..x_{d−1} and ō ⇒ o via y₁..y_{d−1}: 2d sentences,
		// 2d−1 nouns; disjoint interior keeps every other mutual pair at 2d.
		auto ns = draw_nouns(2 * d - 1, n_nouns, rng);
		int32_t o = ns[0];
		Literal prev = pos(o);
		for (int i = 1; i < d; ++i) {
			core.push_back(uni(prev, pos(ns[i])));
			prev = pos(ns[i]);
		}
		core.push_back(uni(prev, neg(o)));
		prev = neg(o);
		for (int i = d; i < 2 * d - 1; ++i) {
			core.push_back(uni(prev, pos(ns[i])));
			prev = pos(ns[i]);
		}
		core.push_back(uni(prev, pos(o)));
		return core;
	}

	auto ns = draw_nouns(d + 1, n_nouns, rng);
	switch (spec.kind) {
	case ChainKind::PathI:
		// p₀ → … → p_{d−1} → ¬p₀ plus the trigger ∃x(p₀ ∧ q).
		for (int i = 0; i + 1 < d; ++i) core.push_back(uni(pos(ns[i]), pos(ns[i + 1])));
		core.push_back(uni(pos(ns[d - 1]), neg(ns[0])));
		core.push_back(exi(pos(ns[0]), pos(ns[d])));
		break;
	case ChainKind::PathII:
		// q₀ → … → ¬q₀ plus the trigger ∃x(p ∧ q₀), p fresh.
		for (int i = 0; i + 1 < d; ++i) core.push_back(uni(pos(ns[i]), pos(ns[i + 1])));
		core.push_back(uni(pos(ns[d - 1]), neg(ns[0])));
		core.push_back(exi(pos(ns[d]), pos(ns[0])));
		break;
	case ChainKind::PathIII:
		// p₀ → … → p_d plus the trigger ∃x(p₀ ∧ ¬p_d).
		for (int i = 0; i < d; ++i) core.push_back(uni(pos(ns[i]), pos(ns[i + 1])));
		core.push_back(exi(pos(ns[0]), neg(ns[d])));
		break;
	case ChainKind::Mutual:
		break; // handled above
	}
	return core;
}

namespace {

std::vector<int> universal_indices(const std::vector<Sentence> &core) {
	std::vector<int> out;
	for (int i = 0; i < static_cast<int>(core.size()); ++i) {
		const auto *syl = std::get_if<Syllogistic>(&core[i]);
		if (syl != nullptr && syl->q == Quant::Universal) out.push_back(i);
	}
	return out;
}

void reverse_implication(Sentence &s) {
	auto &syl = std::get<Syllogistic>(s);
	std::swap(syl.subject, syl.predicate);
}

} // namespace

Instance make_constructed_syllogistic(const ChainSpec &spec, const GenParams &params,
                                      uint64_t seed) {
	int core_size = spec.kind == ChainKind::Mutual ? 2 * spec.d : spec.d + 1;
	if (spec.d < 1 || spec.s < core_size)
		throw std::invalid_argument("ChainSpec: need d >= 1 and s >= the core size");

	Rng rng(seed);
	int budget = kConstructRetryBudget;
	auto spend = [&] {
		if (--budget < 0)
			throw ConstructionStuck("chain construction exceeded " +
			                        std::to_string(kConstructRetryBudget) + " resamples");
	};

	for (;;) {
		spend();
		std::vector<Sentence> phi = build_chain(spec, params.n, rng);
		if (spec.target == Status::Satisfiable) {
			auto chain = universal_indices(phi);
			reverse_implication(phi[chain[static_cast<size_t>(rng.below(chain.size()))]]);
			if (decide_graph(phi).status != Status::Satisfiable) continue;
		}

		bool stuck = false;
		while (static_cast<int>(phi.size()) < spec.s && !stuck) {
			Sentence cand = sample_sentence(Fragment::SDag, params, rng);
			phi.push_back(cand);
			Verdict v = decide_graph(phi);
			bool keep = spec.target == Status::Unsatisfiable
			                ? v.status == Status::Unsatisfiable && v.config->size == spec.d
			                : v.status == Status::Satisfiable;
			if (!keep) {
				phi.pop_back();
				if (--budget < 0) stuck = true;
			}
		}
		if (stuck)
			throw ConstructionStuck("chain padding exceeded " +
			                        std::to_string(kConstructRetryBudget) + " resamples");

		for (size_t i = 0; i + 1 < phi.size(); ++i) {
			size_t j = i + static_cast<size_t>(rng.below(phi.size() - i));
			std::swap(phi[i], phi[j]);
		}

		Verdict final = decide_graph(phi);
		if (final.status != spec.target) continue;

		Instance inst;
		inst.fragment = Fragment::SDag;
		inst.sentences = std::move(phi);
		inst.label = final.status;
		inst.config = final.config;
		inst.seed = seed;
		inst.params = params;
		inst.params.s = spec.s;
		inst.construction = "chain";
		return inst;
	}
}

std::vector<Sentence> build_forall_forall(const ForallForallSpec &spec, int n_nouns, int n_verbs,
                                          Rng &rng) {
	int d = spec.d;
	if (d < 1) throw std::invalid_argument("forall-forall d must be at least 1");
	if (n_verbs < 1) throw VocabTooSmall("forall-forall construction needs a verb");
	if (spec.witness_polarities &&
	    static_cast<int>(spec.witness_polarities->size()) != 2 * (d - 1))
		throw std::invalid_argument("witness_polarities must hold 2(d-1) draws");

	auto ns = draw_nouns(6 * d, n_nouns, rng);
	int32_t verb = static_cast<int32_t>(rng.below(static_cast<uint64_t>(n_verbs)));

	// Layout: p; p-mids 1..d−1; o₁=d; p′-mids d+1..2d−1; o₂=2d; q=2d+1;
	// q-mids 2d+2..3d; q′-mids 3d+1..4d−1; u 4d..5d−1; u′ 5d..6d−1.
	int32_t p = ns[0], o1 = ns[d], o2 = ns[2 * d], q = ns[2 * d + 1];
	auto chain_to = [&](int32_t from, int first_mid, int32_t to, std::vector<Sentence> &out) {
		int32_t prev = from;
		for (int i = 0; i < d - 1; ++i) {
			out.push_back(uni(pos(prev), pos(ns[first_mid + i])));
			prev = ns[first_mid + i];
		}
		out.push_back(uni(pos(prev), pos(to)));
	};

	int pol_at = 0;
	auto next_polarity = [&] {
		if (spec.witness_polarities) return (*spec.witness_polarities)[pol_at++];
		return rng.bernoulli(0.5);
	};
	// ∃(u₀,u₁), ∀(u₁,∃(u₂,±r)), …, ∀(u_{d−1},∃(target,±r)); d=1 degenerates
	// to the single existential ∃(u₀, target).
	auto witness_chain = [&](int first_u, int32_t target, std::vector<Sentence> &out) {
		std::vector<int32_t> us;
		for (int i = 0; i < d; ++i) us.push_back(ns[first_u + i]);
		us.push_back(target);
		out.push_back(exi(pos(us[0]), pos(us[1])));
		for (int i = 1; i < d; ++i)
			out.push_back(Relational{Quant::Universal, pos(us[i]), Quant::Existential,
			                         pos(us[i + 1]), verb, next_polarity()});
	};

	std::vector<Sentence> core;
	core.reserve(6 * d);
	chain_to(p, 1, o1, core);
	chain_to(p, d + 1, o2, core);
	// q-chains end in the relational "all o₁s are r'd" / "no o₂s are r'd".
	int32_t prev = q;
	std::vector<Sentence> list3, list4;
	for (int i = 0; i < d - 1; ++i) {
		list3.push_back(uni(pos(prev), pos(ns[2 * d + 2 + i])));
		prev = ns[2 * d + 2 + i];
	}
	list3.push_back(Relational{Quant::Universal, pos(prev), Quant::Universal, pos(o1), verb, true});
	prev = q;
	for (int i = 0; i < d - 1; ++i) {
		list4.push_back(uni(pos(prev), pos(ns[3 * d + 1 + i])));
		prev = ns[3 * d + 1 + i];
	}
	list4.push_back(Relational{Quant::Universal, pos(prev), Quant::Universal, pos(o2), verb, false});
	core.insert(core.end(), list3.begin(), list3.end());
	core.insert(core.end(), list4.begin(), list4.end());
	witness_chain(4 * d, p, core);
	witness_chain(5 * d, q, core);
	return core;
}

Instance make_constructed_relational(const ForallForallSpec &spec, const GenParams &params,
                                     uint64_t seed, const ProverConfig &prover) {
	int core_size = 6 * spec.d;
	if (spec.d < 1 || spec.s < core_size)
		throw std::invalid_argument("ForallForallSpec: need d >= 1 and s >= 6d");

	Rng rng(seed);
	int budget = kConstructRetryBudget;
	for (;;) {
		if (--budget < 0)
			throw ConstructionStuck("forall-forall construction exceeded " +
			                        std::to_string(kConstructRetryBudget) + " resamples");

		// The core may need more distinct nouns than the generation slice.
		int n_pool = std::max(params.n, core_size);
		std::vector<Sentence> core =
		    build_forall_forall(spec, n_pool, std::max(1, params.v), rng);
		if (spec.target == Status::Satisfiable) {
			// Reverse one monadic implication among the first four chains.
			auto chain = universal_indices(core);
			reverse_implication(core[chain[static_cast<size_t>(rng.below(chain.size()))]]);
		}

		std::vector<Sentence> padding;
		for (int i = core_size; i < spec.s; ++i)
			padding.push_back(sample_sentence(Fragment::R, params, rng));

		struct Tagged {
			Sentence s;
			bool core;
		};
		std::vector<Tagged> all;
		all.reserve(static_cast<size_t>(spec.s));
		for (auto &s : core) all.push_back({std::move(s), true});
		for (auto &s : padding) all.push_back({s, false});
		for (size_t i = 0; i + 1 < all.size(); ++i) {
			size_t j = i + static_cast<size_t>(rng.below(all.size() - i));
			std::swap(all[i], all[j]);
		}
		std::vector<Sentence> phi;
		phi.reserve(all.size());
		for (auto &t : all) phi.push_back(std::move(t.s));

		Instance inst;
		inst.fragment = Fragment::R;
		inst.seed = seed;
		inst.params = params;
		inst.params.s = spec.s;
		inst.construction = "forallforall";

		if (spec.target == Status::Unsatisfiable) {
			if (!padding.empty()) {
				ProverResult pad = run_prover(to_tptp_anonymous(padding), prover);
				if (pad.status != Szs::Satisfiable) continue;
			}
			ProverResult full = run_prover(to_tptp_anonymous(phi), prover);
			if (full.status != Szs::Unsatisfiable) continue;
			// "Due entirely to the configuration": the refutation may only
			// touch core premises.
			bool clean = true;
			for (const auto &name : used_axiom_names(full.raw)) {
				size_t idx = 0;
				bool numeric = name.size() >= 2 && name[0] == 's';
				for (size_t at = 1; numeric && at < name.size(); ++at) {
					if (name[at] < '0' || name[at] > '9') numeric = false;
					else idx = idx * 10 + static_cast<size_t>(name[at] - '0');
				}
				if (!numeric || idx == 0 || idx > all.size() || !all[idx - 1].core) {
					clean = false;
					break;
				}
			}
			if (!clean) continue;
			inst.label = Status::Unsatisfiable;
			inst.proof = proof_stats(full.raw, spec.s);
			inst.config = ForbiddenConfig{ForallForallCfg{spec.d}, 6 * spec.d};
		} else {
			ProverResult full = run_prover(to_tptp_anonymous(phi), prover);
			if (full.status != Szs::Satisfiable) continue;
			inst.label = Status::Satisfiable;
		}
		inst.sentences = std::move(phi);
		return inst;
	}
}

} // namespace fragsat
