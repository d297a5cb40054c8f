#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fragsat/decide.hpp"
#include "fragsat/gen.hpp"
#include "fragsat/rng.hpp"
#include "fragsat/syntax.hpp"
#include "fragsat/vocab.hpp"

namespace fragsat {

enum class ChainKind : uint8_t { PathI, PathII, PathIII, Mutual };

struct ChainSpec {
	int d = 2;                    // chain length = ForbiddenConfig size
	ChainKind kind = ChainKind::PathIII;
	Status target = Status::Unsatisfiable;
	int s = 20;                   // total instance size after padding
};

struct ForallForallSpec {
	int d = 1;                    // core has 6d sentences
	Status target = Status::Unsatisfiable;
	int s = 20;                   // ≥ 6d
	std::optional<std::vector<bool>> witness_polarities; // 2(d−1) ±r draws; absent → uniform
};

// The unsat core only: d universal chain sentences + 1 triggering existential
// (PathI/II/III: d+1 sentences over d+1 distinct nouns), or two opposite
// implication chains of length d each (Mutual: 2d sentences over 2d−1 nouns).
// Nouns are drawn without replacement from the first n_nouns of vocab order.
// Throws VocabTooSmall.
std::vector<Sentence> build_chain(const ChainSpec &spec, int n_nouns, Rng &rng);

// Full instance: core + (s − core) S† padding at `params`, padding resampled
// until the minimal ForbiddenConfig size equals d exactly (unsat target) or
// decide_graph says Satisfiable after reversing one chain implication (sat
// target); sentences shuffled. Label verified by decide_graph.
Instance make_constructed_syllogistic(const ChainSpec &spec, const GenParams &params, uint64_t seed);

// The Appendix ∀∀ schema, exactly 6d sentences over 6d fresh nouns and one
// verb. Throws VocabTooSmall (< 6d nouns or no verb).
std::vector<Sentence> build_forall_forall(const ForallForallSpec &spec, int n_nouns, int n_verbs,
                                          Rng &rng);

// Full R instance around the ∀∀ core: padding alone satisfiable and ATP
// refutation premises ⊆ core (unsat target), or one of the first four chains'
// implications reversed + verified Satisfiable (sat target).
Instance make_constructed_relational(const ForallForallSpec &spec, const GenParams &params,
                                     uint64_t seed, const ProverConfig &prover);

inline constexpr int kConstructRetryBudget = 10'000;

} // namespace fragsat
