#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fragsat/atp.hpp"
#include "fragsat/decide.hpp"
#include "fragsat/rng.hpp"
#include "fragsat/syntax.hpp"

namespace fragsat {

struct GenParams {
	double p_u = 0.0;    // universal (outer quantifier)
	double p_sbar = 0.0; // negated subject noun
	double p_obar = 0.0; // negated object: predicate polarity (S†/Srel*) / object noun (R†)
	double p_r = 0.0;    // relational sentence
	double p_vbar = 0.0; // negated verb
	double p_uu = 0.0;   // universal inner quantifier
	double p_rbar = 0.0; // negated relative clause
	int n = 0;           // noun slice size
	int v = 0;           // verb slice size
	int s = 0;           // sentences per instance
};

// The paper's §3 constants with n = round(ratio·s) (round half up); v floors
// at 1 for the relational fragments.
GenParams default_params(Fragment f, int s);

struct Instance {
	Fragment fragment = Fragment::SDag;
	std::vector<Sentence> sentences;
	std::optional<Status> label;
	uint64_t seed = 0;
	GenParams params;
	std::string construction = "random"; // "random" | "chain" | "forallforall" | "hard-filtered"
	std::optional<ProofStats> proof;
	std::optional<ForbiddenConfig> config;
};

// One sentence of f at params p; rejection-resamples self-inconsistent draws
// (≤1000 attempts → GenerationStuck).
Sentence sample_sentence(Fragment f, const GenParams &p, Rng &rng);

Instance generate_instance(Fragment f, const GenParams &p, uint64_t seed);

enum class Labeler : uint8_t { Auto, Graph, Monadic, Oracle, Atp };

std::string_view labeler_name(Labeler l);
std::optional<Labeler> labeler_from_name(std::string_view name);

// graph for S/S†, monadic for Srel/SrelN, atp for R/R†.
Method resolve_labeler(Labeler l, Fragment f);

struct CorpusOptions {
	Labeler labeler = Labeler::Auto;
	std::optional<ProverConfig> prover;     // required when the labeler resolves to atp
	int max_domain = kOracleMaxDomainLimit; // oracle labeler only
	std::optional<GenParams> params;        // override default_params (n/v/probabilities); s still sweeps
	int max_regenerations = 50;             // per slot, on prover Timeout
};

// per_size labeled instances for every s in [lo, hi]; instance seeds are
// mix(master_seed, fragment, s, index, attempt). Prover timeouts regenerate
// the slot with attempt+1.
std::vector<Instance> generate_corpus(Fragment f, int lo, int hi, int per_size, uint64_t master_seed,
                                      const CorpusOptions &opts = {});

// Drop unsat instances with l < l_min, then subsample sat instances to
// restore the input satisfiable fraction within ±0.01. Throws EmptyHardSet.
std::vector<Instance> filter_hard(std::vector<Instance> corpus, int l_min, Rng &rng);

} // namespace fragsat
