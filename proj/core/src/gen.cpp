#include "fragsat/gen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fragsat/errors.hpp"
#include "fragsat/fol.hpp"

namespace fragsat {

namespace {

int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5)); }

} // namespace

GenParams default_params(Fragment f, int s) {
	GenParams p;
	p.s = s;
	switch (f) {
	case Fragment::S:
	case Fragment::SDag:
		p.p_u = 0.8;
		p.p_sbar = f == Fragment::SDag ? 0.5 : 0.0;
		p.p_obar = 0.5;
		p.n = round_half_up(0.8 * s);
		break;
	case Fragment::R:
	case Fragment::RDag:
		p.p_r = 0.2;
		p.p_u = 0.8;
		p.p_uu = 0.8;
		p.p_vbar = 0.5;
		// p_obar drives the copula negation of the syllogistic majority in both
		// relational fragments; noun negation inside relational sentences is a
		// grammar property of RDag, not a parameter (see draw_sentence).
		p.p_obar = 0.5;
		if (f == Fragment::RDag) {
			p.p_sbar = 0.5;
			p.n = round_half_up(0.64 * s);
		} else {
			p.n = round_half_up(0.6 * s);
		}
		p.v = std::max(1, round_half_up(0.15 * s));
		break;
	case Fragment::SRel:
	case Fragment::SRelNeg:
		p.p_u = 0.8;
		p.p_obar = 0.5;
		p.p_rbar = f == Fragment::SRelNeg ? 0.5 : 0.0;
		p.n = round_half_up(0.59 * s + 0.225);
		break;
	}
	return p;
}

namespace {

int32_t pick_noun(const GenParams &p, Rng &rng) {
	return static_cast<int32_t>(rng.below(static_cast<uint64_t>(std::max(1, p.n))));
}

int32_t pick_verb(const GenParams &p, Rng &rng) {
	return static_cast<int32_t>(rng.below(static_cast<uint64_t>(std::max(1, p.v))));
}

Sentence draw_sentence(Fragment f, const GenParams &p, Rng &rng) {
	bool relational_fragment = f == Fragment::R || f == Fragment::RDag;
	bool relative_fragment = f == Fragment::SRel || f == Fragment::SRelNeg;

	if (relative_fragment) {
		Relative r;
		r.q = rng.bernoulli(p.p_u) ? Quant::Universal : Quant::Existential;
		r.head = pick_noun(p, rng);
		bool rbar = f == Fragment::SRelNeg && rng.bernoulli(p.p_rbar);
		r.rel = {pick_noun(p, rng), !rbar};
		r.predicate = {pick_noun(p, rng), !rng.bernoulli(p.p_obar)};
		return r;
	}
	if (relational_fragment && rng.bernoulli(p.p_r)) {
		Relational r;
		r.sq = rng.bernoulli(p.p_u) ? Quant::Universal : Quant::Existential;
		r.oq = rng.bernoulli(p.p_uu) ? Quant::Universal : Quant::Existential;
		bool sbar = f == Fragment::RDag && rng.bernoulli(p.p_sbar);
		bool obar = f == Fragment::RDag && rng.bernoulli(p.p_obar);
		r.subject = {pick_noun(p, rng), !sbar};
		r.object = {pick_noun(p, rng), !obar};
		r.verb = pick_verb(p, rng);
		r.verb_positive = !rng.bernoulli(p.p_vbar);
		return r;
	}
	Syllogistic syl;
	syl.q = rng.bernoulli(p.p_u) ? Quant::Universal : Quant::Existential;
	// Negated subjects exist only in the dagger fragments.
	bool sbar = (f == Fragment::SDag || f == Fragment::RDag) && rng.bernoulli(p.p_sbar);
	syl.subject = {pick_noun(p, rng), !sbar};
	syl.predicate = {pick_noun(p, rng), !rng.bernoulli(p.p_obar)};
	return syl;
}

} // namespace

Sentence sample_sentence(Fragment f, const GenParams &p, Rng &rng) {
	for (int attempt = 0; attempt < 1000; ++attempt) {
		Sentence s = draw_sentence(f, p, rng);
		if (!is_self_inconsistent(s)) return s;
	}
	throw GenerationStuck("rejection sampling exceeded 1000 attempts (degenerate vocabulary slice?)");
}

Instance generate_instance(Fragment f, const GenParams &p, uint64_t seed) {
	Instance inst;
	inst.fragment = f;
	inst.params = p;
	inst.seed = seed;
	inst.construction = "random";
	Rng rng(seed);
	inst.sentences.reserve(p.s);
	for (int i = 0; i < p.s; ++i) inst.sentences.push_back(sample_sentence(f, p, rng));
	return inst;
}

std::string_view labeler_name(Labeler l) {
	switch (l) {
	case Labeler::Auto: return "auto";
	case Labeler::Graph: return "graph";
	case Labeler::Monadic: return "monadic";
	case Labeler::Oracle: return "oracle";
	case Labeler::Atp: return "atp";
	}
	return "auto";
}

std::optional<Labeler> labeler_from_name(std::string_view name) {
	if (name == "auto") return Labeler::Auto;
	if (name == "graph") return Labeler::Graph;
	if (name == "monadic") return Labeler::Monadic;
	if (name == "oracle") return Labeler::Oracle;
	if (name == "atp") return Labeler::Atp;
	return std::nullopt;
}

Method resolve_labeler(Labeler l, Fragment f) {
	switch (l) {
	case Labeler::Graph: return Method::Graph;
	case Labeler::Monadic: return Method::Monadic;
	case Labeler::Oracle: return Method::Oracle;
	case Labeler::Atp: return Method::Atp;
	case Labeler::Auto: break;
	}
	switch (f) {
	case Fragment::S:
	case Fragment::SDag: return Method::Graph;
	case Fragment::SRel:
	case Fragment::SRelNeg: return Method::Monadic;
	case Fragment::R:
	case Fragment::RDag: return Method::Atp;
	}
	return Method::Graph;
}

namespace {

// Labels in place; Unknown (prover/oracle timeout) → false so the caller can
// regenerate the slot.
bool label_instance(Instance &inst, Method method, const CorpusOptions &opts) {
	switch (method) {
	case Method::Graph: {
		Verdict v = decide_graph(inst.sentences);
		inst.label = v.status;
		inst.config = v.config;
		return true;
	}
	case Method::Monadic: {
		inst.label = decide_monadic(inst.sentences).status;
		return true;
	}
	case Method::Oracle: {
		Verdict v = bounded_model_search(inst.sentences, opts.max_domain);
		if (v.status == Status::Unknown) return false;
		inst.label = v.status;
		return true;
	}
	case Method::Atp:
		break;
	}
	if (!opts.prover) throw ProverUnavailable("atp labeling requested but no prover is configured");
	// Labeling only needs predicate identity, not real words; the anonymous
	// rendering keeps this path independent of the caller's word list.
	ProverResult r = run_prover(to_tptp_anonymous(inst.sentences), *opts.prover);
	switch (r.status) {
	case Szs::Unsatisfiable:
		inst.label = Status::Unsatisfiable;
		inst.proof = proof_stats(r.raw, static_cast<int>(inst.sentences.size()));
		return true;
	case Szs::Satisfiable:
		inst.label = Status::Satisfiable;
		return true;
	case Szs::Timeout:
		return false;
	case Szs::Error:
		break;
	}
	throw UnparseableOutput("prover reported SZS " + r.status_word);
}

} // namespace

std::vector<Instance> generate_corpus(Fragment f, int lo, int hi, int per_size, uint64_t master_seed,
                                      const CorpusOptions &opts) {
	if (lo < 2 || hi < lo || per_size < 0)
		throw std::invalid_argument("generate_corpus: bad size range");
	Method method = resolve_labeler(opts.labeler, f);
	if (method == Method::Atp && !opts.prover)
		throw ProverUnavailable("atp labeling requested but no prover is configured");

	std::vector<Instance> out;
	out.reserve(static_cast<size_t>(hi - lo + 1) * static_cast<size_t>(per_size));
	for (int s = lo; s <= hi; ++s) {
		GenParams p = opts.params ? *opts.params : default_params(f, s);
		p.s = s;
		for (int index = 0; index < per_size; ++index) {
			bool labeled = false;
			for (int attempt = 0; attempt <= opts.max_regenerations && !labeled; ++attempt) {
				uint64_t seed = mix_seed({master_seed, static_cast<uint64_t>(f),
				                          static_cast<uint64_t>(s), static_cast<uint64_t>(index),
				                          static_cast<uint64_t>(attempt)});
				Instance inst = generate_instance(f, p, seed);
				labeled = label_instance(inst, method, opts);
				if (labeled) out.push_back(std::move(inst));
			}
			if (!labeled)
				throw GenerationStuck("labeling timed out " +
				                      std::to_string(opts.max_regenerations + 1) +
				                      " times for one slot (s=" + std::to_string(s) + ")");
		}
	}
	return out;
}

std::vector<Instance> filter_hard(std::vector<Instance> corpus, int l_min, Rng &rng) {
	if (l_min <= 0) return corpus;

	size_t sat_in = 0, unsat_in = 0;
	for (const auto &inst : corpus) {
		if (!inst.label) throw NoProofFound("filter_hard requires labeled instances");
		if (*inst.label == Status::Satisfiable) ++sat_in;
		else ++unsat_in;
	}

	std::vector<size_t> kept_unsat, sat_indices;
	for (size_t i = 0; i < corpus.size(); ++i) {
		const auto &inst = corpus[i];
		if (*inst.label == Status::Satisfiable) {
			sat_indices.push_back(i);
			continue;
		}
		if (!inst.proof)
			throw NoProofFound("unsatisfiable instance without proof statistics in filter_hard");
		if (inst.proof->l >= l_min) kept_unsat.push_back(i);
	}
	if (kept_unsat.empty()) throw EmptyHardSet("no unsatisfiable instance has proof length >= " +
	                                           std::to_string(l_min));

	// Subsample satisfiable instances to restore the original class balance.
	size_t want_sat = sat_indices.size();
	if (unsat_in > 0) {
		double ratio = static_cast<double>(sat_in) / static_cast<double>(unsat_in);
		want_sat = std::min(sat_indices.size(),
		                    static_cast<size_t>(std::llround(ratio * static_cast<double>(
		                                                                 kept_unsat.size()))));
	}
	for (size_t i = 0; i < want_sat; ++i) {
		size_t j = i + static_cast<size_t>(rng.below(sat_indices.size() - i));
		std::swap(sat_indices[i], sat_indices[j]);
	}
	sat_indices.resize(want_sat);

	std::vector<size_t> keep = std::move(kept_unsat);
	keep.insert(keep.end(), sat_indices.begin(), sat_indices.end());
	std::sort(keep.begin(), keep.end());

	std::vector<Instance> out;
	out.reserve(keep.size());
	for (size_t i : keep) {
		corpus[i].construction = "hard-filtered";
		out.push_back(std::move(corpus[i]));
	}
	return out;
}

} // namespace fragsat
