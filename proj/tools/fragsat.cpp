// fragsat: umbrella CLI over the fragment toolkit. Subcommands: gen,
// construct, decide, stats, tptp, parse, realize, dump-grammar. Exit 0 on
// success, 2 on usage errors, 1 otherwise with `error: <Code>: <message>`.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fragsat/fragsat.hpp"

namespace {

using namespace fragsat;

// --------------------------------------------------------- shared helpers

Vocabulary resolve_vocab(const std::string &name) {
	if (name == "common" || name == "fantasy") return builtin_vocabulary(name);
	return load_vocabulary_file(name);
}

struct VocabOptions {
	std::string vocab = "common";
	std::string split = "train";
	double split_fraction = 0.5;
	uint64_t vocab_seed = 0;
};

void add_vocab_options(CLI::App *cmd, VocabOptions &opt, bool corpus = true) {
	cmd->add_option("--vocab", opt.vocab, "builtin word list (common|fantasy) or a .vocab file");
	// Text utilities (parse/realize) default to the whole word list; corpus
	// producers draw from one split half so train and eval never share words.
	if (!corpus) opt.split = "full";
	cmd->add_option("--split", opt.split, "which vocabulary half realizes the corpus")
	    ->check(CLI::IsMember({"train", "eval", "full"}));
	cmd->add_option("--split-fraction", opt.split_fraction,
	                "fraction of each word class in the eval half")
	    ->check(CLI::Range(0.0, 1.0));
	cmd->add_option("--vocab-seed", opt.vocab_seed, "seed for the train/eval vocabulary split");
}

Vocabulary resolve_split_vocab(const VocabOptions &opt) {
	if (opt.split == "full") return resolve_vocab(opt.vocab);
	auto halves = split_vocabulary(resolve_vocab(opt.vocab), opt.split_fraction, opt.vocab_seed);
	return opt.split == "eval" ? halves.second : halves.first;
}

ProverConfig resolve_prover(const std::string &tmpl, double timeout) {
	if (!tmpl.empty()) return prover_config_from_template(tmpl, timeout);
	if (auto found = find_prover(timeout)) return *found;
	throw ProverUnavailable("no prover found; set FRAGSAT_PROVER, pass --prover, or put "
	                        "fragprove on PATH");
}

void write_records(const std::vector<Record> &records, const std::string &out) {
	if (out.empty()) {
		for (const auto &r : records) std::cout << record_to_json(r) << '\n';
		return;
	}
	emit_jsonl(records, out);
}

std::string read_text_input(const std::string &path) {
	if (path.empty() || path == "-") {
		std::stringstream buf;
		buf << std::cin.rdbuf();
		return buf.str();
	}
	std::ifstream in(path, std::ios::binary);
	if (!in) throw IoError("cannot open " + path);
	std::stringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

Fragment fragment_arg(const std::string &name) {
	auto f = fragment_from_name(name);
	if (!f) throw ParseError("unknown fragment: " + name);
	return *f;
}

// Records get ids <fragment>-<construction>-s<size>-<index>, the index
// counting records of that size in corpus order.
std::vector<Record> instances_to_records(const std::vector<Instance> &corpus,
                                         const Vocabulary &voc, const std::string &split) {
	std::map<int, int> next_index;
	std::vector<Record> records;
	records.reserve(corpus.size());
	for (const auto &inst : corpus) {
		int idx = next_index[inst.params.s]++;
		std::string id = std::string(fragment_name(inst.fragment)) + "-" + inst.construction +
		                 "-s" + std::to_string(inst.params.s) + "-" + std::to_string(idx);
		records.push_back(to_record(inst, voc, id, split));
	}
	return records;
}

// ------------------------------------------------------------------- gen

struct GenOpts {
	std::string fragment = "sdag";
	int min_s = 15;
	int max_s = 30;
	int per_size = 500;
	uint64_t seed = 0;
	std::string label_with = "auto";
	std::string out;
	VocabOptions vocab;
	std::string prover;
	double timeout = 10.0;
	int max_domain = kOracleMaxDomainLimit;
	int max_regenerations = 50;
	int filter_l_min = 0;
	// GenParams overrides; negative = keep the per-size default.
	double p_u = -1, p_sbar = -1, p_obar = -1, p_r = -1, p_vbar = -1, p_uu = -1, p_rbar = -1;
	int n = -1, v = -1;
};

void run_gen_command(const GenOpts &opt) {
	Fragment f = fragment_arg(opt.fragment);
	Vocabulary voc = resolve_split_vocab(opt.vocab);

	CorpusOptions copts;
	auto labeler = labeler_from_name(opt.label_with);
	if (!labeler) throw ParseError("unknown labeler: " + opt.label_with);
	copts.labeler = *labeler;
	copts.max_domain = opt.max_domain;
	copts.max_regenerations = opt.max_regenerations;
	if (resolve_labeler(copts.labeler, f) == Method::Atp)
		copts.prover = resolve_prover(opt.prover, opt.timeout);

	auto apply_overrides = [&](GenParams p) {
		if (opt.p_u >= 0) p.p_u = opt.p_u;
		if (opt.p_sbar >= 0) p.p_sbar = opt.p_sbar;
		if (opt.p_obar >= 0) p.p_obar = opt.p_obar;
		if (opt.p_r >= 0) p.p_r = opt.p_r;
		if (opt.p_vbar >= 0) p.p_vbar = opt.p_vbar;
		if (opt.p_uu >= 0) p.p_uu = opt.p_uu;
		if (opt.p_rbar >= 0) p.p_rbar = opt.p_rbar;
		if (opt.n > 0) p.n = opt.n;
		if (opt.v > 0) p.v = opt.v;
		return p;
	};
	bool overridden = opt.p_u >= 0 || opt.p_sbar >= 0 || opt.p_obar >= 0 || opt.p_r >= 0 ||
	                  opt.p_vbar >= 0 || opt.p_uu >= 0 || opt.p_rbar >= 0 || opt.n > 0 ||
	                  opt.v > 0;

	std::vector<Instance> corpus;
	if (overridden) {
		// Per-size calls keep the (seed, fragment, s, index) derivation
		// identical to the single-range call while the defaults vary with s.
		for (int s = opt.min_s; s <= opt.max_s; ++s) {
			copts.params = apply_overrides(default_params(f, s));
			auto block = generate_corpus(f, s, s, opt.per_size, opt.seed, copts);
			corpus.insert(corpus.end(), block.begin(), block.end());
		}
	} else {
		corpus = generate_corpus(f, opt.min_s, opt.max_s, opt.per_size, opt.seed, copts);
	}

	if (opt.filter_l_min > 0) {
		Rng rng(mix_seed({opt.seed, 0x686172646cULL})); // tweak: "hardl"
		corpus = filter_hard(std::move(corpus), opt.filter_l_min, rng);
	}

	write_records(instances_to_records(corpus, voc, opt.vocab.split), opt.out);
}

void setup_gen_command(CLI::App &app) {
	auto opt = std::make_shared<GenOpts>();
	CLI::App *cmd = app.add_subcommand("gen", "generate a labeled random corpus");

	cmd->add_option("--fragment", opt->fragment, "fragment tag")
	    ->check(CLI::IsMember({"s", "sdag", "r", "rdag", "srel", "srelneg", "sreln"}));
	cmd->add_option("--min-s", opt->min_s, "smallest instance size");
	cmd->add_option("--max-s", opt->max_s, "largest instance size");
	cmd->add_option("--per-size", opt->per_size, "instances per size");
	cmd->add_option("--seed", opt->seed, "master seed");
	cmd->add_option("--label-with", opt->label_with, "labeling backend")
	    ->check(CLI::IsMember({"auto", "graph", "monadic", "oracle", "atp"}));
	cmd->add_option("--out", opt->out, "output JSONL path (default stdout)");
	add_vocab_options(cmd, opt->vocab);
	cmd->add_option("--prover", opt->prover, "prover command template ({file}, {timeout})");
	cmd->add_option("--timeout", opt->timeout, "prover timeout in seconds");
	cmd->add_option("--max-domain", opt->max_domain, "oracle domain bound");
	cmd->add_option("--max-regenerations", opt->max_regenerations,
	                "regeneration attempts on inconclusive labels");
	cmd->add_option("--filter-l-min", opt->filter_l_min,
	                "keep only unsat records with proof length >= this (0 = off)");
	cmd->add_option("--p-u", opt->p_u, "P(universal quantifier)")->check(CLI::Range(0.0, 1.0));
	cmd->add_option("--p-sbar", opt->p_sbar, "P(negated subject)")->check(CLI::Range(0.0, 1.0));
	cmd->add_option("--p-obar", opt->p_obar, "P(negated object/predicate)")
	    ->check(CLI::Range(0.0, 1.0));
	cmd->add_option("--p-r", opt->p_r, "P(relational sentence)")->check(CLI::Range(0.0, 1.0));
	cmd->add_option("--p-vbar", opt->p_vbar, "P(negated verb)")->check(CLI::Range(0.0, 1.0));
	cmd->add_option("--p-uu", opt->p_uu, "P(universal inner quantifier)")
	    ->check(CLI::Range(0.0, 1.0));
	cmd->add_option("--p-rbar", opt->p_rbar, "P(negated relative clause)")
	    ->check(CLI::Range(0.0, 1.0));
	cmd->add_option("--n", opt->n, "noun slice size")->check(CLI::PositiveNumber);
	cmd->add_option("--v", opt->v, "verb slice size")->check(CLI::PositiveNumber);

	cmd->callback([opt]() { run_gen_command(*opt); });
}

// -------------------------------------------------------------- construct

struct ConstructOpts {
	std::string fragment = "sdag";
	int d_min = 1;
	int d_max = 3;
	int s = 20;
	int count = 100;
	std::string label = "balanced";
	uint64_t seed = 0;
	std::string out;
	std::string kind = "path-iii";
	bool paired = false;
	VocabOptions vocab;
	std::string prover;
	double timeout = 10.0;
};

void run_construct_command(const ConstructOpts &opt) {
	Fragment f = fragment_arg(opt.fragment);
	Vocabulary voc = resolve_split_vocab(opt.vocab);
	ChainKind kind = opt.kind == "path-i"    ? ChainKind::PathI
	                 : opt.kind == "path-ii" ? ChainKind::PathII
	                 : opt.kind == "mutual"  ? ChainKind::Mutual
	                                         : ChainKind::PathIII;
	std::optional<ProverConfig> prover;
	if (f == Fragment::R) prover = resolve_prover(opt.prover, opt.timeout);

	GenParams params = default_params(f, opt.s);
	int span = opt.d_max - opt.d_min + 1;
	if (opt.d_min < 1 || span < 1) throw ParseError("need 1 <= --d-min <= --d-max");

	auto make = [&](int d, Status target, uint64_t iseed) {
		if (f == Fragment::SDag)
			return make_constructed_syllogistic({d, kind, target, opt.s}, params, iseed);
		return make_constructed_relational({d, target, opt.s, std::nullopt}, params, iseed,
		                                   *prover);
	};

	std::vector<Instance> corpus;
	for (int i = 0; i < opt.count; ++i) {
		int d = opt.d_min + i % span;
		Status target = opt.label == "sat" ? Status::Satisfiable
		                : opt.label == "unsat"
		                    ? Status::Unsatisfiable
		                    : (i % 2 ? Status::Satisfiable : Status::Unsatisfiable);
		uint64_t iseed = mix_seed({opt.seed, static_cast<uint64_t>(f), static_cast<uint64_t>(d),
		                           static_cast<uint64_t>(i)});
		corpus.push_back(make(d, target, iseed));
		if (opt.paired) {
			Status twin = target == Status::Satisfiable ? Status::Unsatisfiable
			                                            : Status::Satisfiable;
			corpus.push_back(make(d, twin, iseed));
		}
	}
	write_records(instances_to_records(corpus, voc, opt.vocab.split), opt.out);
}

void setup_construct_command(CLI::App &app) {
	auto opt = std::make_shared<ConstructOpts>();
	CLI::App *cmd = app.add_subcommand("construct", "emit constructed hard instances");

	cmd->add_option("--fragment", opt->fragment, "sdag (chains) or r (forall-forall cores)")
	    ->check(CLI::IsMember({"sdag", "r"}));
	cmd->add_option("--d-min", opt->d_min, "smallest configuration size");
	cmd->add_option("--d-max", opt->d_max, "largest configuration size");
	cmd->add_option("--s", opt->s, "instance size after padding");
	cmd->add_option("--count", opt->count, "number of instances");
	cmd->add_option("--label", opt->label, "target labels")
	    ->check(CLI::IsMember({"sat", "unsat", "balanced"}));
	cmd->add_option("--seed", opt->seed, "master seed");
	cmd->add_option("--out", opt->out, "output JSONL path (default stdout)");
	cmd->add_option("--kind", opt->kind, "chain kind (sdag only)")
	    ->check(CLI::IsMember({"path-i", "path-ii", "path-iii", "mutual"}));
	cmd->add_flag("--paired", opt->paired, "emit the opposite-label twin of every instance");
	add_vocab_options(cmd, opt->vocab);
	cmd->add_option("--prover", opt->prover, "prover command template (r only)");
	cmd->add_option("--timeout", opt->timeout, "prover timeout in seconds");

	cmd->callback([opt]() { run_construct_command(*opt); });
}

// ----------------------------------------------------------------- decide

struct DecideOpts {
	std::string in;
	std::string out;
	std::string method = "graph";
	int max_domain = kOracleMaxDomainLimit;
	uint64_t budget = kOracleDefaultBudget;
	std::string prover;
	double timeout = 10.0;
};

void run_decide_command(const DecideOpts &opt) {
	auto records = read_jsonl(opt.in);
	Vocabulary voc = vocabulary_from_records(records);
	auto method = method_from_name(opt.method);
	if (!method) throw ParseError("unknown method: " + opt.method);

	DecideOptions dopts;
	dopts.max_domain = opt.max_domain;
	dopts.budget = opt.budget;
	if (*method == Method::Atp) dopts.prover = resolve_prover(opt.prover, opt.timeout);

	int unknown = 0;
	for (auto &r : records) {
		Verdict vd;
		try {
			vd = decide(record_sentences(r, voc), *method, voc, dopts);
		} catch (const BudgetExceeded &) {
			vd.status = Status::Unknown; // instance too big for this backend
		}
		if (vd.status == Status::Satisfiable) {
			r.label = "sat";
			r.config.reset();
		} else if (vd.status == Status::Unsatisfiable) {
			r.label = "unsat";
			if (vd.config)
				r.config = std::pair(std::string(vd.config->kind_name()), vd.config->size);
		} else {
			++unknown; // inconclusive: record kept as-is
		}
	}
	if (unknown > 0)
		std::cerr << "decide: " << unknown << " of " << records.size()
		          << " records inconclusive; labels kept\n";
	write_records(records, opt.out);
}

void setup_decide_command(CLI::App &app) {
	auto opt = std::make_shared<DecideOpts>();
	CLI::App *cmd = app.add_subcommand("decide", "re-label a corpus with a chosen backend");

	cmd->add_option("--in", opt->in, "input JSONL path")->required();
	cmd->add_option("--out", opt->out, "output JSONL path (default stdout)");
	cmd->add_option("--method", opt->method, "decision backend")
	    ->check(CLI::IsMember({"graph", "monadic", "oracle", "atp"}));
	cmd->add_option("--max-domain", opt->max_domain, "oracle domain bound");
	cmd->add_option("--budget", opt->budget, "oracle node budget");
	cmd->add_option("--prover", opt->prover, "prover command template (atp only)");
	cmd->add_option("--timeout", opt->timeout, "prover timeout in seconds");

	cmd->callback([opt]() { run_decide_command(*opt); });
}

// ------------------------------------------------------------------ stats

struct StatsOpts {
	std::string in;
	std::string out;
};

void run_stats_command(const StatsOpts &opt) {
	std::string json = stats_to_json(stats(read_jsonl(opt.in)));
	if (opt.out.empty()) {
		std::cout << json << '\n';
		return;
	}
	std::ofstream f(opt.out, std::ios::binary);
	if (!f || !(f << json << '\n')) throw IoError("cannot write " + opt.out);
}

void setup_stats_command(CLI::App &app) {
	auto opt = std::make_shared<StatsOpts>();
	CLI::App *cmd = app.add_subcommand("stats", "print corpus statistics as JSON");
	cmd->add_option("--in", opt->in, "input JSONL path")->required();
	cmd->add_option("--out", opt->out, "output path (default stdout)");
	cmd->callback([opt]() { run_stats_command(*opt); });
}

// ------------------------------------------------------------------- tptp

struct TptpOpts {
	std::string in;
	std::string out;
};

void run_tptp_command(const TptpOpts &opt) {
	auto records = read_jsonl(opt.in);
	Vocabulary voc = vocabulary_from_records(records);
	std::filesystem::path dir(opt.out);
	std::error_code ec;
	std::filesystem::create_directories(dir, ec);
	if (ec) throw IoError("cannot create " + opt.out + ": " + ec.message());
	for (const auto &r : records) {
		std::filesystem::path path = dir / (r.id + ".p");
		std::ofstream f(path, std::ios::binary);
		if (!f || !(f << to_tptp(record_sentences(r, voc), voc)))
			throw IoError("cannot write " + path.string());
	}
}

void setup_tptp_command(CLI::App &app) {
	auto opt = std::make_shared<TptpOpts>();
	CLI::App *cmd = app.add_subcommand("tptp", "export one TPTP problem file per record");
	cmd->add_option("--in", opt->in, "input JSONL path")->required();
	cmd->add_option("--out", opt->out, "output directory")->required();
	cmd->callback([opt]() { run_tptp_command(*opt); });
}

// ---------------------------------------------------------- parse/realize

struct TextOpts {
	std::string in = "-";
	std::string fragment;
	VocabOptions vocab;
};

void run_parse_command(const TextOpts &opt) {
	Vocabulary voc = resolve_split_vocab(opt.vocab);
	std::optional<Fragment> want;
	if (!opt.fragment.empty()) want = fragment_arg(opt.fragment);
	std::istringstream in(read_text_input(opt.in));
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
		Sentence s = parse_sentence(line, voc);
		if (want && !fragment_leq(fragment_of(s), *want))
			throw NotInFragment("line " + std::to_string(lineno) + ": sentence is not in " +
			                    opt.fragment);
		std::cout << to_term(s, voc) << '\n';
	}
}

void run_realize_command(const TextOpts &opt) {
	Vocabulary voc = resolve_split_vocab(opt.vocab);
	std::istringstream in(read_text_input(opt.in));
	std::string line;
	while (std::getline(in, line)) {
		if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
		std::cout << realize(parse_term(line, voc), voc) << '\n';
	}
}

void setup_parse_command(CLI::App &app) {
	auto opt = std::make_shared<TextOpts>();
	CLI::App *cmd = app.add_subcommand("parse", "English sentences (one per line) to terms");
	cmd->add_option("--in", opt->in, "input file (default stdin)");
	cmd->add_option("--fragment", opt->fragment, "require sentences to lie in this fragment")
	    ->check(CLI::IsMember({"s", "sdag", "r", "rdag", "srel", "srelneg", "sreln"}));
	add_vocab_options(cmd, opt->vocab, /*corpus=*/false);
	cmd->callback([opt]() { run_parse_command(*opt); });
}

void setup_realize_command(CLI::App &app) {
	auto opt = std::make_shared<TextOpts>();
	CLI::App *cmd = app.add_subcommand("realize", "terms (one per line) to English");
	cmd->add_option("--in", opt->in, "input file (default stdin)");
	add_vocab_options(cmd, opt->vocab, /*corpus=*/false);
	cmd->callback([opt]() { run_realize_command(*opt); });
}

void setup_dump_grammar_command(CLI::App &app) {
	CLI::App *cmd = app.add_subcommand("dump-grammar", "print the surface grammar table");
	cmd->callback([]() { std::cout << dump_grammar(); });
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"fragsat: random and constructed satisfiability corpora for "
	             "controlled English fragments"};
	app.require_subcommand(1);
	setup_gen_command(app);
	setup_construct_command(app);
	setup_decide_command(app);
	setup_stats_command(app);
	setup_tptp_command(app);
	setup_parse_command(app);
	setup_realize_command(app);
	setup_dump_grammar_command(app);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int rc = app.exit(e);
		return rc == 0 ? 0 : 2; // usage errors exit 2; --help exits 0
	} catch (const Error &e) {
		std::cerr << "error: " << e.what() << '\n';
		return 1;
	} catch (const std::exception &e) {
		std::cerr << "error: Internal: " << e.what() << '\n';
		return 1;
	}
	return 0;
}
