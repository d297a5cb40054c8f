#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fragsat/gen.hpp"
#include "fragsat/syntax.hpp"
#include "fragsat/vocab.hpp"

namespace fragsat {

// One JSONL line. `sentences` holds canonical terms; `text` the realized
// English block. `config` is attached by graph verdicts (decide subcommand).
struct Record {
	std::string id;
	std::string fragment;
	std::vector<std::string> sentences;
	std::string text;
	std::string label; // "sat" | "unsat"
	int s = 0;
	int n = 0;
	int v = 0;
	std::optional<int> l;
	std::optional<int> d;
	uint64_t seed = 0;
	std::string construction;
	std::string split; // "train" | "eval"
	std::optional<std::pair<std::string, int>> config; // kind, size

	bool operator==(const Record &) const = default;
};

Record to_record(const Instance &inst, const Vocabulary &v, std::string id, std::string split);

// Rebuild the sentence list of a record against a vocabulary (terms → AST).
std::vector<Sentence> record_sentences(const Record &r, const Vocabulary &v);

// Ad-hoc vocabulary covering every word that appears in the records' terms
// (third person = infinitive + "s"); lets decide/tptp/stats run on corpora
// without the original word lists.
Vocabulary vocabulary_from_records(const std::vector<Record> &records);

std::string record_to_json(const Record &r);
Record record_from_json(const std::string &line, int lineno = 0);

void emit_jsonl(const std::vector<Record> &records, const std::string &path);
std::vector<Record> read_jsonl(const std::string &path);

struct CorpusStats {
	int count = 0;
	double sat_fraction = 0.0;
	// l buckets [0,10), [10,20), [20,30), [30,40), [40,∞) as fractions of
	// unsat-with-l records.
	int unsat_with_l = 0;
	std::array<double, 5> l_buckets{};
	double mean_l = 0.0;
	double mean_d = 0.0;
	std::map<int, int> d_histogram;
	struct PerS {
		int count = 0;
		double sat_fraction = 0.0;
	};
	std::map<int, PerS> per_s;
};

CorpusStats stats(const std::vector<Record> &records);

std::string stats_to_json(const CorpusStats &st);

} // namespace fragsat
