#include "fragsat/corpus.hpp"

#include <algorithm>
#include <fstream>

#include "fragsat/errors.hpp"
#include "fragsat/surface.hpp"
#include "json.hpp"

namespace fragsat {

using nlohmann::ordered_json;

Record to_record(const Instance &inst, const Vocabulary &v, std::string id, std::string split) {
	if (!inst.label) throw SchemaError("cannot serialize an unlabeled instance");
	Record r;
	r.id = std::move(id);
	r.fragment = std::string(fragment_name(inst.fragment));
	r.sentences = to_terms(inst.sentences, v);
	r.text = realize_instance(inst.sentences, v);
	r.label = *inst.label == Status::Satisfiable ? "sat" : "unsat";
	r.s = static_cast<int>(inst.sentences.size());
	r.n = inst.params.n;
	r.v = inst.params.v;
	if (inst.proof) {
		r.l = inst.proof->l;
		r.d = inst.proof->d;
	}
	r.seed = inst.seed;
	r.construction = inst.construction;
	r.split = std::move(split);
	if (inst.config) r.config = {inst.config->kind_name(), inst.config->size};
	return r;
}

std::vector<Sentence> record_sentences(const Record &r, const Vocabulary &v) {
	return parse_terms(r.sentences, v);
}

namespace {

// Split a canonical term into its comma-level tokens, parens stripped.
std::vector<std::string> term_tokens(const std::string &term) {
	std::vector<std::string> toks;
	std::string cur;
	for (char c : term) {
		if (c == '(' || c == ')' || c == ',') {
			if (!cur.empty()) toks.push_back(std::move(cur));
			cur.clear();
		} else if (c != ' ') {
			cur += c;
		}
	}
	if (!cur.empty()) toks.push_back(std::move(cur));
	return toks;
}

std::string strip_sign(const std::string &w) {
	return w.empty() || (w[0] != '+' && w[0] != '-') ? w : w.substr(1);
}

void add_unique(std::vector<std::string> &xs, const std::string &w) {
	if (!w.empty() && std::find(xs.begin(), xs.end(), w) == xs.end()) xs.push_back(w);
}

} // namespace

Vocabulary vocabulary_from_records(const std::vector<Record> &records) {
	std::vector<std::string> nouns, verbs;
	for (const auto &r : records) {
		for (const auto &term : r.sentences) {
			auto toks = term_tokens(term);
			if (toks.empty()) throw SchemaError("empty sentence term in record " + r.id);
			if (toks[0] == "all" || toks[0] == "exists") {
				if (toks.size() != 3) throw SchemaError("malformed term in record " + r.id);
				add_unique(nouns, strip_sign(toks[1]));
				add_unique(nouns, strip_sign(toks[2]));
			} else if (toks[0] == "rel") {
				if (toks.size() != 6) throw SchemaError("malformed term in record " + r.id);
				add_unique(nouns, strip_sign(toks[2]));
				add_unique(nouns, strip_sign(toks[4]));
				add_unique(verbs, strip_sign(toks[5]));
			} else if (toks[0] == "relcl") {
				if (toks.size() != 5) throw SchemaError("malformed term in record " + r.id);
				add_unique(nouns, toks[2]);
				add_unique(nouns, strip_sign(toks[3]));
				add_unique(nouns, strip_sign(toks[4]));
			} else {
				throw SchemaError("unknown term head '" + toks[0] + "' in record " + r.id);
			}
		}
	}
	Vocabulary v;
	v.nouns = std::move(nouns);
	for (const auto &inf : verbs) v.verbs.push_back({inf + "s", inf});
	return v;
}

namespace {

ordered_json record_json(const Record &r) {
	ordered_json j;
	j["id"] = r.id;
	j["fragment"] = r.fragment;
	j["sentences"] = r.sentences;
	j["text"] = r.text;
	j["label"] = r.label;
	j["s"] = r.s;
	j["n"] = r.n;
	j["v"] = r.v;
	if (r.l) j["l"] = *r.l;
	if (r.d) j["d"] = *r.d;
	j["seed"] = r.seed;
	j["construction"] = r.construction;
	j["split"] = r.split;
	if (r.config) j["config"] = ordered_json{{"kind", r.config->first}, {"size", r.config->second}};
	return j;
}

[[noreturn]] void schema_fail(int lineno, const std::string &what) {
	std::string where = lineno > 0 ? "line " + std::to_string(lineno) + ": " : "";
	throw SchemaError(where + what);
}

const ordered_json &need(const ordered_json &j, const char *key, int lineno) {
	auto it = j.find(key);
	if (it == j.end()) schema_fail(lineno, std::string("missing field \"") + key + "\"");
	return *it;
}

std::string need_string(const ordered_json &j, const char *key, int lineno) {
	const auto &v = need(j, key, lineno);
	if (!v.is_string()) schema_fail(lineno, std::string("field \"") + key + "\" must be a string");
	return v.get<std::string>();
}

int need_int(const ordered_json &j, const char *key, int lineno) {
	const auto &v = need(j, key, lineno);
	if (!v.is_number_integer() && !v.is_number_unsigned())
		schema_fail(lineno, std::string("field \"") + key + "\" must be an integer");
	return v.get<int>();
}

} // namespace

std::string record_to_json(const Record &r) { return record_json(r).dump(); }

Record record_from_json(const std::string &line, int lineno) {
	ordered_json j;
	try {
		j = ordered_json::parse(line);
	} catch (const std::exception &e) {
		schema_fail(lineno, std::string("invalid JSON: ") + e.what());
	}
	if (!j.is_object()) schema_fail(lineno, "record must be a JSON object");

	static const char *known[] = {"id",   "fragment", "sentences", "text", "label",
	                              "s",    "n",        "v",         "l",    "d",
	                              "seed", "construction", "split", "config"};
	for (auto it = j.begin(); it != j.end(); ++it) {
		bool ok = false;
		for (const char *k : known) ok = ok || it.key() == k;
		if (!ok) schema_fail(lineno, "unknown field \"" + it.key() + "\"");
	}

	Record r;
	r.id = need_string(j, "id", lineno);
	r.fragment = need_string(j, "fragment", lineno);
	if (!fragment_from_name(r.fragment))
		schema_fail(lineno, "unknown fragment tag \"" + r.fragment + "\"");
	const auto &sentences = need(j, "sentences", lineno);
	if (!sentences.is_array()) schema_fail(lineno, "field \"sentences\" must be an array");
	for (const auto &s : sentences) {
		if (!s.is_string()) schema_fail(lineno, "sentences entries must be strings");
		r.sentences.push_back(s.get<std::string>());
	}
	r.text = need_string(j, "text", lineno);
	r.label = need_string(j, "label", lineno);
	if (r.label != "sat" && r.label != "unsat")
		schema_fail(lineno, "label must be \"sat\" or \"unsat\"");
	r.s = need_int(j, "s", lineno);
	r.n = need_int(j, "n", lineno);
	r.v = need_int(j, "v", lineno);
	if (auto it = j.find("l"); it != j.end()) {
		if (!it->is_number_integer() && !it->is_number_unsigned())
			schema_fail(lineno, "field \"l\" must be an integer");
		r.l = it->get<int>();
	}
	if (auto it = j.find("d"); it != j.end()) {
		if (!it->is_number_integer() && !it->is_number_unsigned())
			schema_fail(lineno, "field \"d\" must be an integer");
		r.d = it->get<int>();
	}
	const auto &seed = need(j, "seed", lineno);
	if (!seed.is_number_unsigned() && !seed.is_number_integer())
		schema_fail(lineno, "field \"seed\" must be an unsigned integer");
	r.seed = seed.get<uint64_t>();
	r.construction = need_string(j, "construction", lineno);
	if (r.construction != "random" && r.construction != "chain" &&
	    r.construction != "forallforall" && r.construction != "hard-filtered")
		schema_fail(lineno, "unknown construction tag \"" + r.construction + "\"");
	r.split = need_string(j, "split", lineno);
	if (r.split != "train" && r.split != "eval")
		schema_fail(lineno, "split must be \"train\" or \"eval\"");
	if (auto it = j.find("config"); it != j.end()) {
		if (!it->is_object()) schema_fail(lineno, "field \"config\" must be an object");
		r.config = {need_string(*it, "kind", lineno), need_int(*it, "size", lineno)};
	}
	return r;
}

void emit_jsonl(const std::vector<Record> &records, const std::string &path) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw IoError("cannot open '" + path + "' for writing");
	for (const auto &r : records) out << record_to_json(r) << '\n';
	out.flush();
	if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<Record> read_jsonl(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw IoError("cannot open '" + path + "' for reading");
	std::vector<Record> out;
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
		out.push_back(record_from_json(line, lineno));
	}
	return out;
}

CorpusStats stats(const std::vector<Record> &records) {
	CorpusStats st;
	st.count = static_cast<int>(records.size());
	int sat = 0;
	long long l_sum = 0, d_sum = 0;
	int d_count = 0;
	std::array<int, 5> buckets{};
	for (const auto &r : records) {
		if (r.label == "sat") ++sat;
		auto &per = st.per_s[r.s];
		++per.count;
		if (r.label == "sat") per.sat_fraction += 1.0; // counts for now
		if (r.label == "unsat" && r.l) {
			++st.unsat_with_l;
			l_sum += *r.l;
			buckets[static_cast<size_t>(std::min(*r.l / 10, 4))] += 1;
		}
		if (r.label == "unsat" && r.d) {
			++d_count;
			d_sum += *r.d;
			st.d_histogram[*r.d] += 1;
		}
	}
	if (st.count > 0) st.sat_fraction = static_cast<double>(sat) / st.count;
	for (auto &[s, per] : st.per_s) per.sat_fraction /= per.count;
	if (st.unsat_with_l > 0) {
		st.mean_l = static_cast<double>(l_sum) / st.unsat_with_l;
		for (size_t i = 0; i < buckets.size(); ++i)
			st.l_buckets[i] = static_cast<double>(buckets[i]) / st.unsat_with_l;
	}
	if (d_count > 0) st.mean_d = static_cast<double>(d_sum) / d_count;
	return st;
}

std::string stats_to_json(const CorpusStats &st) {
	ordered_json j;
	j["count"] = st.count;
	j["sat_fraction"] = st.sat_fraction;
	j["unsat_with_l"] = st.unsat_with_l;
	j["l_buckets"] = st.l_buckets;
	j["mean_l"] = st.mean_l;
	j["mean_d"] = st.mean_d;
	ordered_json dh = ordered_json::object();
	for (const auto &[d, c] : st.d_histogram) dh[std::to_string(d)] = c;
	j["d_histogram"] = dh;
	ordered_json ps = ordered_json::object();
	for (const auto &[s, per] : st.per_s)
		ps[std::to_string(s)] = ordered_json{{"count", per.count}, {"sat_fraction", per.sat_fraction}};
	j["per_s"] = ps;
	return j.dump(2);
}

} // namespace fragsat
