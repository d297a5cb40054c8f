#include "fragsat/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "fragsat/errors.hpp"
#include "fragsat/rng.hpp"

namespace fragsat {

namespace {

// Words the templates claim for themselves; admitting them as vocabulary
// would make parsing ambiguous.
const std::unordered_set<std::string> kReservedWords = {
    "every", "some", "no", "any", "is", "a", "an", "not", "who", "does", "non",
};

bool valid_word(std::string_view w) {
	if (w.empty() || w[0] < 'a' || w[0] > 'z')
		return false;
	return std::all_of(w.begin(), w.end(),
	                   [](char c) { return (c >= 'a' && c <= 'z') || c == '-'; });
}

void check_word(const std::string &w, int lineno) {
	if (!valid_word(w))
		throw ParseError("line " + std::to_string(lineno) + ": word '" + w +
		                 "' does not match [a-z][a-z-]*");
	if (kReservedWords.count(w))
		throw ParseError("line " + std::to_string(lineno) + ": '" + w +
		                 "' is a reserved template word");
	if (w.rfind("non-", 0) == 0)
		throw ParseError("line " + std::to_string(lineno) + ": '" + w +
		                 "' starts with the reserved prefix 'non-'");
}

std::string_view trim(std::string_view s) {
	size_t b = s.find_first_not_of(" \t\r");
	if (b == std::string_view::npos)
		return {};
	size_t e = s.find_last_not_of(" \t\r");
	return s.substr(b, e - b + 1);
}

} // namespace

std::optional<int> Vocabulary::noun_index(std::string_view word) const {
	for (size_t i = 0; i < nouns.size(); ++i)
		if (nouns[i] == word)
			return static_cast<int>(i);
	return std::nullopt;
}

std::optional<int> Vocabulary::verb_index_third(std::string_view word) const {
	for (size_t i = 0; i < verbs.size(); ++i)
		if (verbs[i].third == word)
			return static_cast<int>(i);
	return std::nullopt;
}

std::optional<int> Vocabulary::verb_index_inf(std::string_view word) const {
	for (size_t i = 0; i < verbs.size(); ++i)
		if (verbs[i].inf == word)
			return static_cast<int>(i);
	return std::nullopt;
}

Vocabulary load_vocabulary(std::string_view text) {
	Vocabulary v;
	enum class Section { None, Nouns, Verbs } section = Section::None;
	std::unordered_set<std::string> seen; // across nouns, thirds and infinitives
	auto note = [&seen](const std::string &w, int lineno) {
		if (!seen.insert(w).second)
			throw DuplicateEntry("line " + std::to_string(lineno) + ": duplicate word '" + w + "'");
	};

	int lineno = 0;
	size_t pos = 0;
	while (pos <= text.size()) {
		size_t nl = text.find('\n', pos);
		std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
		                                                                     : nl - pos);
		pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
		++lineno;

		if (size_t hash = raw.find('#'); hash != std::string_view::npos)
			raw = raw.substr(0, hash);
		std::string_view line = trim(raw);
		if (line.empty())
			continue;
		if (line == "[nouns]") {
			section = Section::Nouns;
			continue;
		}
		if (line == "[verbs]") {
			section = Section::Verbs;
			continue;
		}
		if (line.front() == '[')
			throw ParseError("line " + std::to_string(lineno) + ": unknown section '" +
			                 std::string(line) + "'");
		switch (section) {
		case Section::None:
			throw ParseError("line " + std::to_string(lineno) +
			                 ": entry before any [nouns]/[verbs] section");
		case Section::Nouns: {
			std::string w(line);
			check_word(w, lineno);
			note(w, lineno);
			v.nouns.push_back(std::move(w));
			break;
		}
		case Section::Verbs: {
			size_t slash = line.find('/');
			if (slash == std::string_view::npos)
				throw ParseError("line " + std::to_string(lineno) +
				                 ": verb entry must be 'third/infinitive'");
			std::string third(trim(line.substr(0, slash)));
			std::string inf(trim(line.substr(slash + 1)));
			check_word(third, lineno);
			check_word(inf, lineno);
			note(third, lineno);
			if (inf != third) // "sheep/sheep"-style entries list one word twice
				note(inf, lineno);
			v.verbs.push_back({std::move(third), std::move(inf)});
			break;
		}
		}
	}
	return v;
}

Vocabulary load_vocabulary_file(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw IoError("cannot open vocabulary file '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return load_vocabulary(buf.str());
}

std::string serialize_vocabulary(const Vocabulary &v) {
	std::ostringstream out;
	out << "[nouns]\n";
	for (const auto &n : v.nouns)
		out << n << "\n";
	out << "[verbs]\n";
	for (const auto &vb : v.verbs)
		out << vb.third << "/" << vb.inf << "\n";
	return out.str();
}

namespace {

// Deterministic Fisher-Yates on indices, eval half = first k of the shuffle.
std::vector<size_t> pick_eval(size_t total, double eval_fraction, Rng &rng) {
	std::vector<size_t> idx(total);
	for (size_t i = 0; i < total; ++i)
		idx[i] = i;
	for (size_t i = total; i > 1; --i)
		std::swap(idx[i - 1], idx[rng.below(i)]);
	auto k = static_cast<size_t>(eval_fraction * static_cast<double>(total) + 0.5);
	idx.resize(k);
	return idx;
}

} // namespace

std::pair<Vocabulary, Vocabulary> split_vocabulary(const Vocabulary &v, double eval_fraction,
                                                   uint64_t seed) {
	if (!(eval_fraction > 0.0 && eval_fraction < 1.0))
		throw SplitTooSmall("eval_fraction must lie in (0,1)");
	Rng rng(mix_seed({seed, 0x5eedf00dULL}));

	Vocabulary train, eval;
	{
		auto ev = pick_eval(v.nouns.size(), eval_fraction, rng);
		std::vector<bool> is_eval(v.nouns.size(), false);
		for (size_t i : ev)
			is_eval[i] = true;
		for (size_t i = 0; i < v.nouns.size(); ++i)
			(is_eval[i] ? eval : train).nouns.push_back(v.nouns[i]);
	}
	{
		auto ev = pick_eval(v.verbs.size(), eval_fraction, rng);
		std::vector<bool> is_eval(v.verbs.size(), false);
		for (size_t i : ev)
			is_eval[i] = true;
		for (size_t i = 0; i < v.verbs.size(); ++i)
			(is_eval[i] ? eval : train).verbs.push_back(v.verbs[i]);
	}

	if (!v.nouns.empty() && (train.nouns.empty() || eval.nouns.empty()))
		throw SplitTooSmall("noun split leaves an empty half (" +
		                    std::to_string(v.nouns.size()) + " nouns)");
	if (!v.verbs.empty() && (train.verbs.empty() || eval.verbs.empty()))
		throw SplitTooSmall("verb split leaves an empty half (" +
		                    std::to_string(v.verbs.size()) + " verbs)");
	return {std::move(train), std::move(eval)};
}

} // namespace fragsat
