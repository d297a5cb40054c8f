#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fragsat {

struct Verb {
	std::string third; // "chases"
	std::string inf;   // "chase"
	bool operator==(const Verb &) const = default;
};

// Immutable after load; safe to share across generation workers.
struct Vocabulary {
	std::vector<std::string> nouns;
	std::vector<Verb> verbs;

	std::optional<int> noun_index(std::string_view word) const;
	std::optional<int> verb_index_third(std::string_view word) const;
	std::optional<int> verb_index_inf(std::string_view word) const;

	bool operator==(const Vocabulary &) const = default;
};

// Parse the vocabulary file format: `[nouns]` / `[verbs]` sections, one entry
// per line, verbs as `third/infinitive`, `#` comments. Validates all
// Vocabulary invariants (charset, distinctness, no template function words,
// no "non-" prefix).
Vocabulary load_vocabulary(std::string_view text);
Vocabulary load_vocabulary_file(const std::string &path);

// Inverse of load_vocabulary (load ∘ serialize = id).
std::string serialize_vocabulary(const Vocabulary &v);

// Deterministic disjoint split; `eval_fraction` of each word class goes to
// .second (the eval half). Throws SplitTooSmall if either half ends up empty
// in a populated word class.
std::pair<Vocabulary, Vocabulary> split_vocabulary(const Vocabulary &v, double eval_fraction,
                                                   uint64_t seed);

// Built-in word lists compiled into the library (also shipped under data/).
const Vocabulary &default_vocabulary(); // "common"
const Vocabulary &builtin_vocabulary(std::string_view name); // "common" | "fantasy"

} // namespace fragsat
