#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fragsat/syntax.hpp"
#include "fragsat/vocab.hpp"

namespace fragsat {

// Deterministic template instantiation per the Table-1 mapping; ends in ".".
std::string realize(const Sentence &s, const Vocabulary &v);

// One sentence per line, realize(ss[i], v) on line i.
std::string realize_instance(const std::vector<Sentence> &ss, const Vocabulary &v);

// Inverse of realize: parse(realize(s, v), v) == s. Accepts the canonical
// spellings plus "who is a not p" for "who is not a p". Throws NotInFragment
// (no template matches) or UnknownWord.
Sentence parse_sentence(std::string_view text, const Vocabulary &v);

// Per-line parse of a realize_instance block; blank lines are skipped.
std::vector<Sentence> parse_instance(std::string_view block, const Vocabulary &v);

// The full template↔AST mapping as a markdown table (--dump-grammar).
std::string dump_grammar();

} // namespace fragsat
