#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fragsat/vocab.hpp"

namespace fragsat {

enum class Quant : uint8_t { Universal, Existential };

inline Quant flip(Quant q) {
	return q == Quant::Universal ? Quant::Existential : Quant::Universal;
}

// A possibly negated noun; positive=false reads "non-p" (subject/object
// position) or "is not a p" / "No ..." (predicate position).
struct Literal {
	int32_t noun = 0;
	bool positive = true;

	Literal complement() const { return {noun, !positive}; }
	bool operator==(const Literal &) const = default;
};

// ∀x(±p(x) → ±q(x)) / ∃x(±p(x) ∧ ±q(x))
struct Syllogistic {
	Quant q = Quant::Universal;
	Literal subject;
	Literal predicate;
	bool operator==(const Syllogistic &) const = default;
};

// (∀/∃)x(±p(x) ∘ γ), γ = (∀/∃)y(±q(y) ∘ ±r(x,y)); ∘ is → under ∀, ∧ under ∃.
struct Relational {
	Quant sq = Quant::Universal;
	Literal subject;
	Quant oq = Quant::Universal;
	Literal object;
	int32_t verb = 0;
	bool verb_positive = true;
	bool operator==(const Relational &) const = default;
};

// ∀x((o(x) ∧ ±p(x)) → ±q(x)) / ∃x(o(x) ∧ ±p(x) ∧ ±q(x)); head o is bare.
struct Relative {
	Quant q = Quant::Universal;
	int32_t head = 0;
	Literal rel;
	Literal predicate;
	bool operator==(const Relative &) const = default;
};

using Sentence = std::variant<Syllogistic, Relational, Relative>;

enum class Fragment : uint8_t { S, SDag, R, RDag, SRel, SRelNeg };

// Partial order: S ≤ SDag ≤ RDag, S ≤ R ≤ RDag, SRel ≤ SRelNeg. The two
// chains are not comparable (S ⊄ SRel).
bool fragment_leq(Fragment a, Fragment b);

// Least fragment containing s.
Fragment fragment_of(const Sentence &s);

bool fragment_contains(Fragment f, const Sentence &s);

// Logical negation within the template family: quantifier(s) flip, final
// polarity flips; involution.
Sentence negate(const Sentence &s);

// True iff s is existential and its unary conjuncts contain a complementary
// pair over one noun ("Some p is not a p"). Universals never qualify.
bool is_self_inconsistent(const Sentence &s);

// Canonical tags used by the CLI and the JSONL schema.
std::string_view fragment_name(Fragment f);
std::optional<Fragment> fragment_from_name(std::string_view name);

// Canonical term syntax, e.g. `all(+artist,-beekeeper)`,
// `rel(all,+artist,exists,+beekeeper,+chase)`, `relcl(exists,dentist,+hunter,-spy)`.
std::string to_term(const Sentence &s, const Vocabulary &v);
Sentence parse_term(std::string_view term, const Vocabulary &v);

std::vector<std::string> to_terms(const std::vector<Sentence> &ss, const Vocabulary &v);
std::vector<Sentence> parse_terms(const std::vector<std::string> &terms, const Vocabulary &v);

} // namespace fragsat
