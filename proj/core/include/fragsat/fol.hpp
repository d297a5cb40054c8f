#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fragsat/syntax.hpp"
#include "fragsat/vocab.hpp"

namespace fragsat {

// First-order term: variable (leading uppercase) or function/constant
// (leading lowercase). Sentence translations only ever use variables; the
// reader accepts the general form so TSTP clauses round-trip too.
struct FTerm {
	std::string name;
	std::vector<FTerm> args;

	bool is_var() const { return !name.empty() && name[0] >= 'A' && name[0] <= 'Z'; }
	bool operator==(const FTerm &) const = default;
};

enum class FKind : uint8_t { Atom, Not, And, Or, Imp, Forall, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
	FKind kind = FKind::Atom;
	std::string pred;              // Atom
	std::vector<FTerm> args;       // Atom
	std::string var;               // Forall/Exists
	std::vector<FormulaPtr> kids;  // Not/quant: 1, Imp: 2, And/Or: n-ary
};

FormulaPtr f_atom(std::string pred, std::vector<FTerm> args);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(std::vector<FormulaPtr> fs);
FormulaPtr f_or(std::vector<FormulaPtr> fs);
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b);
FormulaPtr f_forall(std::string var, FormulaPtr f);
FormulaPtr f_exists(std::string var, FormulaPtr f);

// Vocabulary word → TPTP predicate symbol (hyphen → underscore; injective on
// the vocabulary charset).
std::string tptp_symbol(std::string_view word);

// Normal-form translation per the fragment semantics; variables X (outer), Y.
FormulaPtr translate(const Sentence &s, const Vocabulary &v);

std::string formula_to_tptp(const Formula &f);

// One `fof(<prefix><i>, axiom, <formula>).` line per sentence, i from 1.
std::string to_tptp(const std::vector<Sentence> &ss, const Vocabulary &v,
                    std::string_view prefix = "s");

// Vocabulary-free variant using synthetic symbols p<noun>/r<verb>; labeling
// and other index-space callers need no word list.
std::string to_tptp_anonymous(const std::vector<Sentence> &ss, std::string_view prefix = "s");

// Minimal FOF reader covering what to_tptp (and fragprove's TSTP output)
// emits: fof/cnf statements over ~ & | => ! ? atoms; `$false` as the empty
// disjunction. Throws ParseError.
struct FofLine {
	std::string name;
	std::string role;
	FormulaPtr formula;
	std::string source; // trailing annotation (file(...)/inference(...)), raw text, may be empty
};

std::vector<FofLine> parse_fof(std::string_view text);

} // namespace fragsat
