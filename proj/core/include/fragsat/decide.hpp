#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fragsat/atp.hpp"
#include "fragsat/syntax.hpp"

namespace fragsat {

enum class Status : uint8_t { Satisfiable, Unsatisfiable, Unknown };

// Explicit finite model over the nouns/verbs that occur in an instance;
// indices are vocabulary indices.
struct Model {
	int domain = 0;
	std::vector<int32_t> nouns;                 // which nouns are interpreted
	std::vector<int32_t> verbs;                 // which verbs are interpreted
	std::vector<std::vector<bool>> noun_ext;    // [noun slot][element]
	std::vector<std::vector<bool>> verb_ext;    // [verb slot][x*domain + y]

	bool satisfies(const Sentence &s) const;
	bool satisfies_all(const std::vector<Sentence> &ss) const;
};

enum class ViolationKind : uint8_t { I, II, III }; // ℓ⇒ℓ̄ / m⇒m̄ / ℓ⇒m̄

// A literal-graph path witnessing one of conditions (i)-(iii) against the
// existential sentence at `sentence`; path vertices from source literal to
// target, size = edge count.
struct PathViolation {
	ViolationKind kind = ViolationKind::I;
	int sentence = 0;
	std::vector<Literal> path;
};

// o ⇒ ō and ō ⇒ o (the extra S† check); size = the longer path's edge count.
struct MutualUniversal {
	Literal o;
	std::vector<Literal> up;   // o .. ō
	std::vector<Literal> down; // ō .. o
};

// Marker for the R ∀∀ schema (reported by construct, not by a decider).
struct ForallForallCfg {
	int d = 0;
};

struct ForbiddenConfig {
	std::variant<PathViolation, MutualUniversal, ForallForallCfg> detail;
	int size = 0;

	std::string kind_name() const; // "path-i" | "path-ii" | "path-iii" | "mutual" | "forallforall"
};

struct Verdict {
	Status status = Status::Unknown;
	std::optional<Model> witness;          // Satisfiable, oracle only
	std::optional<ForbiddenConfig> config; // Unsatisfiable, graph only
};

// Directed graph over the 2k literals of the k nouns occurring in Φ; edges
// from universal Syllogistic sentences plus contrapositives.
struct LiteralGraph {
	std::vector<int32_t> nouns;            // occurring nouns, ascending
	std::vector<std::vector<int>> adj;     // vertex = 2*slot + (0 pos | 1 neg)

	int slot_of(int32_t noun) const;       // -1 if absent
	int vertex(Literal l) const;           // asserts noun present
	Literal literal(int vertex) const;
	static int complement(int vertex) { return vertex ^ 1; }
};

LiteralGraph build_literal_graph(const std::vector<Sentence> &phi);

// Complete for S/S†; throws WrongFragment on any non-Syllogistic sentence.
// Unsatisfiable verdicts carry the minimal-size ForbiddenConfig.
Verdict decide_graph(const std::vector<Sentence> &phi);

// Complete for S† ∪ Srel ∪ SrelN via the per-existential propositional
// reduction; throws WrongFragment on Relational sentences.
Verdict decide_monadic(const std::vector<Sentence> &phi);

// Brute-force enumeration over domains 1..max_domain with type-sorted
// symmetry pruning. Conclusive Unsatisfiable only for purely monadic Φ with
// max_domain ≥ max(1, #existentials); otherwise negative searches yield
// Unknown. Throws BudgetExceeded past `budget` search nodes.
inline constexpr int kOracleMaxDomainLimit = 4;
inline constexpr uint64_t kOracleDefaultBudget = 10'000'000;

Verdict bounded_model_search(const std::vector<Sentence> &phi, int max_domain,
                             uint64_t budget = kOracleDefaultBudget);

enum class Method : uint8_t { Graph, Monadic, Oracle, Atp };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct DecideOptions {
	int max_domain = kOracleMaxDomainLimit;
	uint64_t budget = kOracleDefaultBudget;
	std::optional<ProverConfig> prover; // required for Method::Atp
};

// Backend dispatch. The vocabulary is only consulted for Method::Atp (TPTP
// predicate names). Atp verdicts are Unknown on prover Timeout and carry the
// ProofStats-bearing raw output's conclusion otherwise.
Verdict decide(const std::vector<Sentence> &phi, Method m, const Vocabulary &v,
               const DecideOptions &opts = {});

} // namespace fragsat
