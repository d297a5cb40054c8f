// fragprove: a small saturation prover for the clause shapes this project's
// fragments produce (monadic clauses, one binary relation, unary skolems).
// Ordered resolution under a symbol-count KBO with positive factoring,
// tautology deletion and subsumption; emits SZS statuses and a TSTP-style
// refutation that downstream proof statistics can parse.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <deque>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fragsat/errors.hpp"
#include "fragsat/fol.hpp"

namespace {

using fragsat::FKind;
using fragsat::FofLine;
using fragsat::Formula;
using fragsat::FTerm;

// ---------------------------------------------------------------- symbols

struct SymTab {
	std::vector<std::string> names;
	std::map<std::string, int> index;

	int intern(const std::string &name) {
		auto it = index.find(name);
		if (it != index.end()) return it->second;
		int id = static_cast<int>(names.size());
		names.push_back(name);
		index.emplace(name, id);
		return id;
	}
};

// ------------------------------------------------------------------ terms

// f < 0 encodes variable ~f; otherwise an index into the function table.
struct Term {
	int f = 0;
	std::vector<Term> args;

	bool is_var() const { return f < 0; }
	int var() const { return ~f; }
	bool operator==(const Term &) const = default;
};

Term mk_var(int v) { return Term{~v, {}}; }

struct Lit {
	bool pos = true;
	int pred = 0;
	std::vector<Term> args;

	bool operator==(const Lit &) const = default;
};

struct Clause {
	std::vector<Lit> lits;
	int id = 0;
	std::string rule;        // "clausify" | "resolution" | "factoring"
	std::vector<int> parents; // clause ids ("clausify": axiom index instead)
	int axiom = -1;          // clausify only
	int weight = 0;
	bool deleted = false;
	bool picked = false;
};

int term_weight(const Term &t) {
	int w = 1;
	for (const auto &a : t.args) w += term_weight(a);
	return w;
}

int clause_weight(const std::vector<Lit> &lits) {
	int w = 0;
	for (const auto &l : lits) {
		w += 1;
		for (const auto &a : l.args) w += term_weight(a);
	}
	return w;
}

void collect_vars(const Term &t, std::map<int, int> &counts) {
	if (t.is_var()) {
		counts[t.var()] += 1;
		return;
	}
	for (const auto &a : t.args) collect_vars(a, counts);
}

bool occurs(int v, const Term &t) {
	if (t.is_var()) return t.var() == v;
	for (const auto &a : t.args)
		if (occurs(v, a)) return true;
	return false;
}

// ------------------------------------------------------------------- KBO

// Symbol-count KBO: every symbol and variable weighs 1; precedence = symbol
// id. Predicates and functions live in separate tables, so atoms are compared
// pretending the predicate is a root function symbol.
bool kbo_gt(const Term &a, const Term &b) {
	if (a == b) return false;
	if (b.is_var()) return occurs(b.var(), a);
	if (a.is_var()) return false;
	std::map<int, int> va, vb;
	collect_vars(a, va);
	collect_vars(b, vb);
	for (const auto &[v, n] : vb)
		if (va[v] < n) return false;
	int wa = term_weight(a), wb = term_weight(b);
	if (wa != wb) return wa > wb;
	if (a.f != b.f) return a.f > b.f;
	for (size_t i = 0; i < a.args.size() && i < b.args.size(); ++i)
		if (!(a.args[i] == b.args[i])) return kbo_gt(a.args[i], b.args[i]);
	return false;
}

Term atom_term(const Lit &l, int pred_offset) {
	return Term{l.pred + pred_offset, l.args};
}

// Strict literal order: compare atoms by KBO; on equal atoms the negative
// literal is greater.
bool lit_gt(const Lit &a, const Lit &b, int pred_offset) {
	Term ta = atom_term(a, pred_offset), tb = atom_term(b, pred_offset);
	if (ta == tb) return !a.pos && b.pos;
	return kbo_gt(ta, tb);
}

bool lit_maximal(const std::vector<Lit> &lits, size_t i, int pred_offset) {
	for (size_t j = 0; j < lits.size(); ++j)
		if (j != i && lit_gt(lits[j], lits[i], pred_offset)) return false;
	return true;
}

// ----------------------------------------------------------- substitution

using Subst = std::map<int, Term>;

Term apply_subst(const Term &t, const Subst &s) {
	if (t.is_var()) {
		auto it = s.find(t.var());
		if (it == s.end()) return t;
		return apply_subst(it->second, s); // bindings may chain
	}
	Term out{t.f, {}};
	out.args.reserve(t.args.size());
	for (const auto &a : t.args) out.args.push_back(apply_subst(a, s));
	return out;
}

bool unify(const Term &a, const Term &b, Subst &s) {
	Term x = apply_subst(a, s), y = apply_subst(b, s);
	if (x == y) return true;
	if (x.is_var()) {
		if (occurs(x.var(), y)) return false;
		s[x.var()] = y;
		return true;
	}
	if (y.is_var()) return unify(y, x, s);
	if (x.f != y.f || x.args.size() != y.args.size()) return false;
	for (size_t i = 0; i < x.args.size(); ++i)
		if (!unify(x.args[i], y.args[i], s)) return false;
	return true;
}

bool unify_args(const std::vector<Term> &a, const std::vector<Term> &b, Subst &s) {
	if (a.size() != b.size()) return false;
	for (size_t i = 0; i < a.size(); ++i)
		if (!unify(a[i], b[i], s)) return false;
	return true;
}

std::vector<Lit> apply_subst(const std::vector<Lit> &lits, const Subst &s) {
	std::vector<Lit> out;
	out.reserve(lits.size());
	for (const auto &l : lits) {
		Lit m{l.pos, l.pred, {}};
		m.args.reserve(l.args.size());
		for (const auto &a : l.args) m.args.push_back(apply_subst(a, s));
		out.push_back(std::move(m));
	}
	return out;
}

// Canonical form: variables renumbered 0..k-1 in first occurrence order,
// duplicate literals removed.
void canon_term(Term &t, std::map<int, int> &remap, int &next) {
	if (t.is_var()) {
		auto it = remap.find(t.var());
		if (it == remap.end()) it = remap.emplace(t.var(), next++).first;
		t = mk_var(it->second);
		return;
	}
	for (auto &a : t.args) canon_term(a, remap, next);
}

std::vector<Lit> canonicalize(std::vector<Lit> lits) {
	std::map<int, int> remap;
	int next = 0;
	for (auto &l : lits)
		for (auto &a : l.args) canon_term(a, remap, next);
	std::vector<Lit> out;
	for (auto &l : lits)
		if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
	return out;
}

int max_var(const std::vector<Lit> &lits) {
	int m = -1;
	std::map<int, int> vars;
	for (const auto &l : lits)
		for (const auto &a : l.args) collect_vars(a, vars);
	for (const auto &[v, n] : vars) m = std::max(m, v);
	return m;
}

Term shift_term(const Term &t, int by) {
	if (t.is_var()) return mk_var(t.var() + by);
	Term out{t.f, {}};
	out.args.reserve(t.args.size());
	for (const auto &a : t.args) out.args.push_back(shift_term(a, by));
	return out;
}

// Simultaneous renaming; a Subst would chase x -> x+by -> ... when the
// domain and range overlap.
std::vector<Lit> shift_vars(const std::vector<Lit> &lits, int by) {
	std::vector<Lit> out;
	out.reserve(lits.size());
	for (const auto &l : lits) {
		Lit m{l.pos, l.pred, {}};
		for (const auto &a : l.args) m.args.push_back(shift_term(a, by));
		out.push_back(std::move(m));
	}
	return out;
}

bool is_tautology(const std::vector<Lit> &lits) {
	for (size_t i = 0; i < lits.size(); ++i)
		for (size_t j = i + 1; j < lits.size(); ++j)
			if (lits[i].pos != lits[j].pos && lits[i].pred == lits[j].pred &&
			    lits[i].args == lits[j].args)
				return true;
	return false;
}

// ------------------------------------------------------------ subsumption

// One-way matching: variables of the pattern bind, the instance is frozen.
bool match_term(const Term &pat, const Term &inst, Subst &s) {
	if (pat.is_var()) {
		auto it = s.find(pat.var());
		if (it != s.end()) return it->second == inst;
		s[pat.var()] = inst;
		return true;
	}
	if (inst.is_var() || pat.f != inst.f || pat.args.size() != inst.args.size()) return false;
	for (size_t i = 0; i < pat.args.size(); ++i)
		if (!match_term(pat.args[i], inst.args[i], s)) return false;
	return true;
}

bool subsumes_rec(const std::vector<Lit> &c, const std::vector<Lit> &d, size_t i,
                  std::vector<bool> &used, const Subst &s) {
	if (i == c.size()) return true;
	for (size_t j = 0; j < d.size(); ++j) {
		if (used[j] || c[i].pos != d[j].pos || c[i].pred != d[j].pred) continue;
		Subst s2 = s;
		bool ok = true;
		for (size_t k = 0; k < c[i].args.size() && ok; ++k)
			ok = match_term(c[i].args[k], d[j].args[k], s2);
		if (!ok || c[i].args.size() != d[j].args.size()) continue;
		used[j] = true;
		if (subsumes_rec(c, d, i + 1, used, s2)) return true;
		used[j] = false;
	}
	return false;
}

bool subsumes(const std::vector<Lit> &c, const std::vector<Lit> &d) {
	if (c.size() > d.size()) return false;
	std::vector<bool> used(d.size(), false);
	return subsumes_rec(c, d, 0, used, {});
}

// ------------------------------------------------------------- clausifier

struct NF {
	enum Kind { Leaf, Conj, Disj } kind = Leaf;
	Lit lit;
	std::vector<NF> kids;
};

struct Clausifier {
	SymTab preds, funcs;
	int next_var = 0;
	int next_skolem = 0;

	Term convert_term(const FTerm &t, std::map<std::string, Term> &env) {
		if (t.is_var()) {
			auto it = env.find(t.name);
			if (it == env.end())
				it = env.emplace(t.name, mk_var(next_var++)).first; // free → universal
			return it->second;
		}
		Term out{funcs.intern(t.name), {}};
		for (const auto &a : t.args) out.args.push_back(convert_term(a, env));
		return out;
	}

	NF nnf(const Formula &f, bool pos, std::map<std::string, Term> &env,
	       std::vector<Term> &uvars) {
		switch (f.kind) {
		case FKind::Atom: {
			NF leaf;
			leaf.lit.pos = pos;
			leaf.lit.pred = preds.intern(f.pred);
			for (const auto &a : f.args) leaf.lit.args.push_back(convert_term(a, env));
			return leaf;
		}
		case FKind::Not:
			return nnf(*f.kids[0], !pos, env, uvars);
		case FKind::And:
		case FKind::Or: {
			bool conj = (f.kind == FKind::And) == pos;
			NF node;
			node.kind = conj ? NF::Conj : NF::Disj;
			for (const auto &k : f.kids) node.kids.push_back(nnf(*k, pos, env, uvars));
			return node;
		}
		case FKind::Imp: {
			NF node;
			node.kind = pos ? NF::Disj : NF::Conj;
			node.kids.push_back(nnf(*f.kids[0], !pos, env, uvars));
			node.kids.push_back(nnf(*f.kids[1], pos, env, uvars));
			return node;
		}
		case FKind::Forall:
		case FKind::Exists: {
			bool universal = (f.kind == FKind::Forall) == pos;
			auto prev = env.find(f.var) != env.end() ? std::optional<Term>(env[f.var])
			                                         : std::nullopt;
			NF node;
			if (universal) {
				Term v = mk_var(next_var++);
				env[f.var] = v;
				uvars.push_back(v);
				node = nnf(*f.kids[0], pos, env, uvars);
				uvars.pop_back();
			} else {
				Term sk{funcs.intern("sk" + std::to_string(next_skolem++)), uvars};
				env[f.var] = sk;
				node = nnf(*f.kids[0], pos, env, uvars);
			}
			if (prev) env[f.var] = *prev;
			else env.erase(f.var);
			return node;
		}
		}
		return {};
	}

	static std::vector<std::vector<Lit>> cnf(const NF &n) {
		if (n.kind == NF::Leaf) return {{n.lit}};
		if (n.kind == NF::Conj) {
			std::vector<std::vector<Lit>> out;
			for (const auto &k : n.kids) {
				auto sub = cnf(k);
				out.insert(out.end(), sub.begin(), sub.end());
			}
			return out;
		}
		std::vector<std::vector<Lit>> acc{{}};
		for (const auto &k : n.kids) {
			auto sub = cnf(k);
			std::vector<std::vector<Lit>> next;
			for (const auto &a : acc)
				for (const auto &s : sub) {
					auto merged = a;
					merged.insert(merged.end(), s.begin(), s.end());
					next.push_back(std::move(merged));
				}
			acc = std::move(next);
		}
		return acc;
	}

	std::vector<std::vector<Lit>> clausify(const Formula &f) {
		std::map<std::string, Term> env;
		std::vector<Term> uvars;
		NF n = nnf(f, true, env, uvars);
		auto clauses = cnf(n);
		for (auto &c : clauses) c = canonicalize(std::move(c));
		return clauses;
	}
};

// --------------------------------------------------------------- printing

std::string term_str(const Term &t, const SymTab &funcs) {
	if (t.is_var()) return "X" + std::to_string(t.var());
	std::string out = funcs.names[static_cast<size_t>(t.f)];
	if (!t.args.empty()) {
		out += '(';
		for (size_t i = 0; i < t.args.size(); ++i) {
			if (i) out += ',';
			out += term_str(t.args[i], funcs);
		}
		out += ')';
	}
	return out;
}

std::string clause_str(const std::vector<Lit> &lits, const SymTab &preds, const SymTab &funcs) {
	if (lits.empty()) return "$false";
	std::string out;
	for (size_t i = 0; i < lits.size(); ++i) {
		if (i) out += " | ";
		if (!lits[i].pos) out += '~';
		out += preds.names[static_cast<size_t>(lits[i].pred)];
		if (!lits[i].args.empty()) {
			out += '(';
			for (size_t j = 0; j < lits[i].args.size(); ++j) {
				if (j) out += ',';
				out += term_str(lits[i].args[j], funcs);
			}
			out += ')';
		}
	}
	return out;
}

// ---------------------------------------------------------------- prover

struct Prover {
	Clausifier cl;
	std::vector<Clause> arena;                       // every clause ever made
	std::vector<int> active;
	// Passive set with the usual age/weight interleave: alternating between the
	// lightest and the oldest clause avoids the tunnel vision of pure
	// weight-first selection.
	std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
	                    std::greater<>> by_weight;   // (weight, id)
	std::deque<int> by_age;
	uint64_t picks = 0;
	int pred_offset = 0;
	size_t max_clauses = 0;
	std::chrono::steady_clock::time_point deadline;
	bool out_of_time = false, out_of_clauses = false;

	int add_clause(std::vector<Lit> lits, std::string rule, std::vector<int> parents,
	               int axiom) {
		lits = canonicalize(std::move(lits));
		Clause c;
		c.lits = std::move(lits);
		c.id = static_cast<int>(arena.size());
		c.rule = std::move(rule);
		c.parents = std::move(parents);
		c.axiom = axiom;
		c.weight = clause_weight(c.lits);
		arena.push_back(c);
		by_weight.emplace(c.weight, c.id);
		by_age.push_back(c.id);
		return c.id;
	}

	std::optional<int> next_given() {
		auto pop_weight = [&]() -> std::optional<int> {
			while (!by_weight.empty()) {
				int id = by_weight.top().second;
				const Clause &c = arena[static_cast<size_t>(id)];
				if (c.deleted || c.picked) {
					by_weight.pop();
					continue;
				}
				return id;
			}
			return std::nullopt;
		};
		auto pop_age = [&]() -> std::optional<int> {
			while (!by_age.empty()) {
				int id = by_age.front();
				const Clause &c = arena[static_cast<size_t>(id)];
				if (c.deleted || c.picked) {
					by_age.pop_front();
					continue;
				}
				return id;
			}
			return std::nullopt;
		};
		bool age_turn = picks % 2 == 1;
		std::optional<int> id = age_turn ? pop_age() : pop_weight();
		if (!id) id = age_turn ? pop_weight() : pop_age();
		if (id) {
			++picks;
			arena[static_cast<size_t>(*id)].picked = true;
		}
		return id;
	}

	bool budget_ok() {
		if (arena.size() > max_clauses) {
			out_of_clauses = true;
			return false;
		}
		if (std::chrono::steady_clock::now() >= deadline) {
			out_of_time = true;
			return false;
		}
		return true;
	}

	// Generate ordered resolvents and factors of the given clause against the
	// active set. Returns the empty clause id if one appears.
	std::optional<int> infer(int gid) {
		const Clause g = arena[static_cast<size_t>(gid)]; // copy: arena may grow
		std::vector<int> partners = active;

		auto try_new = [&](std::vector<Lit> lits, const char *rule,
		                   std::vector<int> parents) -> std::optional<int> {
			if (is_tautology(lits)) return std::nullopt;
			lits = canonicalize(std::move(lits));
			for (int a : partners)
				if (!arena[static_cast<size_t>(a)].deleted &&
				    subsumes(arena[static_cast<size_t>(a)].lits, lits))
					return std::nullopt;
			int id = add_clause(std::move(lits), rule, std::move(parents), -1);
			if (arena[static_cast<size_t>(id)].lits.empty()) return id;
			return std::nullopt;
		};

		// Positive factoring on g.
		for (size_t i = 0; i < g.lits.size(); ++i) {
			if (!g.lits[i].pos) continue;
			for (size_t j = 0; j < g.lits.size(); ++j) {
				if (j == i || !g.lits[j].pos || g.lits[j].pred != g.lits[i].pred) continue;
				Subst s;
				if (!unify_args(g.lits[i].args, g.lits[j].args, s)) continue;
				auto inst = apply_subst(g.lits, s);
				if (!lit_maximal(inst, i, pred_offset)) continue;
				std::vector<Lit> out;
				for (size_t k = 0; k < inst.size(); ++k)
					if (k != j) out.push_back(inst[k]);
				if (auto empty = try_new(std::move(out), "factoring", {g.id})) return empty;
				if (!budget_ok()) return std::nullopt;
			}
		}

		// Ordered binary resolution g × active (either polarity on g's side).
		for (int aid : partners) {
			const Clause &a = arena[static_cast<size_t>(aid)];
			if (a.deleted) continue;
			int shift = max_var(g.lits) + 1;
			auto alits = shift_vars(a.lits, shift);
			for (size_t i = 0; i < g.lits.size(); ++i) {
				for (size_t j = 0; j < alits.size(); ++j) {
					if (g.lits[i].pos == alits[j].pos || g.lits[i].pred != alits[j].pred)
						continue;
					Subst s;
					if (!unify_args(g.lits[i].args, alits[j].args, s)) continue;
					auto gi = apply_subst(g.lits, s);
					auto aj = apply_subst(alits, s);
					if (!lit_maximal(gi, i, pred_offset) || !lit_maximal(aj, j, pred_offset))
						continue;
					std::vector<Lit> out;
					for (size_t k = 0; k < gi.size(); ++k)
						if (k != i) out.push_back(gi[k]);
					for (size_t k = 0; k < aj.size(); ++k)
						if (k != j) out.push_back(aj[k]);
					if (auto empty = try_new(std::move(out), "resolution", {g.id, aid}))
						return empty;
					if (!budget_ok()) return std::nullopt;
				}
			}
		}
		return std::nullopt;
	}

	// Returns the id of the empty clause, or nullopt (saturated or budget).
	std::optional<int> saturate() {
		while (auto given = next_given()) {
			if (!budget_ok()) return std::nullopt;
			int gid = *given;
			Clause &g = arena[static_cast<size_t>(gid)];
			if (g.lits.empty()) return gid;
			bool redundant = false;
			for (int aid : active) {
				const Clause &a = arena[static_cast<size_t>(aid)];
				if (!a.deleted && subsumes(a.lits, g.lits)) {
					redundant = true;
					break;
				}
			}
			if (redundant) {
				g.deleted = true;
				continue;
			}
			for (int aid : active) {
				Clause &a = arena[static_cast<size_t>(aid)];
				if (!a.deleted && subsumes(g.lits, a.lits)) a.deleted = true;
			}
			active.push_back(gid);
			if (auto empty = infer(gid)) return empty;
		}
		return std::nullopt;
	}
};

// ------------------------------------------------------------------ main

void print_refutation(const Prover &p, const std::vector<FofLine> &axioms,
                      const std::string &path, int empty_id, std::ostream &out) {
	// Ancestor closure of the empty clause.
	std::vector<bool> needed(p.arena.size(), false);
	std::vector<int> stack{empty_id};
	while (!stack.empty()) {
		int id = stack.back();
		stack.pop_back();
		if (needed[static_cast<size_t>(id)]) continue;
		needed[static_cast<size_t>(id)] = true;
		for (int q : p.arena[static_cast<size_t>(id)].parents) stack.push_back(q);
	}

	std::vector<int> used_axioms; // in first-use order over clause ids
	for (size_t id = 0; id < p.arena.size(); ++id) {
		const Clause &c = p.arena[id];
		if (!needed[id] || c.axiom < 0) continue;
		if (std::find(used_axioms.begin(), used_axioms.end(), c.axiom) == used_axioms.end())
			used_axioms.push_back(c.axiom);
	}

	out << "% SZS output start Refutation\n";
	std::map<int, int> fof_no;
	for (size_t i = 0; i < used_axioms.size(); ++i) {
		int ax = used_axioms[i];
		fof_no[ax] = static_cast<int>(i) + 1;
		out << "fof(f" << i + 1 << ", axiom, "
		    << fragsat::formula_to_tptp(*axioms[static_cast<size_t>(ax)].formula) << ", file('"
		    << path << "', " << axioms[static_cast<size_t>(ax)].name << ")).\n";
	}
	std::map<int, int> cnf_no;
	int next_c = 1;
	for (size_t id = 0; id < p.arena.size(); ++id) {
		const Clause &c = p.arena[id];
		if (!needed[id]) continue;
		cnf_no[c.id] = next_c;
		out << "cnf(c" << next_c << ", plain, "
		    << clause_str(c.lits, p.cl.preds, p.cl.funcs) << ", inference(" << c.rule
		    << ", [], [";
		if (c.axiom >= 0) {
			out << 'f' << fof_no[c.axiom];
		} else {
			for (size_t k = 0; k < c.parents.size(); ++k) {
				if (k) out << ", ";
				out << 'c' << cnf_no[c.parents[static_cast<size_t>(k)]];
			}
		}
		out << "])).\n";
		++next_c;
	}
	out << "% SZS output end Refutation\n";
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"fragprove: saturation prover for the fragment toolkit"};
	std::string path;
	double timeout = 10.0;
	std::size_t max_clauses = 200000;
	std::string name;
	app.add_option("file", path, "TPTP FOF problem file")->required();
	app.add_option("--timeout", timeout, "soft wall-clock limit in seconds");
	app.add_option("--max-clauses", max_clauses, "clause budget before giving up");
	app.add_option("--name", name, "problem name for the SZS line");
	CLI11_PARSE(app, argc, argv);
	if (name.empty()) name = path;

	std::ifstream in(path, std::ios::binary);
	if (!in) {
		std::cout << "% SZS status Error for " << name << " : cannot open input\n";
		return 1;
	}
	std::stringstream buf;
	buf << in.rdbuf();

	std::vector<FofLine> axioms;
	try {
		axioms = fragsat::parse_fof(buf.str());
	} catch (const std::exception &e) {
		std::cout << "% SZS status Error for " << name << " : " << e.what() << '\n';
		return 1;
	}

	Prover p;
	p.max_clauses = max_clauses;
	p.deadline = std::chrono::steady_clock::now() +
	             std::chrono::milliseconds(static_cast<long>(timeout * 1000));
	// Atoms outrank terms built from function symbols of any table by giving
	// predicates ids above every function; keeps the two orders coherent.
	std::optional<int> empty;
	for (size_t i = 0; i < axioms.size() && !empty; ++i) {
		for (auto &lits : p.cl.clausify(*axioms[i].formula)) {
			if (is_tautology(lits)) continue;
			int id = p.add_clause(std::move(lits), "clausify", {}, static_cast<int>(i));
			if (p.arena[static_cast<size_t>(id)].lits.empty()) empty = id;
		}
	}
	p.pred_offset = static_cast<int>(p.cl.funcs.names.size());

	if (!empty) empty = p.saturate();

	if (empty) {
		std::cout << "% SZS status Unsatisfiable for " << name << '\n';
		print_refutation(p, axioms, path, *empty, std::cout);
		return 0;
	}
	if (p.out_of_time) {
		std::cout << "% SZS status Timeout for " << name << '\n';
		return 0;
	}
	if (p.out_of_clauses) {
		std::cout << "% SZS status GaveUp for " << name << '\n';
		return 0;
	}
	std::cout << "% SZS status Satisfiable for " << name << '\n';
	return 0;
}
