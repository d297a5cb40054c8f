#include "fragsat/decide.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <sstream>
#include <tuple>

#include "fragsat/errors.hpp"
#include "fragsat/fol.hpp"

namespace fragsat {

namespace {

int slot_in(const std::vector<int32_t> &xs, int32_t x) {
	for (size_t i = 0; i < xs.size(); ++i)
		if (xs[i] == x) return static_cast<int>(i);
	return -1;
}

void collect_nouns(const Sentence &s, std::vector<int32_t> &out) {
	std::visit(
	    [&](const auto &t) {
		    using T = std::decay_t<decltype(t)>;
		    if constexpr (std::is_same_v<T, Syllogistic>) {
			    out.push_back(t.subject.noun);
			    out.push_back(t.predicate.noun);
		    } else if constexpr (std::is_same_v<T, Relational>) {
			    out.push_back(t.subject.noun);
			    out.push_back(t.object.noun);
		    } else {
			    out.push_back(t.head);
			    out.push_back(t.rel.noun);
			    out.push_back(t.predicate.noun);
		    }
	    },
	    s);
}

void sort_unique(std::vector<int32_t> &xs) {
	std::sort(xs.begin(), xs.end());
	xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

} // namespace

// ---------------------------------------------------------------- Model

bool Model::satisfies(const Sentence &s) const {
	auto noun_slot = [&](int32_t noun) {
		int slot = slot_in(nouns, noun);
		if (slot < 0)
			throw UnknownWord("model does not interpret noun #" + std::to_string(noun));
		return slot;
	};
	auto lit_holds = [&](const Literal &l, int e) {
		return noun_ext[noun_slot(l.noun)][e] == l.positive;
	};
	auto verb_holds = [&](int32_t verb, bool want, int x, int y) {
		int slot = slot_in(verbs, verb);
		if (slot < 0)
			throw UnknownWord("model does not interpret verb #" + std::to_string(verb));
		return verb_ext[slot][x * domain + y] == want;
	};

	return std::visit(
	    [&](const auto &t) -> bool {
		    using T = std::decay_t<decltype(t)>;
		    if constexpr (std::is_same_v<T, Syllogistic>) {
			    if (t.q == Quant::Universal) {
				    for (int e = 0; e < domain; ++e)
					    if (lit_holds(t.subject, e) && !lit_holds(t.predicate, e)) return false;
				    return true;
			    }
			    for (int e = 0; e < domain; ++e)
				    if (lit_holds(t.subject, e) && lit_holds(t.predicate, e)) return true;
			    return false;
		    } else if constexpr (std::is_same_v<T, Relational>) {
			    auto gamma = [&](int x) {
				    if (t.oq == Quant::Universal) {
					    for (int y = 0; y < domain; ++y)
						    if (lit_holds(t.object, y) &&
						        !verb_holds(t.verb, t.verb_positive, x, y))
							    return false;
					    return true;
				    }
				    for (int y = 0; y < domain; ++y)
					    if (lit_holds(t.object, y) && verb_holds(t.verb, t.verb_positive, x, y))
						    return true;
				    return false;
			    };
			    if (t.sq == Quant::Universal) {
				    for (int x = 0; x < domain; ++x)
					    if (lit_holds(t.subject, x) && !gamma(x)) return false;
				    return true;
			    }
			    for (int x = 0; x < domain; ++x)
				    if (lit_holds(t.subject, x) && gamma(x)) return true;
			    return false;
		    } else {
			    Literal head{t.head, true};
			    if (t.q == Quant::Universal) {
				    for (int e = 0; e < domain; ++e)
					    if (lit_holds(head, e) && lit_holds(t.rel, e) && !lit_holds(t.predicate, e))
						    return false;
				    return true;
			    }
			    for (int e = 0; e < domain; ++e)
				    if (lit_holds(head, e) && lit_holds(t.rel, e) && lit_holds(t.predicate, e))
					    return true;
			    return false;
		    }
	    },
	    s);
}

bool Model::satisfies_all(const std::vector<Sentence> &ss) const {
	for (const auto &s : ss)
		if (!satisfies(s)) return false;
	return true;
}

// ------------------------------------------------------- ForbiddenConfig

std::string ForbiddenConfig::kind_name() const {
	if (std::holds_alternative<MutualUniversal>(detail)) return "mutual";
	if (std::holds_alternative<ForallForallCfg>(detail)) return "forallforall";
	switch (std::get<PathViolation>(detail).kind) {
	case ViolationKind::I: return "path-i";
	case ViolationKind::II: return "path-ii";
	case ViolationKind::III: return "path-iii";
	}
	return "path-i";
}

// ---------------------------------------------------------- LiteralGraph

int LiteralGraph::slot_of(int32_t noun) const { return slot_in(nouns, noun); }

int LiteralGraph::vertex(Literal l) const {
	int slot = slot_of(l.noun);
	if (slot < 0)
		throw UnknownWord("literal over noun #" + std::to_string(l.noun) + " not in graph");
	return 2 * slot + (l.positive ? 0 : 1);
}

Literal LiteralGraph::literal(int vertex) const {
	return {nouns[vertex / 2], vertex % 2 == 0};
}

LiteralGraph build_literal_graph(const std::vector<Sentence> &phi) {
	LiteralGraph g;
	for (const auto &s : phi) collect_nouns(s, g.nouns);
	sort_unique(g.nouns);
	g.adj.assign(2 * g.nouns.size(), {});
	for (const auto &s : phi) {
		const auto *syl = std::get_if<Syllogistic>(&s);
		if (syl == nullptr || syl->q != Quant::Universal) continue;
		int a = g.vertex(syl->subject);
		int b = g.vertex(syl->predicate);
		g.adj[a].push_back(b);
		g.adj[LiteralGraph::complement(b)].push_back(LiteralGraph::complement(a));
	}
	return g;
}

// ----------------------------------------------------------- decide_graph

namespace {

struct Bfs {
	std::vector<int> dist, parent;
};

Bfs bfs_from(const LiteralGraph &g, int src) {
	Bfs b;
	b.dist.assign(g.adj.size(), -1);
	b.parent.assign(g.adj.size(), -1);
	std::deque<int> q{src};
	b.dist[src] = 0;
	while (!q.empty()) {
		int v = q.front();
		q.pop_front();
		for (int w : g.adj[v]) {
			if (b.dist[w] >= 0) continue;
			b.dist[w] = b.dist[v] + 1;
			b.parent[w] = v;
			q.push_back(w);
		}
	}
	return b;
}

std::vector<Literal> bfs_path(const LiteralGraph &g, const Bfs &b, int dst) {
	std::vector<int> vs;
	for (int v = dst; v >= 0; v = b.parent[v]) vs.push_back(v);
	std::reverse(vs.begin(), vs.end());
	std::vector<Literal> out;
	out.reserve(vs.size());
	for (int v : vs) out.push_back(g.literal(v));
	return out;
}

} // namespace

Verdict decide_graph(const std::vector<Sentence> &phi) {
	for (const auto &s : phi)
		if (!std::holds_alternative<Syllogistic>(s))
			throw WrongFragment("decide_graph handles syllogistic sentences only");

	LiteralGraph g = build_literal_graph(phi);
	int nv = static_cast<int>(g.adj.size());
	std::vector<Bfs> from(nv);
	for (int v = 0; v < nv; ++v) from[v] = bfs_from(g, v);

	// Tie order: size, then path violations before mutual pairs, then
	// existential sentence index, then kind i < ii < iii, then noun slot.
	struct Cand {
		int size, order, sent, kind, noun;
		bool operator<(const Cand &o) const {
			return std::tie(size, order, sent, kind, noun) <
			       std::tie(o.size, o.order, o.sent, o.kind, o.noun);
		}
	};
	std::optional<Cand> best;
	auto consider = [&](Cand c) {
		if (!best || c < *best) best = c;
	};

	for (int i = 0; i < static_cast<int>(phi.size()); ++i) {
		const auto &syl = std::get<Syllogistic>(phi[i]);
		if (syl.q != Quant::Existential) continue;
		int l = g.vertex(syl.subject);
		int m = g.vertex(syl.predicate);
		if (int d = from[l].dist[LiteralGraph::complement(l)]; d >= 0) consider({d, 0, i, 0, -1});
		if (int d = from[m].dist[LiteralGraph::complement(m)]; d >= 0) consider({d, 0, i, 1, -1});
		if (int d = from[l].dist[LiteralGraph::complement(m)]; d >= 0) consider({d, 0, i, 2, -1});
	}
	for (int slot = 0; slot < static_cast<int>(g.nouns.size()); ++slot) {
		int o = 2 * slot;
		int up = from[o].dist[o + 1];
		int down = from[o + 1].dist[o];
		if (up >= 0 && down >= 0)
			consider({std::max(up, down), 1, std::numeric_limits<int>::max(), 3, slot});
	}

	if (!best) return {Status::Satisfiable, std::nullopt, std::nullopt};

	ForbiddenConfig cfg;
	cfg.size = best->size;
	if (best->order == 0) {
		const auto &syl = std::get<Syllogistic>(phi[best->sent]);
		int l = g.vertex(syl.subject);
		int m = g.vertex(syl.predicate);
		PathViolation pv;
		pv.sentence = best->sent;
		switch (best->kind) {
		case 0:
			pv.kind = ViolationKind::I;
			pv.path = bfs_path(g, from[l], LiteralGraph::complement(l));
			break;
		case 1:
			pv.kind = ViolationKind::II;
			pv.path = bfs_path(g, from[m], LiteralGraph::complement(m));
			break;
		default:
			pv.kind = ViolationKind::III;
			pv.path = bfs_path(g, from[l], LiteralGraph::complement(m));
			break;
		}
		cfg.detail = std::move(pv);
	} else {
		int o = 2 * best->noun;
		MutualUniversal mu;
		mu.o = g.literal(o);
		mu.up = bfs_path(g, from[o], o + 1);
		mu.down = bfs_path(g, from[o + 1], o);
		cfg.detail = std::move(mu);
	}
	return {Status::Unsatisfiable, std::nullopt, std::move(cfg)};
}

// --------------------------------------------------------- decide_monadic

namespace {

// Literal encoding: ±(var+1); assign holds 0 unknown, 1 true, -1 false.
bool dpll(const std::vector<std::vector<int>> &clauses, std::vector<int8_t> assign) {
	for (;;) {
		bool progress = false;
		for (const auto &cl : clauses) {
			int unassigned = 0, last = 0;
			bool sat = false;
			for (int lit : cl) {
				int var = std::abs(lit) - 1;
				int8_t want = lit > 0 ? 1 : -1;
				if (assign[var] == 0) {
					++unassigned;
					last = lit;
				} else if (assign[var] == want) {
					sat = true;
					break;
				}
			}
			if (sat) continue;
			if (unassigned == 0) return false;
			if (unassigned == 1) {
				assign[std::abs(last) - 1] = last > 0 ? 1 : -1;
				progress = true;
			}
		}
		if (!progress) break;
	}
	int var = -1;
	for (size_t i = 0; i < assign.size(); ++i)
		if (assign[i] == 0) {
			var = static_cast<int>(i);
			break;
		}
	if (var < 0) return true;
	auto branch = assign;
	branch[var] = 1;
	if (dpll(clauses, std::move(branch))) return true;
	assign[var] = -1;
	return dpll(clauses, std::move(assign));
}

} // namespace

Verdict decide_monadic(const std::vector<Sentence> &phi) {
	std::vector<int32_t> atoms;
	for (const auto &s : phi) {
		if (std::holds_alternative<Relational>(s))
			throw WrongFragment("decide_monadic handles monadic sentences only");
		collect_nouns(s, atoms);
	}
	sort_unique(atoms);
	auto enc = [&](const Literal &l) {
		int a = slot_in(atoms, l.noun) + 1;
		return l.positive ? a : -a;
	};

	std::vector<std::vector<int>> universal;
	std::vector<std::vector<int>> existentials;
	for (const auto &s : phi) {
		if (const auto *syl = std::get_if<Syllogistic>(&s)) {
			if (syl->q == Quant::Universal)
				universal.push_back({-enc(syl->subject), enc(syl->predicate)});
			else
				existentials.push_back({enc(syl->subject), enc(syl->predicate)});
		} else {
			const auto &rel = std::get<Relative>(s);
			int head = slot_in(atoms, rel.head) + 1;
			if (rel.q == Quant::Universal)
				universal.push_back({-head, -enc(rel.rel), enc(rel.predicate)});
			else
				existentials.push_back({head, enc(rel.rel), enc(rel.predicate)});
		}
	}

	// Sat iff some type satisfies every universal clause, and every
	// existential's units are jointly extendable under those clauses.
	std::vector<int8_t> blank(atoms.size(), 0);
	if (!dpll(universal, blank)) return {Status::Unsatisfiable, std::nullopt, std::nullopt};
	for (const auto &ex : existentials) {
		auto clauses = universal;
		for (int lit : ex) clauses.push_back({lit});
		if (!dpll(clauses, blank)) return {Status::Unsatisfiable, std::nullopt, std::nullopt};
	}
	return {Status::Satisfiable, std::nullopt, std::nullopt};
}

// --------------------------------------------------- bounded_model_search

namespace {

struct OracleSearch {
	const std::vector<Sentence> &phi;
	std::vector<int32_t> nouns, verbs;
	bool monadic = true;
	uint64_t budget = 0;
	uint64_t nodes = 0;

	std::vector<std::vector<int>> type_clauses; // universal monadic constraints
	std::vector<std::vector<int>> covers;       // per-existential necessary units
	struct ForcedRel {                          // ∀x(p → ∀y(q → [¬]r(x,y)))
		int verb_slot;
		Literal subj, obj;
		bool value;
	};
	std::vector<ForcedRel> forced;

	int k = 0;
	std::vector<uint64_t> type;
	std::vector<std::vector<int8_t>> bits; // [verb slot][x*k+y]
	std::optional<Model> found;

	void tick() {
		if (++nodes > budget)
			throw BudgetExceeded("oracle exceeded its budget of " + std::to_string(budget) +
			                     " search nodes");
	}

	bool lit_in_type(uint64_t t, int lit) const {
		bool bit = (t >> (std::abs(lit) - 1)) & 1;
		return lit > 0 ? bit : !bit;
	}

	bool type_ok(uint64_t t) const {
		for (const auto &cl : type_clauses) {
			bool sat = false;
			for (int lit : cl)
				if (lit_in_type(t, lit)) {
					sat = true;
					break;
				}
			if (!sat) return false;
		}
		return true;
	}

	bool units_hold(uint64_t t, const std::vector<int> &units) const {
		for (int lit : units)
			if (!lit_in_type(t, lit)) return false;
		return true;
	}

	static bool covers_compatible(const std::vector<int> &a, const std::vector<int> &b) {
		for (int la : a)
			for (int lb : b)
				if (la == -lb) return false;
		return true;
	}

	// Necessary condition: a pairwise-incompatible set of uncovered covers
	// needs that many distinct elements (one element may still witness several
	// compatible covers, so the plain uncovered count would over-prune).
	bool cover_feasible(int assigned) const {
		std::vector<const std::vector<int> *> reps;
		for (const auto &cv : covers) {
			bool hit = false;
			for (int e = 0; e < assigned && !hit; ++e) hit = units_hold(type[e], cv);
			if (hit) continue;
			bool clashes_all = true;
			for (const auto *rep : reps)
				if (covers_compatible(*rep, cv)) {
					clashes_all = false;
					break;
				}
			if (clashes_all) reps.push_back(&cv);
		}
		return static_cast<int>(reps.size()) <= k - assigned;
	}

	bool lit_on_elem(const Literal &l, int e) const {
		bool bit = (type[e] >> slot_in(nouns, l.noun)) & 1;
		return bit == l.positive;
	}

	Model make_model() const {
		Model m;
		m.domain = k;
		m.nouns = nouns;
		m.verbs = verbs;
		m.noun_ext.assign(nouns.size(), std::vector<bool>(k, false));
		for (size_t slot = 0; slot < nouns.size(); ++slot)
			for (int e = 0; e < k; ++e) m.noun_ext[slot][e] = (type[e] >> slot) & 1;
		m.verb_ext.assign(verbs.size(), std::vector<bool>(k * k, false));
		for (size_t w = 0; w < verbs.size(); ++w)
			for (int p = 0; p < k * k; ++p) m.verb_ext[w][p] = bits[w][p] == 1;
		return m;
	}

	bool complete() {
		Model m = make_model();
		if (!m.satisfies_all(phi)) return false;
		found = std::move(m);
		return true;
	}

	bool rel_dfs(const std::vector<std::pair<int, int>> &free, size_t idx) {
		if (idx == free.size()) return complete();
		auto [w, p] = free[idx];
		for (int b = 1; b >= 0; --b) {
			tick();
			bits[w][p] = static_cast<int8_t>(b);
			if (rel_dfs(free, idx + 1)) return true;
		}
		bits[w][p] = -1;
		return false;
	}

	bool relations() {
		if (verbs.empty()) return complete();
		bits.assign(verbs.size(), std::vector<int8_t>(k * k, -1));
		for (const auto &fr : forced) {
			for (int x = 0; x < k; ++x) {
				if (!lit_on_elem(fr.subj, x)) continue;
				for (int y = 0; y < k; ++y) {
					if (!lit_on_elem(fr.obj, y)) continue;
					int8_t want = fr.value ? 1 : 0;
					int8_t &cell = bits[fr.verb_slot][x * k + y];
					if (cell >= 0 && cell != want) return false; // forced conflict
					cell = want;
				}
			}
		}
		std::vector<std::pair<int, int>> free;
		for (size_t w = 0; w < verbs.size(); ++w)
			for (int p = 0; p < k * k; ++p)
				if (bits[w][p] < 0) free.emplace_back(static_cast<int>(w), p);
		return rel_dfs(free, 0);
	}

	bool assign_types(int i) {
		if (i == k) return cover_feasible(k) && relations();
		uint64_t lo = i == 0 ? 0 : monadic ? type[i - 1] + 1 : type[i - 1];
		uint64_t hi = nouns.size() >= 64 ? 0 : uint64_t{1} << nouns.size();
		for (uint64_t t = lo; t < hi; ++t) {
			tick();
			if (!type_ok(t)) continue;
			type[i] = t;
			if (!cover_feasible(i + 1)) continue;
			if (assign_types(i + 1)) return true;
		}
		return false;
	}
};

} // namespace

Verdict bounded_model_search(const std::vector<Sentence> &phi, int max_domain, uint64_t budget) {
	if (max_domain < 1) throw std::invalid_argument("max_domain must be at least 1");

	OracleSearch s{phi, {}, {}, true, budget, 0, {}, {}, {}, 0, {}, {}, std::nullopt};
	for (const auto &sent : phi) collect_nouns(sent, s.nouns);
	sort_unique(s.nouns);
	if (s.nouns.size() >= 64)
		throw BudgetExceeded("oracle supports at most 63 distinct nouns");
	for (const auto &sent : phi)
		if (const auto *rel = std::get_if<Relational>(&sent)) {
			s.monadic = false;
			s.verbs.push_back(rel->verb);
		}
	sort_unique(s.verbs);

	auto enc = [&](const Literal &l) {
		int a = slot_in(s.nouns, l.noun) + 1;
		return l.positive ? a : -a;
	};
	std::vector<Sentence> distinct_existential;
	auto note_existential = [&](const Sentence &sent, std::vector<int> cover) {
		s.covers.push_back(std::move(cover));
		for (const auto &d : distinct_existential)
			if (d == sent) return;
		distinct_existential.push_back(sent);
	};

	for (const auto &sent : phi) {
		if (const auto *syl = std::get_if<Syllogistic>(&sent)) {
			if (syl->q == Quant::Universal)
				s.type_clauses.push_back({-enc(syl->subject), enc(syl->predicate)});
			else
				note_existential(sent, {enc(syl->subject), enc(syl->predicate)});
		} else if (const auto *rl = std::get_if<Relative>(&sent)) {
			int head = slot_in(s.nouns, rl->head) + 1;
			if (rl->q == Quant::Universal)
				s.type_clauses.push_back({-head, -enc(rl->rel), enc(rl->predicate)});
			else
				note_existential(sent, {head, enc(rl->rel), enc(rl->predicate)});
		} else {
			const auto &r = std::get<Relational>(sent);
			if (r.sq == Quant::Universal && r.oq == Quant::Universal)
				s.forced.push_back({slot_in(s.verbs, r.verb), r.subject, r.object, r.verb_positive});
			else if (r.sq == Quant::Existential)
				note_existential(sent, {enc(r.subject)});
		}
	}
	// Deduplicate covers; only distinct witness requirements constrain size.
	std::sort(s.covers.begin(), s.covers.end());
	s.covers.erase(std::unique(s.covers.begin(), s.covers.end()), s.covers.end());

	for (int k = 1; k <= max_domain; ++k) {
		s.k = k;
		s.type.assign(k, 0);
		if (s.assign_types(0)) return {Status::Satisfiable, std::move(s.found), std::nullopt};
	}

	// A satisfiable purely monadic Φ has a model with one element per distinct
	// existential (min. one), and distinct types suffice; beyond that bound a
	// negative exhaustive search is conclusive.
	long long cap = std::max<long long>(1, static_cast<long long>(distinct_existential.size()));
	if (s.nouns.size() < 20)
		cap = std::min(cap, 1LL << s.nouns.size());
	if (s.monadic && max_domain >= cap)
		return {Status::Unsatisfiable, std::nullopt, std::nullopt};
	return {Status::Unknown, std::nullopt, std::nullopt};
}

// ----------------------------------------------------------------- decide

std::string_view method_name(Method m) {
	switch (m) {
	case Method::Graph: return "graph";
	case Method::Monadic: return "monadic";
	case Method::Oracle: return "oracle";
	case Method::Atp: return "atp";
	}
	return "graph";
}

std::optional<Method> method_from_name(std::string_view name) {
	if (name == "graph") return Method::Graph;
	if (name == "monadic") return Method::Monadic;
	if (name == "oracle") return Method::Oracle;
	if (name == "atp") return Method::Atp;
	return std::nullopt;
}

Verdict decide(const std::vector<Sentence> &phi, Method m, const Vocabulary &v,
               const DecideOptions &opts) {
	switch (m) {
	case Method::Graph:
		return decide_graph(phi);
	case Method::Monadic:
		return decide_monadic(phi);
	case Method::Oracle:
		return bounded_model_search(phi, opts.max_domain, opts.budget);
	case Method::Atp:
		break;
	}
	if (!opts.prover) throw ProverUnavailable("no prover configured for the atp method");
	ProverResult r = run_prover(to_tptp(phi, v), *opts.prover);
	switch (r.status) {
	case Szs::Unsatisfiable:
		return {Status::Unsatisfiable, std::nullopt, std::nullopt};
	case Szs::Satisfiable:
		return {Status::Satisfiable, std::nullopt, std::nullopt};
	case Szs::Timeout:
		return {Status::Unknown, std::nullopt, std::nullopt};
	case Szs::Error:
		break;
	}
	throw UnparseableOutput("prover reported SZS " + r.status_word);
}

} // namespace fragsat
