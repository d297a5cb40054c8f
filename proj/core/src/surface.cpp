#include "fragsat/surface.hpp"

#include <sstream>

#include "fragsat/errors.hpp"

namespace fragsat {

namespace {

const std::string &noun_word(int32_t idx, const Vocabulary &v) {
	if (idx < 0 || static_cast<size_t>(idx) >= v.nouns.size())
		throw UnknownWord("noun index " + std::to_string(idx) + " out of range");
	return v.nouns[static_cast<size_t>(idx)];
}

const Verb &verb_entry(int32_t idx, const Vocabulary &v) {
	if (idx < 0 || static_cast<size_t>(idx) >= v.verbs.size())
		throw UnknownWord("verb index " + std::to_string(idx) + " out of range");
	return v.verbs[static_cast<size_t>(idx)];
}

// Noun phrase in subject/object position: negative literals take "non-".
std::string np(const Literal &l, const Vocabulary &v) {
	std::string word = noun_word(l.noun, v);
	return l.positive ? word : "non-" + word;
}

} // namespace

std::string realize(const Sentence &s, const Vocabulary &v) {
	std::string out;
	if (const auto *syl = std::get_if<Syllogistic>(&s)) {
		bool pos = syl->predicate.positive;
		if (syl->q == Quant::Universal)
			out = (pos ? "Every " : "No ") + np(syl->subject, v) + " is a ";
		else
			out = "Some " + np(syl->subject, v) + (pos ? " is a " : " is not a ");
		out += noun_word(syl->predicate.noun, v);
	} else if (const auto *rel = std::get_if<Relational>(&s)) {
		const Verb &vb = verb_entry(rel->verb, v);
		std::string subj = np(rel->subject, v);
		std::string obj = np(rel->object, v);
		if (rel->verb_positive) {
			// (∀/∃, ∀/∃, +): Every/Some SUBJ VERBs every/some OBJ.
			out = (rel->sq == Quant::Universal ? "Every " : "Some ") + subj + " " +
			      vb.third + (rel->oq == Quant::Universal ? " every " : " some ") + obj;
		} else if (rel->sq == Quant::Universal) {
			// (∀,∀,−) "No p VERBs any q" / (∀,∃,−) "No p VERBs every q"
			out = "No " + subj + " " + vb.third +
			      (rel->oq == Quant::Universal ? " any " : " every ") + obj;
		} else {
			// (∃,∀,−) "Some p does not VERB any q" / (∃,∃,−) "... every q"
			out = "Some " + subj + " does not " + vb.inf +
			      (rel->oq == Quant::Universal ? " any " : " every ") + obj;
		}
	} else {
		const auto &rc = std::get<Relative>(s);
		bool pos = rc.predicate.positive;
		out = rc.q == Quant::Universal ? (pos ? "Every " : "No ") : "Some ";
		out += noun_word(rc.head, v);
		out += rc.rel.positive ? " who is a " : " who is not a ";
		out += noun_word(rc.rel.noun, v);
		out += (rc.q == Quant::Existential && !pos) ? " is not a " : " is a ";
		out += noun_word(rc.predicate.noun, v);
	}
	out += '.';
	return out;
}

std::string realize_instance(const std::vector<Sentence> &ss, const Vocabulary &v) {
	std::string out;
	for (size_t i = 0; i < ss.size(); ++i) {
		if (i)
			out += '\n';
		out += realize(ss[i], v);
	}
	return out;
}

namespace {

struct TokenStream {
	std::vector<std::string> toks;
	size_t pos = 0;
	std::string_view text;

	[[noreturn]] void fail(const std::string &what) const {
		throw NotInFragment("'" + std::string(text) + "' (token " + std::to_string(pos) +
		                    "): " + what);
	}
	bool done() const { return pos >= toks.size(); }
	const std::string &peek() const {
		if (done())
			fail("sentence ends early");
		return toks[pos];
	}
	std::string take() {
		if (done())
			fail("sentence ends early");
		return toks[pos++];
	}
	bool eat(std::string_view w) {
		if (!done() && toks[pos] == w) {
			++pos;
			return true;
		}
		return false;
	}
	void expect(std::string_view w) {
		if (!eat(w))
			fail("expected '" + std::string(w) + "'");
	}
};

TokenStream tokenize(std::string_view text) {
	TokenStream ts;
	ts.text = text;
	std::string cur;
	for (char c : text) {
		if (c == ' ' || c == '\t') {
			if (!cur.empty())
				ts.toks.push_back(std::move(cur)), cur.clear();
		} else {
			cur += c;
		}
	}
	if (!cur.empty())
		ts.toks.push_back(std::move(cur));
	if (ts.toks.empty() || ts.toks.back().size() < 2 || ts.toks.back().back() != '.')
		ts.fail("sentence must end in '.'");
	ts.toks.back().pop_back();
	return ts;
}

Literal parse_np(TokenStream &ts, const Vocabulary &v) {
	std::string w = ts.take();
	bool positive = true;
	if (w.rfind("non-", 0) == 0) {
		positive = false;
		w = w.substr(4);
	}
	auto idx = v.noun_index(w);
	if (!idx)
		throw UnknownWord("unknown noun '" + w + "' in '" + std::string(ts.text) + "'");
	return {*idx, positive};
}

// "who is a p" | "who is not a p" | "who is a not p" (paper's spelling),
// returning the rel literal; "who" is already consumed.
Literal parse_relative_clause(TokenStream &ts, const Vocabulary &v) {
	ts.expect("is");
	bool positive = true;
	if (ts.eat("not")) {
		positive = false;
		ts.expect("a");
	} else {
		ts.expect("a");
		if (ts.eat("not"))
			positive = false;
	}
	Literal l = parse_np(ts, v);
	if (!l.positive)
		ts.fail("relative clauses negate with 'not', not 'non-'");
	l.positive = positive;
	return l;
}

// Trailing "every|some|any OBJ" of a relational template. `negated` selects
// the polarity row; inside it "any" reads ∀ and "every" reads ∃.
std::pair<Quant, Literal> parse_object(TokenStream &ts, const Vocabulary &v, bool negated) {
	Quant oq;
	const std::string &det = ts.peek();
	if (!negated) {
		if (det == "every")
			oq = Quant::Universal;
		else if (det == "some")
			oq = Quant::Existential;
		else
			ts.fail("expected 'every' or 'some' before the object");
	} else {
		if (det == "any")
			oq = Quant::Universal;
		else if (det == "every")
			oq = Quant::Existential;
		else
			ts.fail("expected 'any' or 'every' before the object");
	}
	ts.take();
	Literal obj = parse_np(ts, v);
	return {oq, obj};
}

Sentence parse_one(TokenStream &ts, const Vocabulary &v) {
	std::string det = ts.take();
	if (!det.empty() && det[0] >= 'A' && det[0] <= 'Z')
		det[0] = static_cast<char>(det[0] - 'A' + 'a');

	Quant q;
	bool no_form = false; // "No ..." carries the predicate/verb negation
	if (det == "every")
		q = Quant::Universal;
	else if (det == "no")
		q = Quant::Universal, no_form = true;
	else if (det == "some")
		q = Quant::Existential;
	else
		ts.fail("expected 'Every', 'No' or 'Some'");

	Literal subject = parse_np(ts, v);

	// Relative clause: "DET head who is (not) a p is (not) a q."
	if (ts.eat("who")) {
		if (!subject.positive)
			ts.fail("relative-clause heads are never negated");
		Literal rel = parse_relative_clause(ts, v);
		ts.expect("is");
		bool pred_positive = !no_form;
		if (ts.eat("not")) {
			if (no_form || q == Quant::Universal)
				ts.fail("'is not' after a universal relative head");
			pred_positive = false;
		}
		ts.expect("a");
		Literal pred = parse_np(ts, v);
		if (!pred.positive)
			ts.fail("predicates negate with 'not', not 'non-'");
		pred.positive = pred_positive;
		if (!ts.done())
			ts.fail("trailing words");
		return Relative{q, subject.noun, rel, pred};
	}

	// Syllogistic: "DET subj is (not) a pred."
	if (ts.eat("is")) {
		bool pred_positive = !no_form;
		if (ts.eat("not")) {
			if (q == Quant::Universal)
				ts.fail("'is not' needs 'Some'; universals use 'No'");
			pred_positive = false;
		}
		ts.expect("a");
		Literal pred = parse_np(ts, v);
		if (!pred.positive)
			ts.fail("predicates negate with 'not', not 'non-'");
		pred.positive = pred_positive;
		if (!ts.done())
			ts.fail("trailing words");
		return Syllogistic{q, subject, pred};
	}

	// Relational negative with existential subject: "Some subj does not VERB ..."
	if (ts.eat("does")) {
		if (no_form || q == Quant::Universal)
			ts.fail("'does not' needs 'Some'");
		ts.expect("not");
		std::string w = ts.take();
		auto verb = v.verb_index_inf(w);
		if (!verb)
			throw UnknownWord("unknown verb '" + w + "' in '" + std::string(ts.text) + "'");
		auto [oq, obj] = parse_object(ts, v, true);
		if (!ts.done())
			ts.fail("trailing words");
		return Relational{q, subject, oq, obj, *verb, false};
	}

	// Remaining templates start with a third-person verb.
	std::string w = ts.take();
	auto verb = v.verb_index_third(w);
	if (!verb)
		throw UnknownWord("unknown verb '" + w + "' in '" + std::string(ts.text) + "'");
	auto [oq, obj] = parse_object(ts, v, no_form);
	if (!ts.done())
		ts.fail("trailing words");
	return Relational{q, subject, oq, obj, *verb, !no_form};
}

} // namespace

Sentence parse_sentence(std::string_view text, const Vocabulary &v) {
	TokenStream ts = tokenize(text);
	return parse_one(ts, v);
}

std::vector<Sentence> parse_instance(std::string_view block, const Vocabulary &v) {
	std::vector<Sentence> out;
	size_t pos = 0;
	while (pos <= block.size()) {
		size_t nl = block.find('\n', pos);
		std::string_view line =
		    block.substr(pos, nl == std::string_view::npos ? block.size() - pos : nl - pos);
		pos = nl == std::string_view::npos ? block.size() + 1 : nl + 1;
		size_t b = line.find_first_not_of(" \t\r");
		if (b == std::string_view::npos)
			continue;
		size_t e = line.find_last_not_of(" \t\r");
		out.push_back(parse_sentence(line.substr(b, e - b + 1), v));
	}
	return out;
}

std::string dump_grammar() {
	return
	    "| Fragment | Logical form | Template |\n"
	    "|---|---|---|\n"
	    "| S | all(+p,+q) — ∀x(p(x) → q(x)) | Every p is a q. |\n"
	    "| S | all(+p,-q) — ∀x(p(x) → ¬q(x)) | No p is a q. |\n"
	    "| S | exists(+p,+q) — ∃x(p(x) ∧ q(x)) | Some p is a q. |\n"
	    "| S | exists(+p,-q) — ∃x(p(x) ∧ ¬q(x)) | Some p is not a q. |\n"
	    "| S† | all(-p,±q), exists(-p,±q) | as S with subject \"non-p\" |\n"
	    "| R | rel(all,+p,all,+q,+r) — ∀x(p(x) → ∀y(q(y) → r(x,y))) | Every p VERBs every q. |\n"
	    "| R | rel(all,+p,exists,+q,+r) — ∀x(p(x) → ∃y(q(y) ∧ r(x,y))) | Every p VERBs some q. |\n"
	    "| R | rel(exists,+p,all,+q,+r) — ∃x(p(x) ∧ ∀y(q(y) → r(x,y))) | Some p VERBs every q. |\n"
	    "| R | rel(exists,+p,exists,+q,+r) — ∃x(p(x) ∧ ∃y(q(y) ∧ r(x,y))) | Some p VERBs some q. |\n"
	    "| R | rel(all,+p,all,+q,-r) — ∀x(p(x) → ∀y(q(y) → ¬r(x,y))) | No p VERBs any q. |\n"
	    "| R | rel(all,+p,exists,+q,-r) — ∀x(p(x) → ∃y(q(y) ∧ ¬r(x,y))) | No p VERBs every q. |\n"
	    "| R | rel(exists,+p,all,+q,-r) — ∃x(p(x) ∧ ∀y(q(y) → ¬r(x,y))) | Some p does not VERB any q. |\n"
	    "| R | rel(exists,+p,exists,+q,-r) — ∃x(p(x) ∧ ∃y(q(y) ∧ ¬r(x,y))) | Some p does not VERB every q. |\n"
	    "| R† | rel(…,-p,…,-q,±r) | as R with \"non-p\"/\"non-q\" |\n"
	    "| Srel | relcl(all,o,+p,+q) — ∀x((o(x) ∧ p(x)) → q(x)) | Every o who is a p is a q. |\n"
	    "| Srel | relcl(all,o,+p,-q) — ∀x((o(x) ∧ p(x)) → ¬q(x)) | No o who is a p is a q. |\n"
	    "| Srel | relcl(exists,o,+p,+q) — ∃x(o(x) ∧ p(x) ∧ q(x)) | Some o who is a p is a q. |\n"
	    "| Srel | relcl(exists,o,+p,-q) — ∃x(o(x) ∧ p(x) ∧ ¬q(x)) | Some o who is a p is not a q. |\n"
	    "| SrelN | relcl(…,o,-p,±q) | as Srel with \"who is not a p\" (input also accepts \"who is a not p\") |\n"
	    "\n"
	    "Verbs are third-person singular except after \"does not\" (infinitive).\n"
	    "\"any\" marks a universal object under negation; \"every\" there reads existentially\n"
	    "(No p VERBs every q ≡ ∀x(p(x) → ∃y(q(y) ∧ ¬r(x,y)))).\n";
}

} // namespace fragsat
