#include "fragsat/syntax.hpp"

#include <array>

#include "fragsat/errors.hpp"

namespace fragsat {

bool fragment_leq(Fragment a, Fragment b) {
	if (a == b)
		return true;
	switch (a) {
	case Fragment::S:
		return b == Fragment::SDag || b == Fragment::R || b == Fragment::RDag;
	case Fragment::SDag:
	case Fragment::R:
		return b == Fragment::RDag;
	case Fragment::RDag:
		return false;
	case Fragment::SRel:
		return b == Fragment::SRelNeg;
	case Fragment::SRelNeg:
		return false;
	}
	return false;
}

Fragment fragment_of(const Sentence &s) {
	if (const auto *syl = std::get_if<Syllogistic>(&s))
		return syl->subject.positive ? Fragment::S : Fragment::SDag;
	if (const auto *rel = std::get_if<Relational>(&s))
		return rel->subject.positive && rel->object.positive ? Fragment::R : Fragment::RDag;
	const auto &rc = std::get<Relative>(s);
	return rc.rel.positive ? Fragment::SRel : Fragment::SRelNeg;
}

bool fragment_contains(Fragment f, const Sentence &s) { return fragment_leq(fragment_of(s), f); }

Sentence negate(const Sentence &s) {
	if (const auto *syl = std::get_if<Syllogistic>(&s))
		return Syllogistic{flip(syl->q), syl->subject, syl->predicate.complement()};
	if (const auto *rel = std::get_if<Relational>(&s))
		return Relational{flip(rel->sq), rel->subject, flip(rel->oq),
		                  rel->object,   rel->verb,    !rel->verb_positive};
	const auto &rc = std::get<Relative>(s);
	return Relative{flip(rc.q), rc.head, rc.rel, rc.predicate.complement()};
}

bool is_self_inconsistent(const Sentence &s) {
	if (const auto *syl = std::get_if<Syllogistic>(&s))
		return syl->q == Quant::Existential &&
		       syl->subject == syl->predicate.complement();
	if (std::get_if<Relational>(&s))
		return false; // a lone relational sentence always has a model
	const auto &rc = std::get<Relative>(s);
	if (rc.q != Quant::Existential)
		return false;
	const Literal head{rc.head, true};
	return rc.rel == head.complement() || rc.predicate == head.complement() ||
	       rc.rel == rc.predicate.complement();
}

namespace {

constexpr std::array<std::string_view, 6> kFragmentNames = {"s",    "sdag", "r",
                                                            "rdag", "srel", "srelneg"};

} // namespace

std::string_view fragment_name(Fragment f) { return kFragmentNames[static_cast<size_t>(f)]; }

std::optional<Fragment> fragment_from_name(std::string_view name) {
	for (size_t i = 0; i < kFragmentNames.size(); ++i)
		if (name == kFragmentNames[i])
			return static_cast<Fragment>(i);
	if (name == "sreln") // short alias
		return Fragment::SRelNeg;
	return std::nullopt;
}

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

void put_literal(std::string &out, const Literal &l, const Vocabulary &v) {
	out += l.positive ? '+' : '-';
	out += noun_word(l.noun, v);
}

std::string_view quant_word(Quant q) { return q == Quant::Universal ? "all" : "exists"; }

} // namespace

std::string to_term(const Sentence &s, const Vocabulary &v) {
	std::string out;
	if (const auto *syl = std::get_if<Syllogistic>(&s)) {
		out += quant_word(syl->q);
		out += '(';
		put_literal(out, syl->subject, v);
		out += ',';
		put_literal(out, syl->predicate, v);
		out += ')';
	} else if (const auto *rel = std::get_if<Relational>(&s)) {
		out += "rel(";
		out += quant_word(rel->sq);
		out += ',';
		put_literal(out, rel->subject, v);
		out += ',';
		out += quant_word(rel->oq);
		out += ',';
		put_literal(out, rel->object, v);
		out += ',';
		out += rel->verb_positive ? '+' : '-';
		out += verb_entry(rel->verb, v).inf;
		out += ')';
	} else {
		const auto &rc = std::get<Relative>(s);
		out += "relcl(";
		out += quant_word(rc.q);
		out += ',';
		out += noun_word(rc.head, v);
		out += ',';
		put_literal(out, rc.rel, v);
		out += ',';
		put_literal(out, rc.predicate, v);
		out += ')';
	}
	return out;
}

namespace {

// Tiny cursor over the term string; throws ParseError/UnknownWord.
struct TermCursor {
	std::string_view text;
	size_t pos = 0;

	[[noreturn]] void fail(const std::string &what) const {
		throw ParseError("term '" + std::string(text) + "' at offset " +
		                 std::to_string(pos) + ": " + what);
	}
	void expect(char c) {
		if (pos >= text.size() || text[pos] != c)
			fail(std::string("expected '") + c + "'");
		++pos;
	}
	bool eat(std::string_view word) {
		if (text.substr(pos, word.size()) == word) {
			pos += word.size();
			return true;
		}
		return false;
	}
	std::string_view word() {
		size_t b = pos;
		while (pos < text.size() &&
		       ((text[pos] >= 'a' && text[pos] <= 'z') || text[pos] == '-'))
			++pos;
		if (pos == b)
			fail("expected a word");
		return text.substr(b, pos - b);
	}
	Quant quant() {
		if (eat("all"))
			return Quant::Universal;
		if (eat("exists"))
			return Quant::Existential;
		fail("expected 'all' or 'exists'");
	}
	bool sign() {
		if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
			fail("expected '+' or '-'");
		return text[pos++] == '+';
	}
};

} // namespace

Sentence parse_term(std::string_view term, const Vocabulary &v) {
	TermCursor c{term};
	auto noun_lit = [&]() -> Literal {
		bool pos = c.sign();
		auto w = c.word();
		auto idx = v.noun_index(w);
		if (!idx)
			throw UnknownWord("unknown noun '" + std::string(w) + "'");
		return {*idx, pos};
	};

	Sentence out;
	if (c.eat("rel(")) {
		Relational r;
		r.sq = c.quant();
		c.expect(',');
		r.subject = noun_lit();
		c.expect(',');
		r.oq = c.quant();
		c.expect(',');
		r.object = noun_lit();
		c.expect(',');
		r.verb_positive = c.sign();
		auto w = c.word();
		auto idx = v.verb_index_inf(w);
		if (!idx)
			throw UnknownWord("unknown verb '" + std::string(w) + "'");
		r.verb = *idx;
		c.expect(')');
		out = r;
	} else if (c.eat("relcl(")) {
		Relative r;
		r.q = c.quant();
		c.expect(',');
		auto w = c.word();
		auto idx = v.noun_index(w);
		if (!idx)
			throw UnknownWord("unknown noun '" + std::string(w) + "'");
		r.head = *idx;
		c.expect(',');
		r.rel = noun_lit();
		c.expect(',');
		r.predicate = noun_lit();
		c.expect(')');
		out = r;
	} else {
		Syllogistic s;
		s.q = c.quant();
		c.expect('(');
		s.subject = noun_lit();
		c.expect(',');
		s.predicate = noun_lit();
		c.expect(')');
		out = s;
	}
	if (c.pos != term.size())
		c.fail("trailing characters");
	return out;
}

std::vector<std::string> to_terms(const std::vector<Sentence> &ss, const Vocabulary &v) {
	std::vector<std::string> out;
	out.reserve(ss.size());
	for (const auto &s : ss)
		out.push_back(to_term(s, v));
	return out;
}

std::vector<Sentence> parse_terms(const std::vector<std::string> &terms, const Vocabulary &v) {
	std::vector<Sentence> out;
	out.reserve(terms.size());
	for (const auto &t : terms)
		out.push_back(parse_term(t, v));
	return out;
}

} // namespace fragsat
