#include "fragsat/fol.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

#include "fragsat/errors.hpp"

namespace fragsat {

FormulaPtr f_atom(std::string pred, std::vector<FTerm> args) {
	auto f = std::make_shared<Formula>();
	f->kind = FKind::Atom;
	f->pred = std::move(pred);
	f->args = std::move(args);
	return f;
}

FormulaPtr f_not(FormulaPtr x) {
	auto f = std::make_shared<Formula>();
	f->kind = FKind::Not;
	f->kids = {std::move(x)};
	return f;
}

FormulaPtr f_and(std::vector<FormulaPtr> fs) {
	auto f = std::make_shared<Formula>();
	f->kind = FKind::And;
	f->kids = std::move(fs);
	return f;
}

FormulaPtr f_or(std::vector<FormulaPtr> fs) {
	auto f = std::make_shared<Formula>();
	f->kind = FKind::Or;
	f->kids = std::move(fs);
	return f;
}

FormulaPtr f_imp(FormulaPtr a, FormulaPtr b) {
	auto f = std::make_shared<Formula>();
	f->kind = FKind::Imp;
	f->kids = {std::move(a), std::move(b)};
	return f;
}

namespace {

FormulaPtr f_quant(FKind kind, std::string var, FormulaPtr x) {
	auto f = std::make_shared<Formula>();
	f->kind = kind;
	f->var = std::move(var);
	f->kids = {std::move(x)};
	return f;
}

} // namespace

FormulaPtr f_forall(std::string var, FormulaPtr f) {
	return f_quant(FKind::Forall, std::move(var), std::move(f));
}

FormulaPtr f_exists(std::string var, FormulaPtr f) {
	return f_quant(FKind::Exists, std::move(var), std::move(f));
}

std::string tptp_symbol(std::string_view word) {
	std::string out(word);
	for (char &c : out)
		if (c == '-')
			c = '_';
	return out;
}

namespace {

FormulaPtr lit_formula(const Literal &l, const Vocabulary &v, const char *var) {
	if (l.noun < 0 || static_cast<size_t>(l.noun) >= v.nouns.size())
		throw UnknownWord("noun index " + std::to_string(l.noun) + " out of range");
	auto a = f_atom(tptp_symbol(v.nouns[static_cast<size_t>(l.noun)]), {FTerm{var, {}}});
	return l.positive ? a : f_not(std::move(a));
}

} // namespace

FormulaPtr translate(const Sentence &s, const Vocabulary &v) {
	if (const auto *syl = std::get_if<Syllogistic>(&s)) {
		auto subj = lit_formula(syl->subject, v, "X");
		auto pred = lit_formula(syl->predicate, v, "X");
		if (syl->q == Quant::Universal)
			return f_forall("X", f_imp(std::move(subj), std::move(pred)));
		return f_exists("X", f_and({std::move(subj), std::move(pred)}));
	}
	if (const auto *rel = std::get_if<Relational>(&s)) {
		if (rel->verb < 0 || static_cast<size_t>(rel->verb) >= v.verbs.size())
			throw UnknownWord("verb index " + std::to_string(rel->verb) + " out of range");
		auto r = f_atom(tptp_symbol(v.verbs[static_cast<size_t>(rel->verb)].inf),
		                {FTerm{"X", {}}, FTerm{"Y", {}}});
		FormulaPtr rv = rel->verb_positive ? r : f_not(std::move(r));
		auto obj = lit_formula(rel->object, v, "Y");
		FormulaPtr gamma =
		    rel->oq == Quant::Universal
		        ? f_forall("Y", f_imp(std::move(obj), std::move(rv)))
		        : f_exists("Y", f_and({std::move(obj), std::move(rv)}));
		auto subj = lit_formula(rel->subject, v, "X");
		return rel->sq == Quant::Universal
		           ? f_forall("X", f_imp(std::move(subj), std::move(gamma)))
		           : f_exists("X", f_and({std::move(subj), std::move(gamma)}));
	}
	const auto &rc = std::get<Relative>(s);
	auto head = lit_formula({rc.head, true}, v, "X");
	auto rl = lit_formula(rc.rel, v, "X");
	auto pred = lit_formula(rc.predicate, v, "X");
	if (rc.q == Quant::Universal)
		return f_forall("X", f_imp(f_and({std::move(head), std::move(rl)}), std::move(pred)));
	return f_exists("X", f_and({std::move(head), std::move(rl), std::move(pred)}));
}

namespace {

void print_term(std::string &out, const FTerm &t) {
	out += t.name;
	if (!t.args.empty()) {
		out += '(';
		for (size_t i = 0; i < t.args.size(); ++i) {
			if (i)
				out += ',';
			print_term(out, t.args[i]);
		}
		out += ')';
	}
}

// Atoms and negated atoms print bare; any other operand of a binary
// connective is parenthesized.
bool is_unit(const Formula &f) {
	return f.kind == FKind::Atom ||
	       (f.kind == FKind::Not && f.kids[0]->kind == FKind::Atom);
}

void print_formula(std::string &out, const Formula &f);

void print_operand(std::string &out, const Formula &f) {
	if (is_unit(f)) {
		print_formula(out, f);
	} else {
		out += '(';
		print_formula(out, f);
		out += ')';
	}
}

void print_formula(std::string &out, const Formula &f) {
	switch (f.kind) {
	case FKind::Atom:
		out += f.pred;
		if (!f.args.empty()) {
			out += '(';
			for (size_t i = 0; i < f.args.size(); ++i) {
				if (i)
					out += ',';
				print_term(out, f.args[i]);
			}
			out += ')';
		}
		break;
	case FKind::Not:
		out += '~';
		print_operand(out, *f.kids[0]);
		break;
	case FKind::And:
	case FKind::Or:
		if (f.kids.empty()) {
			out += f.kind == FKind::And ? "$true" : "$false";
			break;
		}
		for (size_t i = 0; i < f.kids.size(); ++i) {
			if (i)
				out += f.kind == FKind::And ? " & " : " | ";
			print_operand(out, *f.kids[i]);
		}
		break;
	case FKind::Imp:
		print_operand(out, *f.kids[0]);
		out += " => ";
		print_operand(out, *f.kids[1]);
		break;
	case FKind::Forall:
	case FKind::Exists:
		out += f.kind == FKind::Forall ? '!' : '?';
		out += '[';
		out += f.var;
		out += "]: (";
		print_formula(out, *f.kids[0]);
		out += ')';
		break;
	}
}

} // namespace

std::string formula_to_tptp(const Formula &f) {
	std::string out;
	print_formula(out, f);
	return out;
}

std::string to_tptp(const std::vector<Sentence> &ss, const Vocabulary &v,
                    std::string_view prefix) {
	std::string out;
	for (size_t i = 0; i < ss.size(); ++i) {
		out += "fof(";
		out += prefix;
		out += std::to_string(i + 1);
		out += ", axiom, ";
		out += formula_to_tptp(*translate(ss[i], v));
		out += ").\n";
	}
	return out;
}

std::string to_tptp_anonymous(const std::vector<Sentence> &ss, std::string_view prefix) {
	int32_t max_noun = -1, max_verb = -1;
	for (const auto &s : ss)
		std::visit(
		    [&](const auto &t) {
			    using T = std::decay_t<decltype(t)>;
			    if constexpr (std::is_same_v<T, Syllogistic>) {
				    max_noun = std::max({max_noun, t.subject.noun, t.predicate.noun});
			    } else if constexpr (std::is_same_v<T, Relational>) {
				    max_noun = std::max({max_noun, t.subject.noun, t.object.noun});
				    max_verb = std::max(max_verb, t.verb);
			    } else {
				    max_noun = std::max({max_noun, t.head, t.rel.noun, t.predicate.noun});
			    }
		    },
		    s);
	Vocabulary v;
	for (int32_t i = 0; i <= max_noun; ++i) v.nouns.push_back("p" + std::to_string(i));
	for (int32_t i = 0; i <= max_verb; ++i) {
		std::string r = "r" + std::to_string(i);
		v.verbs.push_back({r, r});
	}
	return to_tptp(ss, v, prefix);
}

// ---------------------------------------------------------------------------
// FOF reader

namespace {

struct FofCursor {
	std::string_view text;
	size_t pos = 0;

	[[noreturn]] void fail(const std::string &what) const {
		throw ParseError("FOF offset " + std::to_string(pos) + ": " + what);
	}

	void skip_ws() {
		while (pos < text.size()) {
			char c = text[pos];
			if (c == '%') { // comment to end of line
				while (pos < text.size() && text[pos] != '\n')
					++pos;
			} else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
				++pos;
			} else {
				break;
			}
		}
	}

	bool done() {
		skip_ws();
		return pos >= text.size();
	}

	char peek() {
		skip_ws();
		if (pos >= text.size())
			fail("unexpected end of input");
		return text[pos];
	}

	bool eat(char c) {
		skip_ws();
		if (pos < text.size() && text[pos] == c) {
			++pos;
			return true;
		}
		return false;
	}

	bool eat(std::string_view w) {
		skip_ws();
		if (text.substr(pos, w.size()) == w) {
			pos += w.size();
			return true;
		}
		return false;
	}

	void expect(char c) {
		if (!eat(c))
			fail(std::string("expected '") + c + "'");
	}

	static bool word_char(char c) {
		return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
		       (c >= '0' && c <= '9') || c == '_' || c == '$';
	}

	std::string word() {
		skip_ws();
		if (pos < text.size() && text[pos] == '\'') { // quoted name
			size_t b = ++pos;
			while (pos < text.size() && text[pos] != '\'')
				++pos;
			if (pos >= text.size())
				fail("unterminated quoted name");
			return std::string(text.substr(b, pos++ - b));
		}
		size_t b = pos;
		while (pos < text.size() && word_char(text[pos]))
			++pos;
		if (pos == b)
			fail("expected a name");
		return std::string(text.substr(b, pos - b));
	}

	// Raw capture until the ')' that closes the statement (depth 0), used
	// for the optional source annotation.
	std::string raw_until_close() {
		skip_ws();
		size_t b = pos;
		int depth = 0;
		while (pos < text.size()) {
			char c = text[pos];
			if (c == '\'') {
				++pos;
				while (pos < text.size() && text[pos] != '\'')
					++pos;
				if (pos >= text.size())
					fail("unterminated quote in source");
			} else if (c == '(' || c == '[') {
				++depth;
			} else if (c == ']') {
				--depth;
			} else if (c == ')') {
				if (depth == 0)
					return std::string(text.substr(b, pos - b));
				--depth;
			}
			++pos;
		}
		fail("unterminated source annotation");
	}

	FTerm term() {
		FTerm t;
		t.name = word();
		if (eat('(')) {
			do
				t.args.push_back(term());
			while (eat(','));
			expect(')');
		}
		return t;
	}

	FormulaPtr unitary() {
		skip_ws();
		if (eat('~'))
			return f_not(unitary());
		if (peek() == '!' || peek() == '?') {
			bool universal = text[pos] == '!';
			++pos;
			expect('[');
			std::vector<std::string> vars;
			do
				vars.push_back(word());
			while (eat(','));
			expect(']');
			expect(':');
			FormulaPtr body = unitary();
			for (auto it = vars.rbegin(); it != vars.rend(); ++it)
				body = universal ? f_forall(*it, std::move(body))
				                 : f_exists(*it, std::move(body));
			return body;
		}
		if (eat('(')) {
			FormulaPtr f = formula();
			expect(')');
			return f;
		}
		FTerm a = term();
		if (a.name == "$false")
			return f_or({});
		if (a.name == "$true")
			return f_and({});
		return f_atom(std::move(a.name), std::move(a.args));
	}

	FormulaPtr formula() {
		FormulaPtr first = unitary();
		skip_ws();
		if (eat("=>")) {
			FormulaPtr rhs = unitary();
			skip_ws();
			if (pos < text.size() && (text[pos] == '&' || text[pos] == '|' || text[pos] == '='))
				fail("'=>' is non-associative; parenthesize");
			return f_imp(std::move(first), std::move(rhs));
		}
		if (peek_op('&') || peek_op('|')) {
			char op = text[pos];
			std::vector<FormulaPtr> kids;
			kids.push_back(std::move(first));
			while (eat(op))
				kids.push_back(unitary());
			skip_ws();
			if (pos < text.size() && (text[pos] == '&' || text[pos] == '|'))
				fail("mixed '&'/'|' need parentheses");
			if (pos < text.size() && text[pos] == '=')
				fail("'=>' under '&'/'|' needs parentheses");
			return op == '&' ? f_and(std::move(kids)) : f_or(std::move(kids));
		}
		return first;
	}

	bool peek_op(char c) {
		skip_ws();
		return pos < text.size() && text[pos] == c;
	}
};

} // namespace

std::vector<FofLine> parse_fof(std::string_view text) {
	FofCursor c{text};
	std::vector<FofLine> out;
	while (!c.done()) {
		bool is_fof = c.eat("fof(");
		if (!is_fof && !c.eat("cnf("))
			c.fail("expected 'fof(' or 'cnf('");
		FofLine line;
		line.name = c.word();
		c.expect(',');
		line.role = c.word();
		c.expect(',');
		line.formula = c.formula();
		if (c.eat(','))
			line.source = c.raw_until_close();
		c.expect(')');
		c.expect('.');
		out.push_back(std::move(line));
	}
	return out;
}

} // namespace fragsat
