#include "phx/text.hpp"

#include "phx/error.hpp"
#include "phx/expressions.hpp"
#include "phx/kernel.hpp"

#include <algorithm>
#include <cctype>

namespace phx {

namespace {

bool is_ident_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_' || ch == '.' || ch == '-';
}

enum class Tok { LBracket, RBracket, Pipe, Amp, Comma, Eq, Neq, LBrace, RBrace, Word, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
    bool quoted = false;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) != 0) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, "", start};
        const char ch = src_[pos_];
        auto single = [&](Tok k) {
            ++pos_;
            return Token{k, std::string(1, ch), start};
        };
        switch (ch) {
            case '[': return single(Tok::LBracket);
            case ']': return single(Tok::RBracket);
            case '|': return single(Tok::Pipe);
            case '&': return single(Tok::Amp);
            case ',': return single(Tok::Comma);
            case '=': return single(Tok::Eq);
            case '{': return single(Tok::LBrace);
            case '}': return single(Tok::RBrace);
            case '!':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
                    pos_ += 2;
                    return {Tok::Neq, "!=", start};
                }
                throw SyntaxError(start, "expected '!='");
            case '"': return quoted(start);
            default: break;
        }
        if (!is_ident_char(ch)) throw SyntaxError(start, std::string("unexpected character '") + ch + "'");
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
        return {Tok::Word, std::string(src_.substr(start, pos_ - start)), start};
    }

private:
    Token quoted(std::size_t start) {
        ++pos_;
        std::string out;
        while (pos_ < src_.size()) {
            char ch = src_[pos_++];
            if (ch == '"') return {Tok::Word, out, start, true};
            if (ch == '\\') {
                if (pos_ >= src_.size()) break;
                ch = src_[pos_++];
            }
            out.push_back(ch);
        }
        throw SyntaxError(start, "unterminated string");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

enum class TermKind { Equal, NotIn, In };

struct Term {
    TermKind kind;
    CriterionId criterion;
    std::vector<BranchId> branches;
};

class Parser {
public:
    Parser(std::string_view src, const GeneratingPolyhierarchy& gp) : lexer_(src), gp_(gp) { advance(); }

    Expression expression() {
        if (tok_.kind == Tok::LBrace) {
            advance();
            expect(Tok::RBrace, "'}'");
            expect(Tok::End, "end of input");
            return Expression::empty();
        }
        std::vector<std::vector<Term>> conjs;
        conjs.push_back(conj());
        while (tok_.kind == Tok::Pipe) {
            advance();
            conjs.push_back(conj());
        }
        expect(Tok::End, "'|' or end of input");
        if (conjs.size() == 1) return build(conjs.front());
        std::vector<SimpleCollection> comps;
        for (const auto& c : conjs) {
            Expression e = build(c);
            Union u = kernel::to_union(e, kDefaultExpansionLimit);
            comps.insert(comps.end(), u.components().begin(), u.components().end());
        }
        return Expression(Union(std::move(comps)));
    }

    SimpleCollection assignment() {
        std::vector<Attribute> attrs;
        if (tok_.kind == Tok::End) return {};
        if (tok_.kind == Tok::LBracket) {
            for (const auto& t : conj()) attrs.push_back(positive_only(t));
        } else {
            attrs.push_back(positive_only(term()));
            while (tok_.kind == Tok::Comma) {
                advance();
                attrs.push_back(positive_only(term()));
            }
        }
        expect(Tok::End, "',' or end of input");
        return SimpleCollection(std::move(attrs));
    }

private:
    void advance() { tok_ = lexer_.next(); }

    void expect(Tok kind, const char* what) {
        if (tok_.kind != kind) throw SyntaxError(tok_.pos, std::string("expected ") + what);
        advance();
    }

    std::string word(const char* what) {
        if (tok_.kind != Tok::Word) throw SyntaxError(tok_.pos, std::string("expected ") + what);
        std::string w = std::move(tok_.text);
        advance();
        return w;
    }

    std::vector<Term> conj() {
        expect(Tok::LBracket, "'['");
        std::vector<Term> terms;
        if (tok_.kind == Tok::RBracket) {
            advance();
            return terms;
        }
        terms.push_back(term());
        while (tok_.kind == Tok::Amp) {
            advance();
            terms.push_back(term());
        }
        expect(Tok::RBracket, "'&' or ']'");
        return terms;
    }

    Term term() {
        const std::size_t at = tok_.pos;
        const std::string name = word("criterion name");
        auto c = gp_.find_criterion(name);
        if (!c) throw Error(ErrorCode::UnknownCriterion, "unknown criterion '" + name + "' at " + std::to_string(at));
        Term t{TermKind::Equal, *c, {}};
        if (tok_.kind == Tok::Eq) {
            advance();
            t.branches.push_back(label(*c));
            return t;
        }
        if (tok_.kind == Tok::Neq) {
            t.kind = TermKind::NotIn;
        } else if (tok_.kind == Tok::Word && !tok_.quoted && tok_.text == "in") {
            t.kind = TermKind::In;
        } else {
            throw SyntaxError(tok_.pos, "expected '=', '!=' or 'in'");
        }
        advance();
        expect(Tok::LBrace, "'{'");
        t.branches.push_back(label(*c));
        while (tok_.kind == Tok::Comma) {
            advance();
            t.branches.push_back(label(*c));
        }
        expect(Tok::RBrace, "',' or '}'");
        return t;
    }

    BranchId label(CriterionId c) {
        const std::size_t at = tok_.pos;
        const std::string l = word("branch label");
        auto b = gp_.find_branch(c, l);
        if (!b) {
            throw Error(ErrorCode::UnknownBranch, "unknown branch '" + l + "' of " + gp_.criterion(c).name + " at " +
                                                      std::to_string(at));
        }
        return *b;
    }

    Attribute positive_only(const Term& t) {
        if (t.kind != TermKind::Equal) throw SyntaxError(tok_.pos, "assignments take only NAME=LABEL terms");
        return {t.criterion, t.branches.front(), false};
    }

    Expression build(const std::vector<Term>& terms) const {
        std::vector<Attribute> attrs;
        std::vector<BranchUnion> unions;
        bool has_in = false;
        for (const auto& t : terms) {
            if (t.kind == TermKind::In) has_in = true;
        }
        for (const auto& t : terms) {
            switch (t.kind) {
                case TermKind::Equal:
                    attrs.push_back({t.criterion, t.branches.front(), false});
                    unions.push_back({t.criterion, t.branches});
                    break;
                case TermKind::NotIn:
                    for (BranchId b : t.branches) attrs.push_back({t.criterion, b, true});
                    break;
                case TermKind::In: unions.push_back({t.criterion, t.branches}); break;
            }
        }
        if (!has_in) return Expression(SimpleCollection(std::move(attrs)));

        std::vector<Attribute> complements;
        for (const auto& a : attrs) {
            if (a.complemented) complements.push_back(a);
        }
        BranchUnionCollection buc;
        try {
            buc = BranchUnionCollection(std::move(unions));
        } catch (const Error&) {
            return Expression::empty(); // disjoint branch sets on one criterion
        }
        if (complements.empty()) return Expression(std::move(buc));
        // Branch unions mixed with complements have no collection form.
        const SimpleCollection rest(std::move(complements));
        std::vector<SimpleCollection> comps;
        const Union expanded = expand_branch_unions(buc);
        for (const auto& s : expanded.components()) {
            if (auto m = kernel::merge(s, rest)) comps.push_back(std::move(*m));
        }
        return Expression(Union(std::move(comps)));
    }

    Lexer lexer_;
    const GeneratingPolyhierarchy& gp_;
    Token tok_{Tok::End, "", 0};
};

std::string format_simple(const SimpleCollection& sc, const GeneratingPolyhierarchy& gp) {
    std::string out = "[";
    const auto attrs = sc.attributes();
    bool first = true;
    std::size_t i = 0;
    while (i < attrs.size()) {
        const Attribute& a = attrs[i];
        if (!first) out += " & ";
        first = false;
        const std::string name = quote_if_needed(gp.criterion(a.criterion).name);
        if (!a.complemented) {
            out += name + "=" + quote_if_needed(gp.branch_label(a.criterion, a.branch));
            ++i;
            continue;
        }
        out += name + "!={";
        bool first_label = true;
        while (i < attrs.size() && attrs[i].criterion == a.criterion && attrs[i].complemented) {
            if (!first_label) out += ",";
            first_label = false;
            out += quote_if_needed(gp.branch_label(a.criterion, attrs[i].branch));
            ++i;
        }
        out += "}";
    }
    return out + "]";
}

std::string format_bu(const BranchUnionCollection& buc, const GeneratingPolyhierarchy& gp) {
    std::string out = "[";
    bool first = true;
    for (const auto& u : buc.unions()) {
        if (!first) out += " & ";
        first = false;
        out += quote_if_needed(gp.criterion(u.criterion).name) + " in {";
        for (std::size_t k = 0; k < u.branches.size(); ++k) {
            if (k != 0) out += ",";
            out += quote_if_needed(gp.branch_label(u.criterion, u.branches[k]));
        }
        out += "}";
    }
    return out + "]";
}

} // namespace

Expression parse(std::string_view text, const GeneratingPolyhierarchy& gp) {
    return Parser(text, gp).expression();
}

SimpleCollection parse_assignment(std::string_view text, const GeneratingPolyhierarchy& gp) {
    return Parser(text, gp).assignment();
}

std::string format(const Expression& e, const GeneratingPolyhierarchy& gp) {
    if (const auto* s = e.simple()) return format_simple(*s, gp);
    if (const auto* b = e.branch_unions()) return format_bu(*b, gp);
    const auto& u = *e.as_union();
    if (u.is_empty_literal()) return "{}";
    std::string out;
    for (const auto& s : u.components()) {
        if (!out.empty()) out += " | ";
        out += format_simple(s, gp);
    }
    return out;
}

std::string format(const Attribute& a, const GeneratingPolyhierarchy& gp) {
    return format(Expression(SimpleCollection({a})), gp);
}

std::string quote_if_needed(std::string_view text) {
    if (!text.empty() && std::all_of(text.begin(), text.end(), is_ident_char)) return std::string(text);
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out + "\"";
}

} // namespace phx
