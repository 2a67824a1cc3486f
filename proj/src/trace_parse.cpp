#include "polycert/trace.hpp"

#include <cctype>

namespace polycert {

ParseError::ParseError(SourceLocation where, std::vector<std::string> expected, std::string found)
    : Error([&] {
          std::string msg = std::to_string(where.line) + ":" + std::to_string(where.column) + ": expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " or " : "") + expected[i];
          return msg + ", found " + found;
      }()),
      where_(where),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

ElaborationError::ElaborationError(Kind kind, SourceLocation where, const std::string& message)
    : Error(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
      kind_(kind),
      where_(where) {}

namespace {

enum class Tok { Ident, Number, Arrow, FatArrow, Colon, Semi, LBrack, RBrack, LParen, RParen, Equals, Plus, Star,
                 Comma, Dot, Backslash, End };

struct Token {
    Tok kind;
    std::string text;
    SourceLocation where;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "\"" + t.text + "\"";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    SourceLocation here;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++here.line;
                here.column = 1;
            } else {
                ++here.column;
            }
        }
    };
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        SourceLocation start = here;
        if (std::isalpha(c)) {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), start});
            advance(j - i);
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Number, std::string(text.substr(i, j - i)), start});
            advance(j - i);
            continue;
        }
        auto two = text.substr(i, 2);
        if (two == "->") {
            out.push_back({Tok::Arrow, "->", start});
            advance(2);
            continue;
        }
        if (two == "=>") {
            out.push_back({Tok::FatArrow, "=>", start});
            advance(2);
            continue;
        }
        Tok kind;
        switch (c) {
        case ':': kind = Tok::Colon; break;
        case ';': kind = Tok::Semi; break;
        case '[': kind = Tok::LBrack; break;
        case ']': kind = Tok::RBrack; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '=': kind = Tok::Equals; break;
        case '+': kind = Tok::Plus; break;
        case '*': kind = Tok::Star; break;
        case ',': kind = Tok::Comma; break;
        case '.': kind = Tok::Dot; break;
        case '\\': kind = Tok::Backslash; break;
        default:
            throw ParseError(start, {"a token"}, "\"" + std::string(1, text[i]) + "\"");
        }
        out.push_back({kind, std::string(1, text[i]), start});
        advance(1);
    }
    out.push_back({Tok::End, "", here});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    RawTrace trace() {
        RawTrace raw;
        expect_word("YES");
        raw.verdict = "YES";
        expect_word("Signature");
        expect(Tok::Colon, "\":\"");
        raw.decls = list<RawDecl>([this] { return decl(); });
        expect_word("Rules");
        expect(Tok::Colon, "\":\"");
        raw.rules = list<RawRule>([this] { return rule(); });
        if (peek().kind == Tok::Ident && peek().text == "Interpretation") {
            next();
            expect(Tok::Colon, "\":\"");
            raw.interpretation = list<RawInterpEntry>([this] { return entry(); });
        }
        if (peek().kind != Tok::End)
            throw ParseError(peek().where, raw.interpretation ? std::vector<std::string>{"end of input"}
                                                              : std::vector<std::string>{"\"Interpretation\"", "end of input"},
                             describe(peek()));
        return raw;
    }

    RawExpr standalone_expr() {
        RawExpr e = expr();
        if (peek().kind != Tok::End) throw ParseError(peek().where, {"end of input"}, describe(peek()));
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind) throw ParseError(peek().where, {what}, describe(peek()));
        return next();
    }

    void expect_word(const std::string& word) {
        if (peek().kind != Tok::Ident || peek().text != word)
            throw ParseError(peek().where, {"\"" + word + "\""}, describe(peek()));
        next();
    }

    const Token& ident() { return expect(Tok::Ident, "an identifier"); }

    template <class T, class F>
    std::vector<T> list(F item) {
        expect(Tok::LBrack, "\"[\"");
        std::vector<T> out;
        if (peek().kind == Tok::RBrack) {
            next();
            return out;
        }
        for (;;) {
            out.push_back(item());
            if (peek().kind == Tok::Semi) {
                next();
                if (peek().kind == Tok::RBrack) {
                    next();
                    return out;
                }
                continue;
            }
            if (peek().kind == Tok::RBrack) {
                next();
                return out;
            }
            throw ParseError(peek().where, {"\";\"", "\"]\""}, describe(peek()));
        }
    }

    RawDecl decl() {
        const Token& name = ident();
        RawDecl d{name.text, SimpleType::base(""), name.where};
        expect(Tok::Colon, "\":\"");
        d.type = type();
        return d;
    }

    SimpleType type() {
        SimpleType lhs = type_atom();
        if (peek().kind == Tok::Arrow) {
            next();
            return SimpleType::arrow(std::move(lhs), type());
        }
        return lhs;
    }

    SimpleType type_atom() {
        if (peek().kind == Tok::LParen) {
            next();
            SimpleType t = type();
            expect(Tok::RParen, "\")\"");
            return t;
        }
        if (peek().kind != Tok::Ident) throw ParseError(peek().where, {"a type"}, describe(peek()));
        return SimpleType::base(next().text);
    }

    RawRule rule() {
        SourceLocation where = peek().where;
        RawTerm lhs = term();
        expect(Tok::FatArrow, "\"=>\"");
        RawTerm rhs = term();
        return RawRule{std::move(lhs), std::move(rhs), where};
    }

    static bool starts_term(const Token& t) {
        return t.kind == Tok::Ident || t.kind == Tok::LParen || t.kind == Tok::Backslash;
    }

    RawTerm term() {
        if (!starts_term(peek())) throw ParseError(peek().where, {"a term"}, describe(peek()));
        RawTerm head = term_atom();
        while (starts_term(peek())) {
            SourceLocation where = head.where;
            RawTerm arg = term_atom();
            RawTerm app{RawTerm::Kind::App, {}, {}, where};
            app.children.push_back(std::move(head));
            app.children.push_back(std::move(arg));
            head = std::move(app);
        }
        return head;
    }

    RawTerm term_atom() {
        const Token& t = peek();
        if (t.kind == Tok::Ident) {
            next();
            return RawTerm{RawTerm::Kind::Ident, t.text, {}, t.where};
        }
        if (t.kind == Tok::LParen) {
            next();
            RawTerm inner = term();
            expect(Tok::RParen, "\")\"");
            return inner;
        }
        if (t.kind == Tok::Backslash) {
            SourceLocation where = t.where;
            next();
            const Token& binder = ident();
            expect(Tok::Dot, "\".\"");
            RawTerm lam{RawTerm::Kind::Lam, binder.text, {}, where};
            lam.children.push_back(term());
            return lam;
        }
        throw ParseError(t.where, {"a term"}, describe(t));
    }

    RawInterpEntry entry() {
        SourceLocation where = peek().where;
        expect_word("J");
        expect(Tok::LParen, "\"(\"");
        std::string symbol = ident().text;
        expect(Tok::RParen, "\")\"");
        expect(Tok::Equals, "\"=\"");
        RawInterpEntry e{std::move(symbol), {}, where};
        if (peek().kind == Tok::Ident && peek().text == "Lam" && tokens_[pos_ + 1].kind == Tok::LBrack) {
            next();
            next();
            for (;;) {
                const Token& b = ident();
                e.poly.binders.emplace_back(b.text, b.where);
                if (peek().kind == Tok::Semi) {
                    next();
                    continue;
                }
                expect(Tok::RBrack, "\";\" or \"]\"");
                break;
            }
            expect(Tok::Dot, "\".\"");
        }
        e.poly.body = expr();
        return e;
    }

    RawExpr expr() {
        RawExpr lhs = product();
        while (peek().kind == Tok::Plus) {
            SourceLocation where = next().where;
            RawExpr sum{RawExpr::Kind::Plus, 0, {}, {}, where};
            sum.children.push_back(std::move(lhs));
            sum.children.push_back(product());
            lhs = std::move(sum);
        }
        return lhs;
    }

    RawExpr product() {
        RawExpr lhs = factor();
        while (peek().kind == Tok::Star) {
            SourceLocation where = next().where;
            RawExpr prod{RawExpr::Kind::Mult, 0, {}, {}, where};
            prod.children.push_back(std::move(lhs));
            prod.children.push_back(factor());
            lhs = std::move(prod);
        }
        return lhs;
    }

    RawExpr factor() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Number: {
            next();
            return RawExpr{RawExpr::Kind::Number, Natural(t.text), {}, {}, t.where};
        }
        case Tok::Ident: {
            next();
            if (peek().kind != Tok::LParen) return RawExpr{RawExpr::Kind::Ident, 0, t.text, {}, t.where};
            next();
            RawExpr call{RawExpr::Kind::Call, 0, t.text, {}, t.where};
            call.children.push_back(expr());
            while (peek().kind == Tok::Comma) {
                next();
                call.children.push_back(expr());
            }
            expect(Tok::RParen, "\",\" or \")\"");
            return call;
        }
        case Tok::LParen: {
            next();
            RawExpr inner = expr();
            expect(Tok::RParen, "\")\"");
            return inner;
        }
        default: throw ParseError(t.where, {"a number", "an identifier", "\"(\""}, describe(t));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

RawTrace parse_trace(std::string_view text) { return Parser(text).trace(); }

RawExpr parse_raw_expr(std::string_view text) { return Parser(text).standalone_expr(); }

}  // namespace polycert
