#include <set>

#include "lexer.hpp"

namespace lcf {

std::string SourceSpan::str() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
}

ParseError::ParseError(SourceSpan span, const std::string& msg)
    : std::runtime_error(span.str() + ": " + msg), span_(std::move(span)), detail_(msg) {}

namespace {

using detail::Token;

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
    return SourceSpan{a.file, a.line, a.column, b.endLine, b.endColumn};
}

ExprPtr node(Expr::Kind k, std::string name, std::vector<ExprPtr> kids, SourceSpan span) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->name = std::move(name);
    e->kids = std::move(kids);
    e->span = std::move(span);
    return e;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek() const { return toks_[pos_]; }
    bool atEnd() const { return peek().kind == Token::Kind::End; }

    bool isSym(const char* s) const { return peek().kind == Token::Kind::Sym && peek().text == s; }
    bool isWord(const char* s) const { return peek().kind == Token::Kind::Ident && peek().text == s; }

    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(t.span, msg + (t.kind == Token::Kind::End ? " at end of input" : " near '" + t.text + "'"));
    }

    const Token& expectSym(const char* s) {
        if (!isSym(s)) fail(std::string("expected '") + s + "'");
        return next();
    }

    const Token& expectName(const char* what) {
        if (peek().kind != Token::Kind::Ident || detail::isKeyword(peek().text)) fail(std::string("expected ") + what);
        return next();
    }

    void expectWord(const char* s) {
        if (!isWord(s)) fail(std::string("expected '") + s + "'");
        next();
    }

    Type type() {
        Type base = baseType();
        if (isSym("->")) {
            next();
            return Type::fun(base, type());
        }
        return base;
    }

    ExprPtr term() { return imp(); }

private:
    Type baseType() {
        if (isSym("(")) {
            next();
            Type t = type();
            expectSym(")");
            return t;
        }
        if (isWord("P")) {
            next();
            return Type::prop();
        }
        if (isWord("U")) {
            next();
            return Type::universe();
        }
        fail("expected a type (P, U or parenthesised)");
    }

    ExprPtr infixRight(const char* op, ExprPtr (Parser::*sub)(), ExprPtr (Parser::*self)()) {
        ExprPtr l = (this->*sub)();
        if (!isSym(op)) return l;
        next();
        ExprPtr r = (this->*self)();
        SourceSpan s = join(l->span, r->span);
        return node(Expr::Kind::Infix, op, {l, r}, s);
    }

    ExprPtr imp() { return infixRight("->", &Parser::disj, &Parser::imp); }
    ExprPtr disj() { return infixRight("\\/", &Parser::conj, &Parser::disj); }
    ExprPtr conj() { return infixRight("/\\", &Parser::eq, &Parser::conj); }

    ExprPtr eq() {
        ExprPtr l = unary();
        if (!isSym("=")) return l;
        next();
        ExprPtr r = unary();
        if (isSym("=")) fail("'=' is non-associative; add parentheses");
        return node(Expr::Kind::Infix, "=", {l, r}, join(l->span, r->span));
    }

    ExprPtr unary() {
        if (isSym("~")) {
            SourceSpan s = next().span;
            ExprPtr x = unary();
            return node(Expr::Kind::Not, "~", {x}, join(s, x->span));
        }
        return rel();
    }

    ExprPtr rel() {
        ExprPtr l = app();
        if (isWord("in") || isWord("subseteq")) {
            std::string op = next().text;
            ExprPtr r = app();
            return node(Expr::Kind::Infix, op, {l, r}, join(l->span, r->span));
        }
        return l;
    }

    bool startsAtom() const {
        const Token& t = peek();
        if (t.kind == Token::Kind::Sym) return t.text == "(";
        if (t.kind != Token::Kind::Ident) return false;
        if (t.text == "forall" || t.text == "exists" || t.text == "fun") return true;
        return !detail::isKeyword(t.text);
    }

    bool startsBinder() const { return isWord("forall") || isWord("exists") || isWord("fun"); }

    ExprPtr app() {
        if (!startsAtom()) fail("expected a term");
        // a bare binder swallows everything to its right
        bool open = startsBinder();
        ExprPtr f = atom();
        while (!open && startsAtom()) {
            open = startsBinder();
            ExprPtr a = atom();
            f = node(Expr::Kind::App, "", {f, a}, join(f->span, a->span));
        }
        return f;
    }

    ExprPtr atom() {
        const Token& t = peek();
        if (isSym("(")) {
            SourceSpan s = next().span;
            ExprPtr inner = term();
            SourceSpan e = expectSym(")").span;
            auto copy = std::make_shared<Expr>(*inner);
            copy->span = join(s, e);
            return copy;
        }
        if (t.text == "forall" || t.text == "exists" || t.text == "fun") return binder();
        SourceSpan s = next().span;
        return node(Expr::Kind::Ident, t.text, {}, s);
    }

    ExprPtr binder() {
        const Token& kw = next();
        std::string kind = kw.text;
        SourceSpan start = kw.span;
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Binder;
        e->name = kind;
        do {
            std::string v = expectName("a bound variable name").text;
            std::optional<Type> ty;
            if (isSym(":")) {
                next();
                ty = type();
            }
            e->vars.emplace_back(v, ty);
        } while (peek().kind == Token::Kind::Ident && !detail::isKeyword(peek().text));
        if (isSym(".") || (kind == "fun" && isSym("=>")))
            next();
        else
            fail(kind == "fun" ? "expected '=>' or '.'" : "expected '.'");
        ExprPtr body = term();
        e->kids.push_back(body);
        e->span = join(start, body->span);
        return e;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

struct Elab {
    const Context& ctx;
    std::vector<std::pair<std::string, Type>> binders;

    [[noreturn]] static void fail(const Expr& e, const std::string& msg) { throw ParseError(e.span, msg); }

    std::pair<Term, Type> go(const Expr& e) {
        switch (e.kind) {
        case Expr::Kind::Ident: return ident(e);
        case Expr::Kind::App: {
            auto [f, fty] = go(*e.kids[0]);
            auto [a, aty] = go(*e.kids[1]);
            if (!fty.isFun()) fail(e, "cannot apply a term of type " + fty.str());
            if (fty.domain() != aty)
                fail(*e.kids[1], "argument has type " + aty.str() + " but " + fty.domain().str() + " is expected");
            return {Term::comb(f, a), fty.codomain()};
        }
        case Expr::Kind::Not: {
            Term x = prop(*e.kids[0]);
            return {mkNot(x), Type::prop()};
        }
        case Expr::Kind::Infix: return infix(e);
        case Expr::Kind::Binder: return binder(e);
        }
        fail(e, "malformed expression");
    }

    Term prop(const Expr& e) {
        auto [t, ty] = go(e);
        if (!ty.isProp()) fail(e, "expected a proposition, got a term of type " + ty.str());
        return t;
    }

    std::pair<Term, Type> ident(const Expr& e) {
        for (std::size_t i = binders.size(); i-- > 0;)
            if (binders[i].first == e.name)
                return {Term::bound(static_cast<std::uint32_t>(binders.size() - 1 - i)), binders[i].second};
        if (e.name == builtin::True) return {mkTrue(), Type::prop()};
        if (e.name == builtin::False) return {mkFalse(), Type::prop()};
        auto ty = ctx.lookup(e.name);
        if (!ty) fail(e, "unknown identifier '" + e.name + "'");
        return {Term::constant(e.name, *ty), *ty};
    }

    std::pair<Term, Type> infix(const Expr& e) {
        const std::string& op = e.name;
        if (op == "->" || op == "/\\" || op == "\\/") {
            Term l = prop(*e.kids[0]);
            Term r = prop(*e.kids[1]);
            if (op == "->") return {mkImp(l, r), Type::prop()};
            if (op == "/\\") return {mkAnd(l, r), Type::prop()};
            return {mkOr(l, r), Type::prop()};
        }
        auto [l, lty] = go(*e.kids[0]);
        auto [r, rty] = go(*e.kids[1]);
        if (op == "=") {
            if (lty != rty) fail(e, "cannot equate terms of types " + lty.str() + " and " + rty.str());
            return {mkEq(l, r, lty), Type::prop()};
        }
        auto cty = ctx.lookup(op);
        if (!cty) fail(e, "infix '" + op + "' needs a declared constant named '" + op + "'");
        Type want = Type::curried({lty, rty}, Type::prop());
        if (*cty != want) fail(e, "'" + op + "' has type " + cty->str() + ", not " + want.str());
        return {Term::comb(Term::comb(Term::constant(op, *cty), l), r), Type::prop()};
    }

    std::pair<Term, Type> binder(const Expr& e) {
        for (const auto& [n, ty] : e.vars) binders.emplace_back(n, ty.value_or(Type::universe()));
        auto [body, bty] = go(*e.kids[0]);
        if (e.name != "fun" && !bty.isProp()) fail(*e.kids[0], "quantifier body must be a proposition, got " + bty.str());
        for (std::size_t i = e.vars.size(); i-- > 0;) {
            Type vty = binders.back().second;
            std::string hint = binders.back().first;
            binders.pop_back();
            if (e.name == "forall")
                body = mkForall(hint, vty, body);
            else if (e.name == "exists")
                body = mkExists(hint, vty, body);
            else {
                body = Term::abs(hint, vty, body);
                bty = Type::fun(vty, bty);
            }
        }
        return {body, bty};
    }
};

}  // namespace

Type parseType(const std::string& src, const std::string& file) {
    Parser p(detail::lex(src, file));
    Type t = p.type();
    if (!p.atEnd()) p.fail("unexpected input after type");
    return t;
}

ExprPtr parseExpr(const std::string& src, const std::string& file) {
    Parser p(detail::lex(src, file));
    ExprPtr e = p.term();
    if (!p.atEnd()) p.fail("unexpected input after term");
    return e;
}

Term elaborate(const Context& ctx, const ExprPtr& e) {
    Elab el{ctx, {}};
    auto [t, ty] = el.go(*e);
    try {
        typeOf(ctx, t);
    } catch (const TypeError& err) {
        throw ParseError(e->span, err.what());
    }
    return t;
}

Term parseTerm(const Context& ctx, const std::string& src, const std::string& file) {
    return elaborate(ctx, parseExpr(src, file));
}

TheoryScript parseTheory(const std::string& src, const std::string& file) {
    Parser p(detail::lex(src, file));
    TheoryScript script;
    std::set<std::string> labels, constants;
    auto quotedTerm = [&] {
        bool quoted = p.isSym("'");
        if (quoted) p.next();
        ExprPtr e = p.term();
        if (quoted) p.expectSym("'");
        return e;
    };
    auto label = [&](const Token& t) {
        if (!labels.insert(t.text).second) throw ParseError(t.span, "duplicate statement name '" + t.text + "'");
        return t.text;
    };
    auto constant = [&](const Token& t) {
        if (!constants.insert(t.text).second) throw ParseError(t.span, "constant '" + t.text + "' declared twice");
        return t.text;
    };
    while (!p.atEnd()) {
        SourceSpan start = p.peek().span;
        if (p.isWord("const")) {
            p.next();
            // the infix relation names may be declared like any constant
            bool infix = p.isWord("in") || p.isWord("subseteq");
            std::string name = constant(infix ? p.next() : p.expectName("a constant name"));
            p.expectSym(":");
            Type ty = p.type();
            script.statements.push_back({ConstDecl{name, ty}, start});
        } else if (p.isWord("axiom")) {
            p.next();
            std::string name = label(p.expectName("an axiom name"));
            p.expectSym(":");
            script.statements.push_back({AxiomDecl{name, quotedTerm()}, start});
        } else if (p.isWord("let")) {
            p.next();
            std::string name = label(p.expectName("a definition name"));
            p.expectSym(":");
            bool quoted = p.isSym("'");
            if (quoted) p.next();
            std::string c = constant(p.expectName("the defined constant"));
            p.expectSym("=");
            ExprPtr rhs = p.term();
            if (quoted) p.expectSym("'");
            script.statements.push_back({LetDecl{name, c, rhs}, start});
        } else if (p.isWord("theorem")) {
            p.next();
            TheoremDecl th{label(p.expectName("a theorem name")), nullptr, TheoremDecl::Tactic::Taut, {}, {}};
            p.expectSym(":");
            th.prop = quotedTerm();
            p.expectWord("by");
            if (p.isWord("taut")) {
                p.next();
            } else if (p.isWord("metis")) {
                p.next();
                th.tactic = TheoremDecl::Tactic::Metis;
                p.expectSym("[");
                while (!p.isSym("]")) {
                    const Token& t = p.expectName("a lemma name");
                    th.lemmas.push_back(t.text);
                    th.lemmaSpans.push_back(t.span);
                    if (!p.isSym("]")) p.expectSym(",");
                }
                p.next();
            } else {
                p.fail("expected 'taut' or 'metis'");
            }
            script.statements.push_back({std::move(th), start});
        } else {
            p.fail("expected 'const', 'axiom', 'let' or 'theorem'");
        }
    }
    return script;
}

}  // namespace lcf
