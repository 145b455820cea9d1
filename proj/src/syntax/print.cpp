#include <set>

#include "lexer.hpp"

namespace lcf {

namespace {

enum Prec { Imp = 0, Or = 1, And = 2, Eq = 3, Unary = 4, Rel = 5, App = 6, Atom = 7 };

bool validIdent(const std::string& s) {
    if (s.empty() || !detail::isIdentStart(s[0])) return false;
    for (char c : s)
        if (!detail::isIdentChar(c)) return false;
    return true;
}

class Printer {
public:
    explicit Printer(const Term& t) {
        for (const auto& c : constantsOf(t)) taken_.insert(c.name());
    }

    std::string print(const Term& t, int prec) {
        std::string out;
        go(t, prec, out);
        return out;
    }

private:
    std::string freshName(const std::string& hint) {
        std::string base = baseName(hint);
        if (!validIdent(base)) base = "x";
        std::string cand = base;
        for (int i = 1; !usable(cand); ++i) cand = base + std::to_string(i);
        return cand;
    }

    bool usable(const std::string& n) const {
        if (detail::isKeyword(n) || n == builtin::True || n == builtin::False || taken_.count(n)) return false;
        for (const auto& b : names_)
            if (b == n) return false;
        return true;
    }

    static void wrap(bool paren, std::string& out, const std::string& inner) {
        if (paren)
            out += "(" + inner + ")";
        else
            out += inner;
    }

    // Builtins that are not fully applied, and quantifiers over a
    // non-abstraction, are printed through an eta-expansion.
    static std::optional<Term> etaExpand(const Term& t) {
        auto [head, args] = stripComb(t);
        if (!head.isConst()) return std::nullopt;
        const std::string& n = head.name();
        std::size_t want = 0;
        if (n == builtin::Not) want = 1;
        else if (n == builtin::And || n == builtin::Or || n == builtin::Imp || n == builtin::Eq) want = 2;
        else if (n == builtin::All || n == builtin::Ex) want = 1;
        else if ((n == "in" || n == "subseteq") && head.type().argTypes().size() == 2) want = 2;
        if (want == 0) return std::nullopt;
        if (args.size() == want) {
            if ((n == builtin::All || n == builtin::Ex) && !args[0].isAbs()) {
                Type a = builtinTypeArg(head);
                Term lam = Term::abs("x", a, Term::comb(shiftLoose(args[0], 1), Term::bound(0)));
                return Term::comb(head, lam);
            }
            return std::nullopt;
        }
        if (args.size() > want) return std::nullopt;
        Type ty = head.type();
        for (std::size_t i = 0; i < args.size(); ++i) ty = ty.codomain();
        return Term::abs("x", ty.domain(), Term::comb(shiftLoose(t, 1), Term::bound(0)));
    }

    void binderBlock(const char* kw, const Term& first, int prec, std::string& out) {
        // first is `q (\x. body)`; merge directly nested binders of the same kind
        std::string inner = std::string(kw) + " ";
        std::size_t pushed = 0;
        Term cur = first;
        const char* q = std::string(kw) == "forall" ? builtin::All : builtin::Ex;
        while (true) {
            const Term& lam = cur.arg();
            std::string n = freshName(lam.name());
            inner += (pushed ? " " : "") + n + ":" + printType(lam.type());
            names_.push_back(n);
            ++pushed;
            cur = lam.body();
            if (!(cur.isComb() && isConstNamed(cur.fun(), q) && cur.arg().isAbs())) break;
        }
        inner += ". ";
        go(cur, Imp, inner);
        names_.resize(names_.size() - pushed);
        wrap(prec > Imp, out, inner);
    }

    void lambdaBlock(const Term& first, int prec, std::string& out) {
        std::string inner = "fun ";
        std::size_t pushed = 0;
        Term cur = first;
        while (cur.isAbs()) {
            std::string n = freshName(cur.name());
            inner += (pushed ? " " : "") + n + ":" + printType(cur.type());
            names_.push_back(n);
            ++pushed;
            cur = cur.body();
        }
        inner += " => ";
        go(cur, Imp, inner);
        names_.resize(names_.size() - pushed);
        wrap(prec > Imp, out, inner);
    }

    void infix(const Term& t, const char* op, int level, int lp, int rp, int prec, std::string& out) {
        std::string inner;
        go(lhs(t), lp, inner);
        inner += std::string(" ") + op + " ";
        go(rhs(t), rp, inner);
        wrap(prec > level, out, inner);
    }

    void go(const Term& t, int prec, std::string& out) {
        if (auto e = etaExpand(t)) {
            go(*e, prec, out);
            return;
        }
        switch (t.kind()) {
        case Term::Kind::Bound:
            out += names_[names_.size() - 1 - t.index()];
            return;
        case Term::Kind::Const:
            out += t.name();
            return;
        case Term::Kind::Abs:
            lambdaBlock(t, prec, out);
            return;
        case Term::Kind::Comb:
            break;
        }
        if (isForall(t)) return binderBlock("forall", t, prec, out);
        if (isExists(t)) return binderBlock("exists", t, prec, out);
        if (isNeg(t)) {
            std::string inner = "~";
            go(t.arg(), Unary, inner);
            return wrap(prec > Unary, out, inner);
        }
        if (isBinary(t, builtin::Imp)) return infix(t, "->", Imp, Or, Imp, prec, out);
        if (isBinary(t, builtin::Or)) return infix(t, "\\/", Or, And, Or, prec, out);
        if (isBinary(t, builtin::And)) return infix(t, "/\\", And, Eq, And, prec, out);
        if (isEq(t)) return infix(t, "=", Eq, Unary, Unary, prec, out);
        if ((isBinary(t, "in") || isBinary(t, "subseteq")) && t.fun().fun().type().argTypes().size() == 2)
            return infix(t, t.fun().fun().name().c_str(), Rel, App, App, prec, out);
        std::string inner;
        go(t.fun(), App, inner);
        inner += " ";
        go(t.arg(), Atom, inner);
        wrap(prec > App, out, inner);
    }

    std::set<std::string> taken_;
    std::vector<std::string> names_;
};

}  // namespace

std::string printType(const Type& t) { return t.str(); }

std::string printTerm(const Context&, const Term& t) { return printTerm(t); }

std::string printTerm(const Term& t) {
    Printer p(t);
    return p.print(t, Imp);
}

}  // namespace lcf
