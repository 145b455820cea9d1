#include <algorithm>

#include "lcf/resolution.hpp"

namespace lcf::res {

namespace {

int cmp(std::int64_t a, std::int64_t b) { return a < b ? -1 : a > b ? 1 : 0; }

template <class T>
int compareLists(const std::vector<T>& a, const std::vector<T>& b) {
    if (int c = cmp(static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(b.size()))) return c;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (int c = compare(a[i], b[i])) return c;
    return 0;
}

FTerm walk(const Subst& s, FTerm t) {
    while (t.isVar()) {
        auto it = s.find(t.var);
        if (it == s.end()) break;
        t = it->second;
    }
    return t;
}

FTerm resolveDeep(const Subst& s, const FTerm& t) {
    if (t.isVar()) {
        auto it = s.find(t.var);
        return it == s.end() ? t : resolveDeep(s, it->second);
    }
    FTerm out = FTerm::mkFn(t.fn);
    out.args.reserve(t.args.size());
    for (const auto& a : t.args) out.args.push_back(resolveDeep(s, a));
    return out;
}

bool unifyInto(Subst& s, const FTerm& x, const FTerm& y) {
    FTerm a = walk(s, x), b = walk(s, y);
    if (a.isVar() && b.isVar() && a.var == b.var) return true;
    if (a.isVar()) {
        if (occurs(a.var, resolveDeep(s, b))) return false;
        s[a.var] = b;
        return true;
    }
    if (b.isVar()) return unifyInto(s, b, a);
    if (a.fn != b.fn || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!unifyInto(s, a.args[i], b.args[i])) return false;
    return true;
}

Subst finish(const Subst& s) {
    Subst out;
    for (const auto& [v, t] : s) {
        FTerm r = resolveDeep(s, t);
        if (!(r.isVar() && r.var == v)) out.emplace(v, std::move(r));
    }
    return out;
}

void collectVars(const FTerm& t, std::vector<std::int64_t>& out) {
    if (t.isVar()) {
        if (std::find(out.begin(), out.end(), t.var) == out.end()) out.push_back(t.var);
        return;
    }
    for (const auto& a : t.args) collectVars(a, out);
}

std::optional<FTerm> subtermIn(const FTerm& t, const std::vector<std::size_t>& path, std::size_t i) {
    if (i == path.size()) return t;
    if (t.isVar() || path[i] >= t.args.size()) return std::nullopt;
    return subtermIn(t.args[path[i]], path, i + 1);
}

FTerm replaceIn(const FTerm& t, const std::vector<std::size_t>& path, std::size_t i, const FTerm& with) {
    if (i == path.size()) return with;
    FTerm out = t;
    out.args.at(path[i]) = replaceIn(t.args.at(path[i]), path, i + 1, with);
    return out;
}

}  // namespace

int compare(const FTerm& a, const FTerm& b) {
    if (a.isVar() != b.isVar()) return a.isVar() ? -1 : 1;
    if (a.isVar()) return cmp(a.var, b.var);
    if (int c = a.fn.compare(b.fn)) return c < 0 ? -1 : 1;
    return compareLists(a.args, b.args);
}

std::size_t weight(const FTerm& t) {
    std::size_t w = 1;
    for (const auto& a : t.args) w += weight(a);
    return w;
}

bool occurs(std::int64_t v, const FTerm& t) {
    if (t.isVar()) return t.var == v;
    return std::any_of(t.args.begin(), t.args.end(), [&](const FTerm& a) { return occurs(v, a); });
}

int compare(const Literal& a, const Literal& b) {
    if (a.positive != b.positive) return a.positive ? 1 : -1;
    if (int c = a.pred.compare(b.pred)) return c < 0 ? -1 : 1;
    return compareLists(a.args, b.args);
}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end(), [](const Literal& a, const Literal& b) { return compare(a, b) < 0; });
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::contains(const Literal& l) const { return std::find(lits_.begin(), lits_.end(), l) != lits_.end(); }

std::size_t Clause::weight() const {
    std::size_t w = 0;
    for (const auto& l : lits_) {
        w += 1;
        for (const auto& a : l.args) w += res::weight(a);
    }
    return w;
}

std::vector<std::int64_t> Clause::variables() const {
    std::vector<std::int64_t> out;
    for (const auto& l : lits_)
        for (const auto& a : l.args) collectVars(a, out);
    return out;
}

FTerm applySubst(const Subst& s, const FTerm& t) {
    if (t.isVar()) {
        auto it = s.find(t.var);
        return it == s.end() ? t : it->second;
    }
    FTerm out = FTerm::mkFn(t.fn);
    out.args.reserve(t.args.size());
    for (const auto& a : t.args) out.args.push_back(applySubst(s, a));
    return out;
}

Literal applySubst(const Subst& s, const Literal& l) {
    Literal out{l.positive, l.pred, {}};
    for (const auto& a : l.args) out.args.push_back(applySubst(s, a));
    return out;
}

Clause applySubst(const Subst& s, const Clause& c) {
    std::vector<Literal> out;
    for (const auto& l : c.literals()) out.push_back(applySubst(s, l));
    return Clause(std::move(out));
}

std::optional<Subst> unify(const FTerm& a, const FTerm& b) {
    Subst s;
    if (!unifyInto(s, a, b)) return std::nullopt;
    return finish(s);
}

std::optional<Subst> unifyAtoms(const Literal& a, const Literal& b) {
    if (a.pred != b.pred || a.args.size() != b.args.size()) return std::nullopt;
    Subst s;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!unifyInto(s, a.args[i], b.args[i])) return std::nullopt;
    return finish(s);
}

namespace {

bool matchInto(Subst& s, const FTerm& p, const FTerm& t) {
    if (p.isVar()) {
        auto [it, fresh] = s.emplace(p.var, t);
        return fresh || it->second == t;
    }
    if (t.isVar() || p.fn != t.fn || p.args.size() != t.args.size()) return false;
    for (std::size_t i = 0; i < p.args.size(); ++i)
        if (!matchInto(s, p.args[i], t.args[i])) return false;
    return true;
}

bool matchLiteralInto(Subst& s, const Literal& p, const Literal& t) {
    if (p.positive != t.positive || p.pred != t.pred || p.args.size() != t.args.size()) return false;
    for (std::size_t i = 0; i < p.args.size(); ++i)
        if (!matchInto(s, p.args[i], t.args[i])) return false;
    return true;
}

bool subsumesFrom(const std::vector<Literal>& c, std::size_t i, const Clause& d, const Subst& s) {
    if (i == c.size()) return true;
    for (const auto& l : d.literals()) {
        Subst next = s;
        if (matchLiteralInto(next, c[i], l) && subsumesFrom(c, i + 1, d, next)) return true;
    }
    return false;
}

}  // namespace

std::optional<Subst> match(const FTerm& pattern, const FTerm& target) {
    Subst s;
    if (!matchInto(s, pattern, target)) return std::nullopt;
    return s;
}

std::optional<Subst> matchAtoms(const Literal& pattern, const Literal& target) {
    Subst s;
    Literal p{true, pattern.pred, pattern.args}, t{true, target.pred, target.args};
    if (!matchLiteralInto(s, p, t)) return std::nullopt;
    return s;
}

bool subsumes(const Clause& c, const Clause& d) {
    if (c.size() > d.size()) return false;
    return subsumesFrom(c.literals(), 0, d, {});
}

std::optional<FTerm> subtermAt(const Literal& l, const std::vector<std::size_t>& path) {
    if (path.empty() || path[0] >= l.args.size()) return std::nullopt;
    return subtermIn(l.args[path[0]], path, 1);
}

Literal replaceAt(const Literal& l, const std::vector<std::size_t>& path, const FTerm& t) {
    Literal out = l;
    out.args.at(path.at(0)) = replaceIn(l.args.at(path[0]), path, 1, t);
    return out;
}

Clause removeSym(const Clause& c) {
    std::vector<Literal> kept;
    for (const auto& l : c.literals()) {
        bool dup = false;
        if (l.isEq()) {
            Literal flipped{l.positive, l.pred, {l.args[1], l.args[0]}};
            dup = std::find(kept.begin(), kept.end(), flipped) != kept.end();
        }
        if (!dup) kept.push_back(l);
    }
    return Clause(std::move(kept));
}

Clause removeIrreflexive(const Clause& c) {
    std::vector<Literal> kept;
    for (const auto& l : c.literals())
        if (!(l.isEq() && !l.positive && l.args[0] == l.args[1])) kept.push_back(l);
    return Clause(std::move(kept));
}

Clause resolvent(const Clause& c1, const Clause& c2, const Literal& l) {
    Literal neg = l.negated();
    std::vector<Literal> out;
    for (const auto& x : c1.literals())
        if (!(x == l)) out.push_back(x);
    for (const auto& x : c2.literals())
        if (!(x == neg)) out.push_back(x);
    return Clause(std::move(out));
}

Clause equalityClause(const Literal& l, const std::vector<std::size_t>& path, const FTerm& s, const FTerm& t) {
    return Clause({Literal{false, EqSymbol, {s, t}}, l.negated(), replaceAt(l, path, t)});
}

const char* ruleName(Rule r) {
    switch (r) {
    case Rule::Axiom: return "axiom";
    case Rule::Assume: return "assume";
    case Rule::Refl: return "refl";
    case Rule::Equality: return "equality";
    case Rule::RemoveSym: return "removeSym";
    case Rule::Irreflexive: return "irreflexive";
    case Rule::Subst: return "subst";
    case Rule::Resolve: return "resolve";
    }
    return "?";
}

}  // namespace lcf::res
