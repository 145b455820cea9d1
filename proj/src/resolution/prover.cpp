#include <algorithm>
#include <map>
#include <set>

#include "lcf/resolution.hpp"

namespace lcf::res {

namespace {

CertPtr node(Rule r, Clause c, std::vector<CertPtr> kids = {}) {
    auto n = std::make_shared<Certificate>();
    n->rule = r;
    n->clause = std::move(c);
    n->children = std::move(kids);
    return n;
}

CertPtr axiom(const Clause& c) { return node(Rule::Axiom, c); }

CertPtr substNode(const CertPtr& parent, const Subst& s) {
    Subst used;
    auto vars = parent->clause.variables();
    for (const auto& [v, t] : s)
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) used.emplace(v, t);
    if (used.empty()) return parent;
    auto n = std::make_shared<Certificate>();
    n->rule = Rule::Subst;
    n->clause = applySubst(used, parent->clause);
    n->children = {parent};
    n->subst = std::move(used);
    return n;
}

CertPtr resolveNode(const CertPtr& a, const CertPtr& b, const Literal& l) {
    auto n = std::make_shared<Certificate>();
    n->rule = Rule::Resolve;
    n->clause = resolvent(a->clause, b->clause, l);
    n->children = {a, b};
    n->literal = l;
    return n;
}

CertPtr reflNode(const FTerm& x) {
    auto n = std::make_shared<Certificate>();
    n->rule = Rule::Refl;
    n->clause = Clause({Literal{true, EqSymbol, {x, x}}});
    n->term = x;
    return n;
}

CertPtr equalityNode(const Literal& l, const std::vector<std::size_t>& path, const FTerm& s, const FTerm& t) {
    auto n = std::make_shared<Certificate>();
    n->rule = Rule::Equality;
    n->clause = equalityClause(l, path, s, t);
    n->literal = l;
    n->path = path;
    n->lhs = s;
    n->rhs = t;
    return n;
}

// C containing s = t  ==>  (C - {s = t}) u {t = s}
CertPtr flipEquation(const CertPtr& c, const Literal& eq) {
    const FTerm& s = eq.args[0];
    const FTerm& t = eq.args[1];
    Literal refl{true, EqSymbol, {s, s}};
    CertPtr sym = resolveNode(reflNode(s), equalityNode(refl, {0}, s, t), refl);  // {s != t, t = s}
    return resolveNode(c, sym, eq);
}

bool isTautology(const Clause& c) {
    for (const auto& l : c.literals()) {
        if (l.isEq() && l.positive && l.args[0] == l.args[1]) return true;
        if (l.positive && c.contains(l.negated())) return true;
    }
    return false;
}

// Irreflexive and RemoveSym where they change something.
CertPtr simplify(CertPtr c) {
    Clause irr = removeIrreflexive(c->clause);
    if (!(irr == c->clause)) {
        auto n = node(Rule::Irreflexive, irr, {c});
        c = n;
    }
    Clause sym = removeSym(c->clause);
    if (!(sym == c->clause)) c = node(Rule::RemoveSym, sym, {c});
    return c;
}

void renameVars(const FTerm& t, std::map<std::int64_t, std::int64_t>& m) {
    if (t.isVar()) {
        m.emplace(t.var, static_cast<std::int64_t>(m.size()));
        return;
    }
    for (const auto& a : t.args) renameVars(a, m);
}

Clause normalVariant(const Clause& c) {
    std::map<std::int64_t, std::int64_t> m;
    for (const auto& l : c.literals())
        for (const auto& a : l.args) renameVars(a, m);
    Subst s;
    for (const auto& [from, to] : m) s.emplace(from, FTerm::mkVar(to));
    return applySubst(s, c);
}

std::string variantKey(const Clause& c) { return toSexpr(normalVariant(normalVariant(c))); }

CertPtr renameApart(const CertPtr& c, const std::vector<std::int64_t>& avoid, std::int64_t& nextVar) {
    auto vars = c->clause.variables();
    bool clash = std::any_of(vars.begin(), vars.end(),
                             [&](std::int64_t v) { return std::find(avoid.begin(), avoid.end(), v) != avoid.end(); });
    if (!clash) return c;
    Subst s;
    for (auto v : vars) s.emplace(v, FTerm::mkVar(nextVar++));
    return substNode(c, s);
}

void positions(const FTerm& t, std::vector<std::size_t>& path, std::vector<std::vector<std::size_t>>& out) {
    if (t.isVar()) return;
    out.push_back(path);
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        path.push_back(i);
        positions(t.args[i], path, out);
        path.pop_back();
    }
}

std::vector<std::vector<std::size_t>> literalPositions(const Literal& l) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> path;
    for (std::size_t i = 0; i < l.args.size(); ++i) {
        path.push_back(i);
        positions(l.args[i], path, out);
        path.pop_back();
    }
    return out;
}

void resolutions(const CertPtr& a, const CertPtr& b, std::vector<CertPtr>& out) {
    for (const auto& l : a->clause.literals())
        for (const auto& m : b->clause.literals()) {
            if (l.positive == m.positive) continue;
            auto s = unifyAtoms(l, m);
            if (!s) continue;
            CertPtr a1 = substNode(a, *s), b1 = substNode(b, *s);
            out.push_back(resolveNode(a1, b1, applySubst(*s, l)));
        }
}

// Rewrites into `into` with the positive equations of `from`, both orientations.
void paramodulations(const CertPtr& from, const CertPtr& into, std::vector<CertPtr>& out) {
    for (const auto& e : from->clause.literals()) {
        if (!e.isEq() || !e.positive) continue;
        for (int dir = 0; dir < 2; ++dir) {
            const FTerm& s = e.args[dir];
            const FTerm& t = e.args[1 - dir];
            if (s.isVar()) continue;
            for (const auto& l : into->clause.literals())
                for (const auto& path : literalPositions(l)) {
                    auto u = subtermAt(l, path);
                    auto th = unify(*u, s);
                    if (!th) continue;
                    CertPtr f1 = substNode(from, *th), i1 = substNode(into, *th);
                    Literal eInst = applySubst(*th, e);
                    if (dir == 1) {
                        f1 = flipEquation(f1, eInst);
                        eInst = Literal{true, EqSymbol, {eInst.args[1], eInst.args[0]}};
                    }
                    FTerm sInst = applySubst(*th, s), tInst = applySubst(*th, t);
                    if (sInst == tInst) continue;
                    Literal lInst = applySubst(*th, l);
                    if (lInst == eInst) continue;  // ~e and ~L would merge in the equality clause
                    CertPtr eqLeaf = equalityNode(lInst, path, sInst, tInst);
                    CertPtr step = resolveNode(f1, eqLeaf, eInst);  // (F - e) u {~L, L[t]}
                    out.push_back(resolveNode(i1, step, lInst));
                }
        }
    }
}

void factors(const CertPtr& c, std::vector<CertPtr>& out) {
    const auto& ls = c->clause.literals();
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
            if (ls[i].positive != ls[j].positive) continue;
            if (auto s = unifyAtoms(ls[i], ls[j])) out.push_back(substNode(c, *s));
        }
}

void equalityResolutions(const CertPtr& c, std::vector<CertPtr>& out) {
    for (const auto& l : c->clause.literals()) {
        if (!l.isEq() || l.positive) continue;
        if (auto s = unify(l.args[0], l.args[1])) {
            CertPtr inst = substNode(c, *s);
            out.push_back(node(Rule::Irreflexive, removeIrreflexive(inst->clause), {inst}));
        }
    }
}

std::int64_t maxVar(const std::vector<Clause>& cs) {
    std::int64_t m = -1;
    for (const auto& c : cs)
        for (auto v : c.variables()) m = std::max(m, v);
    return m;
}

}  // namespace

std::vector<CertPtr> generateInferences(const CertPtr& given, const std::vector<CertPtr>& active, std::int64_t& nextVar) {
    std::vector<CertPtr> out;
    auto gv = given->clause.variables();
    auto withPartner = [&](const CertPtr& partner) {
        CertPtr p = renameApart(partner, gv, nextVar);
        resolutions(given, p, out);
        paramodulations(given, p, out);
        paramodulations(p, given, out);
    };
    for (const auto& a : active)
        if (a != given) withPartner(a);
    withPartner(given);
    factors(given, out);
    equalityResolutions(given, out);
    return out;
}

namespace {

// Removes literals whose complement is an instance of a unit clause.
CertPtr unitDelete(CertPtr c, const std::vector<CertPtr>& units, std::int64_t& nextVar) {
    bool changed = true;
    while (changed && !c->clause.empty()) {
        changed = false;
        for (const auto& l : c->clause.literals()) {
            for (const auto& u : units) {
                const Literal& m = u->clause.literals()[0];
                if (m.positive == l.positive || m.pred != l.pred) continue;
                if (!matchAtoms(m, l)) continue;
                CertPtr fresh = renameApart(u, c->clause.variables(), nextVar);
                auto s = matchAtoms(fresh->clause.literals()[0], l);
                c = resolveNode(c, substNode(fresh, *s), l);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return c;
}

}  // namespace

// Every fifth given clause is the oldest passive one rather than the lightest.
constexpr std::size_t kAgeRatio = 5;

ProverResult prove(const std::vector<Clause>& problem, const Limits& limits) {
    Stats stats;
    std::int64_t nextVar = maxVar(problem) + 1;
    std::map<std::pair<std::size_t, std::size_t>, CertPtr> passive;
    std::map<std::size_t, std::size_t> byAge;  // seq -> weight
    std::size_t picks = 0;
    std::set<std::string> seen;
    std::vector<CertPtr> active;
    std::vector<CertPtr> units;  // every retained unit clause
    std::size_t seq = 0;

    auto subsumedByActive = [&](const Clause& c, const CertPtr& except) {
        for (const auto& a : active)
            if (a != except && subsumes(a->clause, c)) return true;
        return false;
    };

    auto offer = [&](CertPtr c) -> std::optional<CertPtr> {
        c = simplify(unitDelete(simplify(std::move(c)), units, nextVar));
        if (c->clause.empty()) return c;
        if (isTautology(c->clause) || c->clause.weight() > limits.maxWeight) return std::nullopt;
        if (!seen.insert(variantKey(c->clause)).second) return std::nullopt;
        if (subsumedByActive(c->clause, nullptr)) return std::nullopt;
        for (const auto& u : units)
            if (subsumes(u->clause, c->clause)) return std::nullopt;
        if (c->clause.size() == 1) units.push_back(c);
        byAge.emplace(seq, c->clause.weight());
        passive.emplace(std::make_pair(c->clause.weight(), seq++), c);
        return std::nullopt;
    };

    for (const auto& c : problem)
        if (auto empty = offer(axiom(c))) return {Refuted{*empty}, stats};

    while (!passive.empty()) {
        auto it = passive.begin();
        if (++picks % kAgeRatio == 0) it = passive.find({byAge.begin()->second, byAge.begin()->first});
        CertPtr given = it->second;
        byAge.erase(it->first.second);
        passive.erase(it);
        if (subsumedByActive(given->clause, nullptr)) continue;
        if (given->clause.size() > 1) {
            // the unit set may have grown since the clause was kept
            CertPtr reduced = simplify(unitDelete(given, units, nextVar));
            if (reduced->clause.empty()) return {Refuted{reduced}, stats};
            if (reduced != given) {
                if (auto empty = offer(reduced)) return {Refuted{*empty}, stats};
                continue;
            }
        }
        ++stats.given;
        std::erase_if(active, [&](const CertPtr& a) { return subsumes(given->clause, a->clause); });
        active.push_back(given);
        stats.active = active.size();
        for (auto& inf : generateInferences(given, active, nextVar)) {
            ++stats.generated;
            if (auto empty = offer(inf)) return {Refuted{*empty}, stats};
            if (stats.generated >= limits.maxGenerated) return {LimitReached{}, stats};
        }
    }
    return {Saturated{}, stats};
}

}  // namespace lcf::res
