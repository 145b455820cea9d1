#include "lcf/bridge.hpp"

#include <algorithm>
#include <set>

#include "lcf/derived.hpp"

namespace lcf {

namespace {

const Type U = Type::universe();

// Placeholder constants standing for prover variables while encoding.
Term placeholder(std::int64_t id) { return Term::constant("#v" + std::to_string(id), U); }

std::size_t leadingForalls(const Term& t) {
    std::size_t n = 0;
    for (const Term* cur = &t; isForall(*cur); cur = &cur->arg().body()) ++n;
    return n;
}

void collectVars(const res::FTerm& t, std::vector<std::int64_t>& out) {
    if (t.isVar()) {
        if (std::find(out.begin(), out.end(), t.var) == out.end()) out.push_back(t.var);
        return;
    }
    for (const auto& a : t.args) collectVars(a, out);
}

void collectVars(const res::Literal& l, std::vector<std::int64_t>& out) {
    for (const auto& a : l.args) collectVars(a, out);
}

// Local constants standing for prover variables, in a child of `base`.
struct Scope {
    Context base;
    Context ctx;
    std::optional<Context> first;
    std::map<std::int64_t, Term> consts;
    std::map<std::string, std::int64_t> ids;
    std::vector<std::int64_t> order;

    explicit Scope(const Context& b) : base(b), ctx(b) {}

    void add(std::int64_t id) {
        if (consts.count(id)) return;
        auto [child, c] = introConst(ctx, "x", U);
        if (!first) first = child;
        ctx = child;
        consts.emplace(id, c);
        ids.emplace(c.name(), id);
        order.push_back(id);
    }

    Theorem open(const ClausePair& cp, const std::vector<Term>& images) const {
        return specializeAll(weaken(cp.thm, ctx), images);
    }

    Theorem openIdentity(const ClausePair& cp) const {
        std::vector<Term> images;
        for (auto v : cp.vars) images.push_back(consts.at(v));
        return open(cp, images);
    }

    // Quantifies the constants that occur, binders in first-occurrence order.
    ClausePair close(const Theorem& th) const {
        if (!first) return {{}, th};
        Theorem lifted = lift(*first, th);
        std::vector<std::int64_t> introduced;
        for (auto id : order)
            if (occursConst(th.prop(), consts.at(id).name())) introduced.push_back(id);
        std::vector<std::int64_t> wanted;
        for (const auto& c : constantsOf(th.prop())) {
            auto it = ids.find(c.name());
            if (it != ids.end()) wanted.push_back(it->second);
        }
        if (wanted == introduced) return {introduced, lifted};
        std::vector<std::size_t> perm;
        for (auto id : wanted)
            perm.push_back(static_cast<std::size_t>(std::find(introduced.begin(), introduced.end(), id) - introduced.begin()));
        return {wanted, reorderForalls(lifted, perm)};
    }
};

// Conversion reaching the subterm at `path` of a literal.
Conversion atPath(const std::vector<std::size_t>& path, std::size_t i, std::size_t arity, Conversion leaf,
                  const std::function<std::size_t(std::size_t)>& arityAt) {
    if (i == path.size()) return leaf;
    Conversion inner = randConv(atPath(path, i + 1, arityAt(i + 1), leaf, arityAt));
    for (std::size_t k = path[i] + 1; k < arity; ++k) inner = ratorConv(inner);
    return inner;
}

std::string describe(const res::Certificate& n) {
    return std::string(res::ruleName(n.rule)) + " node " + res::toSexpr(n.clause);
}

}  // namespace

// Symbols

void SymbolTable::add(const Term& constant) { byName_.emplace(constant.name(), constant); }

void SymbolTable::registerTerm(const Term& t) {
    for (const auto& c : constantsOf(t))
        if (!builtin::isReserved(c.name())) add(c);
}

std::optional<Term> SymbolTable::lookup(const std::string& symbol) const {
    auto it = byName_.find(symbol);
    if (it == byName_.end()) return std::nullopt;
    return it->second;
}

// Encoding

res::FTerm encodeTerm(const Term& t, const std::map<std::string, std::int64_t>& varOf) {
    if (t.isConst()) {
        auto it = varOf.find(t.name());
        if (it != varOf.end()) return res::FTerm::mkVar(it->second);
    }
    auto [head, args] = stripComb(t);
    if (!head.isConst()) throw BridgeError("encode: term head is not a constant");
    std::vector<res::FTerm> out;
    for (const auto& a : args) out.push_back(encodeTerm(a, varOf));
    return res::FTerm::mkFn(head.name(), std::move(out));
}

res::Literal encodeLiteral(const Term& lit, const std::map<std::string, std::int64_t>& varOf) {
    bool positive = !isNeg(lit);
    const Term& atom = positive ? lit : lit.arg();
    if (isEq(atom)) return res::Literal{positive, res::EqSymbol, {encodeTerm(lhs(atom), varOf), encodeTerm(rhs(atom), varOf)}};
    auto [head, args] = stripComb(atom);
    if (!head.isConst() || builtin::isReserved(head.name())) throw BridgeError("encode: not a first-order literal");
    std::vector<res::FTerm> out;
    for (const auto& a : args) out.push_back(encodeTerm(a, varOf));
    return res::Literal{positive, head.name(), std::move(out)};
}

res::Clause encodeClause(const ClausePair& cp) {
    Term m = cp.thm.prop();
    std::map<std::string, std::int64_t> varOf;
    for (auto v : cp.vars) {
        if (!isForall(m)) throw BridgeError("encode: fewer binders than variables");
        Term p = placeholder(v);
        m = instantiate(m.arg().body(), p);
        varOf.emplace(p.name(), v);
    }
    std::vector<res::Literal> lits;
    for (const auto& l : disjuncts(m))
        if (!isFalse(l)) lits.push_back(encodeLiteral(l, varOf));
    return res::Clause(std::move(lits));
}

Term decodeTerm(const SymbolTable& sym, const std::map<std::int64_t, Term>& varMap, const res::FTerm& t) {
    if (t.isVar()) {
        auto it = varMap.find(t.var);
        if (it == varMap.end()) throw BridgeError("decode: unmapped variable " + std::to_string(t.var));
        return it->second;
    }
    auto head = sym.lookup(t.fn);
    if (!head) throw BridgeError("decode: unknown symbol " + t.fn);
    std::vector<Term> args;
    for (const auto& a : t.args) args.push_back(decodeTerm(sym, varMap, a));
    return listComb(*head, args);
}

Term decodeLiteral(const SymbolTable& sym, const std::map<std::int64_t, Term>& varMap, const res::Literal& l) {
    Term atom = [&] {
        if (l.isEq()) return mkEq(decodeTerm(sym, varMap, l.args[0]), decodeTerm(sym, varMap, l.args[1]), U);
        auto head = sym.lookup(l.pred);
        if (!head) throw BridgeError("decode: unknown symbol " + l.pred);
        std::vector<Term> args;
        for (const auto& a : l.args) args.push_back(decodeTerm(sym, varMap, a));
        return listComb(*head, args);
    }();
    return l.positive ? atom : mkNot(atom);
}

std::vector<ClausePair> makeClausePairs(const std::vector<Theorem>& clauses, SymbolTable& sym, std::int64_t& nextVar) {
    std::vector<ClausePair> out;
    for (Theorem th : clauses) {
        std::size_t n = leadingForalls(th.prop());
        Term matrix = th.prop();
        for (std::size_t i = 0; i < n; ++i) matrix = matrix.arg().body();
        auto lits = disjuncts(matrix);
        if (std::any_of(lits.begin(), lits.end(), [](const Term& l) { return isFalse(l); })) {
            // drop `false` disjuncts under the binders
            Scope s(th.ctx());
            ClausePair tmp{{}, th};
            for (std::size_t i = 0; i < n; ++i) {
                s.add(static_cast<std::int64_t>(i));
                tmp.vars.push_back(static_cast<std::int64_t>(i));
            }
            Theorem opened = s.openIdentity(tmp);
            std::vector<Term> kept;
            for (const auto& l : disjuncts(opened.prop()))
                if (!isFalse(l)) kept.push_back(l);
            th = s.close(disjReshape(opened, mkDisj(kept))).thm;
            n = leadingForalls(th.prop());
        }
        sym.registerTerm(th.prop());
        ClausePair cp{{}, th};
        for (std::size_t i = 0; i < n; ++i) cp.vars.push_back(nextVar++);
        out.push_back(std::move(cp));
    }
    return out;
}

// Reconstruction

Reconstructor::Reconstructor(Context ctx, SymbolTable sym, std::vector<ClausePair> inputs)
    : ctx_(std::move(ctx)), sym_(std::move(sym)), inputs_(std::move(inputs)) {}

ClausePair Reconstructor::axiom(const res::Clause& c) const {
    for (const auto& cp : inputs_)
        if (encodeClause(cp) == c) return cp;
    throw BridgeError("axiom: clause " + res::toSexpr(c) + " is not an input clause");
}

ClausePair Reconstructor::subst(const ClausePair& cp, const res::Subst& theta) {
    Scope s(ctx_);
    std::vector<res::FTerm> images;
    for (auto v : cp.vars) {
        images.push_back(res::applySubst(theta, res::FTerm::mkVar(v)));
        std::vector<std::int64_t> vs;
        collectVars(images.back(), vs);
        for (auto id : vs) s.add(id);
    }
    std::vector<Term> decoded;
    for (const auto& im : images) decoded.push_back(decodeTerm(sym_, s.consts, im));
    Theorem th = s.open(cp, decoded);
    if (auto normal = convRule(disjNormConv(), th)) th = *normal;
    return s.close(th);
}

ClausePair Reconstructor::resolve(const ClausePair& a, const ClausePair& b, const res::Literal& lit) {
    Scope s(ctx_);
    for (auto v : a.vars) s.add(v);
    for (auto v : b.vars) s.add(v);
    Theorem ta = s.openIdentity(a), tb = s.openIdentity(b);
    res::Literal atom{true, lit.pred, lit.args};
    Term kernelAtom = decodeLiteral(sym_, s.consts, atom);
    auto has = [](const Theorem& th, const Term& l) {
        auto ds = disjuncts(th.prop());
        return std::any_of(ds.begin(), ds.end(), [&](const Term& d) { return alphaEq(d, l); });
    };
    Term negAtom = mkNot(kernelAtom);
    if (!has(ta, lit.positive ? kernelAtom : negAtom) || !has(tb, lit.positive ? negAtom : kernelAtom))
        throw BridgeError("resolve: " + res::toSexpr(lit) + " is not complementary between the premises");
    Theorem cut = lit.positive ? disjCut(ta, tb, kernelAtom) : disjCut(tb, ta, kernelAtom);
    return s.close(cut);
}

ClausePair Reconstructor::assume(const res::Literal& atom) {
    Scope s(ctx_);
    std::vector<std::int64_t> vs;
    collectVars(atom, vs);
    for (auto id : vs) s.add(id);
    Term p = decodeLiteral(sym_, s.consts, res::Literal{true, atom.pred, atom.args});
    return s.close(specialize(axiomOf(s.ctx, SchemaName::Lem), p));
}

ClausePair Reconstructor::refl(const res::FTerm& x) {
    Scope s(ctx_);
    std::vector<std::int64_t> vs;
    collectVars(x, vs);
    for (auto id : vs) s.add(id);
    return s.close(reflexive(s.ctx, decodeTerm(sym_, s.consts, x)));
}

ClausePair Reconstructor::equality(const res::Literal& l, const std::vector<std::size_t>& path, const res::FTerm& sTerm,
                                   const res::FTerm& tTerm) {
    if (path.empty()) throw BridgeError("equality: empty path");
    Scope s(ctx_);
    std::vector<std::int64_t> vs;
    collectVars(l, vs);
    collectVars(sTerm, vs);
    collectVars(tTerm, vs);
    for (auto id : vs) s.add(id);

    Term lit = decodeLiteral(sym_, s.consts, l);
    Term e = mkEq(decodeTerm(sym_, s.consts, sTerm), decodeTerm(sym_, s.consts, tTerm), U);
    auto [withEq, he] = lcf::assume(s.ctx, e);
    auto [withLit, hl] = lcf::assume(withEq, lit);

    // arity of the function symbol whose argument path[i] selects
    auto arityAt = [&](std::size_t i) -> std::size_t {
        if (i == 0) return l.args.size();
        auto sub = res::subtermAt(l, std::vector<std::size_t>(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i)));
        return sub ? sub->args.size() : 0;
    };
    Conversion conv = atPath(path, 0, l.args.size(), subsConv(he), arityAt);
    if (!l.positive) conv = randConv(conv);
    auto rewritten = conv(withLit, lit);
    if (!rewritten) throw BridgeError("equality: the path does not lead to the rewritten term");
    Theorem imp = lift(withEq, eqMP(*rewritten, hl));  // s = t -> L -> L'
    Theorem clause = *convRule(thenConv(elimConnConv(), thenConv(tryConv(nnfConv()), disjNormConv())), imp);
    return s.close(clause);
}

namespace {

// Keeps the literals of th's matrix whose encoding lies in `wanted`, once each.
Theorem keepEncoded(const Scope& s, const Theorem& th, const res::Clause& wanted) {
    std::vector<Term> kept;
    std::set<std::string> done;
    for (const auto& l : disjuncts(th.prop())) {
        res::Literal enc = encodeLiteral(l, s.ids);
        if (!wanted.contains(enc) || !done.insert(res::toSexpr(enc)).second) continue;
        kept.push_back(l);
    }
    return disjReshape(th, mkDisj(kept));
}

}  // namespace

ClausePair Reconstructor::removeSym(const ClausePair& cp) {
    Scope s(ctx_);
    for (auto v : cp.vars) s.add(v);
    return s.close(keepEncoded(s, s.openIdentity(cp), res::removeSym(encodeClause(cp))));
}

ClausePair Reconstructor::irreflexive(const ClausePair& cp) {
    Scope s(ctx_);
    for (auto v : cp.vars) s.add(v);
    return s.close(keepEncoded(s, s.openIdentity(cp), res::removeIrreflexive(encodeClause(cp))));
}

ClausePair Reconstructor::node(const res::CertPtr& cert) {
    auto it = memo_.find(cert.get());
    if (it != memo_.end()) return it->second;
    const res::Certificate& n = *cert;
    auto child = [&](std::size_t i) {
        if (i >= n.children.size()) throw NodeMismatch(describe(n) + ": missing premise", &n);
        return node(n.children[i]);
    };
    auto missing = [&]() -> ClausePair { throw NodeMismatch(describe(n) + ": missing rule data", &n); };

    std::optional<ClausePair> out;
    try {
        switch (n.rule) {
        case res::Rule::Axiom: out = axiom(n.clause); break;
        case res::Rule::Assume: out = n.literal ? assume(*n.literal) : missing(); break;
        case res::Rule::Refl: out = n.term ? refl(*n.term) : missing(); break;
        case res::Rule::Equality:
            out = n.literal && n.lhs && n.rhs ? equality(*n.literal, n.path, *n.lhs, *n.rhs) : missing();
            break;
        case res::Rule::RemoveSym: out = removeSym(child(0)); break;
        case res::Rule::Irreflexive: out = irreflexive(child(0)); break;
        case res::Rule::Subst: out = subst(child(0), n.subst); break;
        case res::Rule::Resolve: {
            if (!n.literal) missing();
            ClausePair a = child(0), b = child(1);
            out = resolve(a, b, *n.literal);
            break;
        }
        }
    } catch (const NodeMismatch&) {
        throw;
    } catch (const KernelError& e) {
        throw NodeMismatch(describe(n) + ": " + e.what(), &n);
    }
    res::Clause got = encodeClause(*out);
    if (!(got == n.clause))
        throw NodeMismatch(describe(n) + ": reconstruction gives " + res::toSexpr(got), &n);
    memo_.emplace(cert.get(), *out);
    return *out;
}

Theorem Reconstructor::run(const res::CertPtr& cert) {
    ClausePair root = node(cert);
    if (!root.vars.empty() || !encodeClause(root).empty()) throw NodeMismatch("root is not the empty clause", cert.get());
    if (isFalse(root.thm.prop())) return root.thm;
    return disjReshape(root.thm, mkFalse());
}

// Top level

MetisResult metis(const Context& ctx, const Term& goal, const std::vector<Theorem>& lemmas, const MetisOptions& opts) {
    MetisResult result;
    if (typeOf(ctx, goal) != Type::prop()) throw TypeError("metis: goal is not a proposition");
    auto [negCtx, negGoal] = lcf::assume(ctx, mkNot(goal));

    std::vector<Theorem> clauses;
    Context cur = negCtx;
    try {
        CnfOutput out = toClauses(negGoal);
        cur = out.finalCtx;
        clauses = out.clauses;
        for (const auto& lemma : lemmas) {
            CnfOutput lo = toClauses(weaken(lemma, cur));
            cur = lo.finalCtx;
            clauses.insert(clauses.end(), lo.clauses.begin(), lo.clauses.end());
        }
    } catch (const NotFirstOrder& e) {
        result.status = MetisResult::Status::NotFirstOrder;
        result.message = e.what();
        return result;
    }
    for (auto& c : clauses) c = weaken(c, cur);

    SymbolTable sym;
    std::int64_t nextVar = 0;
    std::vector<ClausePair> pairs = makeClausePairs(clauses, sym, nextVar);
    std::vector<res::Clause> problem;
    for (const auto& cp : pairs) problem.push_back(encodeClause(cp));
    result.inputClauses = problem.size();
    result.problem = res::problemToSexpr(problem);

    res::ProverResult pr = res::prove(problem, opts.limits);
    result.stats = pr.stats;
    if (!pr.refuted()) {
        bool limit = std::holds_alternative<res::LimitReached>(pr.outcome);
        result.status = limit ? MetisResult::Status::LimitReached : MetisResult::Status::Saturated;
        result.message = limit ? "clause limit reached after " + std::to_string(pr.stats.generated) + " clauses"
                               : "saturated without refutation after " + std::to_string(pr.stats.generated) + " clauses";
        return result;
    }
    result.certificate = res::certToSexpr(pr.certificate());

    Reconstructor rec(cur, std::move(sym), std::move(pairs));
    Theorem contradiction = rec.run(pr.certificate());
    Theorem refutation = lift(negCtx, contradiction);  // ~goal -> false
    Theorem finish = specialize(propLemma(ctx, PropLemma::NotImpFalse), goal);
    Theorem proved = mp(finish, refutation);
    if (!alphaEq(proved.prop(), goal) || proved.ctx() != ctx) throw BridgeError("metis: result does not match the goal");
    result.status = MetisResult::Status::Proved;
    result.theorem = proved;
    return result;
}

}  // namespace lcf
