#include <algorithm>
#include <numeric>

#include "lcf/cnf.hpp"

namespace lcf {

namespace {

const Type U = Type::universe();
const Type P = Type::prop();

bool isPropEq(const Term& t) { return isEq(t) && builtinTypeArg(t.fun().fun()).isProp(); }

bool firstOrderTerm(const Term& t) {
    if (t.isBound()) return true;  // every binder in a first-order formula ranges over U
    auto [head, args] = stripComb(t);
    if (!head.isConst() || builtin::isReserved(head.name())) return false;
    const Type& ty = head.type();
    if (ty.argTypes().size() != args.size() || ty.resultType() != U) return false;
    for (std::size_t i = 0; i < args.size(); ++i)
        if (ty.argTypes()[i] != U || !firstOrderTerm(args[i])) return false;
    return true;
}

bool firstOrderAtom(const Term& t) {
    if (isEq(t)) return builtinTypeArg(t.fun().fun()) == U && firstOrderTerm(lhs(t)) && firstOrderTerm(rhs(t));
    auto [head, args] = stripComb(t);
    if (!head.isConst() || builtin::isReserved(head.name())) return false;
    const Type& ty = head.type();
    if (ty.argTypes().size() != args.size() || ty.resultType() != P) return false;
    for (std::size_t i = 0; i < args.size(); ++i)
        if (ty.argTypes()[i] != U || !firstOrderTerm(args[i])) return false;
    return true;
}

Conversion lemmaRewrites(std::vector<PropLemma> ls) {
    std::vector<Theorem> eqs;
    for (PropLemma l : ls) eqs.push_back(propLemma(Context::root(), l));
    return rewrConv(eqs);
}

Conversion schemaRewrites(std::vector<SchemaName> ns) {
    std::vector<Theorem> eqs;
    for (SchemaName n : ns) eqs.push_back(axiomOf(Context::root(), n));
    return rewrConv(eqs);
}

bool quantified(const Term& t) { return isForall(t) || isExists(t); }
Type quantType(const Term& t) { return builtinTypeArg(t.fun()); }

// The schema for a quantifier's type, rewritten once.
ConvResult rewriteWith(SchemaName n, const Type& ty, const Context& ctx, const Term& t) {
    return rewrConv1(axiomOf(Context::root(), n, {ty}))(ctx, t);
}

ConvResult negQuant(const Context& ctx, const Term& t) {
    if (!isNeg(t) || !quantified(t.arg())) return std::nullopt;
    const Term& q = t.arg();
    return rewriteWith(isForall(q) ? SchemaName::NotAll : SchemaName::NotEx, quantType(q), ctx, t);
}

ConvResult prenexStep(const Context& ctx, const Term& t) {
    bool isAnd = isBinary(t, builtin::And);
    if (!isAnd && !isBinary(t, builtin::Or)) return std::nullopt;
    const Term& l = lhs(t);
    const Term& r = rhs(t);
    if (quantified(l)) {
        SchemaName n = isForall(l) ? (isAnd ? SchemaName::AllAndL : SchemaName::AllOrL)
                                   : (isAnd ? SchemaName::ExAndL : SchemaName::ExOrL);
        return rewriteWith(n, quantType(l), ctx, t);
    }
    if (quantified(r)) {
        SchemaName n = isForall(r) ? (isAnd ? SchemaName::AllAndR : SchemaName::AllOrR)
                                   : (isAnd ? SchemaName::ExAndR : SchemaName::ExOrR);
        return rewriteWith(n, quantType(r), ctx, t);
    }
    return std::nullopt;
}

// Instantiates a schema's predicate variable and normalises both sides.
Theorem instantiateNormal(const Theorem& schema, const Term& pred) {
    Theorem e = specialize(schema, pred);
    const Context& ctx = e.ctx();
    Theorem l = normalize(ctx, lhs(e.prop()));
    Theorem r = normalize(ctx, rhs(e.prop()));
    return trans(trans(sym(l), e), r);
}

// |- (!x. ?y. B) = (?f. !x. B[f x / y])
ConvResult skolemStep(const Context& ctx, const Term& t) {
    if (!isForall(t) || !t.arg().isAbs()) return std::nullopt;
    const Term& outer = t.arg();
    const Term& ex = outer.body();
    if (!isExists(ex) || !ex.arg().isAbs()) return std::nullopt;
    const Term& inner = ex.arg();
    Term pred = Term::abs(outer.name(), outer.type(), Term::abs(inner.name(), inner.type(), inner.body()));
    Theorem schema = axiomOf(ctx, SchemaName::Skolem, {outer.type(), inner.type()});
    Theorem eq = instantiateNormal(schema, pred);
    if (!alphaEq(lhs(eq.prop()), t)) throw KernelError("skolem: term is not in normal form");
    // keep the user's binder name on the universal
    const Term& r = rhs(eq.prop());
    const Term& all = r.arg().body();
    Term renamed = Term::comb(r.fun(), Term::abs(r.arg().name(), r.arg().type(),
                                                 Term::comb(all.fun(), Term::abs(outer.name(), outer.type(), all.arg().body()))));
    return trans(eq, reflexive(ctx, renamed));
}

// Moves the first existential of a block of universals to the front.
ConvResult bubble(const Context& ctx, const Term& t) {
    if (!isForall(t) || !t.arg().isAbs()) return std::nullopt;
    const Term& body = t.arg().body();
    if (isExists(body)) return skolemStep(ctx, t);
    if (!isForall(body)) return std::nullopt;
    auto inner = quantConv(bubble)(ctx, t);
    if (!inner) return std::nullopt;
    auto step = skolemStep(ctx, rhs(inner->prop()));
    if (!step) return std::nullopt;
    return trans(*inner, *step);
}

struct Prefix {
    std::vector<bool> universal;
    Term matrix;
};

Prefix prefixOf(const Term& t) {
    Prefix p{{}, t};
    while (quantified(p.matrix) && p.matrix.arg().isAbs()) {
        p.universal.push_back(isForall(p.matrix));
        p.matrix = p.matrix.arg().body();
    }
    return p;
}

std::vector<std::size_t> reversed(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.rbegin(), v.rend(), 0);
    return v;
}

void firstUse(const Term& t, std::uint32_t depth, std::size_t binders, std::vector<std::size_t>& out) {
    switch (t.kind()) {
    case Term::Kind::Bound:
        if (t.index() >= depth) {
            std::size_t pos = binders - 1 - (t.index() - depth);
            if (std::find(out.begin(), out.end(), pos) == out.end()) out.push_back(pos);
        }
        return;
    case Term::Kind::Comb:
        firstUse(t.fun(), depth, binders, out);
        firstUse(t.arg(), depth, binders, out);
        return;
    case Term::Kind::Abs: firstUse(t.body(), depth + 1, binders, out); return;
    case Term::Kind::Const: return;
    }
}

void conjuncts(const Theorem& th, std::vector<Theorem>& out) {
    const Term& t = th.prop();
    if (!isBinary(t, builtin::And)) {
        out.push_back(th);
        return;
    }
    std::vector<Term> args = {lhs(t), rhs(t)};
    conjuncts(mp(specializeAll(propLemma(th.ctx(), PropLemma::AndElimL), args), th), out);
    conjuncts(mp(specializeAll(propLemma(th.ctx(), PropLemma::AndElimR), args), th), out);
}

bool containsTrue(const Term& clause) {
    for (const auto& l : disjuncts(clause))
        if (isTrue(l)) return true;
    return false;
}

}  // namespace

bool isFirstOrder(const Term& t) {
    if (isTrue(t) || isFalse(t)) return true;
    if (isNeg(t)) return isFirstOrder(t.arg());
    if (isBinary(t, builtin::And) || isBinary(t, builtin::Or) || isBinary(t, builtin::Imp) || isPropEq(t))
        return isFirstOrder(lhs(t)) && isFirstOrder(rhs(t));
    if (quantified(t)) return quantType(t) == U && t.arg().isAbs() && isFirstOrder(t.arg().body());
    return firstOrderAtom(t);
}

Conversion firstOrderConv() {
    return [](const Context& ctx, const Term& t) -> ConvResult {
        if (isFirstOrder(t)) return reflexive(ctx, t);
        Theorem n = normalize(ctx, t);
        if (!isFirstOrder(rhs(n.prop()))) return std::nullopt;
        return n;
    };
}

Conversion elimConnConv() { return upConv(lemmaRewrites({PropLemma::ImpDef, PropLemma::IffDef})); }

Conversion nnfConv() {
    Conversion rules = orElseConv(
        orElseConv(schemaRewrites({SchemaName::NotAnd, SchemaName::NotOr, SchemaName::NotNot, SchemaName::NotTrue,
                                   SchemaName::NotFalse}),
                   lemmaRewrites({PropLemma::NotImp, PropLemma::NotIffDef})),
        negQuant);
    return redepthConv(rules);
}

Conversion prenexConv() { return redepthConv(prenexStep); }

Conversion cnfMatrixConv() {
    return redepthConv(schemaRewrites({SchemaName::OrAndDistribL, SchemaName::OrAndDistribR}));
}

Theorem reorderForalls(const Theorem& th, const std::vector<std::size_t>& order) {
    const std::size_t n = order.size();
    std::vector<std::string> hints;
    std::vector<Type> types;
    Term cur = th.prop();
    for (std::size_t i = 0; i < n; ++i) {
        if (!isForall(cur) || !cur.arg().isAbs()) throw KernelError("reorderForalls: too few quantifiers");
        hints.push_back(cur.arg().name());
        types.push_back(cur.arg().type());
        cur = cur.arg().body();
    }
    std::vector<Context> scopes;
    std::vector<std::optional<Term>> consts(n);
    Context ctx = th.ctx();
    for (std::size_t k = 0; k < n; ++k) {
        auto [child, c] = introConst(ctx, hints[order[k]], types[order[k]]);
        consts[order[k]] = c;
        scopes.push_back(child);
        ctx = child;
    }
    Theorem out = weaken(th, ctx);
    for (std::size_t j = 0; j < n; ++j) out = specialize(out, *consts[j]);
    for (std::size_t k = n; k-- > 0;) out = generalize(scopes[k], out);
    return out;
}

std::pair<Context, Theorem> skolemize(const Context& ctx, const Theorem& th) {
    Context cur = deeper(ctx, th.ctx());
    Theorem t = weaken(th, cur);
    while (true) {
        Prefix p = prefixOf(t.prop());
        auto firstEx = std::find(p.universal.begin(), p.universal.end(), false);
        if (firstEx == p.universal.end()) return {cur, t};
        std::size_t block = static_cast<std::size_t>(firstEx - p.universal.begin());
        if (block > 0) {
            t = reorderForalls(t, reversed(block));
            auto moved = bubble(t.ctx(), t.prop());
            if (!moved) throw KernelError("skolemize: unexpected prefix");
            t = eqMP(*moved, t);
        }
        auto [chosenCtx, k, body] = choose(cur, t, "sk");
        cur = chosenCtx;
        t = block > 0 ? reorderForalls(body, reversed(block)) : body;
    }
}

CnfOutput toClauses(const Theorem& th) {
    const Context& ctx = th.ctx();
    std::vector<std::pair<std::string, Conversion>> passes = {
        {"firstOrder", firstOrderConv()}, {"elimConn", elimConnConv()}, {"nnf", nnfConv()},
        {"prenex", prenexConv()},         {"cnfMatrix", cnfMatrixConv()},
    };
    std::vector<std::pair<std::string, Theorem>> trace;
    Theorem composite = reflexive(ctx, th.prop());
    for (const auto& [name, conv] : passes) {
        auto r = conv(ctx, rhs(composite.prop()));
        if (!r) throw NotFirstOrder("not a first-order formula: higher-order structure remains after normalisation");
        trace.emplace_back(name, *r);
        composite = trans(composite, *r);
    }
    auto [finalCtx, sk] = skolemize(ctx, eqMP(composite, th));

    // open the universal prefix, split the matrix and close each clause again
    std::size_t n = prefixOf(sk.prop()).universal.size();
    Context inner = finalCtx;
    std::vector<Term> consts;
    Theorem opened = sk;
    std::optional<Context> firstScope;
    {
        Term cur = sk.prop();
        for (std::size_t i = 0; i < n; ++i) {
            auto [child, c] = introConst(inner, cur.arg().name(), cur.arg().type());
            if (!firstScope) firstScope = child;
            inner = child;
            consts.push_back(c);
            cur = cur.arg().body();
        }
        opened = weaken(sk, inner);
        for (const auto& c : consts) opened = specialize(opened, c);
    }
    std::vector<Theorem> parts;
    conjuncts(opened, parts);
    std::vector<Theorem> clauses;
    for (const auto& part : parts) {
        if (containsTrue(part.prop())) continue;
        Theorem clause = *convRule(disjNormConv(), part);
        if (firstScope) {
            clause = lift(*firstScope, clause);
            Prefix cp = prefixOf(clause.prop());
            std::vector<std::size_t> order;
            firstUse(cp.matrix, 0, cp.universal.size(), order);
            std::vector<std::size_t> identity(order.size());
            std::iota(identity.begin(), identity.end(), 0);
            if (order != identity) clause = reorderForalls(clause, order);
        }
        clauses.push_back(clause);
    }
    return {finalCtx, clauses, trace, composite};
}

CnfOutput toClauses(const Context& ctx, const Term& phi) {
    if (typeOf(ctx, phi) != P) throw TypeError("toClauses: not a proposition");
    if (!isFirstOrder(phi) && !isFirstOrder(normalForm(phi)))
        throw NotFirstOrder("not a first-order formula: higher-order structure remains after normalisation");
    auto [child, h] = assume(ctx, phi);
    return toClauses(h);
}

}  // namespace lcf
