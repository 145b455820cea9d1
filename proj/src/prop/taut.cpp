#include <map>
#include <mutex>

#include "lcf/prop.hpp"

namespace lcf {

namespace {

bool isPropEq(const Term& t) { return isEq(t) && builtinTypeArg(t.fun().fun()).isProp(); }

bool isConnective(const Term& t) {
    return isNeg(t) || isBinary(t, builtin::And) || isBinary(t, builtin::Or) || isBinary(t, builtin::Imp) ||
           isPropEq(t);
}

void collectAtoms(const Term& t, std::vector<Term>& out) {
    if (isTrue(t) || isFalse(t)) return;
    if (isNeg(t)) return collectAtoms(t.arg(), out);
    if (isConnective(t)) {
        collectAtoms(lhs(t), out);
        collectAtoms(rhs(t), out);
        return;
    }
    for (const auto& a : out)
        if (alphaEq(a, t)) return;
    out.push_back(t);
}

const std::vector<Theorem>& valuationSchemas() {
    static const std::vector<Theorem> v = [] {
        std::vector<Theorem> out;
        for (SchemaName n : {SchemaName::AndTrueL, SchemaName::AndTrueR, SchemaName::AndFalseL, SchemaName::AndFalseR,
                             SchemaName::OrTrueL, SchemaName::OrTrue, SchemaName::OrFalseL, SchemaName::OrFalseR,
                             SchemaName::ImpTrueL, SchemaName::ImpTrueR, SchemaName::ImpFalseL, SchemaName::ImpFalseR,
                             SchemaName::EqTrueL, SchemaName::EqTrueElim, SchemaName::EqFalseL, SchemaName::EqFalseR,
                             SchemaName::NotTrue, SchemaName::NotFalse})
            out.push_back(axiomOf(Context::root(), n));
        return out;
    }();
    return v;
}

const Conversion& valuationConv() {
    static const Conversion c = rewrConv(valuationSchemas());
    return c;
}

std::optional<Theorem> simplifyNode(const Context& ctx, const Term& t) {
    std::optional<Theorem> acc;
    Term cur = t;
    while (true) {
        auto r = valuationConv()(ctx, cur);
        if (!r) return acc;
        acc = acc ? trans(*acc, *r) : *r;
        cur = rhs(r->prop());
    }
}

// Absent result means unchanged.
std::optional<Theorem> evalSkeleton(const Context& ctx, const Term& t, const std::vector<Theorem>& eqs) {
    for (const auto& e : eqs)
        if (alphaEq(lhs(e.prop()), t)) return e;
    std::optional<Theorem> rebuilt;
    if (isNeg(t)) {
        if (auto s = evalSkeleton(ctx, t.arg(), eqs)) rebuilt = apTerm(t.fun(), *s);
    } else if (isConnective(t)) {
        auto l = evalSkeleton(ctx, lhs(t), eqs);
        auto r = evalSkeleton(ctx, rhs(t), eqs);
        if (l || r) {
            Theorem lt = l ? *l : reflexive(ctx, lhs(t));
            Theorem rt = r ? *r : reflexive(ctx, rhs(t));
            rebuilt = binopCong(t.fun().fun(), lt, rt);
        }
    } else {
        return std::nullopt;
    }
    Term cur = rebuilt ? rhs(rebuilt->prop()) : t;
    auto s = simplifyNode(rebuilt ? rebuilt->ctx() : ctx, cur);
    if (!rebuilt) return s;
    if (!s) return rebuilt;
    return trans(*rebuilt, *s);
}

struct Prover {
    Assignment path;
    std::optional<Assignment> counter;

    // Proves `phi` (already partially evaluated) in ctx, or records a countermodel.
    std::optional<Theorem> prove(const Context& ctx, const Term& phi) {
        if (isTrue(phi)) return truth(ctx);
        if (isFalse(phi)) {
            counter = path;
            return std::nullopt;
        }
        std::vector<Term> as = atoms(phi);
        const Term p = as.front();
        Theorem cases = specialize(axiomOf(ctx, SchemaName::BoolCases), p);
        Term pt = mkEq(p, mkTrue(), Type::prop());
        Term pf = mkEq(p, mkFalse(), Type::prop());
        std::optional<Theorem> branch[2];
        for (int i = 0; i < 2; ++i) {
            bool value = i == 0;
            auto [child, h] = assume(ctx, value ? pt : pf);
            auto ev = evalSkeleton(child, phi, {h});
            Term next = ev ? rhs(ev->prop()) : phi;
            path.emplace_back(p, value);
            auto sub = prove(child, next);
            path.pop_back();
            if (!sub) return std::nullopt;
            Theorem here = ev ? eqMP(sym(*ev), *sub) : *sub;
            branch[i] = lift(child, here);
        }
        Theorem elim = specializeAll(axiomOf(ctx, SchemaName::OrElim), {pt, pf, phi});
        return mp(mp(mp(elim, cases), *branch[0]), *branch[1]);
    }
};

bool hasQuantifiedAtom(const std::vector<Term>& as) {
    for (const auto& a : as)
        if (isForall(a) || isExists(a)) return true;
    return false;
}

}  // namespace

std::vector<Term> atoms(const Term& phi) {
    std::vector<Term> out;
    collectAtoms(phi, out);
    return out;
}

Conversion evalConv(std::vector<Theorem> assignment) {
    return [assignment = std::move(assignment)](const Context& ctx, const Term& t) -> ConvResult {
        auto r = evalSkeleton(ctx, t, assignment);
        return r ? r : reflexive(ctx, t);
    };
}

TautResult taut(const Context& ctx, const Term& phi) {
    if (typeOf(ctx, phi) != Type::prop()) throw TypeError("taut: not a proposition");
    std::vector<Context> scopes;
    Context cur = ctx;
    Term matrix = phi;
    while (isForall(matrix) && matrix.arg().isAbs() && matrix.arg().type().isProp()) {
        auto opened = destAbs(cur, matrix.arg());
        auto& [child, k, body] = *opened;
        scopes.push_back(child);
        cur = child;
        matrix = body;
    }
    if (hasQuantifiedAtom(atoms(matrix)))
        return {TautResult::Status::NotPropositional, std::nullopt, {}, "quantified atom in the matrix"};
    auto ev = evalSkeleton(cur, matrix, {});
    Term start = ev ? rhs(ev->prop()) : matrix;
    Prover pr;
    auto th = pr.prove(cur, start);
    if (!th) {
        Assignment cm = *pr.counter;
        // atoms eliminated by partial evaluation can take any value
        for (const auto& a : atoms(matrix)) {
            bool seen = false;
            for (const auto& [t, v] : cm) seen = seen || alphaEq(t, a);
            if (!seen) cm.emplace_back(a, false);
        }
        return {TautResult::Status::NotTautology, std::nullopt, cm, ""};
    }
    Theorem out = ev ? eqMP(sym(*ev), *th) : *th;
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) out = generalize(*it, out);
    return {TautResult::Status::Proved, out, {}, ""};
}

Theorem tautThm(const Context& ctx, const Term& phi) {
    TautResult r = taut(ctx, phi);
    if (!r.proved()) throw KernelError("taut failed on a required tautology");
    return *r.theorem;
}

const char* propLemmaLabel(PropLemma l) {
    switch (l) {
    case PropLemma::OrIntroL: return "orIntroL";
    case PropLemma::OrIntroR: return "orIntroR";
    case PropLemma::ExFalso: return "exFalso";
    case PropLemma::FalseElim: return "falseElim";
    case PropLemma::PropExt: return "propExt";
    case PropLemma::NotImpFalse: return "notImpFalse";
    case PropLemma::AndElimL: return "andElimL";
    case PropLemma::AndElimR: return "andElimR";
    case PropLemma::AndIntro: return "andIntro";
    case PropLemma::ImpDef: return "impDef";
    case PropLemma::IffDef: return "iffDef";
    case PropLemma::NotIffDef: return "notIffDef";
    case PropLemma::NotImp: return "notImp";
    case PropLemma::ImpTrans: return "impTrans";
    }
    return "?";
}

Term propLemmaStatement(PropLemma l) {
    const Type P = Type::prop();
    Term a = Term::bound(1), b = Term::bound(0);
    auto two = [&](const Term& body) { return mkForall("a", P, mkForall("b", P, body)); };
    switch (l) {
    case PropLemma::OrIntroL: return two(mkImp(a, mkOr(a, b)));
    case PropLemma::OrIntroR: return two(mkImp(b, mkOr(a, b)));
    case PropLemma::ExFalso: return two(mkImp(mkNot(a), mkImp(a, b)));
    case PropLemma::FalseElim: return mkForall("b", P, mkImp(mkFalse(), Term::bound(0)));
    case PropLemma::PropExt: return two(mkImp(mkImp(a, b), mkImp(mkImp(b, a), mkEq(a, b, P))));
    case PropLemma::NotImpFalse:
        return mkForall("a", P, mkImp(mkImp(mkNot(Term::bound(0)), mkFalse()), Term::bound(0)));
    case PropLemma::AndElimL: return two(mkImp(mkAnd(a, b), a));
    case PropLemma::AndElimR: return two(mkImp(mkAnd(a, b), b));
    case PropLemma::AndIntro: return two(mkImp(a, mkImp(b, mkAnd(a, b))));
    case PropLemma::ImpDef: return two(mkEq(mkImp(a, b), mkOr(mkNot(a), b), P));
    case PropLemma::IffDef: return two(mkEq(mkEq(a, b, P), mkAnd(mkOr(mkNot(a), b), mkOr(mkNot(b), a)), P));
    case PropLemma::NotIffDef:
        return two(mkEq(mkNot(mkEq(a, b, P)), mkAnd(mkOr(a, b), mkOr(mkNot(a), mkNot(b))), P));
    case PropLemma::NotImp: return two(mkEq(mkNot(mkImp(a, b)), mkAnd(a, mkNot(b)), P));
    case PropLemma::ImpTrans: {
        Term x = Term::bound(2), y = Term::bound(1), z = Term::bound(0);
        return mkForall("a", P, mkForall("b", P, mkForall("c", P,
               mkImp(mkImp(x, y), mkImp(mkImp(y, z), mkImp(x, z))))));
    }
    }
    throw KernelError("unknown lemma");
}

Theorem propLemma(const Context& ctx, PropLemma l) {
    static std::mutex mutex;
    static std::map<PropLemma, Theorem> cache;
    std::optional<Theorem> th;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(l);
        if (it != cache.end()) th = it->second;
    }
    if (!th) {
        Theorem proved = tautThm(Context::root(), propLemmaStatement(l));
        std::lock_guard lock(mutex);
        th = cache.emplace(l, proved).first->second;
    }
    return weaken(*th, ctx);
}

}  // namespace lcf
