#include "lcf/prop.hpp"

namespace lcf {

namespace {

bool member(const Term& x, const std::vector<Term>& xs) {
    for (const auto& y : xs)
        if (alphaEq(x, y)) return true;
    return false;
}

std::vector<Term> nub(const std::vector<Term>& xs) {
    std::vector<Term> out;
    for (const auto& x : xs)
        if (!member(x, out)) out.push_back(x);
    return out;
}

Term notOp() { return mkNot(mkTrue()).fun(); }

Theorem lemma(const Context& ctx, PropLemma l, const std::vector<Term>& args) {
    return specializeAll(propLemma(ctx, l), args);
}

// From |- x where x is a leaf of the disjunction tree r, derives |- r.
Theorem orIntro(const Theorem& th, const Term& r) {
    if (alphaEq(th.prop(), r)) return th;
    if (!isBinary(r, builtin::Or)) throw KernelError("disjReshape: literal not in target");
    const Term& a = lhs(r);
    const Term& b = rhs(r);
    if (member(th.prop(), flatten(a, builtin::Or)))
        return mp(lemma(th.ctx(), PropLemma::OrIntroL, {a, b}), orIntro(th, a));
    return mp(lemma(th.ctx(), PropLemma::OrIntroR, {a, b}), orIntro(th, b));
}

struct Reshaper {
    Term target;
    std::vector<Term> targetLits;
    std::vector<Theorem> refuters;

    // |- L  ==>  |- target
    Theorem literal(const Theorem& h) {
        const Context& ctx = h.ctx();
        const Term& l = h.prop();
        if (member(l, targetLits)) return orIntro(h, target);
        if (isFalse(l)) return mp(lemma(ctx, PropLemma::FalseElim, {target}), h);
        if (isEq(l) && member(mkEq(rhs(l), lhs(l)), targetLits)) {
            Type ty = builtinTypeArg(l.fun().fun());
            Theorem flip = specializeAll(axiomOf(ctx, SchemaName::EqSym, {ty}), {lhs(l), rhs(l)});
            return orIntro(eqMP(flip, h), target);
        }
        if (isNeg(l) && isEq(l.arg())) {
            const Term& e = l.arg();
            if (alphaEq(lhs(e), rhs(e))) {
                Theorem refl = reflexive(ctx, lhs(e));
                return mp(mp(lemma(ctx, PropLemma::ExFalso, {e, target}), h), refl);
            }
            Term flipped = mkNot(mkEq(rhs(e), lhs(e)));
            if (member(flipped, targetLits)) {
                Type ty = builtinTypeArg(e.fun().fun());
                Theorem flip = specializeAll(axiomOf(ctx, SchemaName::EqSym, {ty}), {lhs(e), rhs(e)});
                return orIntro(eqMP(apTerm(notOp(), flip), h), target);
            }
        }
        for (const auto& r : refuters) {
            if (isNeg(l) && alphaEq(l.arg(), r.prop()))
                return mp(mp(lemma(ctx, PropLemma::ExFalso, {r.prop(), target}), h), r);
            if (isNeg(r.prop()) && alphaEq(r.prop().arg(), l))
                return mp(mp(lemma(ctx, PropLemma::ExFalso, {l, target}), r), h);
        }
        throw KernelError("disjReshape: stuck literal");
    }

    // |- d -> target
    Theorem implication(const Context& ctx, const Term& d) {
        auto [child, h] = assume(ctx, d);
        if (!isBinary(d, builtin::Or)) return lift(child, literal(h));
        Theorem left = implication(child, lhs(d));
        Theorem right = implication(child, rhs(d));
        Theorem elim = specializeAll(axiomOf(child, SchemaName::OrElim), {lhs(d), rhs(d), target});
        return lift(child, mp(mp(mp(elim, h), left), right));
    }
};

Context deepest(const Context& start, const std::vector<Theorem>& ths) {
    Context c = start;
    for (const auto& t : ths) c = deeper(c, t.ctx());
    return c;
}

Conversion reshapeConv() {
    return [](const Context& ctx, const Term& t) -> ConvResult {
        Term target = mkDisj(nub(disjuncts(t)));
        if (alphaEq(target, t)) return reflexive(ctx, t);
        auto forward = [&ctx](const Term& from, const Term& to) {
            auto [child, h] = assume(ctx, from);
            return lift(child, disjReshape(h, to));
        };
        Theorem ab = forward(t, target);
        Theorem ba = forward(target, t);
        return mp(mp(lemma(ctx, PropLemma::PropExt, {t, target}), ab), ba);
    };
}

}  // namespace

std::vector<Term> disjuncts(const Term& d) {
    if (isFalse(d)) return {};
    return flatten(d, builtin::Or);
}

Term mkDisj(const std::vector<Term>& lits) { return foldRight(lits, builtin::Or, mkFalse()); }

Theorem disjReshape(const Theorem& d, const Term& r, const std::vector<Theorem>& refuters) {
    Context ctx = deepest(d.ctx(), refuters);
    Reshaper rs{r, flatten(r, builtin::Or), refuters};
    return mp(rs.implication(ctx, d.prop()), d);
}

Conversion disjNormConv() { return reshapeConv(); }

Conversion nubClauseConv() { return reshapeConv(); }

Theorem disjCut(const Theorem& a, const Theorem& b, const Term& lit) {
    Term neg = mkNot(lit);
    std::vector<Term> lits;
    for (const auto& x : disjuncts(a.prop()))
        if (!alphaEq(x, lit)) lits.push_back(x);
    for (const auto& x : disjuncts(b.prop()))
        if (!alphaEq(x, neg)) lits.push_back(x);
    Term r = mkDisj(nub(lits));
    Context ctx = deeper(a.ctx(), b.ctx());
    Theorem lem = specialize(axiomOf(ctx, SchemaName::Lem), lit);
    auto branch = [&](const Term& hyp, const Theorem& side) {
        auto [child, h] = assume(ctx, hyp);
        return lift(child, disjReshape(weaken(side, child), r, {h}));
    };
    Theorem pos = branch(lit, b);
    Theorem negBranch = branch(neg, a);
    Theorem elim = specializeAll(axiomOf(ctx, SchemaName::OrElim), {lit, neg, r});
    return mp(mp(mp(elim, lem), pos), negBranch);
}

}  // namespace lcf
