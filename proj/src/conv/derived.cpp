#include "lcf/derived.hpp"

namespace lcf {

namespace {

void requireEq(const Theorem& th, const char* rule) {
    if (!isEq(th.prop())) throw KernelError(std::string(rule) + ": not an equation");
}

}  // namespace

Context deeper(const Context& a, const Context& b) {
    if (a.isAncestorOf(b)) return b;
    if (b.isAncestorOf(a)) return a;
    throw KernelError("theorems live in unrelated scopes");
}

Theorem sym(const Theorem& th) {
    requireEq(th, "sym");
    const Term& a = lhs(th.prop());
    Term eq = th.prop().fun().fun();
    Theorem step = combine(combine(reflexive(th.ctx(), eq), th), reflexive(th.ctx(), a));
    return eqMP(step, reflexive(th.ctx(), a));
}

Theorem trans(const Theorem& ab, const Theorem& bc) {
    requireEq(ab, "trans");
    requireEq(bc, "trans");
    Context ctx = deeper(ab.ctx(), bc.ctx());
    Theorem step = combine(reflexive(ctx, ab.prop().fun()), bc);
    return eqMP(step, ab);
}

Theorem axiomOf(const Context& ctx, SchemaName n, std::vector<Type> typeArgs) {
    return schemaAxiom(ctx, AxiomSchema{n, std::move(typeArgs)});
}

Theorem specializeAll(Theorem th, const std::vector<Term>& ts) {
    for (const auto& t : ts) th = specialize(th, t);
    return th;
}

Theorem truth(const Context& ctx) {
    Theorem t = specialize(axiomOf(ctx, SchemaName::EqTrueL), mkTrue());
    return eqMP(t, reflexive(ctx, mkTrue()));
}

Theorem eqTrueElim(const Theorem& th) {
    if (!isEq(th.prop()) || !isTrue(rhs(th.prop()))) throw KernelError("eqTrueElim: not of the form p = true");
    Theorem e = specialize(axiomOf(th.ctx(), SchemaName::EqTrueElim), lhs(th.prop()));
    return eqMP(e, th);
}

Theorem eqTrueIntro(const Theorem& th) {
    Theorem e = specialize(axiomOf(th.ctx(), SchemaName::EqTrueElim), th.prop());
    return eqMP(sym(e), th);
}

Theorem apThm(const Theorem& th, const Term& x) { return combine(th, reflexive(th.ctx(), x)); }

Theorem apTerm(const Term& f, const Theorem& th) { return combine(reflexive(th.ctx(), f), th); }

Theorem binopCong(const Term& op, const Theorem& l, const Theorem& r) {
    Context ctx = deeper(l.ctx(), r.ctx());
    return combine(combine(reflexive(ctx, op), l), r);
}

Theorem genVacuous(const Theorem& th, const Type& ty) {
    Theorem e = specialize(axiomOf(th.ctx(), SchemaName::TrivialAll, {ty}), th.prop());
    return eqMP(sym(e), th);
}

Theorem generalize(const Context& child, const Theorem& th) {
    auto k = child.entryConst();
    if (!k) throw KernelError("generalize: scope does not introduce a constant");
    Theorem out = lift(child, th);
    if (occursConst(th.prop(), k->name())) return out;
    return genVacuous(out, k->type());
}

}  // namespace lcf
