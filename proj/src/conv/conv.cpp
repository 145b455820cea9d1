#include "lcf/conv.hpp"

namespace lcf {

namespace {

bool changed(const Theorem& eq) { return !alphaEq(lhs(eq.prop()), rhs(eq.prop())); }

// Chains an optional step after an optional prefix; absent means "unchanged".
std::optional<Theorem> chain(const std::optional<Theorem>& a, const std::optional<Theorem>& b) {
    if (!a) return b;
    if (!b) return a;
    return trans(*a, *b);
}

Term current(const std::optional<Theorem>& step, const Term& t) { return step ? rhs(step->prop()) : t; }

using Rec = std::function<std::optional<Theorem>(const Context&, const Term&)>;

// Applies rec to the immediate subterms; absent when nothing changed.
std::optional<Theorem> subterms(const Context& ctx, const Term& t, const Rec& rec) {
    if (t.isComb()) {
        auto f = rec(ctx, t.fun());
        auto x = rec(ctx, t.arg());
        if (!f && !x) return std::nullopt;
        Theorem ft = f ? *f : reflexive(ctx, t.fun());
        Theorem xt = x ? *x : reflexive(ctx, t.arg());
        return combine(ft, xt);
    }
    if (t.isAbs()) {
        auto opened = destAbs(ctx, t);
        auto& [cctx, k, body] = *opened;
        auto b = rec(cctx, body);
        if (!b) return std::nullopt;
        return abstract(generalize(cctx, *b));
    }
    return std::nullopt;
}

// c applied at t until it fails or stops making progress; absent if no change.
std::optional<Theorem> repeatAt(const Conversion& c, const Context& ctx, const Term& t, std::size_t fuel) {
    std::optional<Theorem> acc;
    Term cur = t;
    for (std::size_t steps = 0;; ++steps) {
        auto r = c(ctx, cur);
        if (!r || !changed(*r)) return acc;
        if (steps >= fuel) throw ConvError("repeatConv: fuel exhausted");
        acc = chain(acc, r);
        cur = rhs(r->prop());
    }
}

struct Matcher {
    std::size_t n;
    const std::vector<Type>& types;  // index j: j = 0 is the innermost quantifier
    std::vector<std::optional<Term>> theta;

    bool match(const Term& pat, const Term& t, std::uint32_t depth) {
        switch (pat.kind()) {
        case Term::Kind::Bound: {
            if (pat.index() < depth) return t.isBound() && t.index() == pat.index();
            std::size_t j = pat.index() - depth;
            if (j >= n) return false;
            if (!t.closed()) return false;  // would capture a bound variable
            auto ty = inferType(t);
            if (!ty || *ty != types[j]) return false;
            if (theta[j]) return alphaEq(*theta[j], t);
            theta[j] = t;
            return true;
        }
        case Term::Kind::Const: return t.isConst() && t.name() == pat.name() && t.type() == pat.type();
        case Term::Kind::Comb: return t.isComb() && match(pat.fun(), t.fun(), depth) && match(pat.arg(), t.arg(), depth);
        case Term::Kind::Abs: return t.isAbs() && t.type() == pat.type() && match(pat.body(), t.body(), depth + 1);
        }
        return false;
    }
};

Theorem normalizeRhs(const Context& ctx, const Theorem& eq) {
    const Term& r = rhs(eq.prop());
    Term n = normalForm(r);
    if (alphaEq(n, r)) return eq;
    return trans(eq, normalize(deeper(ctx, eq.ctx()), r));
}

}  // namespace

Conversion noConv() {
    return [](const Context&, const Term&) -> ConvResult { return std::nullopt; };
}

Conversion allConv() {
    return [](const Context& ctx, const Term& t) -> ConvResult { return reflexive(ctx, t); };
}

Conversion orElseConv(Conversion c1, Conversion c2) {
    return [c1 = std::move(c1), c2 = std::move(c2)](const Context& ctx, const Term& t) -> ConvResult {
        if (auto r = c1(ctx, t)) return r;
        return c2(ctx, t);
    };
}

Conversion thenConv(Conversion c1, Conversion c2) {
    return [c1 = std::move(c1), c2 = std::move(c2)](const Context& ctx, const Term& t) -> ConvResult {
        auto r1 = c1(ctx, t);
        if (!r1) return std::nullopt;
        auto r2 = c2(ctx, rhs(r1->prop()));
        if (!r2) return std::nullopt;
        return trans(*r1, *r2);
    };
}

Conversion tryConv(Conversion c) { return orElseConv(std::move(c), allConv()); }

Conversion repeatConv(Conversion c, std::size_t fuel) {
    return [c = std::move(c), fuel](const Context& ctx, const Term& t) -> ConvResult {
        auto r = repeatAt(c, ctx, t, fuel);
        return r ? r : reflexive(ctx, t);
    };
}

Conversion firstConv(std::vector<Conversion> cs) {
    Conversion acc = noConv();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = orElseConv(*it, acc);
    return acc;
}

Conversion everyConv(std::vector<Conversion> cs) {
    Conversion acc = allConv();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = thenConv(*it, acc);
    return acc;
}

Conversion combConv(Conversion cf, Conversion cx) {
    return [cf = std::move(cf), cx = std::move(cx)](const Context& ctx, const Term& t) -> ConvResult {
        if (!t.isComb()) return std::nullopt;
        auto f = cf(ctx, t.fun());
        if (!f) return std::nullopt;
        auto x = cx(ctx, t.arg());
        if (!x) return std::nullopt;
        return combine(*f, *x);
    };
}

Conversion ratorConv(Conversion c) { return combConv(std::move(c), allConv()); }
Conversion randConv(Conversion c) { return combConv(allConv(), std::move(c)); }
Conversion binopConv(Conversion c) { return combConv(combConv(allConv(), c), c); }
Conversion landConv(Conversion c) { return combConv(combConv(allConv(), std::move(c)), allConv()); }

Conversion absConv(Conversion c) {
    return [c = std::move(c)](const Context& ctx, const Term& t) -> ConvResult {
        auto opened = destAbs(ctx, t);
        if (!opened) return std::nullopt;
        auto& [cctx, k, body] = *opened;
        auto r = c(cctx, body);
        if (!r) return std::nullopt;
        return abstract(generalize(cctx, *r));
    };
}

Conversion quantConv(Conversion c) {
    Conversion inner = absConv(std::move(c));
    return [inner](const Context& ctx, const Term& t) -> ConvResult {
        if (!(isForall(t) || isExists(t))) return std::nullopt;
        return randConv(inner)(ctx, t);
    };
}

Conversion subsConv(const Theorem& eq) {
    if (!isEq(eq.prop())) throw ConvError("subsConv: not an equation");
    return [eq](const Context& ctx, const Term& t) -> ConvResult {
        if (!alphaEq(lhs(eq.prop()), t) || !eq.ctx().isAncestorOf(ctx)) return std::nullopt;
        return normalizeRhs(ctx, weaken(eq, ctx));
    };
}

Conversion rewrConv1(const Theorem& eq) {
    std::vector<Type> outerFirst;
    Term body = eq.prop();
    while (isForall(body) && body.arg().isAbs()) {
        outerFirst.push_back(body.arg().type());
        body = body.arg().body();
    }
    if (!isEq(body)) return noConv();
    std::vector<Type> types(outerFirst.rbegin(), outerFirst.rend());
    Term pattern = lhs(body);
    return [eq, types, pattern](const Context& ctx, const Term& t) -> ConvResult {
        if (!eq.ctx().isAncestorOf(ctx)) return std::nullopt;
        Matcher m{types.size(), types, std::vector<std::optional<Term>>(types.size())};
        if (!m.match(pattern, t, 0)) return std::nullopt;
        Theorem th = weaken(eq, ctx);
        for (std::size_t j = types.size(); j-- > 0;) {
            if (!m.theta[j]) return std::nullopt;
            th = specialize(th, *m.theta[j]);
        }
        return normalizeRhs(ctx, th);
    };
}

Conversion rewrConv(const std::vector<Theorem>& eqs) {
    std::vector<Conversion> cs;
    for (const auto& e : eqs) cs.push_back(rewrConv1(e));
    return firstConv(std::move(cs));
}

Conversion normalizeConv() {
    return [](const Context& ctx, const Term& t) -> ConvResult { return normalize(ctx, t); };
}

Conversion betaConv() {
    return [](const Context& ctx, const Term& t) -> ConvResult {
        if (!t.isComb() || !t.fun().isAbs()) return std::nullopt;
        return normalize(ctx, t);
    };
}

Conversion upConv(Conversion c) {
    auto rec = std::make_shared<Rec>();
    *rec = [c, weak = std::weak_ptr<Rec>(rec)](const Context& ctx, const Term& t) -> std::optional<Theorem> {
        auto self = weak.lock();
        auto s = subterms(ctx, t, *self);
        auto r = repeatAt(c, ctx, current(s, t), 10000);
        return chain(s, r);
    };
    return [rec](const Context& ctx, const Term& t) -> ConvResult {
        auto r = (*rec)(ctx, t);
        return r ? r : reflexive(ctx, t);
    };
}

Conversion depthConv(Conversion c) { return upConv(std::move(c)); }

Conversion redepthConv(Conversion c) {
    auto rec = std::make_shared<Rec>();
    *rec = [c, weak = std::weak_ptr<Rec>(rec)](const Context& ctx, const Term& t) -> std::optional<Theorem> {
        auto self = weak.lock();
        auto s = subterms(ctx, t, *self);
        Term cur = current(s, t);
        auto r = c(ctx, cur);
        if (!r || !changed(*r)) return s;
        return chain(chain(s, r), (*self)(ctx, rhs(r->prop())));
    };
    return [rec](const Context& ctx, const Term& t) -> ConvResult {
        auto r = (*rec)(ctx, t);
        return r ? r : reflexive(ctx, t);
    };
}

Conversion onceDepthConv(Conversion c) {
    auto rec = std::make_shared<Rec>();
    *rec = [c, weak = std::weak_ptr<Rec>(rec)](const Context& ctx, const Term& t) -> std::optional<Theorem> {
        auto r = c(ctx, t);
        if (r) return changed(*r) ? r : std::nullopt;
        return subterms(ctx, t, *weak.lock());
    };
    return [rec](const Context& ctx, const Term& t) -> ConvResult {
        auto r = (*rec)(ctx, t);
        return r ? r : reflexive(ctx, t);
    };
}

std::optional<Theorem> convRule(const Conversion& c, const Theorem& th) {
    auto r = c(th.ctx(), th.prop());
    if (!r) return std::nullopt;
    return eqMP(*r, th);
}

}  // namespace lcf
