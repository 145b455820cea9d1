#include <algorithm>
#include <cctype>
#include <vector>

#include "internal.hpp"

namespace lcf {

namespace {

using NodePtr = std::shared_ptr<const ContextNode>;

const NodePtr& rootNode() {
    static const NodePtr r = [] {
        auto n = std::make_shared<ContextNode>();
        n->scope = std::make_shared<const std::map<std::string, Type>>();
        n->axioms = std::make_shared<const std::set<std::string>>();
        return NodePtr(n);
    }();
    return r;
}

std::shared_ptr<ContextNode> childOf(const Context& parent) {
    const NodePtr& p = KernelAccess::node(parent);
    auto n = std::make_shared<ContextNode>();
    n->parent = p;
    n->counter = p->counter;
    n->depth = p->depth + 1;
    n->scope = p->scope;
    n->axioms = p->axioms;
    return n;
}

Context deeperOf(const Context& a, const Context& b) {
    if (a.isAncestorOf(b)) return b;
    if (b.isAncestorOf(a)) return a;
    throw KernelError("context mismatch: theorems live in unrelated scopes");
}

bool theoryChain(const Context& ctx) {
    for (const ContextNode* n = KernelAccess::node(ctx).get(); n; n = n->parent.get())
        if (n->entry != Context::Entry::Root && !n->theoryLevel) return false;
    return true;
}

Type checkTerm(const Context& ctx, const Term& t, std::vector<Type>& binders) {
    switch (t.kind()) {
    case Term::Kind::Const: {
        if (builtin::isReserved(t.name())) {
            if (!builtin::admissible(t.name(), t.type()))
                throw TypeError("builtin '" + t.name() + "' used at type " + t.type().str());
            return t.type();
        }
        auto declared = ctx.lookup(t.name());
        if (!declared) throw TypeError("unknown constant '" + t.name() + "'");
        if (*declared != t.type())
            throw TypeError("constant '" + t.name() + "' has type " + declared->str() + ", not " + t.type().str());
        return t.type();
    }
    case Term::Kind::Bound:
        if (t.index() >= binders.size()) throw TypeError("dangling bound variable");
        return binders[binders.size() - 1 - t.index()];
    case Term::Kind::Comb: {
        Type f = checkTerm(ctx, t.fun(), binders);
        if (!f.isFun()) throw TypeError("application of non-function of type " + f.str());
        Type a = checkTerm(ctx, t.arg(), binders);
        if (a != f.domain())
            throw TypeError("argument of type " + a.str() + " where " + f.domain().str() + " expected");
        return f.codomain();
    }
    case Term::Kind::Abs: {
        binders.push_back(t.type());
        Type b = checkTerm(ctx, t.body(), binders);
        binders.pop_back();
        return Type::fun(t.type(), b);
    }
    }
    throw TypeError("malformed term");
}

Type closedType(const Term& t) {
    auto ty = inferType(t);
    if (!ty) throw KernelError("ill-typed proposition inside theorem");
    return *ty;
}

void requireEq(const Term& t, const char* rule) {
    if (!isEq(t)) throw KernelError(std::string(rule) + ": theorem is not an equation");
}

Term nf(const Term& t, std::vector<Type>& env) {
    if (t.isAbs()) {
        env.push_back(t.type());
        Term b = nf(t.body(), env);
        env.pop_back();
        return b.sameNode(t.body()) ? t : Term::abs(t.name(), t.type(), b);
    }
    auto [head, args] = stripComb(t);
    if (head.isAbs() && !args.empty()) {
        Term r = instantiate(head.body(), args[0]);
        for (std::size_t i = 1; i < args.size(); ++i) r = Term::comb(r, args[i]);
        return nf(r, env);
    }
    auto ty = inferType(t, env);
    if (!ty) throw TypeError("cannot normalise an ill-typed term");
    if (ty->isFun()) {
        Term expanded = Term::abs("x", ty->domain(), Term::comb(shiftLoose(t, 1), Term::bound(0)));
        return nf(expanded, env);
    }
    bool changed = false;
    std::vector<Term> nargs;
    nargs.reserve(args.size());
    for (const auto& a : args) {
        nargs.push_back(nf(a, env));
        changed = changed || !nargs.back().sameNode(a);
    }
    return changed ? listComb(head, nargs) : t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Context

Context Context::root() { return Context(rootNode()); }

Context::Entry Context::entry() const { return node_->entry; }

std::optional<Context> Context::parent() const {
    if (!node_->parent) return std::nullopt;
    return Context(node_->parent);
}

std::size_t Context::depth() const { return node_->depth; }
std::uint64_t Context::freshCounter() const { return node_->counter; }

std::optional<Type> Context::lookup(const std::string& name) const {
    auto it = node_->scope->find(name);
    if (it == node_->scope->end()) return std::nullopt;
    return it->second;
}

bool Context::hasAxiom(const std::string& name) const { return node_->axioms->count(name) != 0; }

bool Context::isAncestorOf(const Context& other) const {
    const ContextNode* n = other.node_.get();
    while (n && n->depth > node_->depth) n = n->parent.get();
    return n == node_.get();
}

const std::string& Context::entryName() const { return node_->name; }

std::optional<Term> Context::entryConst() const {
    if (node_->entry != Entry::Constant) return std::nullopt;
    return Term::constant(node_->name, *node_->type);
}

std::optional<Term> Context::entryProp() const { return node_->prop; }
bool Context::entryChosen() const { return node_->chosen; }
bool Context::entryTheoryLevel() const { return node_->theoryLevel; }

std::string baseName(const std::string& name) {
    auto pos = name.rfind('$');
    if (pos == std::string::npos || pos + 1 == name.size()) return name;
    for (auto i = pos + 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return name;
    return name.substr(0, pos);
}

// ---------------------------------------------------------------------------
// Rules

Type typeOf(const Context& ctx, const Term& t) {
    std::vector<Type> binders;
    return checkTerm(ctx, t, binders);
}

Term normalForm(const Term& t) {
    std::vector<Type> env;
    return nf(t, env);
}

Theorem reflexive(const Context& ctx, const Term& t) {
    if (!t.closed()) throw TypeError("reflexive: open term");
    Type ty = typeOf(ctx, t);
    return KernelAccess::theorem(ctx, mkEq(t, t, ty));
}

Theorem combine(const Theorem& funs, const Theorem& args) {
    requireEq(funs.prop(), "combine");
    requireEq(args.prop(), "combine");
    Context ctx = deeperOf(funs.ctx(), args.ctx());
    Type fty = closedType(lhs(funs.prop()));
    Type aty = closedType(lhs(args.prop()));
    if (!fty.isFun() || fty.domain() != aty)
        throw TypeError("combine: cannot apply " + fty.str() + " to " + aty.str());
    Term l = Term::comb(lhs(funs.prop()), lhs(args.prop()));
    Term r = Term::comb(rhs(funs.prop()), rhs(args.prop()));
    return KernelAccess::theorem(ctx, mkEq(l, r, fty.codomain()));
}

Theorem abstract(const Theorem& th) {
    const Term& p = th.prop();
    if (!isForall(p) || !p.arg().isAbs()) throw KernelError("abstract: not a universally quantified equation");
    const Term& binder = p.arg();
    const Term& body = binder.body();
    if (!isEq(body)) throw KernelError("abstract: quantified body is not an equation");
    Type valTy = builtinTypeArg(body.fun().fun());
    Term l = Term::abs(binder.name(), binder.type(), lhs(body));
    Term r = Term::abs(binder.name(), binder.type(), rhs(body));
    return KernelAccess::theorem(th.ctx(), mkEq(l, r, Type::fun(binder.type(), valTy)));
}

Theorem normalize(const Context& ctx, const Term& t) {
    if (!t.closed()) throw TypeError("normalize: open term");
    Type ty = typeOf(ctx, t);
    return KernelAccess::theorem(ctx, mkEq(t, normalForm(t), ty));
}

Theorem eqMP(const Theorem& eq, const Theorem& th) {
    requireEq(eq.prop(), "eqMP");
    if (!builtinTypeArg(eq.prop().fun().fun()).isProp()) throw KernelError("eqMP: equation is not between propositions");
    if (!alphaEq(lhs(eq.prop()), th.prop())) throw KernelError("eqMP: theorem does not match left-hand side");
    return KernelAccess::theorem(deeperOf(eq.ctx(), th.ctx()), rhs(eq.prop()));
}

Theorem mp(const Theorem& imp, const Theorem& th) {
    if (!isBinary(imp.prop(), builtin::Imp)) throw KernelError("mp: not an implication");
    if (!alphaEq(lhs(imp.prop()), th.prop())) throw KernelError("mp: antecedent mismatch");
    return KernelAccess::theorem(deeperOf(imp.ctx(), th.ctx()), rhs(imp.prop()));
}

Theorem weaken(const Theorem& th, const Context& ctx) {
    if (th.ctx() == ctx) return th;
    if (!th.ctx().isAncestorOf(ctx)) throw KernelError("weaken: target is not a descendant scope");
    return KernelAccess::theorem(ctx, th.prop());
}

std::pair<Context, Theorem> assume(const Context& ctx, const Term& prop) {
    if (!prop.closed()) throw TypeError("assume: open term");
    Type ty = typeOf(ctx, prop);
    if (!ty.isProp()) throw TypeError("assume: term has type " + ty.str() + ", not P");
    auto n = childOf(ctx);
    n->entry = Context::Entry::Assumption;
    n->prop = prop;
    Context c = KernelAccess::context(std::move(n));
    return {c, KernelAccess::theorem(c, prop)};
}

std::pair<Context, Term> introConst(const Context& ctx, const std::string& hint, const Type& ty) {
    auto n = childOf(ctx);
    n->counter += 1;
    std::string base = baseName(hint.empty() ? std::string("x") : hint);
    n->name = base + "$" + std::to_string(n->counter);
    n->entry = Context::Entry::Constant;
    n->type = ty;
    auto scope = std::make_shared<std::map<std::string, Type>>(*n->scope);
    scope->insert_or_assign(n->name, ty);
    n->scope = std::move(scope);
    Term c = Term::constant(n->name, ty);
    return {KernelAccess::context(std::move(n)), c};
}

Theorem specialize(const Theorem& th, const Term& t) {
    const Term& p = th.prop();
    if (!isForall(p)) throw KernelError("specialize: not universally quantified");
    if (!t.closed()) throw TypeError("specialize: open term");
    Type want = builtinTypeArg(p.fun());
    Type got = typeOf(th.ctx(), t);
    if (got != want) throw TypeError("specialize: expected " + want.str() + ", got " + got.str());
    Term result = p.arg().isAbs() ? instantiate(p.arg().body(), t) : Term::comb(p.arg(), t);
    return KernelAccess::theorem(th.ctx(), result);
}

Theorem lift(const Context& child, const Theorem& th) {
    const NodePtr& childNode = KernelAccess::node(child);
    if (!childNode->parent) throw KernelError("lift: the root scope has no parent");
    Context target = KernelAccess::context(childNode->parent);
    if (th.ctx().isAncestorOf(target)) return KernelAccess::theorem(target, th.prop());
    if (!child.isAncestorOf(th.ctx())) throw KernelError("lift: theorem does not live below the given scope");

    std::vector<const ContextNode*> block;  // innermost first
    for (const ContextNode* n = KernelAccess::node(th.ctx()).get(); n != childNode->parent.get(); n = n->parent.get()) {
        if (n->theoryLevel) throw KernelError("lift: cannot discharge theory-level declarations");
        block.push_back(n);
    }
    Term phi = th.prop();
    for (const ContextNode* n : block)
        if (n->entry == Context::Entry::Assumption) phi = mkImp(*n->prop, phi);
    for (const ContextNode* n : block) {
        if (n->entry != Context::Entry::Constant || !occursConst(phi, n->name)) continue;
        Term body = abstractConst(phi, n->name);
        const char* q = n->chosen ? builtin::Ex : builtin::All;
        phi = Term::comb(quantConst(q, *n->type), Term::abs(baseName(n->name), *n->type, body));
    }
    return KernelAccess::theorem(target, phi);
}

std::tuple<Context, Term, Theorem> choose(const Context& ctx, const Theorem& th, const std::string& hint) {
    const Term& p = th.prop();
    if (!isExists(p)) throw KernelError("choose: not existentially quantified");
    if (!th.ctx().isAncestorOf(ctx)) throw KernelError("choose: theorem not visible in this scope");
    auto [c, k] = introConst(ctx, hint, builtinTypeArg(p.fun()));
    auto n = std::make_shared<ContextNode>(*KernelAccess::node(c));
    n->chosen = true;
    Context chosenCtx = KernelAccess::context(std::move(n));
    Term body = p.arg().isAbs() ? instantiate(p.arg().body(), k) : Term::comb(p.arg(), k);
    return {chosenCtx, k, KernelAccess::theorem(chosenCtx, body)};
}

Context declareConst(const Context& ctx, const std::string& name, const Type& ty) {
    if (!theoryChain(ctx)) throw KernelError("declareConst: only allowed at theory level");
    if (name.empty() || builtin::isReserved(name)) throw KernelError("declareConst: reserved name '" + name + "'");
    if (ctx.lookup(name)) throw KernelError("declareConst: '" + name + "' already declared");
    auto n = childOf(ctx);
    n->entry = Context::Entry::Constant;
    n->theoryLevel = true;
    n->name = name;
    n->type = ty;
    auto scope = std::make_shared<std::map<std::string, Type>>(*n->scope);
    scope->insert_or_assign(name, ty);
    n->scope = std::move(scope);
    return KernelAccess::context(std::move(n));
}

Theorem loadAxiom(const Context& ctx, const std::string& name, const Term& prop) {
    if (!theoryChain(ctx)) throw KernelError("loadAxiom: only allowed at theory level");
    if (ctx.hasAxiom(name)) throw KernelError("loadAxiom: duplicate axiom '" + name + "'");
    if (!prop.closed()) throw TypeError("loadAxiom: open term");
    Type ty = typeOf(ctx, prop);
    if (!ty.isProp()) throw TypeError("loadAxiom: term has type " + ty.str() + ", not P");
    auto n = childOf(ctx);
    n->entry = Context::Entry::Axiom;
    n->theoryLevel = true;
    n->name = name;
    n->prop = prop;
    auto axioms = std::make_shared<std::set<std::string>>(*n->axioms);
    axioms->insert(name);
    n->axioms = std::move(axioms);
    Context c = KernelAccess::context(std::move(n));
    return KernelAccess::theorem(c, prop);
}

std::optional<std::pair<Term, Term>> destComb(const Term& t) {
    if (!t.isComb()) return std::nullopt;
    return std::make_pair(t.fun(), t.arg());
}

std::optional<std::tuple<Context, Term, Term>> destAbs(const Context& ctx, const Term& t) {
    if (!t.isAbs() || !t.closed()) return std::nullopt;
    auto [c, k] = introConst(ctx, t.name(), t.type());
    return std::make_tuple(c, k, instantiate(t.body(), k));
}

}  // namespace lcf
