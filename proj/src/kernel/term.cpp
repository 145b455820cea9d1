#include "lcf/term.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lcf {

namespace {

std::size_t mixHash(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::constant(std::string name, Type ty) {
    auto n = std::make_shared<TermNode>();
    n->kind = Kind::Const;
    n->hash = mixHash(std::hash<std::string>{}(name), ty.hash());
    n->name = std::move(name);
    n->type = std::move(ty);
    return Term(std::move(n));
}

Term Term::bound(std::uint32_t index) {
    auto n = std::make_shared<TermNode>();
    n->kind = Kind::Bound;
    n->index = index;
    n->looseRange = index + 1;
    n->hash = mixHash(0xb0, index);
    return Term(std::move(n));
}

Term Term::comb(Term fun, Term arg) {
    auto n = std::make_shared<TermNode>();
    n->kind = Kind::Comb;
    n->looseRange = std::max(fun.looseRange(), arg.looseRange());
    n->hash = mixHash(mixHash(0xc0, fun.hash()), arg.hash());
    n->size = 1 + fun.size() + arg.size();
    n->fun = std::move(fun);
    n->arg = std::move(arg);
    return Term(std::move(n));
}

Term Term::abs(std::string hint, Type varTy, Term body) {
    auto n = std::make_shared<TermNode>();
    n->kind = Kind::Abs;
    n->looseRange = body.looseRange() > 0 ? body.looseRange() - 1 : 0;
    n->hash = mixHash(mixHash(0xab, varTy.hash()), body.hash());
    n->size = 1 + body.size();
    n->name = std::move(hint);
    n->type = std::move(varTy);
    n->arg = std::move(body);
    return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }

const Type& Term::type() const {
    if (!node_->type) throw std::logic_error("term has no type annotation");
    return *node_->type;
}

std::uint32_t Term::index() const { return node_->index; }
const Term& Term::fun() const { return *node_->fun; }
const Term& Term::arg() const { return *node_->arg; }
const Term& Term::body() const { return *node_->arg; }
std::uint32_t Term::looseRange() const { return node_->looseRange; }
std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::size() const { return node_->size; }

bool alphaEq(const Term& a, const Term& b) {
    if (a.sameNode(b)) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
    switch (a.kind()) {
    case Term::Kind::Const: return a.name() == b.name() && a.type() == b.type();
    case Term::Kind::Bound: return a.index() == b.index();
    case Term::Kind::Comb: return alphaEq(a.fun(), b.fun()) && alphaEq(a.arg(), b.arg());
    case Term::Kind::Abs: return a.type() == b.type() && alphaEq(a.body(), b.body());
    }
    return false;
}

Term shiftLoose(const Term& t, std::int64_t amount, std::uint32_t cutoff) {
    if (amount == 0 || t.looseRange() <= cutoff) return t;
    switch (t.kind()) {
    case Term::Kind::Const: return t;
    case Term::Kind::Bound: {
        std::int64_t i = static_cast<std::int64_t>(t.index()) + amount;
        if (i < 0) throw std::logic_error("negative de Bruijn index after shift");
        return Term::bound(static_cast<std::uint32_t>(i));
    }
    case Term::Kind::Comb:
        return Term::comb(shiftLoose(t.fun(), amount, cutoff), shiftLoose(t.arg(), amount, cutoff));
    case Term::Kind::Abs:
        return Term::abs(t.name(), t.type(), shiftLoose(t.body(), amount, cutoff + 1));
    }
    return t;
}

namespace {

Term instantiateAt(const Term& t, const Term& value, std::uint32_t depth) {
    if (t.looseRange() <= depth) return t;
    switch (t.kind()) {
    case Term::Kind::Const: return t;
    case Term::Kind::Bound:
        if (t.index() == depth) return shiftLoose(value, depth);
        return Term::bound(t.index() - 1);
    case Term::Kind::Comb:
        return Term::comb(instantiateAt(t.fun(), value, depth), instantiateAt(t.arg(), value, depth));
    case Term::Kind::Abs:
        return Term::abs(t.name(), t.type(), instantiateAt(t.body(), value, depth + 1));
    }
    return t;
}

Term abstractAt(const Term& t, const std::string& name, std::uint32_t depth) {
    switch (t.kind()) {
    case Term::Kind::Const:
        return t.name() == name ? Term::bound(depth) : t;
    case Term::Kind::Bound:
        return t.index() >= depth ? Term::bound(t.index() + 1) : t;
    case Term::Kind::Comb: {
        Term f = abstractAt(t.fun(), name, depth);
        Term a = abstractAt(t.arg(), name, depth);
        if (f.sameNode(t.fun()) && a.sameNode(t.arg())) return t;
        return Term::comb(std::move(f), std::move(a));
    }
    case Term::Kind::Abs: {
        Term b = abstractAt(t.body(), name, depth + 1);
        if (b.sameNode(t.body())) return t;
        return Term::abs(t.name(), t.type(), std::move(b));
    }
    }
    return t;
}

}  // namespace

Term instantiate(const Term& body, const Term& value) { return instantiateAt(body, value, 0); }

Term abstractConst(const Term& t, const std::string& name) { return abstractAt(t, name, 0); }

Term replaceSubterm(const Term& t, const Term& what, const Term& with) {
    if (alphaEq(t, what)) return with;
    switch (t.kind()) {
    case Term::Kind::Comb: {
        Term f = replaceSubterm(t.fun(), what, with);
        Term a = replaceSubterm(t.arg(), what, with);
        if (f.sameNode(t.fun()) && a.sameNode(t.arg())) return t;
        return Term::comb(std::move(f), std::move(a));
    }
    case Term::Kind::Abs: {
        Term b = replaceSubterm(t.body(), what, with);
        if (b.sameNode(t.body())) return t;
        return Term::abs(t.name(), t.type(), std::move(b));
    }
    default: return t;
    }
}

bool occursConst(const Term& t, const std::string& name) {
    switch (t.kind()) {
    case Term::Kind::Const: return t.name() == name;
    case Term::Kind::Bound: return false;
    case Term::Kind::Comb: return occursConst(t.fun(), name) || occursConst(t.arg(), name);
    case Term::Kind::Abs: return occursConst(t.body(), name);
    }
    return false;
}

std::vector<Term> constantsOf(const Term& t) {
    std::vector<Term> out;
    std::set<std::string> seen;
    std::function<void(const Term&)> go = [&](const Term& u) {
        switch (u.kind()) {
        case Term::Kind::Const:
            if (seen.insert(u.name()).second) out.push_back(u);
            break;
        case Term::Kind::Bound: break;
        case Term::Kind::Comb: go(u.fun()); go(u.arg()); break;
        case Term::Kind::Abs: go(u.body()); break;
        }
    };
    go(t);
    return out;
}

std::pair<Term, std::vector<Term>> stripComb(const Term& t) {
    std::vector<Term> args;
    const Term* cur = &t;
    while (cur->isComb()) {
        args.push_back(cur->arg());
        cur = &cur->fun();
    }
    std::reverse(args.begin(), args.end());
    return {*cur, std::move(args)};
}

Term listComb(Term head, const std::vector<Term>& args) {
    for (const auto& a : args) head = Term::comb(std::move(head), a);
    return head;
}

std::optional<Type> inferType(const Term& t, std::vector<Type>& binders) {
    switch (t.kind()) {
    case Term::Kind::Const: return t.type();
    case Term::Kind::Bound:
        if (t.index() >= binders.size()) return std::nullopt;
        return binders[binders.size() - 1 - t.index()];
    case Term::Kind::Comb: {
        auto f = inferType(t.fun(), binders);
        if (!f || !f->isFun()) return std::nullopt;
        auto a = inferType(t.arg(), binders);
        if (!a || *a != f->domain()) return std::nullopt;
        return f->codomain();
    }
    case Term::Kind::Abs: {
        binders.push_back(t.type());
        auto b = inferType(t.body(), binders);
        binders.pop_back();
        if (!b) return std::nullopt;
        return Type::fun(t.type(), *b);
    }
    }
    return std::nullopt;
}

std::optional<Type> inferType(const Term& t) {
    std::vector<Type> binders;
    return inferType(t, binders);
}

namespace builtin {

bool isReserved(const std::string& name) {
    return name == Eq || name == All || name == Ex || name == And || name == Or || name == Imp ||
           name == Not || name == True || name == False;
}

bool admissible(const std::string& name, const Type& ty) {
    const Type p = Type::prop();
    const Type pp = Type::fun(p, p);
    if (name == True || name == False) return ty == p;
    if (name == Not) return ty == pp;
    if (name == And || name == Or || name == Imp) return ty == Type::fun(p, pp);
    if (name == Eq) {
        if (!ty.isFun()) return false;
        Type a = ty.domain();
        return ty.codomain() == Type::fun(a, p);
    }
    if (name == All || name == Ex) {
        if (!ty.isFun() || ty.codomain() != p) return false;
        Type pred = ty.domain();
        return pred.isFun() && pred.codomain() == p;
    }
    return false;
}

}  // namespace builtin

Term mkTrue() {
    static const Term t = Term::constant(builtin::True, Type::prop());
    return t;
}

Term mkFalse() {
    static const Term t = Term::constant(builtin::False, Type::prop());
    return t;
}

namespace {

const Term& binaryConst(const char* op) {
    static const Type ppp = Type::fun(Type::prop(), Type::fun(Type::prop(), Type::prop()));
    static const Term andC = Term::constant(builtin::And, ppp);
    static const Term orC = Term::constant(builtin::Or, ppp);
    static const Term impC = Term::constant(builtin::Imp, ppp);
    std::string s(op);
    if (s == builtin::And) return andC;
    if (s == builtin::Or) return orC;
    if (s == builtin::Imp) return impC;
    throw std::logic_error("not a binary connective: " + s);
}

}  // namespace

Term mkNot(const Term& p) {
    static const Term notC = Term::constant(builtin::Not, Type::fun(Type::prop(), Type::prop()));
    return Term::comb(notC, p);
}

Term mkAnd(const Term& a, const Term& b) { return Term::comb(Term::comb(binaryConst(builtin::And), a), b); }
Term mkOr(const Term& a, const Term& b) { return Term::comb(Term::comb(binaryConst(builtin::Or), a), b); }
Term mkImp(const Term& a, const Term& b) { return Term::comb(Term::comb(binaryConst(builtin::Imp), a), b); }

Term eqConst(const Type& ty) {
    if (ty.isUniverse()) {
        static const Term eqU = Term::constant(builtin::Eq, Type::fun(Type::universe(), Type::fun(Type::universe(), Type::prop())));
        return eqU;
    }
    if (ty.isProp()) {
        static const Term eqP = Term::constant(builtin::Eq, Type::fun(Type::prop(), Type::fun(Type::prop(), Type::prop())));
        return eqP;
    }
    return Term::constant(builtin::Eq, Type::fun(ty, Type::fun(ty, Type::prop())));
}

Term quantConst(const char* which, const Type& ty) {
    return Term::constant(which, Type::fun(Type::fun(ty, Type::prop()), Type::prop()));
}

Term mkEq(const Term& a, const Term& b, const Type& ty) { return Term::comb(Term::comb(eqConst(ty), a), b); }

Term mkEq(const Term& a, const Term& b) {
    auto ty = inferType(a);
    if (!ty) throw std::logic_error("mkEq: cannot infer type of left operand");
    return mkEq(a, b, *ty);
}

Term mkForall(const std::string& hint, const Type& ty, const Term& body) {
    return Term::comb(quantConst(builtin::All, ty), Term::abs(hint, ty, body));
}

Term mkExists(const std::string& hint, const Type& ty, const Term& body) {
    return Term::comb(quantConst(builtin::Ex, ty), Term::abs(hint, ty, body));
}

bool isConstNamed(const Term& t, const char* name) { return t.isConst() && t.name() == name; }

bool isNeg(const Term& t) { return t.isComb() && isConstNamed(t.fun(), builtin::Not); }
bool isTrue(const Term& t) { return isConstNamed(t, builtin::True); }
bool isFalse(const Term& t) { return isConstNamed(t, builtin::False); }

bool isBinary(const Term& t, const char* op) {
    return t.isComb() && t.fun().isComb() && isConstNamed(t.fun().fun(), op);
}

bool isEq(const Term& t) { return isBinary(t, builtin::Eq); }
bool isForall(const Term& t) { return t.isComb() && isConstNamed(t.fun(), builtin::All); }
bool isExists(const Term& t) { return t.isComb() && isConstNamed(t.fun(), builtin::Ex); }

const Term& lhs(const Term& eq) { return eq.fun().arg(); }
const Term& rhs(const Term& eq) { return eq.arg(); }

Type builtinTypeArg(const Term& c) {
    if (isConstNamed(c, builtin::Eq)) return c.type().domain();
    if (isConstNamed(c, builtin::All) || isConstNamed(c, builtin::Ex)) return c.type().domain().domain();
    throw std::logic_error("builtinTypeArg: not a type-indexed builtin");
}

std::vector<Term> flatten(const Term& t, const char* op) {
    std::vector<Term> out;
    std::function<void(const Term&)> go = [&](const Term& u) {
        if (isBinary(u, op)) {
            go(lhs(u));
            go(rhs(u));
        } else {
            out.push_back(u);
        }
    };
    go(t);
    return out;
}

Term foldRight(const std::vector<Term>& xs, const char* op, const Term& unit) {
    if (xs.empty()) return unit;
    Term acc = xs.back();
    for (auto i = xs.size() - 1; i-- > 0;) acc = Term::comb(Term::comb(binaryConst(op), xs[i]), acc);
    return acc;
}

}  // namespace lcf
