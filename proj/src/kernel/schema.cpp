#include "lcf/schema.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "internal.hpp"

namespace lcf {

namespace {

// Statements are assembled over named placeholder constants which are then
// abstracted into binders.
Term var(const char* name, const Type& ty) { return Term::constant(name, ty); }

Term bindC(const char* q, const char* name, const Type& ty, const Term& body) {
    return Term::comb(quantConst(q, ty), Term::abs(name, ty, abstractConst(body, name)));
}

Term allC(const char* name, const Type& ty, const Term& body) { return bindC(builtin::All, name, ty, body); }
Term exC(const char* name, const Type& ty, const Term& body) { return bindC(builtin::Ex, name, ty, body); }
Term lamC(const char* name, const Type& ty, const Term& body) {
    return Term::abs(name, ty, abstractConst(body, name));
}

Term app(const Term& f, const Term& a) { return Term::comb(f, a); }
Term app(const Term& f, const Term& a, const Term& b) { return Term::comb(Term::comb(f, a), b); }

Term eqP(const Term& a, const Term& b) { return mkEq(a, b, Type::prop()); }

Term allPQR(int n, const Term& body) {
    const Type P = Type::prop();
    Term t = body;
    if (n >= 3) t = allC("r", P, t);
    if (n >= 2) t = allC("q", P, t);
    return allC("p", P, t);
}

enum class Shape { AndL, AndR, OrL, OrR };

Term prenex(const char* q, Shape shape, const Type& a) {
    const Type P = Type::prop();
    Term p = var("p", Type::fun(a, P)), qv = var("q", P), x = var("x", a);
    Term quant = Term::comb(quantConst(q, a), p);
    auto [lhsT, inner] = [&]() -> std::pair<Term, Term> {
        switch (shape) {
        case Shape::AndL: return {mkAnd(quant, qv), mkAnd(app(p, x), qv)};
        case Shape::AndR: return {mkAnd(qv, quant), mkAnd(qv, app(p, x))};
        case Shape::OrL: return {mkOr(quant, qv), mkOr(app(p, x), qv)};
        case Shape::OrR: break;
        }
        return {mkOr(qv, quant), mkOr(qv, app(p, x))};
    }();
    Term rhsT = Term::comb(quantConst(q, a), lamC("x", a, inner));
    return allC("p", Type::fun(a, P), allC("q", P, eqP(lhsT, rhsT)));
}

Term buildStatement(SchemaName n, const std::vector<Type>& ta) {
    const Type P = Type::prop();
    const Term p = var("p", P), q = var("q", P), r = var("r", P);
    const Term T = mkTrue(), F = mkFalse();
    switch (n) {
    case SchemaName::BoolCases: return allPQR(1, mkOr(eqP(p, T), eqP(p, F)));
    case SchemaName::AndTrueL: return allPQR(1, eqP(mkAnd(T, p), p));
    case SchemaName::AndTrueR: return allPQR(1, eqP(mkAnd(p, T), p));
    case SchemaName::AndFalseL: return allPQR(1, eqP(mkAnd(F, p), F));
    case SchemaName::AndFalseR: return allPQR(1, eqP(mkAnd(p, F), F));
    case SchemaName::OrTrueL: return allPQR(1, eqP(mkOr(T, p), T));
    case SchemaName::OrTrue: return allPQR(1, eqP(mkOr(p, T), T));
    case SchemaName::OrFalseL: return allPQR(1, eqP(mkOr(F, p), p));
    case SchemaName::OrFalseR: return allPQR(1, eqP(mkOr(p, F), p));
    case SchemaName::ImpTrueL: return allPQR(1, eqP(mkImp(T, p), p));
    case SchemaName::ImpTrueR: return allPQR(1, eqP(mkImp(p, T), T));
    case SchemaName::ImpFalseL: return allPQR(1, eqP(mkImp(F, p), T));
    case SchemaName::ImpFalseR: return allPQR(1, eqP(mkImp(p, F), mkNot(p)));
    case SchemaName::EqTrueL: return allPQR(1, eqP(eqP(T, p), p));
    case SchemaName::EqTrueElim: return allPQR(1, eqP(eqP(p, T), p));
    case SchemaName::EqFalseL: return allPQR(1, eqP(eqP(F, p), mkNot(p)));
    case SchemaName::EqFalseR: return allPQR(1, eqP(eqP(p, F), mkNot(p)));
    case SchemaName::NotTrue: return eqP(mkNot(T), F);
    case SchemaName::NotFalse: return eqP(mkNot(F), T);
    case SchemaName::Lem: return allPQR(1, mkOr(p, mkNot(p)));
    case SchemaName::OrElim:
        return allPQR(3, mkImp(mkOr(p, q), mkImp(mkImp(p, r), mkImp(mkImp(q, r), r))));
    case SchemaName::EqSym: {
        Term x = var("x", ta[0]), y = var("y", ta[0]);
        return allC("x", ta[0], allC("y", ta[0], eqP(mkEq(x, y, ta[0]), mkEq(y, x, ta[0]))));
    }
    case SchemaName::EqTrans: {
        Term x = var("x", ta[0]), y = var("y", ta[0]), z = var("z", ta[0]);
        Term body = mkImp(mkEq(x, y, ta[0]), mkImp(mkEq(y, z, ta[0]), mkEq(x, z, ta[0])));
        return allC("x", ta[0], allC("y", ta[0], allC("z", ta[0], body)));
    }
    case SchemaName::NotAnd: return allPQR(2, eqP(mkNot(mkAnd(p, q)), mkOr(mkNot(p), mkNot(q))));
    case SchemaName::NotOr: return allPQR(2, eqP(mkNot(mkOr(p, q)), mkAnd(mkNot(p), mkNot(q))));
    case SchemaName::NotNot: return allPQR(1, eqP(mkNot(mkNot(p)), p));
    case SchemaName::NotAll:
    case SchemaName::NotEx: {
        const Type& a = ta[0];
        bool all = n == SchemaName::NotAll;
        Term pr = var("p", Type::fun(a, P)), x = var("x", a);
        Term lhsT = mkNot(Term::comb(quantConst(all ? builtin::All : builtin::Ex, a), pr));
        Term rhsT = Term::comb(quantConst(all ? builtin::Ex : builtin::All, a), lamC("x", a, mkNot(app(pr, x))));
        return allC("p", Type::fun(a, P), eqP(lhsT, rhsT));
    }
    case SchemaName::AllAndL: return prenex(builtin::All, Shape::AndL, ta[0]);
    case SchemaName::AllAndR: return prenex(builtin::All, Shape::AndR, ta[0]);
    case SchemaName::AllOrL: return prenex(builtin::All, Shape::OrL, ta[0]);
    case SchemaName::AllOrR: return prenex(builtin::All, Shape::OrR, ta[0]);
    case SchemaName::ExAndL: return prenex(builtin::Ex, Shape::AndL, ta[0]);
    case SchemaName::ExAndR: return prenex(builtin::Ex, Shape::AndR, ta[0]);
    case SchemaName::ExOrL: return prenex(builtin::Ex, Shape::OrL, ta[0]);
    case SchemaName::ExOrR: return prenex(builtin::Ex, Shape::OrR, ta[0]);
    case SchemaName::OrAssoc: return allPQR(3, eqP(mkOr(mkOr(p, q), r), mkOr(p, mkOr(q, r))));
    case SchemaName::OrComm: return allPQR(2, eqP(mkOr(p, q), mkOr(q, p)));
    case SchemaName::OrIdem: return allPQR(1, eqP(mkOr(p, p), p));
    case SchemaName::AndAssoc: return allPQR(3, eqP(mkAnd(mkAnd(p, q), r), mkAnd(p, mkAnd(q, r))));
    case SchemaName::AndComm: return allPQR(2, eqP(mkAnd(p, q), mkAnd(q, p)));
    case SchemaName::AndIdem: return allPQR(1, eqP(mkAnd(p, p), p));
    case SchemaName::OrAndDistribL:
        return allPQR(3, eqP(mkOr(p, mkAnd(q, r)), mkAnd(mkOr(p, q), mkOr(p, r))));
    case SchemaName::OrAndDistribR:
        return allPQR(3, eqP(mkOr(mkAnd(q, r), p), mkAnd(mkOr(q, p), mkOr(r, p))));
    case SchemaName::Skolem: {
        const Type &a = ta[0], &b = ta[1];
        Type pTy = Type::fun(a, Type::fun(b, P));
        Term pr = var("p", pTy), x = var("x", a), y = var("y", b), f = var("f", Type::fun(a, b));
        Term lhsT = allC("x", a, exC("y", b, app(pr, x, y)));
        Term rhsT = exC("f", Type::fun(a, b), allC("x", a, app(pr, x, app(f, x))));
        return allC("p", pTy, eqP(lhsT, rhsT));
    }
    case SchemaName::TrivialAll:
        return allC("q", P, eqP(Term::comb(quantConst(builtin::All, ta[0]), Term::abs("x", ta[0], q)), q));
    }
    throw KernelError("unknown schema");
}

std::string memoKey(const AxiomSchema& s) {
    std::string k = schemaLabel(s.name);
    for (const auto& t : s.typeArgs) k += "|" + t.str();
    return k;
}

struct Memo {
    std::shared_mutex mutex;
    std::map<std::string, Term> table;
    std::mutex logMutex;
    std::vector<SchemaRequest> log;
};

Memo& memo() {
    static Memo m;
    return m;
}

// Truth-table evaluation of a closed propositional matrix under binders.
bool evalProp(const Term& t, std::vector<bool>& env) {
    if (t.isBound()) return env[env.size() - 1 - t.index()];
    if (isTrue(t)) return true;
    if (isFalse(t)) return false;
    if (isNeg(t)) return !evalProp(t.arg(), env);
    if (isBinary(t, builtin::And)) return evalProp(lhs(t), env) && evalProp(rhs(t), env);
    if (isBinary(t, builtin::Or)) return evalProp(lhs(t), env) || evalProp(rhs(t), env);
    if (isBinary(t, builtin::Imp)) return !evalProp(lhs(t), env) || evalProp(rhs(t), env);
    if (isEq(t) && builtinTypeArg(t.fun().fun()).isProp()) return evalProp(lhs(t), env) == evalProp(rhs(t), env);
    throw KernelError("non-propositional subterm in schema");
}

bool validUnder(const Term& t, std::vector<bool>& env) {
    if (isForall(t) && builtinTypeArg(t.fun()).isProp() && t.arg().isAbs()) {
        for (bool v : {false, true}) {
            env.push_back(v);
            bool ok = validUnder(t.arg().body(), env);
            env.pop_back();
            if (!ok) return false;
        }
        return true;
    }
    return evalProp(t, env);
}

}  // namespace

const char* schemaLabel(SchemaName n) {
    switch (n) {
    case SchemaName::BoolCases: return "BoolCases";
    case SchemaName::AndTrueL: return "AndTrueL";
    case SchemaName::AndTrueR: return "AndTrueR";
    case SchemaName::AndFalseL: return "AndFalseL";
    case SchemaName::AndFalseR: return "AndFalseR";
    case SchemaName::OrTrueL: return "OrTrueL";
    case SchemaName::OrTrue: return "OrTrue";
    case SchemaName::OrFalseL: return "OrFalseL";
    case SchemaName::OrFalseR: return "OrFalseR";
    case SchemaName::ImpTrueL: return "ImpTrueL";
    case SchemaName::ImpTrueR: return "ImpTrueR";
    case SchemaName::ImpFalseL: return "ImpFalseL";
    case SchemaName::ImpFalseR: return "ImpFalseR";
    case SchemaName::EqTrueL: return "EqTrueL";
    case SchemaName::EqTrueElim: return "EqTrueElim";
    case SchemaName::EqFalseL: return "EqFalseL";
    case SchemaName::EqFalseR: return "EqFalseR";
    case SchemaName::NotTrue: return "NotTrue";
    case SchemaName::NotFalse: return "NotFalse";
    case SchemaName::Lem: return "Lem";
    case SchemaName::OrElim: return "OrElim";
    case SchemaName::EqSym: return "EqSym";
    case SchemaName::EqTrans: return "EqTrans";
    case SchemaName::NotAnd: return "NotAnd";
    case SchemaName::NotOr: return "NotOr";
    case SchemaName::NotNot: return "NotNot";
    case SchemaName::NotAll: return "NotAll";
    case SchemaName::NotEx: return "NotEx";
    case SchemaName::AllAndL: return "AllAndL";
    case SchemaName::AllAndR: return "AllAndR";
    case SchemaName::AllOrL: return "AllOrL";
    case SchemaName::AllOrR: return "AllOrR";
    case SchemaName::ExAndL: return "ExAndL";
    case SchemaName::ExAndR: return "ExAndR";
    case SchemaName::ExOrL: return "ExOrL";
    case SchemaName::ExOrR: return "ExOrR";
    case SchemaName::OrAssoc: return "OrAssoc";
    case SchemaName::OrComm: return "OrComm";
    case SchemaName::OrIdem: return "OrIdem";
    case SchemaName::AndAssoc: return "AndAssoc";
    case SchemaName::AndComm: return "AndComm";
    case SchemaName::AndIdem: return "AndIdem";
    case SchemaName::OrAndDistribL: return "OrAndDistribL";
    case SchemaName::OrAndDistribR: return "OrAndDistribR";
    case SchemaName::Skolem: return "Skolem";
    case SchemaName::TrivialAll: return "TrivialAll";
    }
    return "?";
}

std::size_t schemaArity(SchemaName n) {
    switch (n) {
    case SchemaName::EqSym:
    case SchemaName::EqTrans:
    case SchemaName::NotAll:
    case SchemaName::NotEx:
    case SchemaName::AllAndL:
    case SchemaName::AllAndR:
    case SchemaName::AllOrL:
    case SchemaName::AllOrR:
    case SchemaName::ExAndL:
    case SchemaName::ExAndR:
    case SchemaName::ExOrL:
    case SchemaName::ExOrR:
    case SchemaName::TrivialAll:
        return 1;
    case SchemaName::Skolem:
        return 2;
    default:
        return 0;
    }
}

const std::vector<SchemaName>& allSchemas() {
    static const std::vector<SchemaName> all = [] {
        std::vector<SchemaName> v;
        for (int i = 0; i <= static_cast<int>(SchemaName::TrivialAll); ++i) v.push_back(static_cast<SchemaName>(i));
        return v;
    }();
    return all;
}

Term schemaStatement(const AxiomSchema& s) {
    if (s.typeArgs.size() != schemaArity(s.name))
        throw KernelError(std::string("schema ") + schemaLabel(s.name) + " expects " +
                          std::to_string(schemaArity(s.name)) + " type argument(s)");
    return buildStatement(s.name, s.typeArgs);
}

Theorem schemaAxiom(const Context& ctx, const AxiomSchema& s) {
    Memo& m = memo();
    std::string key = memoKey(s);
    std::optional<Term> stmt;
    {
        std::shared_lock lock(m.mutex);
        auto it = m.table.find(key);
        if (it != m.table.end()) stmt = it->second;
    }
    bool fresh = false;
    if (!stmt) {
        Term built = schemaStatement(s);
        std::unique_lock lock(m.mutex);
        auto [it, inserted] = m.table.emplace(key, built);
        fresh = inserted;
        stmt = it->second;
    }
    {
        std::lock_guard lock(m.logMutex);
        m.log.push_back({s, fresh});
    }
    return KernelAccess::theorem(ctx, *stmt);
}

std::size_t SchemaStats::instances() {
    std::shared_lock lock(memo().mutex);
    return memo().table.size();
}

std::vector<SchemaRequest> SchemaStats::log() {
    std::lock_guard lock(memo().logMutex);
    return memo().log;
}

void SchemaStats::clearLog() {
    std::lock_guard lock(memo().logMutex);
    memo().log.clear();
}

void validatePropositionalSchemas() {
    for (SchemaName n : allSchemas()) {
        if (schemaArity(n) != 0) continue;
        std::vector<bool> env;
        if (!validUnder(schemaStatement({n, {}}), env))
            throw KernelError(std::string("schema ") + schemaLabel(n) + " is not a tautology");
    }
}

}  // namespace lcf
