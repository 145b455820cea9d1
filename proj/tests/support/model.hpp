#pragma once

// Brute-force semantics of closed terms in a finite standard model. Every
// value is an index into the enumeration of its type; a function value is a
// base-|cod| numeral whose digit x is the image of x.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcf/term.hpp"

namespace lcf::testing {

class FiniteModel {
public:
    explicit FiniteModel(std::uint64_t universe = 2) : universe_(universe) {}

    std::map<std::string, std::uint64_t> interp;

    std::uint64_t size(const Type& t) const {
        if (t.isProp()) return 2;
        if (t.isUniverse()) return universe_;
        std::uint64_t d = size(t.domain()), c = size(t.codomain()), r = 1;
        for (std::uint64_t i = 0; i < d; ++i) {
            r *= c;
            if (r > (1u << 22)) throw std::runtime_error("type too large for the finite model");
        }
        return r;
    }

    std::uint64_t apply(const Type& fty, std::uint64_t f, std::uint64_t x) const {
        std::uint64_t c = size(fty.codomain());
        for (std::uint64_t i = 0; i < x; ++i) f /= c;
        return f % c;
    }

    std::uint64_t tabulate(const Type& fty, const std::function<std::uint64_t(std::uint64_t)>& g) const {
        std::uint64_t d = size(fty.domain()), c = size(fty.codomain()), r = 0, w = 1;
        for (std::uint64_t x = 0; x < d; ++x) {
            r += g(x) * w;
            w *= c;
        }
        return r;
    }

    std::uint64_t eval(const Term& t) const {
        std::vector<std::uint64_t> env;
        std::vector<Type> tys;
        return go(t, env, tys);
    }

    bool holds(const Term& t) const { return eval(t) == 1; }

private:
    std::uint64_t builtinValue(const Term& c) const {
        const std::string& n = c.name();
        const Type& ty = c.type();
        auto b = [](bool v) { return std::uint64_t(v ? 1 : 0); };
        if (n == builtin::True) return 1;
        if (n == builtin::False) return 0;
        if (n == builtin::Not) return tabulate(ty, [&](auto x) { return b(x == 0); });
        auto binop = [&](auto op) {
            return tabulate(ty, [&](auto x) { return tabulate(ty.codomain(), [&](auto y) { return b(op(x == 1, y == 1)); }); });
        };
        if (n == builtin::And) return binop([](bool x, bool y) { return x && y; });
        if (n == builtin::Or) return binop([](bool x, bool y) { return x || y; });
        if (n == builtin::Imp) return binop([](bool x, bool y) { return !x || y; });
        if (n == builtin::Eq)
            return tabulate(ty, [&](auto x) { return tabulate(ty.codomain(), [&](auto y) { return b(x == y); }); });
        if (n == builtin::All || n == builtin::Ex) {
            Type pred = ty.domain();
            std::uint64_t d = size(pred.domain());
            bool all = n == builtin::All;
            return tabulate(ty, [&](auto p) {
                for (std::uint64_t x = 0; x < d; ++x) {
                    bool v = apply(pred, p, x) == 1;
                    if (all && !v) return std::uint64_t(0);
                    if (!all && v) return std::uint64_t(1);
                }
                return b(all);
            });
        }
        throw std::runtime_error("unknown builtin " + n);
    }

    std::uint64_t go(const Term& t, std::vector<std::uint64_t>& env, std::vector<Type>& tys) const {
        switch (t.kind()) {
        case Term::Kind::Bound: return env[env.size() - 1 - t.index()];
        case Term::Kind::Const: {
            if (builtin::isReserved(t.name())) return builtinValue(t);
            auto it = interp.find(t.name());
            if (it == interp.end()) throw std::runtime_error("uninterpreted constant " + t.name());
            return it->second;
        }
        case Term::Kind::Comb: {
            const Term* head = &t;
            while (head->isComb()) head = &head->fun();
            if (head->isConst() && (head->name() == builtin::All || head->name() == builtin::Ex) &&
                t.fun().sameNode(*head)) {
                Type pred = head->type().domain();
                std::uint64_t p = go(t.arg(), env, tys), d = size(pred.domain());
                bool all = head->name() == builtin::All;
                for (std::uint64_t x = 0; x < d; ++x) {
                    bool v = apply(pred, p, x) == 1;
                    if (all && !v) return 0;
                    if (!all && v) return 1;
                }
                return all ? 1 : 0;
            }
            std::vector<Type> scratch = tys;
            auto fty = inferType(t.fun(), scratch);
            if (!fty) throw std::runtime_error("ill-typed term");
            return apply(*fty, go(t.fun(), env, tys), go(t.arg(), env, tys));
        }
        case Term::Kind::Abs: {
            std::vector<Type> scratch = tys;
            auto fty = inferType(t, scratch);
            if (!fty) throw std::runtime_error("ill-typed term");
            return tabulate(*fty, [&](std::uint64_t x) {
                env.push_back(x);
                tys.push_back(t.type());
                std::uint64_t v = go(t.body(), env, tys);
                env.pop_back();
                tys.pop_back();
                return v;
            });
        }
        }
        return 0;
    }

    std::uint64_t universe_;
};

/// Calls f for every interpretation of the given constants.
inline void forEachInterpretation(FiniteModel& m, const std::vector<Term>& consts,
                                  const std::function<void()>& f, std::size_t i = 0) {
    if (i == consts.size()) {
        f();
        return;
    }
    std::uint64_t n = m.size(consts[i].type());
    for (std::uint64_t v = 0; v < n; ++v) {
        m.interp[consts[i].name()] = v;
        forEachInterpretation(m, consts, f, i + 1);
    }
}

}  // namespace lcf::testing
