#pragma once

#include <random>
#include <string>
#include <vector>

#include "lcf/term.hpp"

namespace lcf::testing {

inline Term atomP(const std::string& n) { return Term::constant(n, Type::prop()); }

/// Random propositional formula over the given atoms, depth at most `depth`.
inline Term randomProp(std::mt19937& rng, const std::vector<Term>& atoms, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
    int k = pick(rng);
    auto sub = [&] { return randomProp(rng, atoms, depth - 1); };
    switch (k) {
    case 0: {
        std::uniform_int_distribution<std::size_t> a(0, atoms.size() - 1);
        return atoms[a(rng)];
    }
    case 1: {
        std::uniform_int_distribution<int> c(0, 9);
        int v = c(rng);
        if (v == 0) return mkTrue();
        if (v == 1) return mkFalse();
        std::uniform_int_distribution<std::size_t> a(0, atoms.size() - 1);
        return atoms[a(rng)];
    }
    case 2: return mkNot(sub());
    case 3: return mkAnd(sub(), sub());
    case 4: return mkOr(sub(), sub());
    case 5: return mkImp(sub(), sub());
    case 6: return mkEq(sub(), sub(), Type::prop());
    default: return mkNot(sub());
    }
}

/// Random well-typed term of type `ty` (U or P or functions over them), using
/// constants f : U -> U, g : U -> U -> U, c : U, r : U -> P and bound
/// variables in scope.
inline Term randomTerm(std::mt19937& rng, const Type& ty, std::vector<Type>& scope, int depth) {
    const Type U = Type::universe(), P = Type::prop();
    std::uniform_int_distribution<int> coin(0, 3);
    if (ty.isFun()) {
        if (depth > 0 && coin(rng) == 0) {
            // beta redex producing a function
            scope.push_back(U);
            Term body = randomTerm(rng, ty, scope, depth - 1);
            scope.pop_back();
            std::vector<Type> s2 = scope;
            return Term::comb(Term::abs("u", U, body), randomTerm(rng, U, s2, depth - 1));
        }
        if (ty == Type::fun(U, U) && coin(rng) == 0) return Term::constant("f", ty);
        if (ty == Type::fun(U, P) && coin(rng) == 0) return Term::constant("r", ty);
        scope.push_back(ty.domain());
        Term body = randomTerm(rng, ty.codomain(), scope, depth - 1);
        scope.pop_back();
        return Term::abs("v", ty.domain(), body);
    }
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t i = 0; i < scope.size(); ++i)
        if (scope[scope.size() - 1 - i] == ty) candidates.push_back(i);
    int k = depth <= 0 ? 0 : std::uniform_int_distribution<int>(0, 4)(rng);
    if (k == 0) {
        if (!candidates.empty() && coin(rng) != 0)
            return Term::bound(candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)]);
        return ty == U ? Term::constant("c", U) : mkTrue();
    }
    if (ty == U) {
        if (k == 1) return Term::comb(randomTerm(rng, Type::fun(U, U), scope, depth - 1), randomTerm(rng, U, scope, depth - 1));
        if (k == 2) {
            Term g = Term::constant("g", Type::fun(U, Type::fun(U, U)));
            return Term::comb(Term::comb(g, randomTerm(rng, U, scope, depth - 1)), randomTerm(rng, U, scope, depth - 1));
        }
        scope.push_back(U);
        Term body = randomTerm(rng, U, scope, depth - 1);
        scope.pop_back();
        return Term::comb(Term::abs("w", U, body), randomTerm(rng, U, scope, depth - 1));
    }
    if (k == 1) return Term::comb(randomTerm(rng, Type::fun(U, P), scope, depth - 1), randomTerm(rng, U, scope, depth - 1));
    if (k == 2) return mkAnd(randomTerm(rng, P, scope, depth - 1), randomTerm(rng, P, scope, depth - 1));
    if (k == 3) {
        scope.push_back(U);
        Term body = randomTerm(rng, P, scope, depth - 1);
        scope.pop_back();
        return mkForall("x", U, body);
    }
    return mkEq(randomTerm(rng, U, scope, depth - 1), randomTerm(rng, U, scope, depth - 1), U);
}

}  // namespace lcf::testing
