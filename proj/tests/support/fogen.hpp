#pragma once

// Random closed first-order formulas over a small signature.

#include <random>
#include <string>
#include <vector>

#include "lcf/kernel.hpp"

namespace lcf::testing {

/// c : U, f : U -> U, r s : U -> P, R : U -> U -> P, a : P
inline Context foContext() {
    const Type U = Type::universe(), P = Type::prop();
    Context c = Context::root();
    c = declareConst(c, "a", P);
    c = declareConst(c, "c", U);
    c = declareConst(c, "f", Type::fun(U, U));
    c = declareConst(c, "r", Type::fun(U, P));
    c = declareConst(c, "s", Type::fun(U, P));
    return declareConst(c, "R", Type::curried({U, U}, P));
}

inline std::vector<Term> foConstants() {
    const Type U = Type::universe(), P = Type::prop();
    return {Term::constant("a", P), Term::constant("c", U), Term::constant("f", Type::fun(U, U)),
            Term::constant("r", Type::fun(U, P)), Term::constant("s", Type::fun(U, P)),
            Term::constant("R", Type::curried({U, U}, P))};
}

struct FoGen {
    std::mt19937& rng;
    bool useF = true;
    int maxQuantifiers = 3;
    int quantifiers = 0;

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    Term term(std::uint32_t bound, int depth) {
        const Type U = Type::universe();
        int k = pick(useF && depth > 0 ? 3 : 2);
        if (k == 0 || bound == 0) {
            if (bound > 0 && pick(2) == 0) return Term::bound(static_cast<std::uint32_t>(pick(static_cast<int>(bound))));
            return Term::constant("c", U);
        }
        if (k == 1) return Term::bound(static_cast<std::uint32_t>(pick(static_cast<int>(bound))));
        return Term::comb(Term::constant("f", Type::fun(U, U)), term(bound, depth - 1));
    }

    Term atom(std::uint32_t bound) {
        const Type U = Type::universe(), P = Type::prop();
        switch (pick(5)) {
        case 0: return Term::comb(Term::constant("r", Type::fun(U, P)), term(bound, 1));
        case 1: return Term::comb(Term::constant("s", Type::fun(U, P)), term(bound, 1));
        case 2: return Term::comb(Term::comb(Term::constant("R", Type::curried({U, U}, P)), term(bound, 1)), term(bound, 1));
        case 3: return mkEq(term(bound, 1), term(bound, 1), U);
        default: return Term::constant("a", P);
        }
    }

    Term formula(std::uint32_t bound, int depth) {
        const Type U = Type::universe(), P = Type::prop();
        if (depth <= 0) return atom(bound);
        switch (pick(9)) {
        case 0: return atom(bound);
        case 1: return mkNot(formula(bound, depth - 1));
        case 2: return mkAnd(formula(bound, depth - 1), formula(bound, depth - 1));
        case 3: return mkOr(formula(bound, depth - 1), formula(bound, depth - 1));
        case 4: return mkImp(formula(bound, depth - 1), formula(bound, depth - 1));
        case 5: return mkEq(formula(bound, depth - 1), formula(bound, depth - 1), P);
        default:
            if (quantifiers >= maxQuantifiers) return atom(bound);
            ++quantifiers;
            std::string hint = "x" + std::to_string(bound);
            Term body = formula(bound + 1, depth - 1);
            return pick(2) == 0 ? mkForall(hint, U, body) : mkExists(hint, U, body);
        }
    }
};

}  // namespace lcf::testing
