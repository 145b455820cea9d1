#pragma once

// Derived inference rules. Everything here is a composition of kernel rules.

#include <vector>

#include "lcf/kernel.hpp"
#include "lcf/schema.hpp"

namespace lcf {

/// |- a = b  ==>  |- b = a
Theorem sym(const Theorem& th);
/// |- a = b, |- b = c  ==>  |- a = c
Theorem trans(const Theorem& ab, const Theorem& bc);
/// |- true
Theorem truth(const Context& ctx);
/// |- p = true  ==>  |- p
Theorem eqTrueElim(const Theorem& th);
/// |- p  ==>  |- p = true
Theorem eqTrueIntro(const Theorem& th);
/// |- f = g  ==>  |- f x = g x
Theorem apThm(const Theorem& th, const Term& x);
/// |- x = y  ==>  |- f x = f y
Theorem apTerm(const Term& f, const Theorem& th);
/// Congruence through a binary operator: |- a = a', |- b = b'  ==>  |- op a b = op a' b'
Theorem binopCong(const Term& op, const Theorem& l, const Theorem& r);

/// Schema instance, located in ctx.
Theorem axiomOf(const Context& ctx, SchemaName n, std::vector<Type> typeArgs = {});
/// Specialises leading universal quantifiers in order.
Theorem specializeAll(Theorem th, const std::vector<Term>& ts);

/// |- phi  ==>  |- forall x:ty. phi  (x not occurring)
Theorem genVacuous(const Theorem& th, const Type& ty);
/// Leaves the scope opened by introConst, always producing the quantifier
/// over that constant even when it does not occur.
Theorem generalize(const Context& child, const Theorem& th);

/// Context that is the deeper of two on one chain; throws KernelError otherwise.
Context deeper(const Context& a, const Context& b);

}  // namespace lcf
