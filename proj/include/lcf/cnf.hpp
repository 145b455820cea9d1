#pragma once

// Clausal normal form: each pass is a conversion, the pipeline turns a
// formula into universally quantified clause theorems.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcf/prop.hpp"

namespace lcf {

class NotFirstOrder : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// True when the term is a first-order formula: connectives, quantifiers over
/// U, and atoms built from constants applied to U-typed terms.
bool isFirstOrder(const Term& t);

/// Beta-eta normalises; fails when the result is still not first-order.
Conversion firstOrderConv();
/// a -> b  to  ~a \/ b;  a = b (on P)  to  (~a \/ b) /\ (~b \/ a).
Conversion elimConnConv();
/// Pushes negations to the atoms and removes double negations.
Conversion nnfConv();
/// Pulls quantifiers to the front, left to right.
Conversion prenexConv();
/// Distributes \/ over /\ in the matrix.
Conversion cnfMatrixConv();

/// Reorders the leading n universal quantifiers: order[k] is the original
/// position of the k-th binder in the result.
Theorem reorderForalls(const Theorem& th, const std::vector<std::size_t>& order);

/// Removes every existential quantifier of a prenex theorem, introducing
/// Skolem constants named sk$N. The Skolem function takes the preceding
/// universal variables innermost first.
std::pair<Context, Theorem> skolemize(const Context& ctx, const Theorem& th);

struct CnfOutput {
    Context finalCtx;
    std::vector<Theorem> clauses;
    std::vector<std::pair<std::string, Theorem>> trace;  // per-pass equations
    Theorem composite;                                    // |- phi = phi'
};

/// Assumes phi and converts it to clauses. Throws NotFirstOrder.
CnfOutput toClauses(const Context& ctx, const Term& phi);
/// Same for a theorem; clauses live in an extension of th's context.
CnfOutput toClauses(const Theorem& th);

}  // namespace lcf
