#pragma once

// Propositional reasoning: atom extraction, evaluation under an assignment,
// the truth-table tautology checker, and clause (disjunction) manipulation.

#include <string>
#include <utility>
#include <vector>

#include "lcf/conv.hpp"

namespace lcf {

/// Maximal P-typed subterms whose head is not a propositional connective, in
/// left-to-right first-occurrence order, without duplicates (up to alpha).
std::vector<Term> atoms(const Term& phi);

/// Evaluates the propositional skeleton of a term, replacing atoms using the
/// given theorems |- atom = true / |- atom = false and simplifying with the
/// valuation schemas. Atoms without an equation stay in place.
Conversion evalConv(std::vector<Theorem> assignment);

using Assignment = std::vector<std::pair<Term, bool>>;

struct TautResult {
    enum class Status { Proved, NotTautology, NotPropositional };
    Status status;
    std::optional<Theorem> theorem;
    Assignment countermodel;  // for NotTautology
    std::string message;      // for NotPropositional

    bool proved() const { return status == Status::Proved; }
};

TautResult taut(const Context& ctx, const Term& phi);
/// taut, throwing KernelError unless it proves phi.
Theorem tautThm(const Context& ctx, const Term& phi);

/// Stock propositional lemmas, proved once by taut in the root context.
enum class PropLemma {
    OrIntroL,    // !a b. a -> a \/ b
    OrIntroR,    // !a b. b -> a \/ b
    ExFalso,     // !a b. ~a -> a -> b
    FalseElim,   // !b. false -> b
    PropExt,     // !a b. (a -> b) -> (b -> a) -> (a = b)
    NotImpFalse, // !a. (~a -> false) -> a
    AndElimL,    // !a b. a /\ b -> a
    AndElimR,    // !a b. a /\ b -> b
    AndIntro,    // !a b. a -> b -> a /\ b
    ImpDef,      // !a b. (a -> b) = (~a \/ b)
    IffDef,      // !a b. (a = b) = ((~a \/ b) /\ (~b \/ a))
    NotIffDef,   // !a b. ~(a = b) = ((a \/ b) /\ (~a \/ ~b))
    NotImp,      // !a b. ~(a -> b) = (a /\ ~b)
    ImpTrans,    // !a b c. (a -> b) -> (b -> c) -> (a -> c)
};
const char* propLemmaLabel(PropLemma l);
Term propLemmaStatement(PropLemma l);
/// The lemma, weakened into ctx.
Theorem propLemma(const Context& ctx, PropLemma l);

/// Literals of a right- or left-nested disjunction; `false` gives none.
std::vector<Term> disjuncts(const Term& d);
/// Right-nested disjunction; the empty list gives `false`.
Term mkDisj(const std::vector<Term>& lits);

/// From |- D derives |- R where every literal of D is either a literal of R,
/// `false`, a refuted `~(t = t)`, a flipped equation or negated equation of R,
/// or contradicted by one of `refuters` (|- X refutes the literals ~X, and
/// |- ~X refutes the literal X). Throws KernelError if a literal is stuck.
Theorem disjReshape(const Theorem& d, const Term& r, const std::vector<Theorem>& refuters = {});

/// Right-associates a disjunction and removes alpha-duplicate literals.
Conversion disjNormConv();
/// Removes alpha-duplicate literals (result right-nested).
Conversion nubClauseConv();
/// |- A \/ L, |- B \/ ~L  ==>  |- A' \/ B' where A', B' drop L and ~L; the
/// result is deduplicated and right-nested.
Theorem disjCut(const Theorem& a, const Theorem& b, const Term& lit);

}  // namespace lcf
