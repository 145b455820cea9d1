#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcf/kernel.hpp"

namespace lcf {

/// The fixed catalogue of axiom schemas forming the trusted logical base.
enum class SchemaName {
    BoolCases,
    // connective valuations on true/false
    AndTrueL, AndTrueR, AndFalseL, AndFalseR,
    OrTrueL, OrTrue, OrFalseL, OrFalseR,
    ImpTrueL, ImpTrueR, ImpFalseL, ImpFalseR,
    EqTrueL, EqTrueElim, EqFalseL, EqFalseR,
    NotTrue, NotFalse,
    Lem,
    OrElim,
    EqSym,    // [a]
    EqTrans,  // [a]
    // negation normal form
    NotAnd, NotOr, NotNot,
    NotAll,  // [a]
    NotEx,   // [a]
    // prenex, all [a]
    AllAndL, AllAndR, AllOrL, AllOrR, ExAndL, ExAndR, ExOrL, ExOrR,
    // associativity / commutativity / idempotence
    OrAssoc, OrComm, OrIdem, AndAssoc, AndComm, AndIdem,
    OrAndDistribL, OrAndDistribR,
    Skolem,     // [a, b]
    TrivialAll  // [a]
};

struct AxiomSchema {
    SchemaName name;
    std::vector<Type> typeArgs;
};

const char* schemaLabel(SchemaName n);
std::size_t schemaArity(SchemaName n);
/// Every schema in declaration order.
const std::vector<SchemaName>& allSchemas();

/// The closed statement of a schema instance (no memoisation, no theorem).
Term schemaStatement(const AxiomSchema& s);

struct SchemaRequest {
    AxiomSchema schema;
    bool fresh;  // true when this call built a new instance
};

/// Observability hooks for the memo table.
class SchemaStats {
public:
    static std::size_t instances();
    /// Requests recorded since the last `clearLog`.
    static std::vector<SchemaRequest> log();
    static void clearLog();
};

/// Checks every propositional schema against truth-table evaluation.
/// Throws KernelError on the first invalid statement.
void validatePropositionalSchemas();

}  // namespace lcf
