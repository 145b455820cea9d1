#pragma once

// Moves clauses between kernel theorems and the resolution prover, and
// replays prover certificates as kernel inferences.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcf/cnf.hpp"
#include "lcf/resolution.hpp"

namespace lcf {

class BridgeError : public KernelError {
public:
    using KernelError::KernelError;
};

/// A reconstructed clause disagrees with the certificate node it replays.
class NodeMismatch : public BridgeError {
public:
    NodeMismatch(const std::string& msg, const res::Certificate* n) : BridgeError(msg), node(n) {}
    const res::Certificate* node;
};

/// Prover symbol <-> kernel constant. Equality at U is the prover's "=".
class SymbolTable {
public:
    /// Registers the head constants of a first-order term or formula.
    void registerTerm(const Term& t);
    void add(const Term& constant);
    std::optional<Term> lookup(const std::string& symbol) const;
    std::size_t size() const { return byName_.size(); }

private:
    std::map<std::string, Term> byName_;
};

/// |- !x1 .. xn. l1 \/ .. \/ lm where the i-th binder is prover variable vars[i].
struct ClausePair {
    std::vector<std::int64_t> vars;
    Theorem thm;
};

/// Matrix of a clause pair with bound variables named by `vars`.
res::Clause encodeClause(const ClausePair& cp);
res::FTerm encodeTerm(const Term& t, const std::map<std::string, std::int64_t>& varOf);
res::Literal encodeLiteral(const Term& lit, const std::map<std::string, std::int64_t>& varOf);

Term decodeTerm(const SymbolTable& sym, const std::map<std::int64_t, Term>& varMap, const res::FTerm& t);
Term decodeLiteral(const SymbolTable& sym, const std::map<std::int64_t, Term>& varMap, const res::Literal& l);

/// Numbers the binders of each clause with fresh ids starting at `nextVar`.
std::vector<ClausePair> makeClausePairs(const std::vector<Theorem>& clauses, SymbolTable& sym, std::int64_t& nextVar);

/// Certificate replay. Every step checks that the new clause pair encodes
/// to the clause the prover claimed.
class Reconstructor {
public:
    Reconstructor(Context ctx, SymbolTable sym, std::vector<ClausePair> inputs);

    ClausePair subst(const ClausePair& cp, const res::Subst& theta);
    ClausePair resolve(const ClausePair& a, const ClausePair& b, const res::Literal& lit);
    ClausePair axiom(const res::Clause& c) const;
    ClausePair assume(const res::Literal& atom);
    ClausePair refl(const res::FTerm& x);
    ClausePair equality(const res::Literal& l, const std::vector<std::size_t>& path, const res::FTerm& s,
                        const res::FTerm& t);
    ClausePair removeSym(const ClausePair& cp);
    ClausePair irreflexive(const ClausePair& cp);

    /// Replays the whole tree; the root gives |- false.
    Theorem run(const res::CertPtr& cert);
    ClausePair node(const res::CertPtr& cert);

    const Context& context() const { return ctx_; }

private:
    Context ctx_;
    SymbolTable sym_;
    std::vector<ClausePair> inputs_;
    std::map<const res::Certificate*, ClausePair> memo_;
};

struct MetisOptions {
    res::Limits limits;
};

struct MetisResult {
    enum class Status { Proved, Saturated, LimitReached, NotFirstOrder };
    Status status = Status::Saturated;
    std::optional<Theorem> theorem;
    res::Stats stats;
    std::size_t inputClauses = 0;
    std::string message;
    std::string problem;      // S-expression of the clause set
    std::string certificate;  // S-expression, empty unless refuted

    bool proved() const { return status == Status::Proved; }
};

/// Proves `goal` in ctx from `lemmas` by refuting the clause form of the
/// negated goal together with the lemmas.
MetisResult metis(const Context& ctx, const Term& goal, const std::vector<Theorem>& lemmas,
                  const MetisOptions& opts = {});

}  // namespace lcf
