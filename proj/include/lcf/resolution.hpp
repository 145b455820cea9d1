#pragma once

// Untyped first-order clause logic and a given-clause resolution prover that
// records its refutations as certificates over eight rules.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lcf::res {

/// Predicate symbol of equality.
inline constexpr const char* EqSymbol = "=";

struct FTerm {
    std::int64_t var = -1;  // >= 0 for a variable
    std::string fn;
    std::vector<FTerm> args;

    static FTerm mkVar(std::int64_t id) { return FTerm{id, {}, {}}; }
    static FTerm mkFn(std::string f, std::vector<FTerm> as = {}) { return FTerm{-1, std::move(f), std::move(as)}; }
    bool isVar() const { return var >= 0; }
    friend bool operator==(const FTerm&, const FTerm&) = default;
};
/// Structural total order: variables first (by id), then by symbol, arity, arguments.
int compare(const FTerm& a, const FTerm& b);
std::size_t weight(const FTerm& t);
bool occurs(std::int64_t v, const FTerm& t);

struct Literal {
    bool positive = true;
    std::string pred;
    std::vector<FTerm> args;

    bool isEq() const { return pred == EqSymbol && args.size() == 2; }
    Literal negated() const { return Literal{!positive, pred, args}; }
    friend bool operator==(const Literal&, const Literal&) = default;
};
int compare(const Literal& a, const Literal& b);

/// Canonically ordered, duplicate-free literal list.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Literal> lits);
    const std::vector<Literal>& literals() const { return lits_; }
    bool empty() const { return lits_.empty(); }
    std::size_t size() const { return lits_.size(); }
    bool contains(const Literal& l) const;
    std::size_t weight() const;
    std::vector<std::int64_t> variables() const;  // first-occurrence order
    friend bool operator==(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> lits_;
};

using Subst = std::map<std::int64_t, FTerm>;

FTerm applySubst(const Subst& s, const FTerm& t);
Literal applySubst(const Subst& s, const Literal& l);
Clause applySubst(const Subst& s, const Clause& c);

/// Most general unifier (Robinson, with occurs check), fully applied.
std::optional<Subst> unify(const FTerm& a, const FTerm& b);
/// Unifies two atoms (same predicate and arity), ignoring polarity.
std::optional<Subst> unifyAtoms(const Literal& a, const Literal& b);

/// One-way matcher: s with applySubst(s, pattern) == target. Variables of
/// `target` are treated as constants.
std::optional<Subst> match(const FTerm& pattern, const FTerm& target);
std::optional<Subst> matchAtoms(const Literal& pattern, const Literal& target);
/// Some instance of `c` is a subset of `d`, with c no longer than d.
bool subsumes(const Clause& c, const Clause& d);

/// Subterm of a literal's atom: path[0] picks the argument, the rest descend.
std::optional<FTerm> subtermAt(const Literal& l, const std::vector<std::size_t>& path);
Literal replaceAt(const Literal& l, const std::vector<std::size_t>& path, const FTerm& t);

/// Drops literals duplicated up to symmetry of equality, keeping the first.
Clause removeSym(const Clause& c);
/// Drops literals of the form x != x.
Clause removeIrreflexive(const Clause& c);
/// Resolvent (C1 - {L}) u (C2 - {~L}).
Clause resolvent(const Clause& c1, const Clause& c2, const Literal& l);
/// {~(s = t), ~L, L[t at path]}
Clause equalityClause(const Literal& l, const std::vector<std::size_t>& path, const FTerm& s, const FTerm& t);

enum class Rule { Axiom, Assume, Refl, Equality, RemoveSym, Irreflexive, Subst, Resolve };
const char* ruleName(Rule r);

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

struct Certificate {
    Rule rule;
    Clause clause;
    std::vector<CertPtr> children;
    // rule data
    std::optional<Literal> literal;  // Assume (atom), Equality (L), Resolve (L)
    std::optional<FTerm> term;       // Refl
    std::vector<std::size_t> path;   // Equality
    std::optional<FTerm> lhs, rhs;   // Equality s, t
    Subst subst;                     // Subst
};

struct Violation {
    const Certificate* node;
    std::string message;
};

/// Replays every side condition; returns the first violation found.
std::optional<Violation> checkCertificate(const std::vector<Clause>& problem, const CertPtr& cert);
std::size_t certificateSize(const CertPtr& cert);

struct Limits {
    std::size_t maxGenerated = 200000;
    std::size_t maxWeight = 40;
};

struct Stats {
    std::size_t generated = 0;
    std::size_t given = 0;
    std::size_t active = 0;
};

struct Refuted {
    CertPtr certificate;
};
struct Saturated {};
struct LimitReached {};

struct ProverResult {
    std::variant<Refuted, Saturated, LimitReached> outcome;
    Stats stats;

    bool refuted() const { return std::holds_alternative<Refuted>(outcome); }
    const CertPtr& certificate() const { return std::get<Refuted>(outcome).certificate; }
};

ProverResult prove(const std::vector<Clause>& problem, const Limits& limits = {});

/// Inferences of `given` against each clause of `active` (given itself included);
/// `nextVar` is the fresh-variable counter shared by the run.
std::vector<CertPtr> generateInferences(const CertPtr& given, const std::vector<CertPtr>& active, std::int64_t& nextVar);

// S-expressions in the theta form.
std::string toSexpr(const FTerm& t);
std::string toSexpr(const Literal& l);
std::string toSexpr(const Clause& c);
std::string problemToSexpr(const std::vector<Clause>& problem);
std::string certToSexpr(const CertPtr& cert);

class SexprError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
std::vector<Clause> parseProblem(const std::string& text);
CertPtr parseCertificate(const std::string& text);

}  // namespace lcf::res
