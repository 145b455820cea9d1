#pragma once

// The trusted core. Theorem values can only be created by the functions
// declared in this header; every derived rule elsewhere goes through them.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "lcf/term.hpp"
#include "lcf/type.hpp"

namespace lcf {

class KernelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TypeError : public KernelError {
public:
    using KernelError::KernelError;
};

struct ContextNode;

/// A scope in a chain of scopes. Each link introduces one entry: a constant
/// (local or theory-level), a local assumption, or a theory axiom.
class Context {
public:
    enum class Entry { Root, Constant, Assumption, Axiom };

    /// The shared empty root; every context descends from it.
    static Context root();

    Entry entry() const;
    std::optional<Context> parent() const;
    std::size_t depth() const;
    std::uint64_t freshCounter() const;

    /// Declared type of a (non-builtin) constant visible here.
    std::optional<Type> lookup(const std::string& name) const;
    bool hasAxiom(const std::string& name) const;

    /// True when `this` is `other` or one of its ancestors.
    bool isAncestorOf(const Context& other) const;

    // Entry data (meaningful for the corresponding entry kinds).
    const std::string& entryName() const;
    std::optional<Term> entryConst() const;
    std::optional<Term> entryProp() const;
    bool entryChosen() const;
    bool entryTheoryLevel() const;

    friend bool operator==(const Context& a, const Context& b) { return a.node_ == b.node_; }
    friend bool operator!=(const Context& a, const Context& b) { return !(a == b); }

private:
    friend struct KernelAccess;
    explicit Context(std::shared_ptr<const ContextNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const ContextNode> node_;
};

/// A proposition certified in a context.
class Theorem {
public:
    const Context& ctx() const { return ctx_; }
    const Term& prop() const { return prop_; }
    /// Same underlying proposition node (not merely alpha-equal).
    bool identical(const Theorem& o) const { return ctx_ == o.ctx_ && prop_.sameNode(o.prop_); }

private:
    friend struct KernelAccess;
    Theorem(Context c, Term p) : ctx_(std::move(c)), prop_(std::move(p)) {}
    Context ctx_;
    Term prop_;
};

Type typeOf(const Context& ctx, const Term& t);

/// Beta-eta-long normal form; pure, exposed for tests and printing.
Term normalForm(const Term& t);

Theorem reflexive(const Context& ctx, const Term& t);
/// |- f = g, |- x = y  ==>  |- f x = g y
Theorem combine(const Theorem& funs, const Theorem& args);
/// |- !x. s x = t x  ==>  |- (\x. s x) = (\x. t x)
Theorem abstract(const Theorem& th);
/// |- t = nf(t)
Theorem normalize(const Context& ctx, const Term& t);
Theorem eqMP(const Theorem& eq, const Theorem& th);
Theorem mp(const Theorem& imp, const Theorem& th);
/// Re-homes a theorem into a descendant of its context.
Theorem weaken(const Theorem& th, const Context& ctx);

std::pair<Context, Theorem> assume(const Context& ctx, const Term& prop);
std::pair<Context, Term> introConst(const Context& ctx, const std::string& hint, const Type& ty);
Theorem specialize(const Theorem& th, const Term& t);
/// Discharges every scope from th.ctx() up to and including `child` into
/// child's parent: assumptions become antecedents (outermost first), then
/// constants that occur are quantified innermost-first, chosen ones with ?.
Theorem lift(const Context& child, const Theorem& th);
std::tuple<Context, Term, Theorem> choose(const Context& ctx, const Theorem& th, const std::string& hint);

// Theory-level extension; refused below any local scope.
Context declareConst(const Context& ctx, const std::string& name, const Type& ty);
Theorem loadAxiom(const Context& ctx, const std::string& name, const Term& prop);

std::optional<std::pair<Term, Term>> destComb(const Term& t);
/// On an abstraction: a child context with a fresh constant c, c, and the
/// body instantiated at c.
std::optional<std::tuple<Context, Term, Term>> destAbs(const Context& ctx, const Term& t);

/// Strips a trailing `$N` freshness suffix.
std::string baseName(const std::string& name);

struct AxiomSchema;
Theorem schemaAxiom(const Context& ctx, const AxiomSchema& s);

}  // namespace lcf
