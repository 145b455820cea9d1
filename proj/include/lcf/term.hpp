#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcf/type.hpp"

namespace lcf {

struct TermNode;

/// Immutable lambda term. Bound variables are de Bruijn indices (0 is the
/// innermost enclosing binder); there is no free-variable constructor.
class Term {
public:
    enum class Kind { Const, Bound, Comb, Abs };

    static Term constant(std::string name, Type ty);
    static Term bound(std::uint32_t index);
    static Term comb(Term fun, Term arg);
    static Term abs(std::string hint, Type varTy, Term body);

    Kind kind() const;
    bool isConst() const { return kind() == Kind::Const; }
    bool isBound() const { return kind() == Kind::Bound; }
    bool isComb() const { return kind() == Kind::Comb; }
    bool isAbs() const { return kind() == Kind::Abs; }

    /// Const name or Abs display hint.
    const std::string& name() const;
    /// Const type or Abs variable type.
    const Type& type() const;
    std::uint32_t index() const;
    const Term& fun() const;
    const Term& arg() const;
    const Term& body() const;

    /// One more than the largest loose bound index; 0 for closed terms.
    std::uint32_t looseRange() const;
    bool closed() const { return looseRange() == 0; }
    std::size_t hash() const;
    std::size_t size() const;

    const TermNode* get() const { return node_.get(); }
    bool sameNode(const Term& o) const { return node_ == o.node_; }

private:
    explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const TermNode> node_;
};

struct TermNode {
    Term::Kind kind;
    std::string name;
    std::optional<Type> type;
    std::uint32_t index = 0;
    std::optional<Term> fun;  // Comb function
    std::optional<Term> arg;  // Comb argument, Abs body
    std::uint32_t looseRange = 0;
    std::size_t hash = 0;
    std::size_t size = 1;
};

/// Alpha-equivalence: structural equality ignoring binder hints.
bool alphaEq(const Term& a, const Term& b);

struct AlphaEqual {
    bool operator()(const Term& a, const Term& b) const { return alphaEq(a, b); }
};
struct AlphaHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Replaces Bound 0 of `body` by `value` (shifting as needed) and lowers the
/// remaining loose indices by one.
Term instantiate(const Term& body, const Term& value);
/// Shifts every loose bound index >= cutoff by `amount`.
Term shiftLoose(const Term& t, std::int64_t amount, std::uint32_t cutoff = 0);
/// Replaces every occurrence of the constant `name` by the bound variable
/// pointing at a new binder directly enclosing `t`.
Term abstractConst(const Term& t, const std::string& name);
/// Replaces every occurrence of subterm `what` (closed) by `with`.
Term replaceSubterm(const Term& t, const Term& what, const Term& with);

bool occursConst(const Term& t, const std::string& name);
/// Visits constants left to right, each distinct name once.
std::vector<Term> constantsOf(const Term& t);

/// Splits f a1 ... an into (f, [a1..an]).
std::pair<Term, std::vector<Term>> stripComb(const Term& t);
Term listComb(Term head, const std::vector<Term>& args);

/// Type of a term given the types of its enclosing binders (innermost last).
/// Does not consult any context; constants carry their own types.
std::optional<Type> inferType(const Term& t, std::vector<Type>& binders);
std::optional<Type> inferType(const Term& t);

/// Reserved logical constants.
namespace builtin {
inline constexpr const char* Eq = "=";
inline constexpr const char* All = "!";
inline constexpr const char* Ex = "?";
inline constexpr const char* And = "/\\";
inline constexpr const char* Or = "\\/";
inline constexpr const char* Imp = "->";
inline constexpr const char* Not = "~";
inline constexpr const char* True = "true";
inline constexpr const char* False = "false";

bool isReserved(const std::string& name);
/// Checks that a builtin constant is used at one of its admissible types.
bool admissible(const std::string& name, const Type& ty);
}  // namespace builtin

Term mkTrue();
Term mkFalse();
Term mkNot(const Term& p);
Term mkAnd(const Term& a, const Term& b);
Term mkOr(const Term& a, const Term& b);
Term mkImp(const Term& a, const Term& b);
/// a = b at the type of a (inferred; a must be closed or typed by binders).
Term mkEq(const Term& a, const Term& b, const Type& ty);
Term mkEq(const Term& a, const Term& b);
Term mkForall(const std::string& hint, const Type& ty, const Term& body);
Term mkExists(const std::string& hint, const Type& ty, const Term& body);
Term eqConst(const Type& ty);
Term quantConst(const char* which, const Type& ty);

bool isConstNamed(const Term& t, const char* name);
bool isNeg(const Term& t);
bool isTrue(const Term& t);
bool isFalse(const Term& t);
/// Matches `op a b` for one of the binary connectives (or `=` at any type).
bool isBinary(const Term& t, const char* op);
bool isEq(const Term& t);
bool isForall(const Term& t);
bool isExists(const Term& t);
const Term& lhs(const Term& eq);
const Term& rhs(const Term& eq);
/// Type argument of = / ! / ?.
Type builtinTypeArg(const Term& c);

/// Left-to-right flattening of a right- or left-nested binary tree.
std::vector<Term> flatten(const Term& t, const char* op);
/// Right-nested fold; empty list gives `unit`.
Term foldRight(const std::vector<Term>& xs, const char* op, const Term& unit);

}  // namespace lcf
