#pragma once

// Concrete syntax. Grammar, loosest binding last:
//
//   type  ::= base ('->' type)?            base ::= 'P' | 'U' | '(' type ')'
//   term  ::= imp
//   imp   ::= or ('->' imp)?
//   or    ::= and ('\/' or)?
//   and   ::= eq ('/\' and)?
//   eq    ::= unary ('=' unary)?              non-associative
//   unary ::= '~' unary | rel
//   rel   ::= app (('in' | 'subseteq') app)?
//   app   ::= atom+
//   atom  ::= IDENT | '(' term ')' | binder
//   binder::= ('forall' | 'exists' | 'fun') (IDENT (':' type)?)+ ('.' | '=>') term
//
// A binder extends as far right as possible. Omitted binder types default
// to U. Unicode aliases: ∀ ∃ λ ¬ ∧ ∨ → ∈ ⊆ ∅ 𝒫 ℙ 𝒰.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lcf/kernel.hpp"

namespace lcf {

struct SourceSpan {
    std::string file;
    int line = 1;
    int column = 1;
    int endLine = 1;
    int endColumn = 1;

    std::string str() const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, const std::string& msg);
    const SourceSpan& span() const { return span_; }
    const std::string& detail() const { return detail_; }

private:
    SourceSpan span_;
    std::string detail_;
};

/// Untyped surface tree, elaborated against a context later.
struct Expr {
    enum class Kind { Ident, App, Not, Infix, Binder };
    Kind kind;
    std::string name;  // identifier, infix operator or binder keyword
    std::vector<std::pair<std::string, std::optional<Type>>> vars;
    std::vector<std::shared_ptr<const Expr>> kids;
    SourceSpan span;
};
using ExprPtr = std::shared_ptr<const Expr>;

Type parseType(const std::string& src, const std::string& file = "<input>");
ExprPtr parseExpr(const std::string& src, const std::string& file = "<input>");
/// Resolves names against ctx, type checks, and reports problems as ParseError.
Term elaborate(const Context& ctx, const ExprPtr& e);
Term parseTerm(const Context& ctx, const std::string& src, const std::string& file = "<input>");

std::string printType(const Type& t);
/// Output parses back (in ctx) to an alpha-equal term when every builtin is
/// fully applied and every quantifier argument is an abstraction.
std::string printTerm(const Context& ctx, const Term& t);
std::string printTerm(const Term& t);

struct ConstDecl {
    std::string name;
    Type type;
};
struct AxiomDecl {
    std::string name;
    ExprPtr prop;
};
/// `let name: c = rhs` declares c and asserts the equation under `name`.
struct LetDecl {
    std::string name;
    std::string constant;
    ExprPtr rhs;
};
struct TheoremDecl {
    enum class Tactic { Taut, Metis };
    std::string name;
    ExprPtr prop;
    Tactic tactic;
    std::vector<std::string> lemmas;
    std::vector<SourceSpan> lemmaSpans;
};

struct Statement {
    std::variant<ConstDecl, AxiomDecl, LetDecl, TheoremDecl> body;
    SourceSpan span;
};

struct TheoryScript {
    std::vector<Statement> statements;
};

/// Theory files: `const NAME : TYPE`, `axiom NAME : TERM`,
/// `let NAME : IDENT = TERM`, `theorem NAME : TERM by taut` and
/// `theorem NAME : TERM by metis [NAME, ...]`. Terms may be wrapped in single
/// quotes. `#` starts a line comment.
TheoryScript parseTheory(const std::string& src, const std::string& file = "<input>");

}  // namespace lcf
