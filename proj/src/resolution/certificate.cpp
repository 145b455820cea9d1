#include <algorithm>
#include <set>

#include "lcf/resolution.hpp"

namespace lcf::res {

namespace {

std::optional<std::string> checkNode(const std::vector<Clause>& problem, const Certificate& n) {
    auto arity = [&](std::size_t k) -> std::optional<std::string> {
        if (n.children.size() != k) return std::string(ruleName(n.rule)) + ": wrong number of premises";
        for (const auto& c : n.children)
            if (!c) return std::string(ruleName(n.rule)) + ": missing premise";
        return std::nullopt;
    };
    if (n.rule == Rule::Resolve) {
        if (auto e = arity(2)) return e;
    } else if (n.rule == Rule::RemoveSym || n.rule == Rule::Irreflexive || n.rule == Rule::Subst) {
        if (auto e = arity(1)) return e;
    } else if (auto e = arity(0)) {
        return e;
    }
    switch (n.rule) {
    case Rule::Axiom:
        if (std::find(problem.begin(), problem.end(), n.clause) == problem.end()) return "axiom: clause not in the problem";
        return std::nullopt;
    case Rule::Assume:
        if (!n.literal || !n.literal->positive) return "assume: missing atom";
        if (n.clause != Clause({*n.literal, n.literal->negated()})) return "assume: clause is not {phi, ~phi}";
        return std::nullopt;
    case Rule::Refl:
        if (!n.term) return "refl: missing term";
        if (n.clause != Clause({Literal{true, EqSymbol, {*n.term, *n.term}}})) return "refl: clause is not {x = x}";
        return std::nullopt;
    case Rule::Equality: {
        if (!n.literal || !n.lhs || !n.rhs) return "equality: missing data";
        auto sub = subtermAt(*n.literal, n.path);
        if (!sub || !(*sub == *n.lhs)) return "equality: path does not lead to the rewritten term";
        if (n.clause != equalityClause(*n.literal, n.path, *n.lhs, *n.rhs)) return "equality: wrong clause";
        return std::nullopt;
    }
    case Rule::RemoveSym:
        if (n.clause != removeSym(n.children[0]->clause)) return "removeSym: wrong clause";
        return std::nullopt;
    case Rule::Irreflexive:
        if (n.clause != removeIrreflexive(n.children[0]->clause)) return "irreflexive: wrong clause";
        return std::nullopt;
    case Rule::Subst:
        if (n.clause != applySubst(n.subst, n.children[0]->clause)) return "subst: clause is not the instance";
        return std::nullopt;
    case Rule::Resolve: {
        if (!n.literal) return "resolve: missing literal";
        const Clause& a = n.children[0]->clause;
        const Clause& b = n.children[1]->clause;
        if (!a.contains(*n.literal)) return "resolve: literal absent from the first premise";
        if (!b.contains(n.literal->negated())) return "resolve: negation absent from the second premise";
        if (n.clause != resolvent(a, b, *n.literal)) return "resolve: wrong clause";
        return std::nullopt;
    }
    }
    return "unknown rule";
}

void visit(const CertPtr& c, std::set<const Certificate*>& seen, std::vector<const Certificate*>& order) {
    if (!c || !seen.insert(c.get()).second) return;
    for (const auto& k : c->children) visit(k, seen, order);
    order.push_back(c.get());
}

}  // namespace

std::optional<Violation> checkCertificate(const std::vector<Clause>& problem, const CertPtr& cert) {
    if (!cert) return Violation{nullptr, "empty certificate"};
    std::set<const Certificate*> seen;
    std::vector<const Certificate*> order;
    visit(cert, seen, order);
    for (const Certificate* n : order)
        if (auto e = checkNode(problem, *n)) return Violation{n, *e};
    return std::nullopt;
}

std::size_t certificateSize(const CertPtr& cert) {
    std::set<const Certificate*> seen;
    std::vector<const Certificate*> order;
    visit(cert, seen, order);
    return order.size();
}

}  // namespace lcf::res
