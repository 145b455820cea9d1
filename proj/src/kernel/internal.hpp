#pragma once

#include <map>
#include <memory>
#include <set>

#include "lcf/kernel.hpp"

namespace lcf {

struct ContextNode {
    std::shared_ptr<const ContextNode> parent;
    Context::Entry entry = Context::Entry::Root;
    std::string name;
    std::optional<Type> type;
    std::optional<Term> prop;
    bool chosen = false;
    bool theoryLevel = false;
    std::uint64_t counter = 0;
    std::size_t depth = 0;
    std::shared_ptr<const std::map<std::string, Type>> scope;
    std::shared_ptr<const std::set<std::string>> axioms;
};

/// The single doorway through which kernel code constructs protected values.
struct KernelAccess {
    static Theorem theorem(Context c, Term p) { return Theorem(std::move(c), std::move(p)); }
    static Context context(std::shared_ptr<const ContextNode> n) { return Context(std::move(n)); }
    static const std::shared_ptr<const ContextNode>& node(const Context& c) { return c.node_; }
};

}  // namespace lcf
