#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace lcf {

struct TypeNode;

/// Simple types over the two base types: propositions (P) and sets (U).
class Type {
public:
    enum class Kind { Prop, Universe, Fun };

    static Type prop();
    static Type universe();
    static Type fun(Type domain, Type codomain);
    /// a1 -> a2 -> ... -> result
    static Type curried(const std::vector<Type>& args, Type result);

    Kind kind() const;
    bool isProp() const { return kind() == Kind::Prop; }
    bool isUniverse() const { return kind() == Kind::Universe; }
    bool isFun() const { return kind() == Kind::Fun; }

    Type domain() const;
    Type codomain() const;

    /// Argument types of a curried function type, outermost first.
    std::vector<Type> argTypes() const;
    Type resultType() const;

    std::string str() const;
    std::size_t hash() const;

    friend bool operator==(const Type& a, const Type& b);
    friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
    /// Structural total order, used for deterministic keys.
    friend bool operator<(const Type& a, const Type& b);

private:
    explicit Type(std::shared_ptr<const TypeNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const TypeNode> node_;
};

struct TypeNode {
    Type::Kind kind;
    std::shared_ptr<const TypeNode> dom;
    std::shared_ptr<const TypeNode> cod;
    std::size_t hash;
};

}  // namespace lcf
