#include "lcf/type.hpp"

#include <stdexcept>

namespace lcf {

namespace {

std::size_t mixHash(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const std::shared_ptr<const TypeNode>& propNode() {
    static const auto n = std::make_shared<const TypeNode>(TypeNode{Type::Kind::Prop, nullptr, nullptr, 0x51});
    return n;
}

const std::shared_ptr<const TypeNode>& universeNode() {
    static const auto n = std::make_shared<const TypeNode>(TypeNode{Type::Kind::Universe, nullptr, nullptr, 0x77});
    return n;
}

bool equalNodes(const TypeNode* a, const TypeNode* b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->hash != b->hash) return false;
    if (a->kind != Type::Kind::Fun) return true;
    return equalNodes(a->dom.get(), b->dom.get()) && equalNodes(a->cod.get(), b->cod.get());
}

int compareNodes(const TypeNode* a, const TypeNode* b) {
    if (a == b) return 0;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (a->kind != Type::Kind::Fun) return 0;
    if (int c = compareNodes(a->dom.get(), b->dom.get())) return c;
    return compareNodes(a->cod.get(), b->cod.get());
}

void render(const TypeNode* n, std::string& out, bool parenFun) {
    switch (n->kind) {
    case Type::Kind::Prop: out += "P"; return;
    case Type::Kind::Universe: out += "U"; return;
    case Type::Kind::Fun:
        if (parenFun) out += "(";
        render(n->dom.get(), out, true);
        out += " -> ";
        render(n->cod.get(), out, false);
        if (parenFun) out += ")";
        return;
    }
}

}  // namespace

Type Type::prop() { return Type(propNode()); }
Type Type::universe() { return Type(universeNode()); }

Type Type::fun(Type domain, Type codomain) {
    std::size_t h = mixHash(mixHash(0x3f, domain.hash()), codomain.hash());
    return Type(std::make_shared<const TypeNode>(
        TypeNode{Kind::Fun, std::move(domain.node_), std::move(codomain.node_), h}));
}

Type Type::curried(const std::vector<Type>& args, Type result) {
    for (auto it = args.rbegin(); it != args.rend(); ++it) result = fun(*it, result);
    return result;
}

Type::Kind Type::kind() const { return node_->kind; }
std::size_t Type::hash() const { return node_->hash; }

Type Type::domain() const {
    if (!isFun()) throw std::logic_error("domain of non-function type " + str());
    return Type(node_->dom);
}

Type Type::codomain() const {
    if (!isFun()) throw std::logic_error("codomain of non-function type " + str());
    return Type(node_->cod);
}

std::vector<Type> Type::argTypes() const {
    std::vector<Type> out;
    const TypeNode* n = node_.get();
    while (n->kind == Kind::Fun) {
        out.push_back(Type(n->dom));
        n = n->cod.get();
    }
    return out;
}

Type Type::resultType() const {
    std::shared_ptr<const TypeNode> n = node_;
    while (n->kind == Kind::Fun) n = n->cod;
    return Type(n);
}

std::string Type::str() const {
    std::string out;
    render(node_.get(), out, false);
    return out;
}

bool operator==(const Type& a, const Type& b) { return equalNodes(a.node_.get(), b.node_.get()); }
bool operator<(const Type& a, const Type& b) { return compareNodes(a.node_.get(), b.node_.get()) < 0; }

}  // namespace lcf
