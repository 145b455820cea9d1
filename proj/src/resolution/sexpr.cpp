#include <map>
#include <set>
#include <sstream>

#include "lcf/resolution.hpp"

namespace lcf::res {

namespace {

bool plainAtom(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == '(' || c == ')' || c == '|' || c == '\\' || static_cast<unsigned char>(c) <= ' ') return false;
    return true;
}

std::string symbol(const std::string& s) {
    if (plainAtom(s)) return s;
    std::string out = "|";
    for (char c : s) {
        if (c == '|' || c == '\\') out += '\\';
        out += c;
    }
    return out + "|";
}

struct Sx {
    bool isList = false;
    std::string atom;
    std::vector<Sx> items;
};

class Reader {
public:
    explicit Reader(const std::string& s) : s_(s) {}

    Sx read() {
        skip();
        if (i_ >= s_.size()) throw SexprError("unexpected end of input");
        if (s_[i_] == ')') throw SexprError("unexpected ')'");
        if (s_[i_] == '(') {
            ++i_;
            Sx l{true, {}, {}};
            while (true) {
                skip();
                if (i_ >= s_.size()) throw SexprError("unclosed '('");
                if (s_[i_] == ')') {
                    ++i_;
                    return l;
                }
                l.items.push_back(read());
            }
        }
        Sx a;
        if (s_[i_] == '|') {
            ++i_;
            while (i_ < s_.size() && s_[i_] != '|') {
                if (s_[i_] == '\\' && i_ + 1 < s_.size()) ++i_;
                a.atom += s_[i_++];
            }
            if (i_ >= s_.size()) throw SexprError("unterminated |symbol|");
            ++i_;
            return a;
        }
        while (i_ < s_.size() && s_[i_] != '(' && s_[i_] != ')' && static_cast<unsigned char>(s_[i_]) > ' ')
            a.atom += s_[i_++];
        return a;
    }

    bool atEnd() {
        skip();
        return i_ >= s_.size();
    }

private:
    void skip() {
        while (i_ < s_.size()) {
            if (static_cast<unsigned char>(s_[i_]) <= ' ') {
                ++i_;
            } else if (s_[i_] == ';') {
                while (i_ < s_.size() && s_[i_] != '\n') ++i_;
            } else {
                break;
            }
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

const Sx& head(const Sx& x, const char* tag, std::size_t minItems) {
    if (!x.isList || x.items.empty() || x.items[0].isList || x.items[0].atom != tag || x.items.size() < minItems)
        throw SexprError(std::string("expected (") + tag + " ...)");
    return x;
}

std::int64_t integer(const Sx& x) {
    if (x.isList || x.atom.empty()) throw SexprError("expected an integer");
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(x.atom, &pos);
    } catch (const std::exception&) {
        throw SexprError("expected an integer, got '" + x.atom + "'");
    }
    if (pos != x.atom.size() || v < 0) throw SexprError("expected a non-negative integer, got '" + x.atom + "'");
    return v;
}

FTerm termOf(const Sx& x) {
    if (!x.isList) return FTerm::mkVar(integer(x));
    if (x.items.empty() || x.items[0].isList) throw SexprError("expected (symbol args...)");
    FTerm t = FTerm::mkFn(x.items[0].atom);
    for (std::size_t i = 1; i < x.items.size(); ++i) t.args.push_back(termOf(x.items[i]));
    return t;
}

Literal literalOf(const Sx& x) {
    head(x, "lit", 3);
    const Sx& pol = x.items[1];
    if (pol.isList || (pol.atom != "true" && pol.atom != "false")) throw SexprError("literal polarity must be true/false");
    FTerm atom = termOf(x.items[2]);
    if (atom.isVar()) throw SexprError("literal atom cannot be a variable");
    return Literal{pol.atom == "true", atom.fn, atom.args};
}

Clause clauseOf(const Sx& x) {
    head(x, "clause", 1);
    std::vector<Literal> lits;
    for (std::size_t i = 1; i < x.items.size(); ++i) lits.push_back(literalOf(x.items[i]));
    return Clause(std::move(lits));
}

std::string substToSexpr(const Subst& s) {
    std::string out = "(subst";
    for (const auto& [v, t] : s) out += " (" + std::to_string(v) + " " + toSexpr(t) + ")";
    return out + ")";
}

std::string dataToSexpr(const Certificate& c) {
    switch (c.rule) {
    case Rule::Assume:
    case Rule::Resolve: return toSexpr(*c.literal);
    case Rule::Refl: return toSexpr(*c.term);
    case Rule::Equality: {
        std::string p = "(path";
        for (auto i : c.path) p += " " + std::to_string(i);
        return "(eqdata " + toSexpr(*c.literal) + " " + p + ") " + toSexpr(*c.lhs) + " " + toSexpr(*c.rhs) + ")";
    }
    case Rule::Subst: return substToSexpr(c.subst);
    default: return "()";
    }
}

void topo(const CertPtr& c, std::map<const Certificate*, std::size_t>& ids, std::vector<const Certificate*>& order) {
    if (ids.count(c.get())) return;
    for (const auto& k : c->children) topo(k, ids, order);
    ids.emplace(c.get(), order.size());
    order.push_back(c.get());
}

Rule ruleOf(const std::string& s) {
    for (Rule r : {Rule::Axiom, Rule::Assume, Rule::Refl, Rule::Equality, Rule::RemoveSym, Rule::Irreflexive,
                   Rule::Subst, Rule::Resolve})
        if (s == ruleName(r)) return r;
    throw SexprError("unknown rule '" + s + "'");
}

}  // namespace

std::string toSexpr(const FTerm& t) {
    if (t.isVar()) return std::to_string(t.var);
    std::string out = "(" + symbol(t.fn);
    for (const auto& a : t.args) out += " " + toSexpr(a);
    return out + ")";
}

std::string toSexpr(const Literal& l) {
    return std::string("(lit ") + (l.positive ? "true" : "false") + " " + toSexpr(FTerm::mkFn(l.pred, l.args)) + ")";
}

std::string toSexpr(const Clause& c) {
    std::string out = "(clause";
    for (const auto& l : c.literals()) out += " " + toSexpr(l);
    return out + ")";
}

std::string problemToSexpr(const std::vector<Clause>& problem) {
    std::string out = "(problem";
    for (const auto& c : problem) out += "\n  " + toSexpr(c);
    return out + ")\n";
}

// Nodes are listed children first; a node refers to its premises by index.
std::string certToSexpr(const CertPtr& cert) {
    std::map<const Certificate*, std::size_t> ids;
    std::vector<const Certificate*> order;
    topo(cert, ids, order);
    std::string out = "(proof";
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Certificate& c = *order[i];
        out += "\n  (cert " + std::to_string(i) + " " + ruleName(c.rule) + " " + toSexpr(c.clause) + " " + dataToSexpr(c);
        for (const auto& k : c.children) out += " " + std::to_string(ids.at(k.get()));
        out += ")";
    }
    return out + ")\n";
}

std::vector<Clause> parseProblem(const std::string& text) {
    Reader r(text);
    Sx x = r.read();
    if (!r.atEnd()) throw SexprError("trailing input after problem");
    head(x, "problem", 1);
    std::vector<Clause> out;
    for (std::size_t i = 1; i < x.items.size(); ++i) out.push_back(clauseOf(x.items[i]));
    return out;
}

CertPtr parseCertificate(const std::string& text) {
    Reader r(text);
    Sx x = r.read();
    if (!r.atEnd()) throw SexprError("trailing input after proof");
    head(x, "proof", 2);
    std::vector<CertPtr> nodes;
    for (std::size_t i = 1; i < x.items.size(); ++i) {
        const Sx& n = head(x.items[i], "cert", 5);
        if (integer(n.items[1]) != static_cast<std::int64_t>(nodes.size())) throw SexprError("certificate ids out of order");
        if (n.items[2].isList) throw SexprError("expected a rule name");
        auto c = std::make_shared<Certificate>();
        c->rule = ruleOf(n.items[2].atom);
        c->clause = clauseOf(n.items[3]);
        const Sx& d = n.items[4];
        switch (c->rule) {
        case Rule::Assume:
        case Rule::Resolve: c->literal = literalOf(d); break;
        case Rule::Refl: c->term = termOf(d); break;
        case Rule::Equality: {
            head(d, "eqdata", 5);
            c->literal = literalOf(d.items[1]);
            const Sx& p = head(d.items[2], "path", 1);
            for (std::size_t k = 1; k < p.items.size(); ++k) c->path.push_back(static_cast<std::size_t>(integer(p.items[k])));
            c->lhs = termOf(d.items[3]);
            c->rhs = termOf(d.items[4]);
            break;
        }
        case Rule::Subst: {
            head(d, "subst", 1);
            for (std::size_t k = 1; k < d.items.size(); ++k) {
                const Sx& b = d.items[k];
                if (!b.isList || b.items.size() != 2) throw SexprError("expected (var term) binding");
                c->subst.emplace(integer(b.items[0]), termOf(b.items[1]));
            }
            break;
        }
        default:
            if (!d.isList || !d.items.empty()) throw SexprError("expected () as rule data");
        }
        for (std::size_t k = 5; k < n.items.size(); ++k) {
            auto id = static_cast<std::size_t>(integer(n.items[k]));
            if (id >= nodes.size()) throw SexprError("premise refers to a later node");
            c->children.push_back(nodes[id]);
        }
        nodes.push_back(c);
    }
    return nodes.back();
}

}  // namespace lcf::res
