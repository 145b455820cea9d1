#include <random>
#include <set>

#include "doctest.h"
#include "lcf/cnf.hpp"
#include "lcf/syntax.hpp"
#include "support/fogen.hpp"
#include "support/model.hpp"

using namespace lcf;
using lcf::testing::FiniteModel;

namespace {

const Type U = Type::universe();
const Type P = Type::prop();

Context sig() {
    Context c = lcf::testing::foContext();
    c = declareConst(c, "b", P);
    c = declareConst(c, "d", P);
    c = declareConst(c, "T", Type::curried({U, U, U}, P));
    return declareConst(c, "H", Type::fun(Type::fun(U, P), P));
}

Term parse(const char* s) { return parseTerm(sig(), s); }

std::vector<Term> modelConstants(const Term& t) {
    std::vector<Term> out;
    for (const auto& k : constantsOf(t))
        if (!builtin::isReserved(k.name())) out.push_back(k);
    return out;
}

// Both sides of an equation agree in every interpretation over a 2-element universe.
bool validEquation(const Term& eq) {
    FiniteModel m;
    bool ok = true;
    lcf::testing::forEachInterpretation(m, modelConstants(eq), [&] { ok = ok && m.holds(eq); });
    return ok;
}

bool isLiteral(const Term& l) {
    Term a = isNeg(l) ? l.arg() : l;
    return !isNeg(a) && !isBinary(a, builtin::And) && !isBinary(a, builtin::Or) && !isBinary(a, builtin::Imp) &&
           !isForall(a) && !isExists(a) && !(isEq(a) && builtinTypeArg(a.fun().fun()).isProp());
}

bool clauseShape(const Term& clause) {
    Term m = clause;
    while (isForall(m)) m = m.arg().body();
    Term cur = m;
    while (isBinary(cur, builtin::Or)) {
        if (isBinary(lhs(cur), builtin::Or) || !isLiteral(lhs(cur))) return false;
        cur = rhs(cur);
    }
    return isFalse(cur) || isLiteral(cur);
}

std::size_t skolemRequests(const std::vector<SchemaRequest>& log, bool freshOnly) {
    std::set<std::string> seen;
    for (const auto& r : log)
        if (r.schema.name == SchemaName::Skolem && (!freshOnly || r.fresh)) {
            std::string k;
            for (const auto& t : r.schema.typeArgs) k += t.str() + ";";
            seen.insert(k);
        }
    return seen.size();
}

}  // namespace

TEST_CASE("skolemize takes universals innermost first") {
    Context c = sig();
    auto [c1, h] = assume(c, parse("forall x:U y:U. exists z:U. T x y z"));
    SchemaStats::clearLog();
    auto [c2, th] = skolemize(c1, h);
    CHECK(skolemRequests(SchemaStats::log(), false) == 2);
    auto sk = constantsOf(th.prop());
    std::optional<Term> g;
    for (const auto& k : sk)
        if (k.name().rfind("sk$", 0) == 0) g = k;
    REQUIRE(g);
    CHECK(g->type() == Type::curried({U, U}, U));
    Term T = Term::constant("T", Type::curried({U, U, U}, P));
    Term x = Term::bound(1), y = Term::bound(0);
    Term expected = mkForall("x", U, mkForall("y", U, listComb(T, {x, y, listComb(*g, {y, x})})));
    CHECK(alphaEq(th.prop(), expected));
    CHECK(printTerm(c2, th.prop()) == "forall x:U y:U. T x y (" + g->name() + " y x)");

    SchemaStats::clearLog();
    auto [c3, h3] = assume(c, parse("forall x:U y:U. exists z:U. T x y z"));
    skolemize(c3, h3);
    CHECK(skolemRequests(SchemaStats::log(), false) == 2);
    CHECK(skolemRequests(SchemaStats::log(), true) == 0);
}

TEST_CASE("skolemize leaves universal theorems alone and names constants") {
    Context c = sig();
    auto [c1, h] = assume(c, parse("forall x:U. r x"));
    auto [c2, th] = skolemize(c1, h);
    CHECK(c2 == c1);
    CHECK(alphaEq(th.prop(), h.prop()));

    auto [c3, e] = assume(c, parse("exists z:U. r z"));
    auto [c4, th2] = skolemize(c3, e);
    REQUIRE(th2.prop().isComb());
    CHECK(th2.prop().arg().isConst());
    CHECK(th2.prop().arg().name().rfind("sk$", 0) == 0);
    CHECK(th2.ctx() == c4);

    auto [c5, m] = assume(c, parse("exists u:U. forall x:U. exists z:U. R u z /\\ r x"));
    auto [c6, th3] = skolemize(c5, m);
    CHECK_FALSE(isExists(th3.prop()));
    CHECK(isForall(th3.prop()));
}

TEST_CASE("reorderForalls permutes the prefix") {
    Context c = sig();
    auto [c1, h] = assume(c, parse("forall x:U y:U z:U. T x y z"));
    Theorem r = reorderForalls(h, {2, 0, 1});
    CHECK(alphaEq(r.prop(), parse("forall z:U x:U y:U. T x y z")));
}

TEST_CASE("firstOrderConv") {
    Context c = sig();
    auto same = firstOrderConv()(c, parse("forall x:U. r x -> R x c"));
    REQUIRE(same);
    CHECK(alphaEq(lhs(same->prop()), rhs(same->prop())));
    auto beta = firstOrderConv()(c, parse("(fun x:U => R x x) c"));
    REQUIRE(beta);
    CHECK(alphaEq(rhs(beta->prop()), parse("R c c")));
    CHECK_FALSE(firstOrderConv()(c, parse("H (fun x:U => r x /\\ s x)")));
    CHECK_FALSE(firstOrderConv()(c, parse("forall p:P. p \\/ ~p")));
    CHECK_THROWS_AS(toClauses(c, parse("H (fun x:U => r x /\\ s x)")), NotFirstOrder);
}

TEST_CASE("connective elimination and negation normal form") {
    Context c = sig();
    auto imp = elimConnConv()(c, parse("a -> b"));
    REQUIRE(imp);
    CHECK(alphaEq(rhs(imp->prop()), parse("~a \\/ b")));
    auto iff = elimConnConv()(c, parse("a = b"));
    REQUIRE(iff);
    CHECK(alphaEq(rhs(iff->prop()), parse("(~a \\/ b) /\\ (~b \\/ a)")));
    CHECK(validEquation(imp->prop()));
    CHECK(validEquation(iff->prop()));
    auto pure = elimConnConv()(c, parse("a /\\ ~b \\/ d"));
    REQUIRE(pure);
    CHECK(alphaEq(lhs(pure->prop()), rhs(pure->prop())));

    auto dm = nnfConv()(c, parse("~(a /\\ b)"));
    REQUIRE(dm);
    CHECK(alphaEq(rhs(dm->prop()), parse("~a \\/ ~b")));
    auto nn = nnfConv()(c, parse("~ ~a"));
    REQUIRE(nn);
    CHECK(alphaEq(rhs(nn->prop()), parse("a")));
    auto q = nnfConv()(c, parse("~(forall x:U. r x)"));
    REQUIRE(q);
    CHECK(alphaEq(rhs(q->prop()), parse("exists x:U. ~r x")));
    CHECK(validEquation(q->prop()));
    auto deep = nnfConv()(c, parse("~(exists x:U. r x /\\ ~(forall y:U. R x y))"));
    REQUIRE(deep);
    CHECK(alphaEq(rhs(deep->prop()), parse("forall x:U. ~r x \\/ (forall y:U. R x y)")));
}

TEST_CASE("prenex and matrix CNF") {
    Context c = sig();
    auto p = prenexConv()(c, parse("(forall x:U. r x) /\\ a"));
    REQUIRE(p);
    CHECK(alphaEq(rhs(p->prop()), parse("forall x:U. r x /\\ a")));
    CHECK(validEquation(p->prop()));
    auto lr = prenexConv()(c, parse("(exists x:U. r x) \\/ (forall y:U. s y)"));
    REQUIRE(lr);
    CHECK(alphaEq(rhs(lr->prop()), parse("exists x:U. forall y:U. r x \\/ s y")));
    CHECK(validEquation(lr->prop()));
    auto already = prenexConv()(c, parse("forall x:U. exists y:U. R x y"));
    REQUIRE(already);
    CHECK(alphaEq(lhs(already->prop()), rhs(already->prop())));

    auto d = cnfMatrixConv()(c, parse("a \\/ (b /\\ d)"));
    REQUIRE(d);
    CHECK(alphaEq(rhs(d->prop()), parse("(a \\/ b) /\\ (a \\/ d)")));
    auto clause = cnfMatrixConv()(c, parse("a \\/ ~b \\/ d"));
    REQUIRE(clause);
    CHECK(alphaEq(lhs(clause->prop()), rhs(clause->prop())));
    auto nested = cnfMatrixConv()(c, parse("(a /\\ b) \\/ (d /\\ (a \\/ (b /\\ ~d)))"));
    REQUIRE(nested);
    CHECK(validEquation(nested->prop()));
    for (const auto& conj : flatten(rhs(nested->prop()), builtin::And)) CHECK(clauseShape(conj));
}

TEST_CASE("toClauses examples") {
    Context c = sig();
    Term clause = parse("forall x:U. r x \\/ ~R x c");
    auto single = toClauses(c, clause);
    REQUIRE(single.clauses.size() == 1);
    CHECK(alphaEq(single.clauses[0].prop(), clause));
    CHECK(single.clauses[0].ctx() == single.finalCtx);

    auto two = toClauses(c, parse("forall x:U. r x /\\ s x"));
    REQUIRE(two.clauses.size() == 2);
    CHECK(alphaEq(two.clauses[0].prop(), parse("forall x:U. r x")));
    CHECK(alphaEq(two.clauses[1].prop(), parse("forall x:U. s x")));
    CHECK(two.trace.size() == 5);

    // each clause keeps only its variables, in order of first use
    auto split = toClauses(c, parse("forall x:U y:U. r y /\\ R y x"));
    REQUIRE(split.clauses.size() == 2);
    CHECK(alphaEq(split.clauses[0].prop(), parse("forall y:U. r y")));
    CHECK(alphaEq(split.clauses[1].prop(), parse("forall y:U x:U. R y x")));

    auto negated = toClauses(c, parse("~(~(c = f c))"));
    REQUIRE(negated.clauses.size() == 1);
    CHECK(alphaEq(negated.clauses[0].prop(), parse("c = f c")));
}

TEST_CASE("pipeline passes preserve meaning on random formulas") {
    std::mt19937 rng(5);
    Context c = lcf::testing::foContext();
    int checked = 0;
    for (int i = 0; i < 150; ++i) {
        lcf::testing::FoGen gen{rng};
        gen.useF = i % 2 == 0;
        gen.maxQuantifiers = 2;
        Term phi = gen.formula(0, 4);
        CnfOutput out = toClauses(c, phi);
        if (rhs(out.composite.prop()).size() > 300) continue;  // keep model checking cheap
        Term current = phi;
        for (const auto& [name, eq] : out.trace) {
            CHECK(alphaEq(lhs(eq.prop()), current));
            current = rhs(eq.prop());
        }
        CHECK(alphaEq(lhs(out.composite.prop()), phi));
        CHECK(validEquation(out.composite.prop()));

        std::vector<Term> skolems;
        for (const auto& cl : out.clauses) {
            CHECK(clauseShape(cl.prop()));
            CHECK(cl.ctx() == out.finalCtx);
            for (const auto& k : constantsOf(cl.prop()))
                if (k.name().rfind("sk$", 0) == 0 && std::none_of(skolems.begin(), skolems.end(), [&](const Term& s) {
                        return s.name() == k.name();
                    }))
                    skolems.push_back(k);
        }
        // phi holds in a model iff some choice of Skolem functions satisfies every clause
        FiniteModel m;
        std::uint64_t space = 1;
        for (const auto& k : skolems) space *= m.size(k.type());
        if (space > 64) continue;
        bool agree = true;
        lcf::testing::forEachInterpretation(m, modelConstants(phi), [&] {
            bool holds = m.holds(phi);
            bool satisfiable = false;
            FiniteModel mm = m;
            lcf::testing::forEachInterpretation(mm, skolems, [&] {
                bool all = true;
                for (const auto& cl : out.clauses) all = all && mm.holds(cl.prop());
                satisfiable = satisfiable || all;
            });
            agree = agree && holds == satisfiable;
        });
        CHECK(agree);
        ++checked;
    }
    CHECK(checked > 100);
}
