#include <random>

#include "doctest.h"
#include "lcf/conv.hpp"
#include "lcf/syntax.hpp"
#include "support/convgen.hpp"
#include "support/model.hpp"

using namespace lcf;
using lcf::testing::FiniteModel;
using lcf::testing::sameResult;

namespace {

const Type U = Type::universe();
const Type P = Type::prop();

Context ctx() { return lcf::testing::convTestContext(); }
Term parse(const char* s) { return parseTerm(ctx(), s); }

std::vector<Theorem> valuations() {
    std::vector<Theorem> out;
    for (SchemaName n : {SchemaName::AndTrueL, SchemaName::AndTrueR, SchemaName::AndFalseL, SchemaName::AndFalseR,
                         SchemaName::OrTrueL, SchemaName::OrTrue, SchemaName::OrFalseL, SchemaName::OrFalseR,
                         SchemaName::ImpTrueL, SchemaName::ImpTrueR, SchemaName::ImpFalseL, SchemaName::ImpFalseR,
                         SchemaName::NotTrue, SchemaName::NotFalse, SchemaName::EqTrueL, SchemaName::EqTrueElim,
                         SchemaName::EqFalseL, SchemaName::EqFalseR})
        out.push_back(axiomOf(Context::root(), n));
    return out;
}

// Truth value of a closed propositional term, computed directly.
bool truthOf(const Term& t) {
    FiniteModel m;
    return m.holds(t);
}

}  // namespace

TEST_CASE("derived equality rules") {
    Context c = ctx();
    Term a = parse("a"), b = parse("b");
    auto [c1, h] = assume(c, mkEq(a, b, P));
    Theorem s = sym(h);
    CHECK(alphaEq(s.prop(), mkEq(b, a, P)));
    auto [c2, h2] = assume(c1, mkEq(b, parse("d"), P));
    Theorem t = trans(h, h2);
    CHECK(alphaEq(t.prop(), mkEq(a, parse("d"), P)));
    CHECK(t.ctx() == c2);
    CHECK(isTrue(truth(c).prop()));
    Theorem e = eqTrueElim(eqTrueIntro(h));
    CHECK(alphaEq(e.prop(), h.prop()));
    CHECK_THROWS_AS(eqTrueElim(h), KernelError);
    CHECK(isTrue(eqTrueElim(reflexive(c, mkTrue())).prop()));
}

TEST_CASE("noConv, allConv and the basic combinators") {
    Context c = ctx();
    Term t = mkTrue();
    CHECK_FALSE(noConv()(c, t));
    auto r = allConv()(c, t);
    REQUIRE(r);
    CHECK(lhs(r->prop()).sameNode(t));
    CHECK(alphaEq(rhs(r->prop()), t));
    CHECK(orElseConv(noConv(), allConv())(c, t));
    CHECK(orElseConv(allConv(), noConv())(c, t));
    CHECK_FALSE(orElseConv(noConv(), noConv())(c, t));
    CHECK_FALSE(thenConv(normalizeConv(), noConv())(c, t));
    CHECK_FALSE(firstConv({})(c, t));
    CHECK(sameResult(repeatConv(noConv())(c, t), allConv()(c, t)));
    CHECK_FALSE(combConv(allConv(), allConv())(c, t));
    auto nt = combConv(allConv(), allConv())(c, mkNot(t));
    REQUIRE(nt);
    CHECK(alphaEq(nt->prop(), mkEq(mkNot(t), mkNot(t), P)));
}

TEST_CASE("betaConv agrees with normalize") {
    Context c = ctx();
    Term t = parse("(fun x:U => x) c");
    auto r = thenConv(betaConv(), allConv())(c, t);
    REQUIRE(r);
    CHECK(alphaEq(rhs(r->prop()), normalForm(t)));
    CHECK(rhs(r->prop()).name() == "c");
    CHECK_FALSE(betaConv()(c, parse("f c")));
}

TEST_CASE("randConv rewrites only the argument") {
    Context c = ctx();
    Conversion v = rewrConv(valuations());
    Term t = parse("(a /\\ true) \\/ (b /\\ true)");
    auto r = randConv(v)(c, t);
    REQUIRE(r);
    CHECK(alphaEq(rhs(r->prop()), parse("(a /\\ true) \\/ b")));
    CHECK_FALSE(randConv(v)(c, parse("a")));
}

TEST_CASE("absConv") {
    Context c = ctx();
    auto id = absConv(allConv())(c, parse("fun x:U => x"));
    REQUIRE(id);
    CHECK(alphaEq(lhs(id->prop()), rhs(id->prop())));
    CHECK_FALSE(absConv(allConv())(c, mkTrue()));

    Term lam = parse("fun p:P => p /\\ true");
    auto r = absConv(rewrConv(valuations()))(c, lam);
    REQUIRE(r);
    CHECK(r->ctx() == c);
    Term out = rhs(r->prop());
    REQUIRE(out.isAbs());
    for (Term v : {mkTrue(), mkFalse()})
        CHECK(truthOf(instantiate(out.body(), v)) == truthOf(instantiate(lam.body(), v)));
    CHECK(alphaEq(out, parse("fun p:P => p")));

    // the bound variable vanishes from the result
    auto k = absConv(rewrConv(valuations()))(c, parse("fun p:P => p /\\ false"));
    REQUIRE(k);
    CHECK(alphaEq(rhs(k->prop()), parse("fun p:P => false")));
}

TEST_CASE("subsConv") {
    Context c = ctx();
    auto [c1, h] = assume(c, parse("r = (fun x:U => r x)"));
    Conversion s = subsConv(h);
    auto r = s(c1, parse("r"));
    REQUIRE(r);
    CHECK(alphaEq(rhs(r->prop()), normalForm(parse("fun x:U => r x"))));
    CHECK_FALSE(s(c1, parse("a")));
}

TEST_CASE("rewrConv1") {
    Context c = ctx();
    auto orTrue = rewrConv1(axiomOf(Context::root(), SchemaName::OrTrue));
    auto r = orTrue(c, parse("b \\/ true"));
    REQUIRE(r);
    CHECK(alphaEq(r->prop(), parse("(b \\/ true) = true")));
    CHECK_FALSE(orTrue(c, parse("true \\/ b")));

    Context rc = declareConst(c, "R", Type::curried({U, U}, P));
    auto sk = rewrConv1(axiomOf(Context::root(), SchemaName::Skolem, {U, U}));
    auto s = sk(rc, parseTerm(rc, "forall x:U. exists y:U. R x y"));
    REQUIRE(s);
    CHECK(alphaEq(rhs(s->prop()), parseTerm(rc, "exists f:U -> U. forall x:U. R x (f x)")));

    // the pattern variable q would have to capture the bound x
    auto triv = rewrConv1(axiomOf(Context::root(), SchemaName::TrivialAll, {U}));
    CHECK_FALSE(triv(c, parse("forall x:U. r x")));
    auto ok = triv(c, parse("forall x:U. a"));
    REQUIRE(ok);
    CHECK(alphaEq(rhs(ok->prop()), parse("a")));
}

TEST_CASE("upConv evaluates ground propositions") {
    Context c = ctx();
    Conversion up = upConv(rewrConv(valuations()));
    for (const char* s : {"(true /\\ false) \\/ true", "~ ~ true", "(false -> true) = ~false"}) {
        auto r = up(c, parse(s));
        REQUIRE(r);
        Term out = rhs(r->prop());
        CHECK((isTrue(out) || isFalse(out)));
        CHECK(truthOf(out) == truthOf(parse(s)));
    }
    auto atom = up(c, parse("a"));
    REQUIRE(atom);
    CHECK(alphaEq(atom->prop(), parse("a = a")));
}

TEST_CASE("upConv matches the truth-table oracle on random ground formulas") {
    Context c = ctx();
    Conversion up = upConv(rewrConv(valuations()));
    std::mt19937 rng(3);
    std::vector<Term> consts = {mkTrue(), mkFalse()};
    for (int i = 0; i < 300; ++i) {
        Term t = lcf::testing::randomProp(rng, consts, 5);
        auto r = up(c, t);
        REQUIRE(r);
        Term out = rhs(r->prop());
        CHECK((isTrue(out) || isFalse(out)));
        CHECK(isTrue(out) == truthOf(t));
    }
}

TEST_CASE("redepthConv and onceDepthConv") {
    Context c = ctx();
    Conversion nn = rewrConv1(axiomOf(Context::root(), SchemaName::NotNot));
    auto r = redepthConv(nn)(c, parse("~ ~ ~ ~ a /\\ ~ ~ b"));
    REQUIRE(r);
    CHECK(alphaEq(rhs(r->prop()), parse("a /\\ b")));
    auto o = onceDepthConv(nn)(c, parse("~ ~ ~ ~ a"));
    REQUIRE(o);
    CHECK(alphaEq(rhs(o->prop()), parse("~ ~ a")));
}

TEST_CASE("convRule") {
    Context c = ctx();
    auto [c1, h] = assume(c, parse("~(a /\\ b)"));
    auto same = convRule(allConv(), h);
    REQUIRE(same);
    CHECK(alphaEq(same->prop(), h.prop()));
    auto nnf = convRule(rewrConv1(axiomOf(Context::root(), SchemaName::NotAnd)), h);
    REQUIRE(nnf);
    CHECK(alphaEq(nnf->prop(), parse("~a \\/ ~b")));
    CHECK_FALSE(convRule(noConv(), h));
}

TEST_CASE("repeatConv stops on lack of progress and on fuel") {
    Context c = ctx();
    CHECK(repeatConv(allConv())(c, parse("a")));
    Conversion comm = rewrConv1(axiomOf(Context::root(), SchemaName::OrComm));
    CHECK_THROWS_AS(repeatConv(comm, 50)(c, parse("a \\/ b")), ConvError);
}

TEST_CASE("conversion results always have the input as left-hand side") {
    Context c = ctx();
    auto convs = lcf::testing::baseConversions();
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        Term t = lcf::testing::convTestTerm(rng);
        for (const auto& nc : convs) {
            if (nc.name == "orComm") continue;
            auto r = nc.conv(c, t);
            if (!r) continue;
            CHECK(alphaEq(lhs(r->prop()), t));
            CHECK(rhs(r->prop()).closed());
        }
    }
}

TEST_CASE("conversional algebra laws on a sample") {
    Context c = ctx();
    auto convs = lcf::testing::baseConversions();
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, convs.size() - 1);
    for (int i = 0; i < 500; ++i) {
        Term t = lcf::testing::convTestTerm(rng);
        const Conversion &a = convs[pick(rng)].conv, &b = convs[pick(rng)].conv, &d = convs[pick(rng)].conv;
        CHECK(sameResult(thenConv(a, thenConv(b, d))(c, t), thenConv(thenConv(a, b), d)(c, t)));
        CHECK(sameResult(orElseConv(a, orElseConv(b, d))(c, t), orElseConv(orElseConv(a, b), d)(c, t)));
        CHECK(sameResult(thenConv(a, orElseConv(b, d))(c, t), orElseConv(thenConv(a, b), thenConv(a, d))(c, t)));
        CHECK(sameResult(orElseConv(noConv(), a)(c, t), a(c, t)));
        CHECK(sameResult(orElseConv(a, noConv())(c, t), a(c, t)));
        CHECK(sameResult(thenConv(allConv(), a)(c, t), a(c, t)));
        CHECK(sameResult(thenConv(a, allConv())(c, t), a(c, t)));
    }
}
