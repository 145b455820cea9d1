// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <type_traits>

#include "lcf/cli.hpp"
#include "support/convgen.hpp"
#include "support/fogen.hpp"
#include "support/fomodel.hpp"
#include "support/model.hpp"

using namespace lcf;
namespace fs = std::filesystem;
namespace r = lcf::res;
using lcf::testing::FiniteModel;

namespace {

const Type U = Type::universe();
const Type P = Type::prop();

// Pinned limits.
constexpr double kCorpusMillis = 60000;
constexpr double kOneNotZeroMillis = 5000;
constexpr double kTautMillis = 1000;
constexpr int kRandomTaut = 1000;
constexpr int kSampledTaut = 5000;
constexpr int kCertProblems = 200;
constexpr int kAlgebraCases = 10000;
constexpr int kFalsifiedGoals = 20;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << " " << id << " " << name << ": " << detail << std::endl;
}

double millisSince(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string corpus() { return std::string(LCF_SOURCE_DIR) + "/examples/one_two.thy"; }

std::string readFile(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void numeralCorpus() {
    cli::Session s;
    s.loadStdlib(cli::stdlibPath());
    auto script = parseTheory(readFile(corpus()), corpus());
    std::map<std::string, cli::ProofReport> reps;
    for (const auto& st : script.statements) {
        auto rep = s.runStatement(st);
        if (std::holds_alternative<TheoremDecl>(st.body)) reps[rep.name] = rep;
    }
    bool pass = reps.size() == 3;
    std::ostringstream d;
    const char* sep = "";
    for (const char* n : {"one", "two", "oneNotZero"}) {
        auto it = reps.find(n);
        if (it == reps.end()) {
            pass = false;
            d << sep << n << " missing";
            sep = "; ";
            continue;
        }
        const auto& rep = it->second;
        double limit = std::string(n) == "oneNotZero" ? kOneNotZeroMillis : kCorpusMillis;
        pass = pass && rep.proved && rep.generated <= s.config().maxGenerated && rep.millis < limit;
        d << sep << n << " " << (rep.proved ? "proved" : "failed") << ", " << rep.generated << " clauses, "
          << static_cast<long>(rep.millis) << " ms (limit " << limit << " ms)";
        sep = "; ";
    }
    report(1, "numeral corpus", pass, d.str());
}

void deMorgan() {
    cli::Session s;
    s.loadStdlib(cli::stdlibPath());
    Term goal = s.parse("forall p:P q:P. (~(p /\\ q)) = (~p \\/ ~q)");
    auto t0 = std::chrono::steady_clock::now();
    auto rep = s.taut("andDeMorgan", goal);
    double ms = millisSince(t0);
    bool pass = rep.proved && alphaEq(rep.theorem->prop(), goal) && ms < kTautMillis;
    char d[64];
    std::snprintf(d, sizeof d, "%.3f ms (limit %.0f ms)", ms, kTautMillis);
    report(2, "andDeMorgan by taut", pass, d);
}

std::size_t skolemRequests(bool freshOnly) {
    std::set<std::string> seen;
    for (const auto& q : SchemaStats::log())
        if (q.schema.name == SchemaName::Skolem && (!freshOnly || q.fresh)) {
            std::string k;
            for (const auto& t : q.schema.typeArgs) k += t.str() + ";";
            seen.insert(k);
        }
    return seen.size();
}

void skolemChain() {
    Context c = declareConst(Context::root(), "P", Type::curried({U, U, U}, P));
    Term input = parseTerm(c, "forall x:U y:U. exists z:U. P x y z");

    auto [c1, h1] = assume(c, input);
    SchemaStats::clearLog();
    auto [c2, th] = skolemize(c1, h1);
    std::size_t first = skolemRequests(false);
    std::optional<Term> g;
    for (const auto& k : constantsOf(th.prop()))
        if (k.name().rfind("sk$", 0) == 0) g = k;
    bool shape = false;
    std::string printed = printTerm(c2, th.prop());
    if (g && g->type() == Type::curried({U, U}, U)) {
        Term Pc = Term::constant("P", Type::curried({U, U, U}, P));
        Term x = Term::bound(1), y = Term::bound(0);
        Term expected = mkForall("x", U, mkForall("y", U, listComb(Pc, {x, y, listComb(*g, {y, x})})));
        shape = alphaEq(th.prop(), expected) && printed == "forall x:U y:U. P x y (" + g->name() + " y x)";
    }

    auto [c3, h3] = assume(c, input);
    SchemaStats::clearLog();
    skolemize(c3, h3);
    std::size_t fresh = skolemRequests(true);
    report(3, "skolemization chain", shape && first == 2 && fresh == 0,
           printed + "; " + std::to_string(first) + " skolem instantiations, " + std::to_string(fresh) +
               " fresh on rerun");
}

r::FTerm V(std::int64_t i) { return r::FTerm::mkVar(i); }
r::FTerm F(std::string f, std::vector<r::FTerm> as = {}) { return r::FTerm::mkFn(std::move(f), std::move(as)); }

void walkthrough() {
    Context ctx = Context::root();
    for (const char* n : {"p", "q", "r"}) ctx = declareConst(ctx, n, Type::curried({U, U}, P));
    ctx = declareConst(ctx, "h", Type::curried({U, U, U}, U));
    Theorem a = loadAxiom(ctx, "a", parseTerm(ctx, "forall x y z w. p x z \\/ ~(q y w)"));
    Theorem b = loadAxiom(a.ctx(), "b", parseTerm(a.ctx(), "forall x y z w. r y w \\/ q z x"));
    Context top = b.ctx();
    SymbolTable sym;
    for (const char* n : {"p", "q", "r", "h"}) sym.add(Term::constant(n, *top.lookup(n)));
    Reconstructor rec(top, sym, {});

    ClausePair start{{3, 2, 8, 5}, weaken(a, top)};
    ClausePair inst = rec.subst(start, {{8, F("h", {V(1), V(2), V(9)})}});
    bool substOk = alphaEq(inst.thm.prop(), parseTerm(top, "forall x y z u v. p x (h y z u) \\/ ~(q z v)"));

    ClausePair other{{5, 4, 2, 6}, b};
    ClausePair res = rec.resolve(inst, other, r::Literal{false, "q", {V(2), V(5)}});
    bool dropped = std::find(res.vars.begin(), res.vars.end(), 5) == res.vars.end();
    r::Clause want({r::Literal{true, "p", {V(3), F("h", {V(1), V(2), V(9)})}}, r::Literal{true, "r", {V(4), V(6)}}});
    bool clauseOk = encodeClause(res) == want;
    report(4, "substitution then resolution on clause pairs", substOk && dropped && clauseOk,
           printTerm(top, inst.thm.prop()) + "; resolvent " + r::toSexpr(encodeClause(res)));
}

bool tableValid(const Term& phi, const std::vector<Term>& atoms) {
    FiniteModel m;
    bool all = true;
    lcf::testing::forEachInterpretation(m, atoms, [&] { all = all && m.holds(phi); });
    return all;
}

// Agreement of taut with the table on one formula, including the certificate
// of each answer: the proved theorem or a falsifying countermodel.
bool agrees(const Context& ctx, const Term& phi, const std::vector<Term>& atoms) {
    bool valid = tableValid(phi, atoms);
    auto res = taut(ctx, phi);
    if (res.proved() != valid) return false;
    if (res.proved()) return alphaEq(res.theorem->prop(), phi);
    if (res.status != TautResult::Status::NotTautology) return false;
    FiniteModel m;
    for (auto& [a, v] : res.countermodel) m.interp[a.name()] = v ? 1 : 0;
    for (const auto& a : atoms) m.interp.try_emplace(a.name(), 0);
    return !m.holds(phi);
}

void tautOracle() {
    Context ctx = Context::root();
    std::vector<Term> atoms;
    for (const char* n : {"a", "b", "d", "e", "g", "h", "k", "l"}) {
        ctx = declareConst(ctx, n, P);
        atoms.push_back(lcf::testing::atomP(n));
    }
    std::vector<Term> three(atoms.begin(), atoms.begin() + 3);

    // every formula over three atoms and the constants up to nesting depth 2
    std::vector<Term> levels = {mkTrue(), mkFalse()};
    levels.insert(levels.end(), three.begin(), three.end());
    for (int depth = 1; depth <= 2; ++depth) {
        std::vector<Term> next = levels;
        for (const auto& x : levels) {
            next.push_back(mkNot(x));
            for (const auto& y : levels) {
                next.push_back(mkAnd(x, y));
                next.push_back(mkOr(x, y));
                next.push_back(mkImp(x, y));
                next.push_back(mkEq(x, y, P));
            }
        }
        levels = std::move(next);
    }
    int disagreements = 0, valid = 0;
    for (const auto& phi : levels) {
        disagreements += !agrees(ctx, phi, three);
        valid += tableValid(phi, three);
    }

    std::mt19937 rng(5);
    for (int i = 0; i < kSampledTaut; ++i) {
        Term phi = lcf::testing::randomProp(rng, three, 3 + i % 2);
        if (i % 3 == 1) phi = mkOr(phi, mkNot(phi));
        disagreements += !agrees(ctx, phi, three);
    }
    for (int i = 0; i < kRandomTaut; ++i) {
        Term phi = lcf::testing::randomProp(rng, atoms, 5);
        if (i % 3 == 1) phi = mkImp(phi, mkOr(phi, lcf::testing::randomProp(rng, atoms, 2)));
        disagreements += !agrees(ctx, phi, atoms);
    }
    std::ostringstream d;
    d << levels.size() << " enumerated (" << valid << " valid), " << kSampledTaut << " sampled at depth 3-4, "
      << kRandomTaut << " random over 8 atoms; " << disagreements << " disagreements";
    report(5, "taut against truth tables", disagreements == 0, d.str());
}

// Kernel axiom for a prover clause, binders in the clause's variable order.
Theorem clauseAxiom(Context& ctx, const SymbolTable& sym, const r::Clause& c, const std::string& name) {
    std::map<std::int64_t, Term> vm;
    auto vars = c.variables();
    for (auto v : vars) vm.emplace(v, Term::constant("#tmp" + std::to_string(v), U));
    std::vector<Term> lits;
    for (const auto& l : c.literals()) lits.push_back(decodeLiteral(sym, vm, l));
    Term t = mkDisj(lits);
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        t = Term::comb(quantConst(builtin::All, U), Term::abs("x", U, abstractConst(t, vm.at(*it).name())));
    Theorem th = loadAxiom(ctx, name, t);
    ctx = th.ctx();
    return th;
}

void certificateFidelity() {
    Context base = Context::root();
    base = declareConst(base, "a", U);
    base = declareConst(base, "b", U);
    base = declareConst(base, "f", Type::fun(U, U));
    base = declareConst(base, "p", Type::fun(U, P));
    base = declareConst(base, "q", Type::curried({U, U}, P));
    base = declareConst(base, "r", P);
    SymbolTable sym;
    for (const char* n : {"a", "b", "f", "p", "q", "r"}) sym.add(Term::constant(n, *base.lookup(n)));

    std::mt19937 rng(2024);
    r::Limits limits;
    limits.maxGenerated = 3000;
    int refuted = 0, other = 0, bad = 0;
    for (int i = 0; i < kCertProblems; ++i) {
        auto problem = lcf::testing::randomProblem(rng);
        auto pr = r::prove(problem, limits);
        if (!pr.refuted()) {
            ++other;
            continue;
        }
        ++refuted;
        bool ok = !r::checkCertificate(problem, pr.certificate()) && !lcf::testing::satisfiableIn2(problem);
        try {
            Context ctx = base;
            std::vector<ClausePair> inputs;
            for (std::size_t k = 0; k < problem.size(); ++k)
                inputs.push_back({problem[k].variables(), clauseAxiom(ctx, sym, problem[k], "c" + std::to_string(k))});
            Reconstructor rec(ctx, sym, inputs);
            ok = ok && isFalse(rec.run(pr.certificate()).prop());
        } catch (const std::exception&) {
            ok = false;
        }
        bad += !ok;
    }
    std::ostringstream d;
    d << kCertProblems << " problems, " << refuted << " refuted, " << other << " not refuted, " << bad << " failures";
    report(6, "certificate fidelity", bad == 0 && refuted > 0 && other > 0, d.str());
}

void conversionalAlgebra() {
    using lcf::testing::sameResult;
    Context c = lcf::testing::convTestContext();
    auto convs = lcf::testing::baseConversions();
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, convs.size() - 1);
    int cases = 0, violations = 0;
    auto law = [&](bool holds) {
        ++cases;
        violations += !holds;
    };
    while (cases < kAlgebraCases) {
        Term t = lcf::testing::convTestTerm(rng);
        const Conversion &a = convs[pick(rng)].conv, &b = convs[pick(rng)].conv, &d = convs[pick(rng)].conv;
        law(sameResult(thenConv(a, thenConv(b, d))(c, t), thenConv(thenConv(a, b), d)(c, t)));
        law(sameResult(orElseConv(a, orElseConv(b, d))(c, t), orElseConv(orElseConv(a, b), d)(c, t)));
        law(sameResult(thenConv(a, orElseConv(b, d))(c, t), orElseConv(thenConv(a, b), thenConv(a, d))(c, t)));
        law(sameResult(orElseConv(noConv(), a)(c, t), a(c, t)));
        law(sameResult(orElseConv(a, noConv())(c, t), a(c, t)));
        law(sameResult(thenConv(allConv(), a)(c, t), a(c, t)));
        law(sameResult(thenConv(a, allConv())(c, t), a(c, t)));
    }
    report(7, "conversional algebra", violations == 0,
           std::to_string(cases) + " cases, " + std::to_string(violations) + " violations");
}

void determinism() {
    auto runOnce = [](const fs::path& dir, std::string& out) {
        fs::remove_all(dir);
        std::ostringstream o, e;
        int code = cli::run({"--dump", dir.string(), "check", corpus()}, o, e);
        out = std::regex_replace(o.str(), std::regex(R"(, \d+ ms\))"), ")");
        return code;
    };
    fs::path a = fs::temp_directory_path() / "lcf_accept_a", b = fs::temp_directory_path() / "lcf_accept_b";
    std::string outA, outB;
    bool pass = runOnce(a, outA) == cli::ExitOk && runOnce(b, outB) == cli::ExitOk && outA == outB;
    int files = 0, differing = 0;
    for (const auto& e : fs::directory_iterator(a)) {
        ++files;
        differing += readFile(e.path()) != readFile(b / e.path().filename());
    }
    pass = pass && files == 6 && differing == 0;
    report(8, "determinism", pass,
           std::to_string(files) + " dump files compared, " + std::to_string(differing) + " differ");
}

void soundnessGates() {
    std::mt19937 rng(11);
    Context ctx = lcf::testing::foContext();
    r::Limits limits;
    limits.maxGenerated = 2000;
    MetisOptions opts{limits};
    int tried = 0, proved = 0;
    for (int i = 0; i < 1000 && tried < kFalsifiedGoals; ++i) {
        lcf::testing::FoGen gen{rng};
        gen.maxQuantifiers = 2;
        Term phi = gen.formula(0, 3);
        FiniteModel m;
        bool countermodel = false;
        std::vector<Term> consts;
        for (const auto& k : constantsOf(phi))
            if (!builtin::isReserved(k.name())) consts.push_back(k);
        lcf::testing::forEachInterpretation(m, consts, [&] { countermodel = countermodel || !m.holds(phi); });
        if (!countermodel) continue;
        ++tried;
        auto res = metis(ctx, phi, {}, opts);
        proved += res.proved() || res.theorem.has_value();
    }
    // theorems come only from kernel rules
    constexpr bool sealed = !std::is_default_constructible_v<Theorem> &&
                            !std::is_constructible_v<Theorem, Context, Term> &&
                            !std::is_constructible_v<Theorem, Term>;
    report(9, "soundness gates", tried == kFalsifiedGoals && proved == 0 && sealed,
           std::to_string(tried) + " falsified goals, " + std::to_string(proved) +
               " proved; theorem constructors sealed: " + (sealed ? "yes" : "no"));
}

}  // namespace

int main() {
    std::vector<std::pair<int, std::function<void()>>> checks = {
        {1, numeralCorpus},     {2, deMorgan},    {3, skolemChain},
        {4, walkthrough},       {5, tautOracle},  {6, certificateFidelity},
        {7, conversionalAlgebra}, {8, determinism}, {9, soundnessGates},
    };
    for (const auto& [id, check] : checks) {
        try {
            check();
        } catch (const std::exception& e) {
            report(id, "criterion", false, std::string("exception: ") + e.what());
        }
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
