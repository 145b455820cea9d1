#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "lcf/cli.hpp"

namespace lcf::cli {

namespace {

std::string readFile(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw InputError("cannot read " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string countermodelText(const Context& ctx, const Assignment& a) {
    std::string s;
    for (const auto& [atom, value] : a) {
        if (!s.empty()) s += ", ";
        // stripped-quantifier atoms are fresh locals such as p$1; show the user's name
        s += std::regex_replace(printTerm(ctx, atom), std::regex(R"(\$\d+)"), "") + " = " + (value ? "true" : "false");
    }
    return s;
}

}  // namespace

std::string ProofReport::line() const {
    if (!proved) return "FAILED " + name + ": " + reason;
    std::ostringstream ss;
    ss << "PROVED " << name << " (" << generated << " clauses generated, " << static_cast<long long>(millis + 0.5)
       << " ms)";
    return ss.str();
}

std::filesystem::path stdlibPath() {
    if (const char* env = std::getenv("METIS_LCF_STDLIB"); env && *env) return env;
    return LCF_STDLIB_PATH;
}

Session::Session(RunConfig cfg) : cfg_(std::move(cfg)), ctx_(Context::root()) {}

Term Session::parse(const std::string& text) const { return parseTerm(ctx_, text); }

std::optional<Theorem> Session::theorem(const std::string& name) const {
    auto it = theorems_.find(name);
    if (it == theorems_.end()) return std::nullopt;
    return it->second;
}

ProofReport Session::taut(const std::string& name, const Term& goal) {
    auto t0 = std::chrono::steady_clock::now();
    TautResult r = lcf::taut(ctx_, goal);
    ProofReport rep;
    rep.name = name;
    rep.millis = since(t0);
    rep.proved = r.proved();
    if (r.proved()) {
        rep.theorem = r.theorem;
    } else if (r.status == TautResult::Status::NotTautology) {
        rep.reason = "not a tautology; countermodel " + countermodelText(ctx_, r.countermodel);
    } else {
        rep.reason = r.message;
    }
    return rep;
}

ProofReport Session::metis(const std::string& name, const Term& goal, const std::vector<std::string>& lemmas) {
    std::vector<Theorem> ths;
    for (const auto& l : lemmas) {
        if (failed_.count(l)) {
            ProofReport rep;
            rep.name = name;
            rep.reason = "lemma '" + l + "' was not proved";
            return rep;
        }
        auto th = theorem(l);
        if (!th) throw InputError("unknown lemma '" + l + "'");
        ths.push_back(*th);
    }
    MetisOptions opts;
    opts.limits.maxGenerated = cfg_.maxGenerated;
    auto t0 = std::chrono::steady_clock::now();
    MetisResult r = lcf::metis(ctx_, goal, ths, opts);
    ProofReport rep;
    rep.name = name;
    rep.millis = since(t0);
    rep.proved = r.proved();
    rep.generated = r.stats.generated;
    rep.theorem = r.theorem;
    rep.reason = r.message;
    rep.problem = r.problem;
    rep.certificate = r.certificate;
    if (cfg_.trace)
        std::clog << "[trace] " << name << ": " << r.inputClauses << " input clauses, " << r.stats.given
                  << " given, " << r.stats.generated << " generated\n";
    dump(rep);
    return rep;
}

void Session::dump(const ProofReport& r) const {
    if (!cfg_.dumpDir) return;
    std::filesystem::create_directories(*cfg_.dumpDir);
    auto write = [&](const std::string& suffix, const std::string& text) {
        std::ofstream f(*cfg_.dumpDir / (r.name + suffix), std::ios::binary);
        f << text << "\n";
    };
    if (!r.problem.empty()) write(".problem.sexp", r.problem);
    if (!r.certificate.empty()) write(".cert.sexp", r.certificate);
}

ProofReport Session::runStatement(const Statement& st) {
    ProofReport rep;
    rep.proved = true;
    if (const auto* c = std::get_if<ConstDecl>(&st.body)) {
        ctx_ = declareConst(ctx_, c->name, c->type);
    } else if (const auto* a = std::get_if<AxiomDecl>(&st.body)) {
        Theorem th = loadAxiom(ctx_, a->name, elaborate(ctx_, a->prop));
        ctx_ = th.ctx();
        theorems_.insert_or_assign(a->name, th);
        rep.name = a->name;
    } else if (const auto* l = std::get_if<LetDecl>(&st.body)) {
        Term rhs = elaborate(ctx_, l->rhs);
        Type ty = typeOf(ctx_, rhs);
        ctx_ = declareConst(ctx_, l->constant, ty);
        Theorem th = loadAxiom(ctx_, l->name, mkEq(Term::constant(l->constant, ty), rhs, ty));
        ctx_ = th.ctx();
        theorems_.insert_or_assign(l->name, th);
        rep.name = l->name;
    } else {
        const auto& t = std::get<TheoremDecl>(st.body);
        Term goal = elaborate(ctx_, t.prop);
        if (typeOf(ctx_, goal) != Type::prop()) throw ParseError(t.prop->span, "theorem statement is not a proposition");
        rep = t.tactic == TheoremDecl::Tactic::Taut ? taut(t.name, goal) : metis(t.name, goal, t.lemmas);
        if (rep.proved)
            theorems_.insert_or_assign(t.name, *rep.theorem);
        else
            failed_.insert(t.name);
    }
    return rep;
}

bool Session::runScript(const TheoryScript& script, std::ostream& out) {
    bool ok = true;
    for (const auto& st : script.statements) {
        ProofReport rep;
        try {
            rep = runStatement(st);
        } catch (const InputError& e) {
            throw InputError(st.span.str() + ": " + e.what());
        } catch (const TypeError& e) {
            throw ParseError(st.span, e.what());
        }
        if (std::holds_alternative<TheoremDecl>(st.body)) {
            out << rep.line() << "\n";
            ok = ok && rep.proved;
        }
    }
    return ok;
}

bool Session::runFile(const std::filesystem::path& file, std::ostream& out) {
    return runScript(parseTheory(readFile(file), file.string()), out);
}

void Session::loadStdlib(const std::filesystem::path& file) {
    std::ostringstream sink;
    if (!runFile(file, sink)) throw InputError("stdlib " + file.string() + " failed:\n" + sink.str());
}

}  // namespace lcf::cli
