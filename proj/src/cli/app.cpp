#include <CLI11.hpp>
#include <sstream>

#include "lcf/cli.hpp"

namespace lcf::cli {

namespace {

struct Options {
    RunConfig cfg;
    std::string file, term, goal, theory, dump;
    std::vector<std::string> lemmas;
};

Session openSession(const Options& o) {
    Session s(o.cfg);
    s.loadStdlib(stdlibPath());
    if (!o.theory.empty()) {
        std::ostringstream sink;
        s.runFile(o.theory, sink);
    }
    return s;
}

int check(const Options& o, std::ostream& out) {
    Session s = openSession(o);
    return s.runFile(o.file, out) ? ExitOk : ExitFailed;
}

int taut(const Options& o, std::ostream& out) {
    Session s = openSession(o);
    ProofReport r = s.taut("goal", s.parse(o.term));
    out << r.line() << "\n";
    return r.proved ? ExitOk : ExitFailed;
}

int prove(const Options& o, std::ostream& out, bool printArtifacts) {
    Session s = openSession(o);
    ProofReport r = s.metis("goal", s.parse(o.goal), o.lemmas);
    if (printArtifacts) {
        out << r.problem << "\n";
        if (r.proved) out << r.certificate << "\n";
    }
    out << r.line() << "\n";
    return r.proved ? ExitOk : ExitFailed;
}

int cnf(const Options& o, std::ostream& out) {
    Session s = openSession(o);
    Term phi = s.parse(o.term);
    CnfOutput c = toClauses(s.context(), phi);
    for (const auto& [pass, eq] : c.trace)
        if (o.cfg.trace) out << pass << ": " << printTerm(s.context(), eq.prop()) << "\n";
    out << "composite: " << printTerm(s.context(), c.composite.prop()) << "\n";
    for (const auto& cl : c.clauses) out << "clause: " << printTerm(s.context(), cl.prop()) << "\n";
    return ExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"LCF-style checker with a certified first-order prover", "metis-lcf"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--max-generated", o.cfg.maxGenerated, "clause limit for metis")->check(CLI::PositiveNumber);
    app.add_flag("--trace", o.cfg.trace, "print prover statistics and CNF passes");
    app.add_option("--dump", o.dump, "directory for problem and certificate S-expressions");

    auto* checkCmd = app.add_subcommand("check", "run every statement of a theory file");
    checkCmd->add_option("FILE", o.file)->required()->check(CLI::ExistingFile);

    auto* tautCmd = app.add_subcommand("taut", "decide a propositional tautology");
    tautCmd->add_option("TERM", o.term)->required();

    auto addGoal = [&](CLI::App* cmd) {
        cmd->add_option("--goal", o.goal)->required();
        cmd->add_option("--lemmas", o.lemmas)->delimiter(',');
        cmd->add_option("--theory", o.theory)->check(CLI::ExistingFile);
    };
    auto* proveCmd = app.add_subcommand("prove", "prove a goal by metis");
    addGoal(proveCmd);
    auto* certCmd = app.add_subcommand("cert", "print the clause problem and refutation certificate");
    addGoal(certCmd);

    auto* cnfCmd = app.add_subcommand("cnf", "print the clause form of a formula");
    cnfCmd->add_option("TERM", o.term)->required();
    cnfCmd->add_option("--theory", o.theory)->check(CLI::ExistingFile);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg, errs;
        int code = app.exit(e, msg, errs);
        out << msg.str();
        err << errs.str();
        return code == 0 ? ExitOk : ExitInput;
    }
    if (!o.dump.empty()) o.cfg.dumpDir = o.dump;

    try {
        if (*checkCmd) return check(o, out);
        if (*tautCmd) return taut(o, out);
        if (*proveCmd) return prove(o, out, false);
        if (*certCmd) return prove(o, out, true);
        return cnf(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const NotFirstOrder& e) {
        err << "error: " << e.what() << "\n";
        return ExitFailed;
    } catch (const KernelError& e) {
        err << "error: " << e.what() << "\n";
    }
    return ExitInput;
}

}  // namespace lcf::cli
