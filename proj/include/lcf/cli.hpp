#pragma once

// Batch front end: theory files, `by taut` / `by metis`, and artifact dumps.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <string>
#include <vector>

#include "lcf/bridge.hpp"
#include "lcf/syntax.hpp"

namespace lcf::cli {

struct RunConfig {
    std::size_t maxGenerated = 200000;
    bool trace = false;
    std::optional<std::filesystem::path> dumpDir;
};

/// Exit codes.
inline constexpr int ExitOk = 0;
inline constexpr int ExitFailed = 1;
inline constexpr int ExitInput = 2;

/// Unknown lemma name, ill-typed statement and similar input problems.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProofReport {
    bool proved = false;
    std::string name;
    std::size_t generated = 0;
    double millis = 0;
    std::string reason;
    std::optional<Theorem> theorem;
    std::string problem, certificate;  // metis only

    /// `PROVED name (k clauses generated, t ms)` or `FAILED name: reason`.
    std::string line() const;
};

/// Theory state: a theory-level context and named theorems.
class Session {
public:
    explicit Session(RunConfig cfg = {});

    /// Runs every statement of a theory file; theorem outcomes are reported
    /// through `out`. Returns false when some theorem failed.
    bool runScript(const TheoryScript& script, std::ostream& out);
    bool runFile(const std::filesystem::path& file, std::ostream& out);
    /// Declarations and axioms only; theorems are reported like runScript.
    void loadStdlib(const std::filesystem::path& file);

    ProofReport runStatement(const Statement& st);

    ProofReport taut(const std::string& name, const Term& goal);
    ProofReport metis(const std::string& name, const Term& goal, const std::vector<std::string>& lemmas);

    Term parse(const std::string& text) const;
    std::optional<Theorem> theorem(const std::string& name) const;
    const Context& context() const { return ctx_; }
    const RunConfig& config() const { return cfg_; }

private:
    void dump(const ProofReport& r) const;

    RunConfig cfg_;
    Context ctx_;
    std::map<std::string, Theorem> theorems_;
    std::set<std::string> failed_;
};

/// Path of the ZF stdlib: $METIS_LCF_STDLIB, else the installed default.
std::filesystem::path stdlibPath();

/// Entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcf::cli
