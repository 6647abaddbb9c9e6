#pragma once

// Subcommand implementations behind the CLI. Each returns a RunReport whose
// exit code is 0 exactly when every item passed; configuration and usage
// problems surface as Error exceptions instead.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quartic/corpus.hpp"
#include "quartic/identities.hpp"

namespace quartic {

struct ReportItem {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct RunReport {
    std::string command;
    std::vector<ReportItem> items;
    double wall_seconds = 0.0;

    void add(std::string label, bool pass, std::string detail = {});
    std::size_t passed() const;
    bool ok() const { return passed() == items.size(); }
    int exit_code() const { return ok() ? 0 : 1; }

    /// One "PASS|FAIL label  detail" line per item and an "N/M verified"
    /// summary. Deterministic; wall time is not included.
    void print(std::ostream& out) const;
};

RunReport cmd_tables(std::span<const CorpusRow> rows);
RunReport cmd_tables();

struct SolveOptions {
    Variant variant = Variant::FivePlus;
    int k = 0;
    std::size_t count = 1;
    std::size_t max_digits = kDefaultMaxDigits;
    int branch = 1;
    /// Overrides the config's seed point.
    std::optional<CurvePoint> seed;
    /// Scan bound for an integral seed when the negative branch has none.
    std::int64_t seed_search_bound = 100'000;
    /// Config source; the built-in registry when empty.
    std::vector<FamilyConfig> configs;
};

struct SolveResult {
    RunReport report;
    std::vector<GeneratedSolution> solutions;
};

/// Throws UnknownConfig for (variant, k) pairs without a configuration.
SolveResult cmd_solve(const SolveOptions& options);

enum class CheckCategory { Identities, Families, Curves };

CheckCategory parse_check_category(std::string_view text);
RunReport cmd_check(CheckCategory category);

struct SearchResult {
    RunReport report;
    std::vector<std::vector<Integer>> tuples;
};

/// Content defaults to the registry sextuple's content for (variant, k),
/// or 1 when no config exists.
SearchResult cmd_search(Variant variant, int k, int bound, std::optional<Rational> content = std::nullopt);

RunReport cmd_verify(std::span<const GeneratedSolution> solutions);

struct FamiliesResult {
    RunReport report;
    std::vector<GeneratedSolution> solutions;
};

/// Evaluates the k = 2 or k = 5 family for n in [from, to]. With as_printed
/// the k = 2 coefficients are taken verbatim, typos included.
FamiliesResult cmd_families(int k, long from, long to, bool as_printed = false);

}  // namespace quartic
