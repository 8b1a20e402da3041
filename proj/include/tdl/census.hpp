#pragma once

#include "tdl/bigint.hpp"
#include "tdl/digraph.hpp"
#include "tdl/pattern.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tdl {

/// Classification predicate evaluated per enumerated graph.
/// Grammar: "k-partite:<k>", "bipartite", "acyclic", "beta-histogram".
struct PredicateSpec {
    enum class Kind { k_partite, bipartite, acyclic, beta_histogram };
    Kind kind = Kind::acyclic;
    int k = 0;

    static std::optional<PredicateSpec> parse(std::string_view s);
    static std::vector<PredicateSpec> parse_list(std::string_view csv);
    std::string to_string() const;
};

struct CensusOptions {
    int n = 1;
    GraphFamily family = GraphFamily::oriented;
    std::optional<Pattern> pattern;
    std::vector<PredicateSpec> predicates;
    int jobs = 1;
    std::uint64_t budget = 0;  // 0 = default (TDL_BUDGET env or 20'000'000 states)
};

struct CensusRecord {
    int n = 1;
    GraphFamily family = GraphFamily::oriented;
    std::string pattern;  // empty when unrestricted
    enum class Mode { exhaustive, monte_carlo } mode = Mode::exhaustive;
    BigInt total = 0;  // pattern-free graphs seen (exact in exhaustive mode)
    /// tallies in a fixed order: one entry per requested predicate, then
    /// "beta=<b>" histogram entries in increasing b.
    std::vector<std::pair<std::string, BigInt>> tallies;
    // Monte Carlo metadata
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t attempts = 0;

    const BigInt* tally(const std::string& key) const;
};

std::uint64_t default_state_budget();

/// Exact number of pair states (3^C(n,2) or 4^C(n,2)) or nullopt when it
/// overflows the budget check range.
BigInt census_space(int n, GraphFamily family);

/// Iterates every labelled graph of the family on n vertices, keeps the
/// pattern-free ones (incremental detection while assigning pair states),
/// evaluates the predicates, and returns exact tallies. Refuses when the
/// state space exceeds the budget. Deterministic, schedule-independent.
CensusRecord exhaustive_census(const CensusOptions& options);

/// Uniform rejection sampling over the family: assign every pair state
/// uniformly, reject graphs containing the pattern. Seeded and reproducible
/// (fixed 64-shard layout, independent of the worker count). Refuses when a
/// probe phase suggests an acceptance rate below 1e-6.
CensusRecord sample_census(const CensusOptions& options, std::uint64_t samples,
                           std::uint64_t seed);

/// Exact count of labelled k-partite graphs of the family, via enumeration
/// of underlying undirected graphs (budget-guarded at 2^C(n,2) states):
/// sum over k-colourable U of 2^e(U) (oriented) or 3^e(U) (digraph).
BigInt count_k_partite(int n, int k, GraphFamily family, std::uint64_t budget = 0);

struct SandwichReport {
    int n = 0, k = 0;
    GraphFamily family = GraphFamily::oriented;
    BigInt count = 0;        // T(n,k) or T*(n,k)
    BigInt upper = 0;        // k^n * base^{t_k(n)}
    // lower bound k^n base^{t_k(n)} / (2 k! n^{k-1}) as an exact fraction
    BigInt lower_num = 0, lower_den = 1;
    // middle bound multinomial * base^{t_k(n)} / (2 k!)
    BigInt middle_num = 0, middle_den = 1;
    bool holds_lower = false, holds_middle = false, holds_upper = false;
    bool asserted = false;  // only at n >= 2k^2; informational below
    bool pass = false;
};

/// Exact k-partite counts against the counting sandwich
/// k^n base^{t_k(n)} / (2 k! n^{k-1}) <= count < k^n base^{t_k(n)}.
/// Asserts only at n >= 2k^2 (the bounds hold for large n); smaller n are
/// reported informationally and always pass.
SandwichReport sandwich_check(int n, int k, GraphFamily family, std::uint64_t budget = 0);

struct TrendRow {
    int n = 0;
    CensusRecord::Mode mode = CensusRecord::Mode::exhaustive;
    BigInt total = 0;
    BigInt hits = 0;
    double fraction = 0.0;
};

struct TrendReport {
    std::string pattern;
    GraphFamily family = GraphFamily::oriented;
    std::string predicate;
    std::vector<TrendRow> rows;
};

/// Predicate fraction per n: exhaustive where the budget allows, seeded
/// sampling beyond. Reports values only; asserts nothing asymptotic.
TrendReport trend_report(const Pattern& pattern, GraphFamily family, int n_min, int n_max,
                         const PredicateSpec& predicate, int jobs = 1,
                         std::uint64_t budget = 0, std::uint64_t samples = 100000,
                         std::uint64_t seed = 1);

}  // namespace tdl
