#pragma once

#include "tdl/bigint.hpp"
#include "tdl/digraph.hpp"
#include "tdl/pattern.hpp"
#include "tdl/weight.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tdl {

struct ExtremalQuery {
    int n = 1;
    Pattern pattern;
    GraphFamily family = GraphFamily::digraph;
    Weight weight = Weight::two();
    std::size_t witness_cap = 100000;
    int jobs = 1;
    /// Search refused above this order (0 = family default: 8 for digraphs,
    /// 9 for oriented graphs).
    int n_limit = 0;
};

struct ExtremalResult {
    ExtremalQuery query;
    WeightedSize optimum;
    /// Every pattern-free graph attaining the optimum value, in canonical
    /// enumeration order, truncated to witness_cap.
    std::vector<Digraph> witnesses;
    std::uint64_t witness_count = 0;  // before truncation
    /// Nodes visited while enumerating optimal completions with the final
    /// optimum as the pruning bound; schedule-independent.
    std::uint64_t node_count = 0;
};

/// Exact weighted Turan number by branch and bound over pair states, with
/// witness enumeration. Deterministic given the query.
ExtremalResult extremal_number(const ExtremalQuery& query);

/// Independent oracle: iterate every labelled graph of the family, keep the
/// pattern-free ones (whole-graph detection, no shared search path), and
/// maximise each weight. One pass for all weights.
std::vector<WeightedSize> census_extremal_maximum(int n, GraphFamily family,
                                                  const Pattern& pattern,
                                                  const std::vector<Weight>& weights);

struct TuranFormulaRow {
    int k = 0, n = 0;
    std::string pattern;
    WeightedSize expected;
    WeightedSize got;
    std::uint64_t witness_count = 0;
    bool witnesses_match_turan = true;  // T-patterns only
    bool ok = false;
};

struct TuranFormulaReport {
    std::vector<TuranFormulaRow> rows;
    bool pass = true;
};

/// For each (k, n): checks the closed extremal formulas — a*t_k(n) for
/// forbidden T_{k+1} (weights with 3/2 < a <= 2) and the clique-chain value
/// for forbidden C_{k+1} (1 <= a <= 2) — and, for the T case, that every
/// witness is isomorphic to the doubled Turan graph.
TuranFormulaReport verify_turan_formula(int k_min, int k_max, int n_min, int n_max,
                                        const Weight& weight, bool cycles, int jobs = 1);

struct PartiteBoundReport {
    int k = 0, n = 0;
    long long s_num = 0, s_den = 1;
    std::uint64_t compositions_checked = 0;
    std::uint64_t violations = 0;
    bool pass = false;
};

/// Exhaustively iterates the k-part compositions of n that have a class
/// deviating from n/k by at least s (= s_num/s_den) and checks the complete
/// multipartite edge count against t_k(n) - s(s/2 - k). Exact rational
/// arithmetic.
PartiteBoundReport unbalanced_partite_bound_check(int k, int n, long long s_num,
                                                  long long s_den = 1);

struct StabilityReport {
    int n = 0;
    std::string pattern;
    GraphFamily family = GraphFamily::digraph;
    Weight weight = Weight::two();
    long long deficit = 0;
    std::string target;  // which family distances are measured against
    BigInt graphs = 0;
    long long max_distance = -1;  // -1 when no graph qualifies
    std::string argmax_text;
    std::map<long long, BigInt> distance_histogram;
};

/// Enumerates every pattern-free graph whose weighted size is within
/// `deficit` (in f1 units) of the optimum and measures its exact edit
/// distance to the structural target: the doubled Turan graph for T
/// patterns; acyclic graphs for C patterns (weight < 2 or even forbidden
/// cycle); transitive-bipartite blow-up subgraphs for the odd digraph case.
StabilityReport stability_probe(int n, const Pattern& pattern, GraphFamily family,
                                const Weight& weight, long long deficit, int jobs = 1);

}  // namespace tdl
