#pragma once

#include "tdl/bigint.hpp"
#include "tdl/digraph.hpp"
#include "tdl/pattern.hpp"

#include <cstdint>
#include <vector>

namespace tdl {

/// Uniform hypergraph whose ground set is the N(N-1) ordered pairs over [N]
/// and whose edges are the e(H)-subsets forming a labelled copy of H.
struct PatternHypergraph {
    int ground_n = 0;           // N(N-1)
    int base_n = 0;             // N
    int r = 0;                  // uniformity = e(H)
    std::vector<std::vector<std::uint32_t>> edges;  // sorted pair ids

    /// id of the ordered pair (i, j), i != j, over [N]
    static std::uint32_t pair_id(int i, int j, int base_n);
};

/// Builds the full edge list by enumerating injections of V(H) into [N] and
/// deduplicating edge sets. Budget-guarded.
PatternHypergraph build_pattern_hypergraph(int base_n, const Digraph& h);

/// max over subgraphs H' of H with e(H') >= 2 of (e(H')-1)/(v(H')-2), as an
/// exact reduced fraction. Exhaustive over edge subsets. Rejects patterns
/// with fewer than 2 edges or with a doubled pair (where the maximum is
/// unbounded).
struct Density {
    long long num = 0;
    long long den = 1;
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};
Density m_density(const Digraph& h);

struct CoDegreeProfile {
    double tau = 0;
    int ground_n = 0;
    int r = 0;
    std::uint64_t edge_count = 0;
    long double average_degree = 0;  // r * e / ground_n
    std::vector<BigInt> degree_sums;  // sum_v d^(j)(v) for j = 2..r (exact)
    std::vector<long double> delta_j;  // j = 2..r
    long double delta = 0;
};

/// The co-degree statistic: delta_j tau^{j-1} n d = sum_v d^(j)(v), and
/// delta = 2^{C(r,2)-1} sum_{j=2..r} 2^{-C(j-1,2)} delta_j. Degree sums are
/// exact integers; delta_j is evaluated in extended precision.
CoDegreeProfile co_degree(const PatternHypergraph& dh, double tau);

struct DeltaBoundRow {
    int base_n = 0;
    double tau = 0;
    long double delta = 0;
    long double bound = 0;  // r 2^{r^2} v(H)!^2 gamma
    long double margin = 0;  // bound - delta
    bool asserted = false;   // only at base_n >= 8 for 3-edge patterns
    bool ok = false;
};

struct DeltaBoundReport {
    std::string pattern;
    double gamma = 1.0;
    std::vector<DeltaBoundRow> rows;
    bool pass = true;
};

/// Evaluates delta(D(N,H), gamma^{-1} N^{-1/m(H)}) against
/// r 2^{r^2} v(H)!^2 gamma for each N in the range. Asserts the bound only
/// where the guarantee plausibly applies (N >= 8 for 3-edge patterns),
/// reporting the margin everywhere. Rejects gamma > 1.
DeltaBoundReport delta_bound_check(const Digraph& h, const std::string& pattern_name,
                                   double gamma, int n_min, int n_max);

}  // namespace tdl
