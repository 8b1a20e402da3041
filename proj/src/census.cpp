#include "tdl/census.hpp"

#include "tdl/construct.hpp"
#include "tdl/errors.hpp"
#include "tdl/order.hpp"
#include "tdl/parallel.hpp"
#include "tdl/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace tdl {

namespace {

constexpr std::uint64_t kDefaultBudget = 20'000'000;

std::uint64_t resolve_budget(std::uint64_t requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("TDL_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

struct LocalTally {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> predicate_hits;
    std::map<long long, std::uint64_t> beta_hist;
};

struct Evaluator {
    const std::vector<PredicateSpec>& predicates;
    bool want_beta;

    explicit Evaluator(const std::vector<PredicateSpec>& preds)
        : predicates(preds),
          want_beta(std::any_of(preds.begin(), preds.end(), [](const PredicateSpec& p) {
              return p.kind == PredicateSpec::Kind::beta_histogram;
          })) {}

    void account(const Digraph& g, LocalTally& tally) const {
        ++tally.total;
        for (std::size_t i = 0; i < predicates.size(); ++i) {
            const auto& p = predicates[i];
            bool hit = false;
            switch (p.kind) {
                case PredicateSpec::Kind::k_partite: hit = is_k_partite(g, p.k); break;
                case PredicateSpec::Kind::bipartite: hit = is_k_partite(g, 2); break;
                case PredicateSpec::Kind::acyclic: hit = is_acyclic(g); break;
                case PredicateSpec::Kind::beta_histogram: continue;
            }
            if (hit) ++tally.predicate_hits[i];
        }
        if (want_beta) ++tally.beta_hist[beta(g)];
    }
};

// Depth-first assignment of pair states in lexicographic pair order with
// incremental pattern pruning: once a copy of the pattern appears through
// the newly assigned pair, the whole subtree is pattern-bearing.
struct Enumerator {
    int n;
    GraphFamily family;
    const Pattern* pattern;
    std::vector<std::pair<int, int>> pairs;
    int radix;

    Enumerator(int n_, GraphFamily family_, const Pattern* pattern_)
        : n(n_), family(family_), pattern(pattern_),
          radix(family_ == GraphFamily::digraph ? 4 : 3) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }

    // states: 0 absent, 1 forward, 2 backward, 3 both (digraph only)
    bool apply(Digraph& g, int depth, int state) const {
        auto [u, v] = pairs[static_cast<unsigned>(depth)];
        bool fwd = state == 1 || state == 3;
        bool bwd = state == 2 || state == 3;
        if (fwd) g.add_edge(u, v);
        if (bwd) g.add_edge(v, u);
        if (pattern && (fwd || bwd) &&
            contains_pattern_with_pair(g, *pattern, u, v, fwd, bwd)) {
            if (fwd) g.remove_edge(u, v);
            if (bwd) g.remove_edge(v, u);
            return false;
        }
        return true;
    }

    void undo(Digraph& g, int depth, int state) const {
        auto [u, v] = pairs[static_cast<unsigned>(depth)];
        if (state == 1 || state == 3) g.remove_edge(u, v);
        if (state == 2 || state == 3) g.remove_edge(v, u);
    }

    // Parallel walk: fixed prefix depth, units processed by a worker pool,
    // merged in unit order by the caller.
    template <typename Leaf>
    void walk_parallel(int jobs, std::vector<LocalTally>& tallies, const Evaluator& eval,
                       const Leaf& leaf_of) const {
        int split = 0;
        std::uint64_t width = 1;
        while (split < static_cast<int>(pairs.size()) &&
               width < static_cast<std::uint64_t>(jobs) * 64)
            width *= static_cast<std::uint64_t>(radix), ++split;
        if (jobs <= 1) split = 0;

        std::vector<Digraph> prefixes;
        Digraph g(n);
        collect_prefixes(g, 0, split, prefixes);
        tallies.assign(prefixes.size(), LocalTally{});
        for (auto& t : tallies) t.predicate_hits.assign(eval.predicates.size(), 0);
        run_units(prefixes.size(), jobs, [&](std::uint64_t idx, int) {
            Digraph local = prefixes[idx];
            walk_from(local, split, [&](const Digraph& leaf_graph) {
                leaf_of(leaf_graph, tallies[idx]);
            });
        });
    }

    void collect_prefixes(Digraph& g, int depth, int split, std::vector<Digraph>& out) const {
        if (depth == split) {
            out.push_back(g);
            return;
        }
        for (int state = 0; state < radix; ++state) {
            if (!apply(g, depth, state)) continue;
            collect_prefixes(g, depth + 1, split, out);
            undo(g, depth, state);
        }
    }

    template <typename Leaf>
    void walk_from(Digraph& g, int depth, const Leaf& leaf) const {
        if (depth == static_cast<int>(pairs.size())) {
            leaf(g);
            return;
        }
        for (int state = 0; state < radix; ++state) {
            if (!apply(g, depth, state)) continue;
            walk_from(g, depth + 1, leaf);
            undo(g, depth, state);
        }
    }
};

CensusRecord merge_tallies(const CensusOptions& options, std::vector<LocalTally>& tallies) {
    CensusRecord record;
    record.n = options.n;
    record.family = options.family;
    if (options.pattern) record.pattern = options.pattern->to_string();
    std::vector<BigInt> predicate_sums(options.predicates.size(), 0);
    std::map<long long, BigInt> beta_hist;
    for (const auto& t : tallies) {
        record.total += t.total;
        for (std::size_t i = 0; i < predicate_sums.size(); ++i)
            predicate_sums[i] += t.predicate_hits[i];
        for (const auto& [b, c] : t.beta_hist) beta_hist[b] += c;
    }
    for (std::size_t i = 0; i < options.predicates.size(); ++i) {
        if (options.predicates[i].kind == PredicateSpec::Kind::beta_histogram) continue;
        record.tallies.emplace_back(options.predicates[i].to_string(), predicate_sums[i]);
    }
    for (const auto& [b, c] : beta_hist)
        record.tallies.emplace_back("beta=" + std::to_string(b), c);
    return record;
}

}  // namespace

std::optional<PredicateSpec> PredicateSpec::parse(std::string_view s) {
    PredicateSpec spec;
    if (s == "bipartite") {
        spec.kind = Kind::bipartite;
        return spec;
    }
    if (s == "acyclic") {
        spec.kind = Kind::acyclic;
        return spec;
    }
    if (s == "beta-histogram") {
        spec.kind = Kind::beta_histogram;
        return spec;
    }
    constexpr std::string_view prefix = "k-partite:";
    if (s.substr(0, prefix.size()) == prefix) {
        int k = std::atoi(std::string(s.substr(prefix.size())).c_str());
        if (k < 1) return std::nullopt;
        spec.kind = Kind::k_partite;
        spec.k = k;
        return spec;
    }
    return std::nullopt;
}

std::vector<PredicateSpec> PredicateSpec::parse_list(std::string_view csv) {
    std::vector<PredicateSpec> result;
    while (!csv.empty()) {
        auto comma = csv.find(',');
        auto item = comma == std::string_view::npos ? csv : csv.substr(0, comma);
        csv = comma == std::string_view::npos ? std::string_view{} : csv.substr(comma + 1);
        auto spec = parse(item);
        if (!spec) throw std::invalid_argument("unknown predicate: '" + std::string(item) + "'");
        result.push_back(*spec);
    }
    return result;
}

std::string PredicateSpec::to_string() const {
    switch (kind) {
        case Kind::k_partite: return "k-partite:" + std::to_string(k);
        case Kind::bipartite: return "bipartite";
        case Kind::acyclic: return "acyclic";
        case Kind::beta_histogram: return "beta-histogram";
    }
    return {};
}

const BigInt* CensusRecord::tally(const std::string& key) const {
    for (const auto& [k, v] : tallies)
        if (k == key) return &v;
    return nullptr;
}

std::uint64_t default_state_budget() { return resolve_budget(0); }

BigInt census_space(int n, GraphFamily family) {
    int m = n * (n - 1) / 2;
    return big_pow(family == GraphFamily::digraph ? 4 : 3,
                   static_cast<std::uint64_t>(m));
}

CensusRecord exhaustive_census(const CensusOptions& options) {
    if (options.n < 1 || options.n > kMaxVertices)
        throw std::invalid_argument("census needs 1 <= n <= 64");
    std::uint64_t budget = resolve_budget(options.budget);
    BigInt space = census_space(options.n, options.family);
    if (space > budget)
        throw budget_error("exhaustive census refused: state space " + space.str() +
                               " exceeds budget " + std::to_string(budget),
                           space > BigInt(UINT64_MAX) ? UINT64_MAX
                                                      : static_cast<std::uint64_t>(space),
                           budget);

    Evaluator eval(options.predicates);
    const Pattern* pattern = options.pattern ? &*options.pattern : nullptr;
    Enumerator enumerator(options.n, options.family, pattern);

    std::vector<LocalTally> tallies;
    if (pattern && contains_pattern(Digraph(options.n), *pattern)) {
        // even the empty graph contains the pattern: empty census
        tallies.assign(1, LocalTally{});
        tallies[0].predicate_hits.assign(options.predicates.size(), 0);
    } else {
        enumerator.walk_parallel(options.jobs, tallies, eval,
                                 [&](const Digraph& g, LocalTally& t) { eval.account(g, t); });
    }
    auto record = merge_tallies(options, tallies);
    record.mode = CensusRecord::Mode::exhaustive;
    return record;
}

CensusRecord sample_census(const CensusOptions& options, std::uint64_t samples,
                           std::uint64_t seed) {
    if (options.n < 1 || options.n > kMaxVertices)
        throw std::invalid_argument("census needs 1 <= n <= 64");
    if (samples < 1) throw std::invalid_argument("sampling needs samples >= 1");

    int radix = options.family == GraphFamily::digraph ? 4 : 3;
    const Pattern* pattern = options.pattern ? &*options.pattern : nullptr;

    auto draw = [&](SplitMix64& rng, Digraph& g) {
        // fixed consumption: one draw per pair, then test
        int p = 0;
        for (int u = 0; u < options.n; ++u)
            for (int v = u + 1; v < options.n; ++v, ++p) {
                auto state = rng.below(static_cast<std::uint64_t>(radix));
                if (state == 1 || state == 3) g.add_edge(u, v);
                if (state == 2 || state == 3) g.add_edge(v, u);
            }
        return !pattern || !contains_pattern(g, *pattern);
    };

    if (pattern) {
        // probe: refuse when rejection sampling is plainly infeasible
        SplitMix64 probe = SplitMix64::for_shard(seed, 0xffffffffull);
        bool hit = false;
        constexpr std::uint64_t kProbeAttempts = 1'000'000;
        for (std::uint64_t i = 0; i < kProbeAttempts && !hit; ++i) {
            Digraph g(options.n);
            hit = draw(probe, g);
        }
        if (!hit)
            throw budget_error("rejection sampling refused: acceptance rate below 1e-6",
                               kProbeAttempts, 0);
    }

    Evaluator eval(options.predicates);
    constexpr std::uint64_t kShards = 64;
    std::vector<LocalTally> tallies(kShards);
    for (auto& t : tallies) t.predicate_hits.assign(options.predicates.size(), 0);
    std::vector<std::uint64_t> attempts(kShards, 0);

    run_units(kShards, options.jobs, [&](std::uint64_t shard, int) {
        std::uint64_t target = samples / kShards + (shard < samples % kShards ? 1 : 0);
        SplitMix64 rng = SplitMix64::for_shard(seed, shard);
        std::uint64_t accepted = 0;
        while (accepted < target) {
            Digraph g(options.n);
            ++attempts[shard];
            if (!draw(rng, g)) continue;
            ++accepted;
            eval.account(g, tallies[shard]);
        }
    });

    auto record = merge_tallies(options, tallies);
    record.mode = CensusRecord::Mode::monte_carlo;
    record.samples = samples;
    record.seed = seed;
    for (auto a : attempts) record.attempts += a;
    return record;
}

BigInt count_k_partite(int n, int k, GraphFamily family, std::uint64_t budget) {
    if (n < 1 || k < 1) throw std::invalid_argument("count_k_partite needs n, k >= 1");
    std::uint64_t allowed = resolve_budget(budget);
    int m = n * (n - 1) / 2;
    BigInt space = big_pow(2, static_cast<std::uint64_t>(m));
    if (space > allowed)
        throw budget_error("k-partite count refused: 2^" + std::to_string(m) +
                               " underlying graphs exceed budget " + std::to_string(allowed),
                           space > BigInt(UINT64_MAX) ? UINT64_MAX
                                                      : static_cast<std::uint64_t>(space),
                           allowed);

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    // Each k-colourable underlying graph U lifts to 2^e(U) oriented or
    // 3^e(U) directed graphs whose adjacency is exactly U.
    int base = family == GraphFamily::digraph ? 3 : 2;
    std::vector<BigInt> base_pow(static_cast<unsigned>(m + 1));
    base_pow[0] = 1;
    for (int i = 1; i <= m; ++i) base_pow[static_cast<unsigned>(i)] = base_pow[static_cast<unsigned>(i - 1)] * base;

    BigInt total = 0;
    std::uint64_t subsets = 1ull << m;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        Digraph g(n);
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1u) g.add_edge(pairs[static_cast<unsigned>(i)].first,
                                             pairs[static_cast<unsigned>(i)].second);
        if (!is_k_partite(g, k)) continue;
        total += base_pow[static_cast<unsigned>(std::popcount(mask))];
    }
    return total;
}

SandwichReport sandwich_check(int n, int k, GraphFamily family, std::uint64_t budget) {
    SandwichReport report;
    report.n = n;
    report.k = k;
    report.family = family;
    report.count = count_k_partite(n, k, family, budget);

    int base = family == GraphFamily::digraph ? 4 : 3;
    BigInt base_t = big_pow(static_cast<std::uint64_t>(base),
                            static_cast<std::uint64_t>(turan_edge_count(k, n)));
    BigInt k_n = big_pow(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n));
    report.upper = k_n * base_t;
    report.lower_num = k_n * base_t;
    report.lower_den = 2 * factorial(static_cast<std::uint64_t>(k)) *
                       big_pow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k - 1));

    BigInt multinomial = factorial(static_cast<std::uint64_t>(n));
    for (int size : turan_class_sizes(k, n))
        multinomial /= factorial(static_cast<std::uint64_t>(size));
    report.middle_num = multinomial * base_t;
    report.middle_den = 2 * factorial(static_cast<std::uint64_t>(k));

    report.holds_lower = report.lower_num <= report.count * report.lower_den;
    report.holds_middle = report.middle_num <= report.count * report.middle_den;
    report.holds_upper = report.count < report.upper;
    report.asserted = n >= 2 * k * k;
    report.pass = !report.asserted ||
                  (report.holds_lower && report.holds_middle && report.holds_upper);
    return report;
}

TrendReport trend_report(const Pattern& pattern, GraphFamily family, int n_min, int n_max,
                         const PredicateSpec& predicate, int jobs, std::uint64_t budget,
                         std::uint64_t samples, std::uint64_t seed) {
    TrendReport report;
    report.pattern = pattern.to_string();
    report.family = family;
    report.predicate = predicate.to_string();
    std::uint64_t allowed = resolve_budget(budget);
    for (int n = n_min; n <= n_max; ++n) {
        CensusOptions options;
        options.n = n;
        options.family = family;
        options.pattern = pattern;
        options.predicates = {predicate};
        options.jobs = jobs;
        options.budget = allowed;
        CensusRecord record;
        if (census_space(n, family) <= allowed)
            record = exhaustive_census(options);
        else
            record = sample_census(options, samples, seed);
        TrendRow row;
        row.n = n;
        row.mode = record.mode;
        row.total = record.total;
        // beta-histogram trends report the acyclic slice (beta = 0)
        std::string key = predicate.kind == PredicateSpec::Kind::beta_histogram
                              ? "beta=0"
                              : predicate.to_string();
        if (const BigInt* hits = record.tally(key)) row.hits = *hits;
        if (record.total > 0)
            row.fraction = static_cast<double>(row.hits) / static_cast<double>(record.total);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace tdl
