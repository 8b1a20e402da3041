#include "tdl/switching.hpp"

#include "tdl/census.hpp"
#include "tdl/errors.hpp"
#include "tdl/order.hpp"
#include "tdl/parallel.hpp"
#include "tdl/pattern.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace tdl {

namespace {

// Enumerates labelled acyclic oriented graphs by assigning pair states in
// lexicographic order and refusing any edge that would close a directed
// cycle (pruning whole subtrees: an edge once placed stays placed).
struct DagEnumerator {
    int n;
    int edge_cap;  // 0 = unlimited
    std::vector<std::pair<int, int>> pairs;

    DagEnumerator(int n_, int edge_cap_) : n(n_), edge_cap(edge_cap_) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }

    template <typename Leaf>
    void walk(Digraph& g, int depth, int edges, const Leaf& leaf) const {
        if (depth == static_cast<int>(pairs.size())) {
            leaf(g);
            return;
        }
        auto [u, v] = pairs[static_cast<unsigned>(depth)];
        walk(g, depth + 1, edges, leaf);  // absent
        if (edge_cap && edges >= edge_cap) return;
        if (!edge_closes_cycle(g, u, v)) {
            g.add_edge(u, v);
            walk(g, depth + 1, edges + 1, leaf);
            g.remove_edge(u, v);
        }
        if (!edge_closes_cycle(g, v, u)) {
            g.add_edge(v, u);
            walk(g, depth + 1, edges + 1, leaf);
            g.remove_edge(v, u);
        }
    }

    template <typename Leaf>
    void walk_parallel(int jobs, const Leaf& leaf_of_unit) const {
        int split = jobs > 1 ? std::min<int>(4, static_cast<int>(pairs.size())) : 0;
        struct Prefix {
            Digraph g;
            int edges;
        };
        std::vector<Prefix> prefixes;
        Digraph g(n);
        std::function<void(Digraph&, int, int)> collect = [&](Digraph& cur, int depth,
                                                              int edges) {
            if (depth == split) {
                prefixes.push_back({cur, edges});
                return;
            }
            auto [u, v] = pairs[static_cast<unsigned>(depth)];
            collect(cur, depth + 1, edges);
            if (!(edge_cap && edges >= edge_cap)) {
                if (!edge_closes_cycle(cur, u, v)) {
                    cur.add_edge(u, v);
                    collect(cur, depth + 1, edges + 1);
                    cur.remove_edge(u, v);
                }
                if (!edge_closes_cycle(cur, v, u)) {
                    cur.add_edge(v, u);
                    collect(cur, depth + 1, edges + 1);
                    cur.remove_edge(v, u);
                }
            }
        };
        collect(g, 0, 0);
        run_units(prefixes.size(), jobs, [&](std::uint64_t idx, int worker) {
            Digraph local = prefixes[idx].g;
            leaf_of_unit(local, split, prefixes[idx].edges, idx, worker);
        });
    }
};

BigInt two_pow(long long e) { return big_pow(2, static_cast<std::uint64_t>(e)); }

// Enumerates pattern-free oriented graphs by pair-state assignment with
// incremental detection.
struct PatternFreeWalker {
    const Pattern& forbidden;
    int n;
    std::vector<std::pair<int, int>> pairs;

    PatternFreeWalker(const Pattern& p, int n_) : forbidden(p), n(n_) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }

    template <typename Leaf>
    void walk(Digraph& g, int depth, const Leaf& leaf) const {
        if (depth == static_cast<int>(pairs.size())) {
            leaf(g);
            return;
        }
        auto [u, v] = pairs[static_cast<unsigned>(depth)];
        walk(g, depth + 1, leaf);
        g.add_edge(u, v);
        if (!contains_pattern_with_edge(g, forbidden, u, v)) walk(g, depth + 1, leaf);
        g.remove_edge(u, v);
        g.add_edge(v, u);
        if (!contains_pattern_with_edge(g, forbidden, v, u)) walk(g, depth + 1, leaf);
        g.remove_edge(v, u);
    }
};

void check_supported(int n, int cycle_len) {
    if (cycle_len < 3) throw std::invalid_argument("forbidden cycle length must be >= 3");
    if (n < 1 || n > 8)
        throw budget_error("switching checks enumerate the acyclic class; n <= 8",
                           static_cast<std::uint64_t>(n), 8);
}

}  // namespace

int flip_block_size(int cycle_len) { return cycle_len == 3 ? 4 : 3; }

std::vector<FlippableSet> flippable_sets(const Digraph& g, int cycle_len,
                                         OrderingTieBreak tie) {
    if (cycle_len < 3) throw std::invalid_argument("forbidden cycle length must be >= 3");
    auto ordering = transitive_optimal_ordering(g, tie);
    if (ordering.backwards != 0)
        throw std::invalid_argument("flippable sets need an acyclic graph");
    int block = flip_block_size(cycle_len);
    int n = g.order();
    std::vector<int> by_rank(static_cast<unsigned>(n));
    for (int v = 0; v < n; ++v) by_rank[static_cast<unsigned>(ordering.sigma[static_cast<unsigned>(v)])] = v;
    std::vector<FlippableSet> sets;
    for (int start = 0; start + block <= n; start += block) {
        FlippableSet set;
        set.rank = start;
        for (int i = 0; i < block; ++i) set.vertices.push_back(by_rank[static_cast<unsigned>(start + i)]);
        sets.push_back(std::move(set));
    }
    return sets;
}

Digraph flip(const Digraph& g, const std::vector<FlippableSet>& chosen, int cycle_len,
             OrderingTieBreak tie) {
    auto valid = flippable_sets(g, cycle_len, tie);  // also rejects non-acyclic g
    Digraph result = g;
    std::vector<bool> used(valid.size(), false);
    for (const auto& set : chosen) {
        int block = flip_block_size(cycle_len);
        if (set.rank % block != 0 || set.rank / block >= static_cast<int>(valid.size()))
            throw std::invalid_argument("chosen set is not flippable in this graph");
        auto idx = static_cast<std::size_t>(set.rank / block);
        if (used[idx]) throw std::invalid_argument("flippable set chosen twice");
        if (set.vertices != valid[idx].vertices)
            throw std::invalid_argument("chosen set does not match the canonical ordering");
        used[idx] = true;
        const auto& vs = set.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < vs.size(); ++j)
                if (i != j && result.has_edge(vs[i], vs[j])) result.remove_edge(vs[i], vs[j]);
        for (std::size_t i = 0; i < vs.size(); ++i)
            result.add_edge(vs[i], vs[(i + 1) % vs.size()]);
    }
    return result;
}

long long count_induced_cycles(const Digraph& g, int len) {
    int n = g.order();
    if (len < 2 || len > n) return 0;
    long long count = 0;
    std::vector<int> subset;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(subset.size()) == len) {
            // induced edge count must be len with every in/out degree 1
            int edges = 0;
            for (int a : subset)
                for (int b : subset)
                    if (a != b && g.has_edge(a, b)) ++edges;
            if (edges != len) return;
            for (int a : subset) {
                int out = 0, in = 0;
                for (int b : subset) {
                    if (a == b) continue;
                    if (g.has_edge(a, b)) ++out;
                    if (g.has_edge(b, a)) ++in;
                }
                if (out != 1 || in != 1) return;
            }
            // single cycle, not a union of shorter ones: walk must close
            // after exactly len steps
            int start = subset[0];
            int cur = start;
            for (int step = 0; step < len; ++step) {
                for (int b : subset)
                    if (b != cur && g.has_edge(cur, b)) {
                        cur = b;
                        break;
                    }
                if (cur == start && step + 1 < len) return;
            }
            if (cur == start) ++count;
            return;
        }
        int lowest = subset.empty() ? 0 : subset.back() + 1;
        for (int v = lowest; v < n; ++v) {
            subset.push_back(v);
            rec();
            subset.pop_back();
        }
    };
    rec();
    return count;
}

std::map<long long, BigInt> switch_class_sizes(int n, int cycle_len, int jobs,
                                               std::uint64_t budget) {
    CensusOptions options;
    options.n = n;
    options.family = GraphFamily::oriented;
    options.pattern = Pattern::directed_cycle(cycle_len);
    options.predicates = {PredicateSpec{PredicateSpec::Kind::beta_histogram, 0}};
    options.jobs = jobs;
    options.budget = budget;
    auto record = exhaustive_census(options);
    std::map<long long, BigInt> classes;
    for (const auto& [key, count] : record.tallies) {
        if (key.rfind("beta=", 0) != 0) continue;
        classes[std::stoll(key.substr(5))] = count;
    }
    return classes;
}

SwitchForwardReport forward_degree_identity_check(int n, int m2, int cycle_len, int jobs,
                                                  int restricted_edge_max,
                                                  OrderingTieBreak tie) {
    check_supported(n, cycle_len);
    if (m2 < 0) throw std::invalid_argument("m2 must be nonnegative");
    if (n > 6 && restricted_edge_max == 0)
        throw budget_error("full acyclic enumeration needs n <= 6; pass an edge cap for 7..8",
                           static_cast<std::uint64_t>(n), 6);

    SwitchForwardReport report;
    report.n = n;
    report.m2 = m2;
    report.cycle_len = cycle_len;
    report.restricted_edge_max = restricted_edge_max;
    int block = flip_block_size(cycle_len);
    int set_count = n / block;
    report.images_per_source = binomial(static_cast<std::uint64_t>(set_count),
                                        static_cast<std::uint64_t>(m2));
    report.preimage_bound = two_pow(static_cast<long long>(block == 4 ? 8 : 5) * m2);

    Pattern forbidden = Pattern::directed_cycle(cycle_len);
    DagEnumerator enumerator(n, restricted_edge_max);

    struct UnitState {
        BigInt sources = 0;
        std::vector<std::uint64_t> image_codes;
        bool degree_ok = true;
        bool images_ok = true;
    };

    // choices of m2 flippable sets
    std::vector<std::vector<int>> choices;
    {
        std::vector<int> pick;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(pick.size()) == m2) {
                choices.push_back(pick);
                return;
            }
            for (int i = start; i < set_count; ++i) {
                pick.push_back(i);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
    }

    std::mutex state_mutex;
    std::vector<UnitState> collected;
    enumerator.walk_parallel(jobs, [&](Digraph& prefix, int depth, int edges,
                                       std::uint64_t unit, int) {
        UnitState local;
        enumerator.walk(prefix, depth, edges, [&](const Digraph& g) {
            ++local.sources;
            if (choices.empty()) return;  // m2 > floor(n/block): vacuous
            auto sets = flippable_sets(g, cycle_len, tie);
            std::vector<std::uint64_t> seen;
            for (const auto& choice : choices) {
                std::vector<FlippableSet> chosen;
                for (int idx : choice) chosen.push_back(sets[static_cast<unsigned>(idx)]);
                Digraph image = flip(g, chosen, cycle_len, tie);
                std::uint64_t code = pair_code(image);
                seen.push_back(code);
                local.image_codes.push_back(code);
                if (contains_pattern(image, forbidden) || beta(image) != m2 ||
                    count_induced_cycles(image, block) != m2)
                    local.images_ok = false;
            }
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
                local.degree_ok = false;  // two set choices collided
        });
        std::lock_guard<std::mutex> lock(state_mutex);
        collected.push_back(std::move(local));
        (void)unit;
    });

    std::vector<std::uint64_t> all_codes;
    for (auto& unit : collected) {
        report.source_count += unit.sources;
        report.per_source_degree_ok = report.per_source_degree_ok && unit.degree_ok;
        report.images_well_formed = report.images_well_formed && unit.images_ok;
        all_codes.insert(all_codes.end(), unit.image_codes.begin(), unit.image_codes.end());
    }
    std::sort(all_codes.begin(), all_codes.end());
    std::uint64_t max_preimages = 0;
    for (std::size_t i = 0; i < all_codes.size();) {
        std::size_t j = i;
        while (j < all_codes.size() && all_codes[j] == all_codes[i]) ++j;
        ++report.distinct_images;
        max_preimages = std::max<std::uint64_t>(max_preimages, j - i);
        i = j;
    }
    report.max_preimages = max_preimages;
    report.preimage_bound_ok = BigInt(max_preimages) <= report.preimage_bound;
    report.pass = report.per_source_degree_ok && report.images_well_formed &&
                  report.preimage_bound_ok;
    return report;
}

SwitchBackwardReport backward_preimage_bound_check(int n, int m1, int cycle_len, int jobs) {
    check_supported(n, cycle_len);
    if (m1 < 0) throw std::invalid_argument("m1 must be nonnegative");

    SwitchBackwardReport report;
    report.n = n;
    report.m1 = m1;
    report.cycle_len = cycle_len;
    report.bound = binomial(static_cast<std::uint64_t>(n) * n / 2,
                            static_cast<std::uint64_t>(m1)) *
                   two_pow(m1);

    // enumerate C_k-free oriented graphs, keep the beta == m1 class
    Pattern forbidden = Pattern::directed_cycle(cycle_len);
    std::vector<std::uint64_t> image_codes;
    PatternFreeWalker walker(forbidden, n);

    BigInt class_count = 0;
    bool images_acyclic = true;
    Digraph root(n);
    walker.walk(root, 0, [&](const Digraph& g) {
        auto ordering = transitive_optimal_ordering(g);
        if (ordering.backwards != m1) return;
        ++class_count;
        Digraph image = g;
        for (auto [u, v] : g.edges())
            if (ordering.sigma[static_cast<unsigned>(u)] >
                ordering.sigma[static_cast<unsigned>(v)])
                image.remove_edge(u, v);
        if (!is_acyclic(image)) images_acyclic = false;
        image_codes.push_back(pair_code(image));
    });
    (void)jobs;

    report.class_count = class_count;
    report.images_acyclic = images_acyclic;
    std::sort(image_codes.begin(), image_codes.end());
    std::uint64_t max_preimages = 0;
    for (std::size_t i = 0; i < image_codes.size();) {
        std::size_t j = i;
        while (j < image_codes.size() && image_codes[j] == image_codes[i]) ++j;
        ++report.distinct_images;
        max_preimages = std::max<std::uint64_t>(max_preimages, j - i);
        i = j;
    }
    report.max_preimages = max_preimages;
    report.pass = images_acyclic && BigInt(max_preimages) <= report.bound;
    return report;
}

SwitchRatioReport switch_ratio_check(int n, int m1, int m2, int cycle_len, int jobs) {
    check_supported(n, cycle_len);
    SwitchRatioReport report;
    report.n = n;
    report.m1 = m1;
    report.m2 = m2;
    report.cycle_len = cycle_len;
    auto classes = switch_class_sizes(n, cycle_len, jobs);
    auto lookup = [&](int r) { return classes.count(r) ? classes[r] : BigInt(0); };
    report.class_m1 = lookup(m1);
    report.class_m2 = lookup(m2);

    int block = flip_block_size(cycle_len);
    BigInt lhs = report.class_m2 *
                 binomial(static_cast<std::uint64_t>(n) * n / 2,
                          static_cast<std::uint64_t>(m1)) *
                 two_pow(m1) * two_pow(static_cast<long long>(block == 4 ? 8 : 5) * m2);
    BigInt rhs = report.class_m1 * binomial(static_cast<std::uint64_t>(n / block),
                                            static_cast<std::uint64_t>(m2));
    report.pass = lhs >= rhs;
    return report;
}

}  // namespace tdl
