#include "tdl/order.hpp"

#include "tdl/construct.hpp"
#include "tdl/errors.hpp"
#include "tdl/pattern.hpp"
#include "tdl/rng.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace tdl {

namespace {

constexpr int kBetaExactLimit = 22;

// h[S] = cheapest way to extend the prefix set S to a full ordering, where
// appending v after prefix S pays |out(v) & S| backwards edges.
std::vector<std::uint16_t> suffix_cost_table(const Digraph& g) {
    int n = g.order();
    std::size_t states = std::size_t{1} << n;
    std::vector<std::uint16_t> h(states, 0);
    for (std::size_t s = states - 1; s + 1 != 0; --s) {
        std::uint64_t rest = g.vertex_mask() & ~s;
        if (rest == 0) continue;
        unsigned best = std::numeric_limits<unsigned>::max();
        std::uint64_t m = rest;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            unsigned c = static_cast<unsigned>(std::popcount(g.out_mask(v) & s)) +
                         h[s | (1ull << v)];
            best = std::min(best, c);
        }
        h[s] = static_cast<std::uint16_t>(best);
        if (s == 0) break;
    }
    return h;
}

}  // namespace

long long backwards_edges(const Digraph& g, const std::vector<int>& sigma) {
    long long count = 0;
    for (auto [u, v] : g.edges())
        if (sigma[static_cast<unsigned>(u)] > sigma[static_cast<unsigned>(v)]) ++count;
    return count;
}

VertexOrdering transitive_optimal_ordering(const Digraph& g, OrderingTieBreak tie) {
    int n = g.order();
    if (n > kBetaExactLimit)
        throw budget_error("exact feedback-arc solver refused: n > " +
                               std::to_string(kBetaExactLimit),
                           static_cast<std::uint64_t>(n), kBetaExactLimit);
    auto h = suffix_cost_table(g);
    VertexOrdering result;
    result.sigma.assign(static_cast<unsigned>(n), 0);
    result.backwards = h[0];
    // Greedy front-to-back recovery; at each rank take the extreme vertex
    // (per tie-break) that still reaches the optimum.
    std::uint64_t prefix = 0;
    for (int rank = 0; rank < n; ++rank) {
        std::uint64_t rest = g.vertex_mask() & ~prefix;
        int chosen = -1;
        while (rest) {
            int v = tie == OrderingTieBreak::lex_smallest
                        ? std::countr_zero(rest)
                        : 63 - std::countl_zero(rest);
            rest &= ~(1ull << v);
            unsigned c = static_cast<unsigned>(std::popcount(g.out_mask(v) & prefix)) +
                         h[prefix | (1ull << v)];
            if (c == h[prefix]) {
                chosen = v;
                break;
            }
        }
        result.sigma[static_cast<unsigned>(chosen)] = rank;
        prefix |= 1ull << chosen;
    }
    return result;
}

long long beta(const Digraph& g) {
    if (g.order() > kBetaExactLimit)
        throw budget_error("exact feedback-arc solver refused: n > " +
                               std::to_string(kBetaExactLimit),
                           static_cast<std::uint64_t>(g.order()), kBetaExactLimit);
    return suffix_cost_table(g)[0];
}

long long beta_brute_force(const Digraph& g) {
    std::vector<int> perm(static_cast<unsigned>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    long long best = std::numeric_limits<long long>::max();
    std::vector<int> sigma(static_cast<unsigned>(g.order()));
    do {
        for (int rank = 0; rank < g.order(); ++rank)
            sigma[static_cast<unsigned>(perm[static_cast<unsigned>(rank)])] = rank;
        best = std::min(best, backwards_edges(g, sigma));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

void css_account(const Digraph& g, CssReport& report) {
    long long b = beta(g);
    long long c = nonadjacent_pairs(g);
    if (b > c) {
        ++report.violations;
        if (report.witness_text.empty()) report.witness_text = g.to_text();
        return;
    }
    if (c > 0 &&
        b * report.max_ratio_gamma > report.max_ratio_beta * c) {
        report.max_ratio_beta = b;
        report.max_ratio_gamma = c;
        report.witness_text = g.to_text();
    }
}

}  // namespace

CssReport css_check(int n_max) {
    if (n_max < 1 || n_max > 5)
        throw budget_error("css_check enumerates the full digraph space; n_max <= 5",
                           static_cast<std::uint64_t>(n_max), 5);
    CssReport report;
    report.n_max = n_max;
    Pattern c3 = Pattern::directed_cycle(3);
    for (int n = 1; n <= n_max; ++n) {
        int m = n * (n - 1) / 2;
        std::uint64_t states = 1;
        for (int i = 0; i < m; ++i) states *= 4;
        for (std::uint64_t code = 0; code < states; ++code) {
            // skip codes with a doubled pair (C_2) cheaply
            bool doubled = false;
            for (int p = 0; p < m && !doubled; ++p)
                if (((code >> (2 * p)) & 3u) == 3u) doubled = true;
            if (doubled) continue;
            Digraph g = from_pair_code(n, code);
            if (contains_pattern(g, c3)) continue;
            ++report.graphs_checked;
            css_account(g, report);
        }
    }
    report.pass = report.violations == 0;
    return report;
}

CssReport css_sample_check(int n, std::uint64_t samples, std::uint64_t seed) {
    if (n < 1 || n > kBetaExactLimit)
        throw std::invalid_argument("css_sample_check needs 1 <= n <= 22");
    CssReport report;
    report.n_max = n;
    Pattern c3 = Pattern::directed_cycle(3);
    SplitMix64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        Digraph g(n);
        bool doubled = false;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                auto state = rng.below(4);
                if (state == 3) doubled = true;
                if (state & 1u) g.add_edge(u, v);
                if (state & 2u) g.add_edge(v, u);
            }
        if (doubled) continue;  // C_2
        if (contains_pattern(g, c3)) continue;
        ++report.graphs_checked;
        css_account(g, report);
    }
    report.pass = report.violations == 0;
    return report;
}

long long non_crossing_edges(const Digraph& g, const std::vector<int>& classes) {
    long long count = 0;
    for (auto [u, v] : g.edges())
        if (classes[static_cast<unsigned>(u)] == classes[static_cast<unsigned>(v)]) ++count;
    return count;
}

namespace {

constexpr int kPartitionExactLimit = 24;

struct PartitionSearch {
    const Digraph& g;
    int k;
    bool stop_at_zero;
    std::vector<int> classes;
    std::vector<int> best_classes;
    long long best = std::numeric_limits<long long>::max();
    std::vector<std::uint64_t> class_masks;

    PartitionSearch(const Digraph& g_, int k_, bool stop_at_zero_)
        : g(g_), k(k_), stop_at_zero(stop_at_zero_),
          classes(static_cast<unsigned>(g_.order()), -1),
          class_masks(static_cast<unsigned>(k_), 0) {
        if (stop_at_zero) best = 1;  // prune any branch that already pays
    }

    // Assign vertices in label order; trying class values in increasing
    // order makes the first optimum found the lexicographically least one.
    bool assign(int v, long long cost, int used) {
        if (cost >= best) return false;  // also prunes later ties, keeping the first
        if (v == g.order()) {
            best = cost;
            best_classes = classes;
            return stop_at_zero && cost == 0;
        }
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            std::uint64_t members = class_masks[static_cast<unsigned>(c)];
            long long extra = std::popcount(g.out_mask(v) & members) +
                              std::popcount(g.in_mask(v) & members);
            classes[static_cast<unsigned>(v)] = c;
            class_masks[static_cast<unsigned>(c)] |= 1ull << v;
            bool done = assign(v + 1, cost + extra, std::max(used, c + 1));
            class_masks[static_cast<unsigned>(c)] &= ~(1ull << v);
            classes[static_cast<unsigned>(v)] = -1;
            if (done) return true;
        }
        return false;
    }
};

}  // namespace

Partition optimal_partition(const Digraph& g, int k) {
    if (k < 1) throw std::invalid_argument("optimal_partition needs k >= 1");
    if (g.order() > kPartitionExactLimit)
        throw budget_error("exact partition search refused: n > " +
                               std::to_string(kPartitionExactLimit),
                           static_cast<std::uint64_t>(g.order()), kPartitionExactLimit);
    PartitionSearch search(g, k, false);
    search.assign(0, 0, 0);
    Partition p;
    p.k = k;
    p.classes = search.best_classes;
    p.non_crossing = search.best;
    return p;
}

bool is_k_partite(const Digraph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_k_partite needs k >= 1");
    PartitionSearch search(g, k, true);
    search.assign(0, 0, 0);
    return search.best == 0;
}

std::vector<int> degree_into_own_class(const Digraph& g, const Partition& p) {
    std::vector<std::uint64_t> masks(static_cast<unsigned>(p.k), 0);
    for (int v = 0; v < g.order(); ++v)
        masks[static_cast<unsigned>(p.classes[static_cast<unsigned>(v)])] |= 1ull << v;
    std::vector<int> result;
    for (int v = 0; v < g.order(); ++v) {
        std::uint64_t own = masks[static_cast<unsigned>(p.classes[static_cast<unsigned>(v)])];
        result.push_back(std::popcount(g.out_mask(v) & own) +
                         std::popcount(g.in_mask(v) & own));
    }
    return result;
}

bool optimality_local_check(const Digraph& g, const Partition& p) {
    std::vector<std::uint64_t> masks(static_cast<unsigned>(p.k), 0);
    for (int v = 0; v < g.order(); ++v)
        masks[static_cast<unsigned>(p.classes[static_cast<unsigned>(v)])] |= 1ull << v;
    for (int v = 0; v < g.order(); ++v) {
        int own_class = p.classes[static_cast<unsigned>(v)];
        std::uint64_t own = masks[static_cast<unsigned>(own_class)];
        int own_deg = std::popcount(g.out_mask(v) & own) + std::popcount(g.in_mask(v) & own);
        for (int c = 0; c < p.k; ++c) {
            if (c == own_class) continue;
            std::uint64_t other = masks[static_cast<unsigned>(c)];
            int deg = std::popcount(g.out_mask(v) & other) + std::popcount(g.in_mask(v) & other);
            if (deg < own_deg) return false;
        }
    }
    return true;
}

namespace {

// Blow-up subgraph distance: subset DP over ordered typed parts. Appending
// part P after the already-placed set S pays the edges from P back into S
// plus the cheapest internal violation count of P (0 for singletons; for
// even parts, the best balanced split minus its cross-side edges).
long long blow_up_subgraph_distance(const Digraph& g) {
    int n = g.order();
    std::size_t states = std::size_t{1} << n;

    // edges_within[S]: directed edges with both ends in S
    std::vector<int> edges_within(states, 0);
    for (std::size_t s = 1; s < states; ++s) {
        int v = std::countr_zero(s);
        std::uint64_t rest = s & (s - 1);
        edges_within[s] = edges_within[rest] +
                          std::popcount(g.out_mask(v) & rest) +
                          std::popcount(g.in_mask(v) & rest);
    }

    // internal[P]: cheapest violation count when P is one part
    std::vector<int> internal(states, std::numeric_limits<int>::max());
    for (int v = 0; v < n; ++v) internal[std::size_t{1} << v] = 0;
    for (std::size_t p = 1; p < states; ++p) {
        int size = std::popcount(p);
        if (size < 2 || size % 2) continue;
        // best balanced split: violations are the within-side edges
        int best = std::numeric_limits<int>::max();
        // iterate subsets x of p with |x| = size/2 containing the lowest bit
        // (splits are unordered)
        std::uint64_t low = p & (~p + 1);
        for (std::uint64_t x = p; x; x = (x - 1) & p) {
            if (!(x & low)) continue;
            if (std::popcount(x) != size / 2) continue;
            int cost = edges_within[x] + edges_within[p & ~x];
            best = std::min(best, cost);
        }
        internal[p] = best;
    }

    std::vector<int> dist(states, std::numeric_limits<int>::max());
    dist[0] = 0;
    for (std::size_t s = 1; s < states; ++s) {
        // enumerate the last part P (nonempty submask of s)
        for (std::uint64_t p = s; p; p = (p - 1) & s) {
            if (internal[p] == std::numeric_limits<int>::max()) continue;
            std::size_t rest = s & ~p;
            if (dist[rest] == std::numeric_limits<int>::max()) continue;
            int back = 0;
            std::uint64_t m = p;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                back += std::popcount(g.out_mask(v) & rest);
            }
            dist[s] = std::min(dist[s], dist[rest] + back + internal[p]);
        }
    }
    return dist[states - 1];
}

}  // namespace

long long distance_to_family(const Digraph& g, TargetFamily family, int k) {
    switch (family) {
        case TargetFamily::subgraph_of_transitive_tournament:
            // Deleting the backwards edges of a transitive-optimal ordering
            // is optimal: any graph in the family is acyclic, and turning g
            // acyclic requires touching at least beta(g) edges.
            return beta(g);
        case TargetFamily::k_partite:
            return optimal_partition(g, k).non_crossing;
        case TargetFamily::transitive_bipartite_blow_up_subgraph:
            if (g.order() > 16)
                throw budget_error("blow-up distance refused: n > 16",
                                   static_cast<std::uint64_t>(g.order()), 16);
            return blow_up_subgraph_distance(g);
    }
    throw std::invalid_argument("unknown target family");
}

long long acyclic_distance_brute_force(const Digraph& g) {
    if (g.order() > 5) throw std::invalid_argument("edit-space oracle is for n <= 5");
    if (is_acyclic(g)) return 0;
    // BFS over single-edge changes: delete, add, reorient.
    std::unordered_set<std::uint64_t> seen{pair_code(g)};
    std::queue<std::pair<Digraph, long long>> queue;
    queue.emplace(g, 0);
    while (!queue.empty()) {
        auto [cur, d] = queue.front();
        queue.pop();
        std::vector<Digraph> next;
        for (int u = 0; u < cur.order(); ++u)
            for (int v = 0; v < cur.order(); ++v) {
                if (u == v) continue;
                if (cur.has_edge(u, v)) {
                    Digraph del = cur;
                    del.remove_edge(u, v);
                    next.push_back(del);
                    if (!cur.has_edge(v, u)) {
                        Digraph flip = cur;
                        flip.remove_edge(u, v);
                        flip.add_edge(v, u);
                        next.push_back(flip);
                    }
                } else {
                    Digraph add = cur;
                    add.add_edge(u, v);
                    next.push_back(add);
                }
            }
        for (const auto& h : next) {
            if (!seen.insert(pair_code(h)).second) continue;
            if (is_acyclic(h)) return d + 1;
            queue.emplace(h, d + 1);
        }
    }
    throw std::logic_error("edit search exhausted without reaching an acyclic graph");
}

namespace {

void balanced_partitions(int n, std::vector<int>& sizes, std::vector<int>& cls, int v,
                         std::vector<std::uint64_t>& masks, const Digraph& g, long long& best) {
    if (v == n) {
        long long cost = 0;
        for (int u = 0; u < n && cost < best; ++u)
            for (int w = u + 1; w < n; ++w) {
                bool same = cls[static_cast<unsigned>(u)] == cls[static_cast<unsigned>(w)];
                int present = (g.has_edge(u, w) ? 1 : 0) + (g.has_edge(w, u) ? 1 : 0);
                cost += same ? present : 2 - present;
            }
        best = std::min(best, cost);
        return;
    }
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        if (sizes[c] == 0) continue;
        // skip identical remaining-size classes with no members yet
        if (c > 0 && sizes[c] == sizes[c - 1] && masks[c] == 0 && masks[c - 1] == 0) continue;
        --sizes[c];
        cls[static_cast<unsigned>(v)] = static_cast<int>(c);
        masks[c] |= 1ull << v;
        balanced_partitions(n, sizes, cls, v + 1, masks, g, best);
        masks[c] &= ~(1ull << v);
        ++sizes[c];
    }
}

}  // namespace

long long distance_to_turan_digraph(const Digraph& g, int k) {
    int n = g.order();
    if (k < 1 || k > n) throw std::invalid_argument("distance_to_turan_digraph needs 1 <= k <= n");
    if (n > 12) throw budget_error("turan distance refused: n > 12",
                                   static_cast<std::uint64_t>(n), 12);
    auto sizes = turan_class_sizes(k, n);
    std::vector<int> cls(static_cast<unsigned>(n), -1);
    std::vector<std::uint64_t> masks(sizes.size(), 0);
    long long best = std::numeric_limits<long long>::max();
    balanced_partitions(n, sizes, cls, 0, masks, g, best);
    return best;
}

}  // namespace tdl
