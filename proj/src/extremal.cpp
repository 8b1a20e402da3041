#include "tdl/extremal.hpp"

#include "tdl/construct.hpp"
#include "tdl/errors.hpp"
#include "tdl/isomorphism.hpp"
#include "tdl/order.hpp"
#include "tdl/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace tdl {

namespace {

// Pair states in decreasing weight contribution. Oriented graphs skip
// `both`.
enum : int { kStateBoth = 0, kStateForward = 1, kStateBackward = 2, kStateAbsent = 3 };

// Exact integer scalarisation of weighted sizes. For rational a = p/q the
// scalar is q*f1 + p*f2. For a = log2(3) it is f1*2^20 + f2*round(log2(3)*2^20);
// by the continued-fraction gap of log2(3), scalar order coincides with the
// exact weighted order whenever |f1|,|f2| stay below ~120 pairs, far beyond
// the search limit. Comparisons at leaves therefore never misorder.
struct Scalar {
    long long single;  // contribution of a one-direction pair
    long long both;    // contribution of a doubled pair

    static Scalar from(const Weight& w) {
        if (w.kind() == Weight::Kind::rational) return {w.den(), w.num()};
        return {1 << 20, std::llround(std::log2(3.0) * (1 << 20))};
    }

    long long of(const WeightedSize& ws) const { return single * ws.f1 + both * ws.f2; }
};

struct PairList {
    std::vector<std::pair<int, int>> pairs;

    explicit PairList(int n) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
};

int default_limit(GraphFamily family) {
    // TDL_BUDGET doubles as the exact-search vertex cap when it is small
    // enough to be one (larger values are census state budgets).
    if (const char* env = std::getenv("TDL_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0 && v <= kMaxVertices) return static_cast<int>(v);
    }
    return family == GraphFamily::oriented ? 9 : 8;
}

class Search {
public:
    Search(const ExtremalQuery& q) : q_(q), pairs_(q.n), scalar_(Scalar::from(q.weight)) {
        per_pair_max_ = q.family == GraphFamily::digraph ? scalar_.both : scalar_.single;
        state_count_ = q.family == GraphFamily::digraph ? 4 : 3;
    }

    // Largest scalar over all pattern-free completions. INT64_MIN when no
    // pattern-free graph exists (pattern already in the empty graph).
    long long find_optimum() {
        Digraph empty(q_.n);
        if (contains_pattern(empty, q_.pattern))
            return std::numeric_limits<long long>::min();
        incumbent_.store(std::numeric_limits<long long>::min());
        run_split([this](Digraph& g, int depth, const WeightedSize& ws) {
            descend_optimum(g, depth, ws);
        });
        return incumbent_.load();
    }

    struct Traversal {
        std::uint64_t nodes = 0;
        std::uint64_t hits = 0;
        std::vector<Digraph> witnesses;
    };

    // Deterministic re-traversal with a fixed scalar threshold. Visits
    // exactly the nodes whose admissible bound reaches `threshold`; reports
    // leaves with scalar == threshold (ties_only) or >= threshold.
    Traversal traverse(long long threshold, bool ties_only, bool collect,
                       std::size_t witness_cap) {
        Digraph empty(q_.n);
        if (contains_pattern(empty, q_.pattern)) return {};
        threshold_ = threshold;
        ties_only_ = ties_only;
        collect_ = collect;
        witness_cap_ = witness_cap;
        // The serial prefix pass explores the tree top; together with the
        // per-unit tails the visit count equals the plain serial traversal,
        // whatever the split depth or worker count.
        Traversal total;
        std::vector<std::pair<Digraph, WeightedSize>> units;
        enumerate_units(units, total);
        std::vector<Traversal> unit_results(units.size());
        run_units(units.size(), q_.jobs, [&](std::uint64_t idx, int) {
            Digraph g = units[idx].first;
            descend_fixed(g, split_depth_, units[idx].second, unit_results[idx]);
        });
        for (auto& unit : unit_results) {
            total.nodes += unit.nodes;
            total.hits += unit.hits;
            for (auto& w : unit.witnesses) {
                if (total.witnesses.size() < witness_cap_) total.witnesses.push_back(std::move(w));
            }
        }
        return total;
    }

private:
    // --- shared helpers -----------------------------------------------------

    // states in decreasing weight, per family
    int state_at(int i) const {
        static constexpr int digraph_states[4] = {kStateBoth, kStateForward, kStateBackward,
                                                  kStateAbsent};
        static constexpr int oriented_states[3] = {kStateForward, kStateBackward, kStateAbsent};
        return q_.family == GraphFamily::digraph ? digraph_states[i] : oriented_states[i];
    }

    bool apply_state(Digraph& g, int depth, int state, WeightedSize& ws) const {
        auto [u, v] = pairs_.pairs[static_cast<unsigned>(depth)];
        bool fwd = state == kStateBoth || state == kStateForward;
        bool bwd = state == kStateBoth || state == kStateBackward;
        if (fwd) g.add_edge(u, v);
        if (bwd) g.add_edge(v, u);
        if (state == kStateBoth) ++ws.f2;
        if (state == kStateForward || state == kStateBackward) ++ws.f1;
        if ((fwd || bwd) && contains_pattern_with_pair(g, q_.pattern, u, v, fwd, bwd)) {
            if (fwd) g.remove_edge(u, v);
            if (bwd) g.remove_edge(v, u);
            if (state == kStateBoth) --ws.f2;
            if (state == kStateForward || state == kStateBackward) --ws.f1;
            return false;
        }
        return true;
    }

    void undo_state(Digraph& g, int depth, int state, WeightedSize& ws) const {
        auto [u, v] = pairs_.pairs[static_cast<unsigned>(depth)];
        if (state == kStateBoth || state == kStateForward) g.remove_edge(u, v);
        if (state == kStateBoth || state == kStateBackward) g.remove_edge(v, u);
        if (state == kStateBoth) --ws.f2;
        if (state == kStateForward || state == kStateBackward) --ws.f1;
    }

    long long bound(const WeightedSize& ws, int depth) const {
        long long remaining = static_cast<long long>(pairs_.pairs.size()) - depth;
        return scalar_.of(ws) + remaining * per_pair_max_;
    }

    // --- optimum phase (shared monotone incumbent) ---------------------------

    void descend_optimum(Digraph& g, int depth, WeightedSize ws) {
        if (depth == static_cast<int>(pairs_.pairs.size())) {
            long long value = scalar_.of(ws);
            long long cur = incumbent_.load();
            while (value > cur && !incumbent_.compare_exchange_weak(cur, value)) {
            }
            return;
        }
        if (bound(ws, depth) <= incumbent_.load()) return;
        for (int i = 0; i < state_count_; ++i) {
            int state = state_at(i);
            if (!apply_state(g, depth, state, ws)) continue;
            descend_optimum(g, depth + 1, ws);
            undo_state(g, depth, state, ws);
        }
    }

    void run_split(const std::function<void(Digraph&, int, const WeightedSize&)>& fn) {
        std::vector<std::pair<Digraph, WeightedSize>> units;
        split_depth_ = std::min<int>(static_cast<int>(pairs_.pairs.size()),
                                     q_.jobs > 1 ? 5 : 0);
        collect_units(Digraph(q_.n), 0, WeightedSize{}, units);
        run_units(units.size(), q_.jobs, [&](std::uint64_t idx, int) {
            Digraph g = units[idx].first;
            fn(g, split_depth_, units[idx].second);
        });
    }

    void collect_units(Digraph g, int depth, WeightedSize ws,
                       std::vector<std::pair<Digraph, WeightedSize>>& units) {
        if (depth == split_depth_) {
            units.emplace_back(std::move(g), ws);
            return;
        }
        for (int i = 0; i < state_count_; ++i) {
            int state = state_at(i);
            if (!apply_state(g, depth, state, ws)) continue;
            collect_units(g, depth + 1, ws, units);
            undo_state(g, depth, state, ws);
        }
    }

    // --- fixed-threshold traversal -------------------------------------------

    void enumerate_units(std::vector<std::pair<Digraph, WeightedSize>>& units,
                         Traversal& stats) {
        split_depth_ = std::min<int>(static_cast<int>(pairs_.pairs.size()),
                                     q_.jobs > 1 ? 5 : 0);
        Digraph g(q_.n);
        WeightedSize ws;
        prefix_walk(g, 0, ws, units, stats);
    }

    void prefix_walk(Digraph& g, int depth, WeightedSize ws,
                     std::vector<std::pair<Digraph, WeightedSize>>& units, Traversal& stats) {
        if (depth == split_depth_) {
            if (bound(ws, depth) >= threshold_)
                units.emplace_back(g, ws);  // the unit's own walk counts this node
            else
                ++stats.nodes;  // visited-and-pruned, as the serial walk would
            return;
        }
        ++stats.nodes;
        if (bound(ws, depth) < threshold_) return;
        for (int i = 0; i < state_count_; ++i) {
            int state = state_at(i);
            if (!apply_state(g, depth, state, ws)) continue;
            prefix_walk(g, depth + 1, ws, units, stats);
            undo_state(g, depth, state, ws);
        }
    }

    void descend_fixed(Digraph& g, int depth, WeightedSize ws, Traversal& out) {
        ++out.nodes;
        if (bound(ws, depth) < threshold_) return;
        if (depth == static_cast<int>(pairs_.pairs.size())) {
            long long value = scalar_.of(ws);
            bool hit = ties_only_ ? value == threshold_ : value >= threshold_;
            if (hit) {
                ++out.hits;
                if (collect_ && out.witnesses.size() < witness_cap_) out.witnesses.push_back(g);
            }
            return;
        }
        for (int i = 0; i < state_count_; ++i) {
            int state = state_at(i);
            if (!apply_state(g, depth, state, ws)) continue;
            descend_fixed(g, depth + 1, ws, out);
            undo_state(g, depth, state, ws);
        }
    }

    ExtremalQuery q_;
    PairList pairs_;
    Scalar scalar_;
    long long per_pair_max_;
    int state_count_;
    int split_depth_ = 0;

    std::atomic<long long> incumbent_{std::numeric_limits<long long>::min()};
    long long threshold_ = 0;
    bool ties_only_ = true;
    bool collect_ = true;
    std::size_t witness_cap_ = 0;
};

}  // namespace

ExtremalResult extremal_number(const ExtremalQuery& query) {
    int limit = query.n_limit > 0 ? query.n_limit : default_limit(query.family);
    if (query.n < 1) throw std::invalid_argument("extremal search needs n >= 1");
    if (query.n > limit)
        throw budget_error("extremal search refused: n exceeds the exact-search limit " +
                               std::to_string(limit) + " (set TDL_BUDGET to override)",
                           static_cast<std::uint64_t>(query.n),
                           static_cast<std::uint64_t>(limit));

    Search search(query);
    long long opt = search.find_optimum();
    if (opt == std::numeric_limits<long long>::min())
        throw std::invalid_argument("no pattern-free graph exists: the empty graph already "
                                    "contains the pattern");

    auto traversal = search.traverse(opt, /*ties_only=*/true, /*collect=*/true,
                                     query.witness_cap);
    ExtremalResult result;
    result.query = query;
    result.witness_count = traversal.hits;
    result.node_count = traversal.nodes;
    result.witnesses = std::move(traversal.witnesses);
    if (!result.witnesses.empty()) result.optimum = weighted_size(result.witnesses.front());
    return result;
}

std::vector<WeightedSize> census_extremal_maximum(int n, GraphFamily family,
                                                  const Pattern& pattern,
                                                  const std::vector<Weight>& weights) {
    if (n < 1 || n > 6) throw std::invalid_argument("census oracle is for n <= 6");
    int m = n * (n - 1) / 2;
    int radix = family == GraphFamily::digraph ? 4 : 3;
    std::uint64_t states = 1;
    for (int i = 0; i < m; ++i) states *= static_cast<std::uint64_t>(radix);
    std::vector<WeightedSize> best(weights.size());
    std::vector<bool> seen(weights.size(), false);
    bool any = false;
    for (std::uint64_t code = 0; code < states; ++code) {
        Digraph g(n);
        std::uint64_t c = code;
        for (int p = 0; p < m; ++p) {
            auto state = static_cast<int>(c % static_cast<std::uint64_t>(radix));
            c /= static_cast<std::uint64_t>(radix);
            int u = 0, v = 0, idx = p;
            for (u = 0; idx >= n - 1 - u; ++u) idx -= n - 1 - u;
            v = u + 1 + idx;
            // oriented codes: 0 absent, 1 u->v, 2 v->u; digraph adds 3 both
            if (state == 1 || state == 3) g.add_edge(u, v);
            if (state == 2 || state == 3) g.add_edge(v, u);
        }
        if (contains_pattern(g, pattern)) continue;
        auto ws = weighted_size(g);
        any = true;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (!seen[i] || weighted_compare(ws, best[i], weights[i]) > 0) {
                best[i] = ws;
                seen[i] = true;
            }
        }
    }
    if (!any) throw std::invalid_argument("no pattern-free graph exists");
    return best;
}

TuranFormulaReport verify_turan_formula(int k_min, int k_max, int n_min, int n_max,
                                        const Weight& weight, bool cycles, int jobs) {
    if (!cycles) {
        // the doubled-Turan formula needs 3/2 < a <= 2
        bool above_three_halves = weight.kind() == Weight::Kind::log3 ||
                                  2 * weight.num() > 3 * weight.den();
        if (!above_three_halves)
            throw std::invalid_argument("tournament formula verification needs a > 3/2");
    }
    TuranFormulaReport report;
    for (int k = k_min; k <= k_max; ++k) {
        for (int n = std::max(n_min, k); n <= n_max; ++n) {
            TuranFormulaRow row;
            row.k = k;
            row.n = n;
            ExtremalQuery q;
            q.n = n;
            q.family = GraphFamily::digraph;
            q.weight = weight;
            q.jobs = jobs;
            if (cycles) {
                q.pattern = Pattern::directed_cycle(k + 1);
                row.expected = clique_chain_weighted_size(n, k);
            } else {
                q.pattern = Pattern::trans_tournament(k + 1);
                row.expected = WeightedSize{0, turan_edge_count(k, n)};
            }
            row.pattern = q.pattern.to_string();
            auto result = extremal_number(q);
            row.got = result.optimum;
            row.witness_count = result.witness_count;
            row.ok = weighted_compare(row.got, row.expected, weight) == 0;
            if (!cycles) {
                auto target = turan_digraph(k, n);
                for (const auto& w : result.witnesses)
                    if (!isomorphic(w, target)) {
                        row.witnesses_match_turan = false;
                        break;
                    }
                row.ok = row.ok && row.witnesses_match_turan &&
                         result.witness_count == result.witnesses.size();
            }
            report.pass = report.pass && row.ok;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

PartiteBoundReport unbalanced_partite_bound_check(int k, int n, long long s_num,
                                                  long long s_den) {
    if (k < 2 || n < k) throw std::invalid_argument("bound check needs n >= k >= 2");
    if (s_num <= 0 || s_den <= 0) throw std::invalid_argument("s must be positive");
    PartiteBoundReport report;
    report.k = k;
    report.n = n;
    report.s_num = s_num;
    report.s_den = s_den;
    long long t = turan_edge_count(k, n);

    std::vector<int> parts(static_cast<unsigned>(k), 0);
    // iterate all ordered compositions of n into k nonnegative parts
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == k - 1) {
            parts[static_cast<unsigned>(idx)] = left;
            bool deviates = false;
            for (int size : parts) {
                // |size - n/k| >= s  <=>  |k*size - n| * s_den >= s_num * k
                long long dev = std::llabs(static_cast<long long>(k) * size - n);
                if (dev * s_den >= s_num * k) deviates = true;
            }
            if (deviates) {
                ++report.compositions_checked;
                long long sq = 0;
                for (int size : parts) sq += static_cast<long long>(size) * size;
                long long e = (static_cast<long long>(n) * n - sq) / 2;
                // e <= t - s(s/2 - k), scaled by 2*s_den^2
                long long scale = 2 * s_den * s_den;
                long long lhs = e * scale;
                long long rhs = t * scale - s_num * (s_num - 2 * k * s_den);
                if (lhs > rhs) ++report.violations;
            }
            return;
        }
        for (int size = 0; size <= left; ++size) {
            parts[static_cast<unsigned>(idx)] = size;
            rec(idx + 1, left - size);
        }
    };
    rec(0, n);
    report.pass = report.violations == 0;
    return report;
}

StabilityReport stability_probe(int n, const Pattern& pattern, GraphFamily family,
                                const Weight& weight, long long deficit, int jobs) {
    StabilityReport report;
    report.n = n;
    report.pattern = pattern.to_string();
    report.family = family;
    report.weight = weight;
    report.deficit = deficit;

    ExtremalQuery q;
    q.n = n;
    q.pattern = pattern;
    q.family = family;
    q.weight = weight;
    q.jobs = jobs;
    auto opt = extremal_number(q);

    enum class Target { turan, acyclic, blow_up };
    Target target = Target::acyclic;
    int turan_k = 0;
    if (pattern.kind == Pattern::Kind::trans_tournament) {
        target = Target::turan;
        turan_k = pattern.k - 1;
        report.target = "doubled-turan:" + std::to_string(turan_k);
    } else if (pattern.kind == Pattern::Kind::directed_cycle) {
        bool odd_cycle = pattern.k % 2 == 1;
        bool weight_is_two = weight == Weight::two();
        if (odd_cycle && weight_is_two && family == GraphFamily::digraph) {
            target = Target::blow_up;
            report.target = "transitive-bipartite-blow-up-subgraph";
        } else {
            target = Target::acyclic;
            report.target = "subgraph-of-transitive-tournament";
        }
    } else {
        throw std::invalid_argument("stability probe supports T and C patterns");
    }

    // threshold: e_a(g) >= opt - deficit, deficit counted in f1 units
    WeightedSize threshold_ws{opt.optimum.f1 - deficit, opt.optimum.f2};
    auto traversal_threshold = Scalar::from(weight).of(threshold_ws);

    // fixed-threshold traversal collecting every qualifying graph
    ExtremalQuery wide = q;
    wide.witness_cap = std::numeric_limits<std::size_t>::max();
    Search wide_search(wide);
    auto traversal = wide_search.traverse(traversal_threshold, /*ties_only=*/false,
                                          /*collect=*/true, wide.witness_cap);
    for (const auto& g : traversal.witnesses) {
        long long dist = 0;
        switch (target) {
            case Target::turan: dist = distance_to_turan_digraph(g, turan_k); break;
            case Target::acyclic:
                dist = distance_to_family(g, TargetFamily::subgraph_of_transitive_tournament);
                break;
            case Target::blow_up:
                dist = distance_to_family(g, TargetFamily::transitive_bipartite_blow_up_subgraph);
                break;
        }
        ++report.graphs;
        ++report.distance_histogram[dist];
        if (dist > report.max_distance) {
            report.max_distance = dist;
            report.argmax_text = g.to_text();
        }
    }
    return report;
}

}  // namespace tdl
