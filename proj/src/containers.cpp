#include "tdl/containers.hpp"

#include "tdl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tdl {

namespace {

// All injections phi: [h] -> [N], emitting the edge set of the image.
void injections(int base_n, const Digraph& h, std::vector<int>& phi, std::uint64_t used,
                std::set<std::vector<std::uint32_t>>& out) {
    int next = static_cast<int>(phi.size());
    if (next == h.order()) {
        std::vector<std::uint32_t> edge;
        for (auto [x, y] : h.edges())
            edge.push_back(PatternHypergraph::pair_id(phi[static_cast<unsigned>(x)],
                                                      phi[static_cast<unsigned>(y)], base_n));
        std::sort(edge.begin(), edge.end());
        out.insert(std::move(edge));
        return;
    }
    for (int c = 0; c < base_n; ++c) {
        if ((used >> c) & 1u) continue;
        phi.push_back(c);
        injections(base_n, h, phi, used | (1ull << c), out);
        phi.pop_back();
    }
}

}  // namespace

std::uint32_t PatternHypergraph::pair_id(int i, int j, int base_n) {
    return static_cast<std::uint32_t>(i * (base_n - 1) + (j > i ? j - 1 : j));
}

PatternHypergraph build_pattern_hypergraph(int base_n, const Digraph& h) {
    if (base_n < 2) throw std::invalid_argument("hypergraph needs N >= 2");
    if (h.edge_count() < 1) throw std::invalid_argument("pattern needs at least one edge");
    // ground set and edge enumeration cost both grow fast; keep to desk scale
    double est = 1;
    for (int i = 0; i < h.order(); ++i) est *= base_n - i;
    if (base_n > 16 || est > 5e8)
        throw budget_error("pattern hypergraph refused: N too large",
                           static_cast<std::uint64_t>(base_n), 16);

    PatternHypergraph dh;
    dh.base_n = base_n;
    dh.ground_n = base_n * (base_n - 1);
    dh.r = h.edge_count();
    if (h.order() > base_n) return dh;  // no copies fit

    std::set<std::vector<std::uint32_t>> edge_sets;
    std::vector<int> phi;
    injections(base_n, h, phi, 0, edge_sets);
    dh.edges.assign(edge_sets.begin(), edge_sets.end());
    return dh;
}

Density m_density(const Digraph& h) {
    auto edges = h.edges();
    if (edges.size() < 2) throw std::invalid_argument("m-density needs at least 2 edges");
    for (auto [u, v] : edges)
        if (h.has_edge(v, u))
            throw std::invalid_argument("m-density is unbounded for patterns with a doubled pair");

    Density best{0, 1};
    bool found = false;
    std::uint32_t subsets = 1u << edges.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        int e = std::popcount(mask);
        if (e < 2) continue;
        std::uint64_t support = 0;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if ((mask >> i) & 1u)
                support |= (1ull << edges[i].first) | (1ull << edges[i].second);
        int v = std::popcount(support);
        if (v < 3) continue;  // denominator must be positive
        // (e-1)/(v-2) > best  <=>  (e-1)*best.den > best.num*(v-2)
        long long num = e - 1, den = v - 2;
        if (!found || num * best.den > best.num * den) {
            long long g = std::gcd(num, den);
            best = {num / g, den / g};
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("no subgraph with 2 edges on 3+ vertices");
    return best;
}

CoDegreeProfile co_degree(const PatternHypergraph& dh, double tau) {
    if (!(tau > 0)) throw std::invalid_argument("co-degree needs tau > 0");
    CoDegreeProfile profile;
    profile.tau = tau;
    profile.ground_n = dh.ground_n;
    profile.r = dh.r;
    profile.edge_count = dh.edges.size();
    if (dh.edges.empty()) return profile;  // d = 0 => delta := 0

    profile.average_degree = static_cast<long double>(dh.r) *
                             static_cast<long double>(profile.edge_count) /
                             static_cast<long double>(dh.ground_n);

    // d(sigma) > 0 only for sigma inside some edge: bucket subsets of edges.
    // Key packs up to 5 sorted 12-bit pair ids (ground ids stay below 4096
    // within the construction budget).
    auto pack = [](const std::vector<std::uint32_t>& sigma) {
        std::uint64_t key = 0;
        for (auto id : sigma) key = (key << 12) | (id + 1);
        return key;
    };

    for (int j = 2; j <= dh.r; ++j) {
        std::unordered_map<std::uint64_t, std::uint32_t> degree;
        std::vector<std::uint32_t> sigma(static_cast<unsigned>(j));
        for (const auto& edge : dh.edges) {
            // all j-subsets of the sorted edge
            std::vector<int> idx(static_cast<unsigned>(j));
            std::iota(idx.begin(), idx.end(), 0);
            for (;;) {
                for (int t = 0; t < j; ++t)
                    sigma[static_cast<unsigned>(t)] = edge[static_cast<unsigned>(idx[static_cast<unsigned>(t)])];
                ++degree[pack(sigma)];
                int t = j - 1;
                while (t >= 0 && idx[static_cast<unsigned>(t)] ==
                                     static_cast<int>(edge.size()) - j + t)
                    --t;
                if (t < 0) break;
                ++idx[static_cast<unsigned>(t)];
                for (int s = t + 1; s < j; ++s)
                    idx[static_cast<unsigned>(s)] = idx[static_cast<unsigned>(s - 1)] + 1;
            }
        }
        // d^(j)(v) = max over sigma containing v (0 for vertices in no edge)
        std::unordered_map<std::uint32_t, std::uint32_t> vertex_max;
        for (const auto& [key, count] : degree) {
            std::uint64_t k = key;
            for (int t = 0; t < j; ++t) {
                auto id = static_cast<std::uint32_t>((k & 0xfff) - 1);
                k >>= 12;
                auto& slot = vertex_max[id];
                slot = std::max(slot, count);
            }
        }
        BigInt sum = 0;
        for (const auto& [id, value] : vertex_max) sum += value;
        profile.degree_sums.push_back(sum);

        long double denom = powl(static_cast<long double>(tau), j - 1) *
                            static_cast<long double>(dh.ground_n) * profile.average_degree;
        profile.delta_j.push_back(sum.convert_to<long double>() / denom);
    }

    long double total = 0;
    for (int j = 2; j <= dh.r; ++j) {
        long long cj = static_cast<long long>(j - 1) * (j - 2) / 2;  // C(j-1,2)
        total += profile.delta_j[static_cast<unsigned>(j - 2)] / powl(2.0L, cj);
    }
    long long cr = static_cast<long long>(dh.r) * (dh.r - 1) / 2;
    profile.delta = powl(2.0L, cr - 1) * total;
    return profile;
}

DeltaBoundReport delta_bound_check(const Digraph& h, const std::string& pattern_name,
                                   double gamma, int n_min, int n_max) {
    if (!(gamma > 0) || gamma > 1.0) throw std::invalid_argument("bound check needs 0 < gamma <= 1");
    DeltaBoundReport report;
    report.pattern = pattern_name;
    report.gamma = gamma;

    auto density = m_density(h);
    int r = h.edge_count();
    long double fact = 1;
    for (int i = 2; i <= h.order(); ++i) fact *= i;
    long double bound = static_cast<long double>(r) *
                        powl(2.0L, static_cast<long double>(r) * r) * fact * fact *
                        static_cast<long double>(gamma);

    for (int base_n = n_min; base_n <= n_max; ++base_n) {
        auto dh = build_pattern_hypergraph(base_n, h);
        double tau = std::pow(static_cast<double>(base_n), -1.0 / density.approx()) / gamma;
        auto profile = co_degree(dh, tau);
        DeltaBoundRow row;
        row.base_n = base_n;
        row.tau = tau;
        row.delta = profile.delta;
        row.bound = bound;
        row.margin = bound - profile.delta;
        row.asserted = base_n >= 8 && r <= 3;
        row.ok = !row.asserted || row.margin > 0;
        report.pass = report.pass && row.ok;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace tdl
