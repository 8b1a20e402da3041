#include "tdl/construct.hpp"

#include <numeric>
#include <stdexcept>

namespace tdl {

namespace {

long long pairs(long long m) { return m * (m - 1) / 2; }

}  // namespace

long long turan_edge_count(int k, int n) {
    if (k < 1 || n < 0) throw std::invalid_argument("turan_edge_count needs k >= 1, n >= 0");
    long long inside = 0;
    for (int size : turan_class_sizes(k, n)) inside += pairs(size);
    return pairs(n) - inside;
}

std::vector<int> turan_class_sizes(int k, int n) {
    std::vector<int> sizes;
    int q = n / k, r = n % k;
    for (int i = 0; i < k; ++i) sizes.push_back(q + (i < r ? 1 : 0));
    return sizes;
}

Digraph transitive_tournament(int n) {
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Digraph directed_cycle_graph(int n) {
    if (n < 2) throw std::invalid_argument("directed cycle needs n >= 2");
    Digraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Digraph complete_digraph(int n) {
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) g.add_edge(u, v);
    return g;
}

Digraph complete_bipartite_digraph(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartite classes must be nonempty");
    Digraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) {
            g.add_edge(u, v);
            g.add_edge(v, u);
        }
    return g;
}

Digraph turan_digraph(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("turan_digraph needs 1 <= k <= n");
    auto sizes = turan_class_sizes(k, n);
    std::vector<int> cls(static_cast<unsigned>(n));
    int v = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < sizes[static_cast<unsigned>(i)]; ++j) cls[static_cast<unsigned>(v++)] = i;
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (cls[static_cast<unsigned>(u)] != cls[static_cast<unsigned>(w)]) {
                g.add_edge(u, w);
                g.add_edge(w, u);
            }
    return g;
}

Digraph clique_chain_digraph(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("clique_chain_digraph needs 1 <= k <= n");
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
            if (u / k == v / k) g.add_edge(v, u);
        }
    return g;
}

WeightedSize clique_chain_weighted_size(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("clique_chain needs 1 <= k <= n");
    long long inside = static_cast<long long>(n / k) * pairs(k) + pairs(n % k);
    return WeightedSize{pairs(n) - inside, inside};
}

Digraph arrow_digraph(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("arrow classes must be nonempty");
    Digraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

BlowUpPart BlowUpPart::bipartite(int size) {
    if (size < 2 || size % 2 != 0)
        throw std::invalid_argument("bipartite blow-up parts need an even size >= 2");
    BlowUpPart p;
    p.kind = Kind::balanced_bipartite;
    p.size = size;
    return p;
}

Digraph transitive_bipartite_blow_up(const std::vector<BlowUpPart>& parts) {
    int n = 0;
    for (const auto& p : parts) {
        if (p.size < 1) throw std::invalid_argument("blow-up part has zero size");
        n += p.size;
    }
    Digraph g(n);
    int base = 0;
    for (const auto& p : parts) {
        // forward single edges to every later part
        for (int u = base; u < base + p.size; ++u)
            for (int v = base + p.size; v < n; ++v) g.add_edge(u, v);
        if (p.kind == BlowUpPart::Kind::balanced_bipartite) {
            int half = p.size / 2;
            for (int u = base; u < base + half; ++u)
                for (int v = base + half; v < base + p.size; ++v) {
                    g.add_edge(u, v);
                    g.add_edge(v, u);
                }
        }
        base += p.size;
    }
    return g;
}

}  // namespace tdl
