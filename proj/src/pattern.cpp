#include "tdl/pattern.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace tdl {

namespace {

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

// --- transitive tournaments -------------------------------------------------
//
// T_k is present iff some sequence v_1,...,v_k has every forward edge
// v_i -> v_j (i < j). Chains are grown by intersecting out-neighbourhoods:
// after choosing a prefix, the legal continuations are exactly the common
// out-neighbours of all chosen vertices.

bool tt_extend(const Digraph& g, int need, std::uint64_t cand) {
    if (need == 0) return true;
    if (std::popcount(cand) < need) return false;
    std::uint64_t m = cand;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (tt_extend(g, need - 1, cand & g.out_mask(v))) return true;
    }
    return false;
}

// Chain containing u strictly before v. Copies through the edge u->v are
// exactly the chains that place u earlier than v.
bool tt_extend_through(const Digraph& g, int need, std::uint64_t cand, int u, int v,
                       bool have_u, bool have_v) {
    int missing = (have_u ? 0 : 1) + (have_v ? 0 : 1);
    if (need < missing) return false;
    if (!have_u && !((cand >> u) & 1u)) return false;
    if (!have_v && !((cand >> v) & 1u)) return false;
    if (need == 0) return true;
    if (std::popcount(cand) < need) return false;
    std::uint64_t m = cand;
    while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (w == v && !have_u) continue;  // v may not precede u
        bool hu = have_u || w == u;
        bool hv = have_v || w == v;
        if (tt_extend_through(g, need - 1, cand & g.out_mask(w), u, v, hu, hv)) return true;
    }
    return false;
}

// --- directed cycles --------------------------------------------------------

// Simple path cur -> ... -> target of exactly `steps` edges avoiding
// `visited`. steps >= 1.
bool cycle_path(const Digraph& g, int cur, int target, int steps, std::uint64_t visited) {
    if (steps == 1) return g.has_edge(cur, target);
    std::uint64_t next = g.out_mask(cur) & ~visited & ~(1ull << target);
    while (next) {
        int w = std::countr_zero(next);
        next &= next - 1;
        if (cycle_path(g, w, target, steps - 1, visited | (1ull << w))) return true;
    }
    return false;
}

bool has_cycle_of_length(const Digraph& g, int k) {
    if (k > g.order()) return false;
    // Anchor each candidate cycle at its minimum vertex.
    for (int u = 0; u < g.order(); ++u) {
        std::uint64_t allowed = (u >= 63) ? 0 : (~0ull << (u + 1));  // bits > u
        std::uint64_t starts = g.out_mask(u) & allowed;
        while (starts) {
            int v = std::countr_zero(starts);
            starts &= starts - 1;
            if (k == 2) {
                if (g.has_edge(v, u)) return true;
                continue;
            }
            std::uint64_t visited = (1ull << u) | (1ull << v) | ~allowed;
            if (cycle_path(g, v, u, k - 1, visited)) return true;
        }
    }
    return false;
}

bool has_cycle_through_edge(const Digraph& g, int k, int u, int v) {
    if (k > g.order()) return false;
    if (!g.has_edge(u, v)) return false;
    if (k == 2) return g.has_edge(v, u);
    return cycle_path(g, v, u, k - 1, (1ull << u) | (1ull << v));
}

// --- complete bipartite digraphs --------------------------------------------

// Class A of size `need_a` yet to pick (from `pool`, ascending to avoid
// revisits), common double-neighbourhood `common`; accept when some b-subset
// of common minus A remains.
bool dk_extend(const Digraph& g, int need_a, int need_b, std::uint64_t pool,
               std::uint64_t common, std::uint64_t a_mask) {
    if (std::popcount(common & ~a_mask) < need_b) return false;
    if (need_a == 0) return true;
    std::uint64_t m = pool;
    while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (dk_extend(g, need_a - 1, need_b, m, common & g.double_mask(w),
                      a_mask | (1ull << w)))
            return true;
    }
    return false;
}

bool has_complete_bipartite(const Digraph& g, int a, int b) {
    if (a + b > g.order()) return false;
    std::uint64_t all = g.vertex_mask();
    // Unordered classes: fix the class containing vertex min; trying (a,b)
    // and (b,a) covers both roles.
    if (a == b) return dk_extend(g, a, b, all, all, 0);
    return dk_extend(g, a, b, all, all, 0) || dk_extend(g, b, a, all, all, 0);
}

bool dk_extend_through(const Digraph& g, int need_a, int need_b, std::uint64_t pool,
                       std::uint64_t common, std::uint64_t a_mask, int u, int v) {
    // u must land in A, v in B.
    bool have_u = (a_mask >> u) & 1u;
    if (!have_u && need_a == 0) return false;
    if (!have_u && !((pool >> u) & 1u)) return false;
    if (!((common >> v) & 1u)) return false;
    if (std::popcount(common & ~a_mask & ~(have_u ? 0 : (1ull << u))) < need_b) return false;
    if (need_a == 0) return true;
    std::uint64_t m = pool;
    while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (dk_extend_through(g, need_a - 1, need_b, m, common & g.double_mask(w),
                              a_mask | (1ull << w), u, v))
            return true;
    }
    return false;
}

bool has_complete_bipartite_through(const Digraph& g, int a, int b, int u, int v) {
    if (a + b > g.order()) return false;
    // Every DK edge is half of a double edge.
    if (!g.has_edge(u, v) || !g.has_edge(v, u)) return false;
    std::uint64_t all = g.vertex_mask();
    if (dk_extend_through(g, a, b, all, all, 0, u, v)) return true;
    if (a != b && dk_extend_through(g, b, a, all, all, 0, u, v)) return true;
    return false;
}

// --- explicit patterns ------------------------------------------------------

// Backtracking injection of h into g. `map[i]` is the g-vertex assigned to
// h-vertex i, -1 if unassigned.
bool embed(const Digraph& g, const Digraph& h, int next, std::array<int, kMaxVertices>& map,
           std::uint64_t used) {
    if (next == h.order()) return true;
    if (map[static_cast<unsigned>(next)] >= 0)
        return embed(g, h, next + 1, map, used);
    for (int c = 0; c < g.order(); ++c) {
        if ((used >> c) & 1u) continue;
        bool ok = true;
        for (int p = 0; p < h.order() && ok; ++p) {
            int m = map[static_cast<unsigned>(p)];
            if (m < 0 || p == next) continue;
            if (h.has_edge(next, p) && !g.has_edge(c, m)) ok = false;
            if (h.has_edge(p, next) && !g.has_edge(m, c)) ok = false;
        }
        if (!ok) continue;
        map[static_cast<unsigned>(next)] = c;
        if (embed(g, h, next + 1, map, used | (1ull << c))) return true;
        map[static_cast<unsigned>(next)] = -1;
    }
    return false;
}

bool has_explicit(const Digraph& g, const Digraph& h) {
    if (h.order() > g.order()) return false;
    std::array<int, kMaxVertices> map;
    map.fill(-1);
    return embed(g, h, 0, map, 0);
}

bool has_explicit_through(const Digraph& g, const Digraph& h, int u, int v) {
    if (h.order() > g.order()) return false;
    if (!g.has_edge(u, v)) return false;
    // Pin some h-edge (x,y) onto (u,v) and extend.
    for (auto [x, y] : h.edges()) {
        std::array<int, kMaxVertices> map;
        map.fill(-1);
        map[static_cast<unsigned>(x)] = u;
        map[static_cast<unsigned>(y)] = v;
        if (h.has_edge(y, x) && !g.has_edge(v, u)) continue;
        bool consistent = true;
        if (x == y) consistent = false;
        if (consistent && embed(g, h, 0, map, (1ull << u) | (1ull << v))) return true;
    }
    return false;
}

}  // namespace

Pattern Pattern::trans_tournament(int k) {
    if (k < 1) throw std::invalid_argument("transitive tournament needs k >= 1");
    Pattern p;
    p.kind = Kind::trans_tournament;
    p.k = k;
    return p;
}

Pattern Pattern::directed_cycle(int k) {
    if (k < 2) throw std::invalid_argument("directed cycle needs k >= 2");
    Pattern p;
    p.kind = Kind::directed_cycle;
    p.k = k;
    return p;
}

Pattern Pattern::complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartite classes must be nonempty");
    Pattern p;
    p.kind = Kind::complete_bipartite;
    p.a = a;
    p.b = b;
    return p;
}

Pattern Pattern::explicit_graph(Digraph g) {
    Pattern p;
    p.kind = Kind::explicit_graph;
    p.graph = std::move(g);
    return p;
}

std::optional<Pattern> Pattern::parse(std::string_view s) {
    auto colon = s.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    std::string_view head = s.substr(0, colon);
    std::string_view rest = s.substr(colon + 1);
    try {
        if (head == "T") {
            auto k = parse_int(rest);
            if (!k) return std::nullopt;
            return trans_tournament(*k);
        }
        if (head == "C") {
            auto k = parse_int(rest);
            if (!k) return std::nullopt;
            return directed_cycle(*k);
        }
        if (head == "DK") {
            auto comma = rest.find(',');
            if (comma == std::string_view::npos) return std::nullopt;
            auto a = parse_int(rest.substr(0, comma));
            auto b = parse_int(rest.substr(comma + 1));
            if (!a || !b) return std::nullopt;
            return complete_bipartite(*a, *b);
        }
        if (head == "X") return explicit_graph(Digraph::parse(rest));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::string Pattern::to_string() const {
    switch (kind) {
        case Kind::trans_tournament: return "T:" + std::to_string(k);
        case Kind::directed_cycle: return "C:" + std::to_string(k);
        case Kind::complete_bipartite:
            return "DK:" + std::to_string(a) + "," + std::to_string(b);
        case Kind::explicit_graph: return "X:" + graph.to_text();
    }
    return {};
}

int Pattern::order() const {
    switch (kind) {
        case Kind::trans_tournament:
        case Kind::directed_cycle: return k;
        case Kind::complete_bipartite: return a + b;
        case Kind::explicit_graph: return graph.order();
    }
    return 0;
}

bool contains_pattern(const Digraph& g, const Pattern& p) {
    switch (p.kind) {
        case Pattern::Kind::trans_tournament:
            if (p.k > g.order()) return false;
            if (p.k == 1) return true;
            return tt_extend(g, p.k, g.vertex_mask());
        case Pattern::Kind::directed_cycle: return has_cycle_of_length(g, p.k);
        case Pattern::Kind::complete_bipartite: return has_complete_bipartite(g, p.a, p.b);
        case Pattern::Kind::explicit_graph: return has_explicit(g, p.graph);
    }
    return false;
}

bool contains_pattern_with_edge(const Digraph& g, const Pattern& p, int u, int v) {
    switch (p.kind) {
        case Pattern::Kind::trans_tournament:
            // A copy through an edge needs k >= 2; T_1 copies use no edges.
            if (p.k < 2 || p.k > g.order()) return false;
            return tt_extend_through(g, p.k, g.vertex_mask(), u, v, false, false);
        case Pattern::Kind::directed_cycle: return has_cycle_through_edge(g, p.k, u, v);
        case Pattern::Kind::complete_bipartite:
            return has_complete_bipartite_through(g, p.a, p.b, u, v);
        case Pattern::Kind::explicit_graph: return has_explicit_through(g, p.graph, u, v);
    }
    return false;
}

bool contains_pattern_with_pair(const Digraph& g, const Pattern& p, int u, int v,
                                bool forward, bool backward) {
    if (forward && contains_pattern_with_edge(g, p, u, v)) return true;
    if (backward && contains_pattern_with_edge(g, p, v, u)) return true;
    return false;
}

}  // namespace tdl
