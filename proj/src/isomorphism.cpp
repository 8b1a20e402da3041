#include "tdl/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace tdl {

namespace {

// (out-degree, in-degree, doubled-degree) per vertex; an isomorphism must
// match profiles pointwise.
struct Profile {
    int out, in, both;
    bool operator==(const Profile&) const = default;
    auto operator<=>(const Profile&) const = default;
};

Profile profile(const Digraph& g, int v) {
    return {g.out_degree(v), g.in_degree(v), std::popcount(g.double_mask(v))};
}

bool extend(const Digraph& g, const Digraph& h, std::vector<int>& map,
            std::uint64_t used, int next, const std::vector<Profile>& pg,
            const std::vector<Profile>& ph) {
    int n = g.order();
    if (next == n) return true;
    for (int c = 0; c < n; ++c) {
        if ((used >> c) & 1u) continue;
        if (!(pg[static_cast<unsigned>(next)] == ph[static_cast<unsigned>(c)])) continue;
        bool ok = true;
        for (int p = 0; p < next && ok; ++p) {
            int m = map[static_cast<unsigned>(p)];
            if (g.has_edge(next, p) != h.has_edge(c, m)) ok = false;
            if (g.has_edge(p, next) != h.has_edge(m, c)) ok = false;
        }
        if (!ok) continue;
        map[static_cast<unsigned>(next)] = c;
        if (extend(g, h, map, used | (1ull << c), next + 1, pg, ph)) return true;
    }
    return false;
}

}  // namespace

bool isomorphic(const Digraph& g, const Digraph& h) {
    if (g.order() != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    int n = g.order();
    std::vector<Profile> pg, ph;
    for (int v = 0; v < n; ++v) {
        pg.push_back(profile(g, v));
        ph.push_back(profile(h, v));
    }
    auto sg = pg, sh = ph;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
    std::vector<int> map(static_cast<unsigned>(n), -1);
    return extend(g, h, map, 0, 0, pg, ph);
}

}  // namespace tdl
