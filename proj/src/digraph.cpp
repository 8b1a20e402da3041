#include "tdl/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace tdl {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

int parse_int(std::string_view s, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        bad(std::string("malformed ") + what + ": '" + std::string(s) + "'");
    return value;
}

}  // namespace

Digraph::Digraph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        bad("vertex count must be in 1.." + std::to_string(kMaxVertices));
}

void Digraph::add_edge(int u, int v) { set_edge(u, v, true); }

void Digraph::remove_edge(int u, int v) { set_edge(u, v, false); }

void Digraph::set_edge(int u, int v, bool present) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) bad("edge endpoint out of range");
    if (u == v) bad("loops are not allowed");
    if (present)
        out_[static_cast<unsigned>(u)] |= 1ull << v;
    else
        out_[static_cast<unsigned>(u)] &= ~(1ull << v);
}

std::uint64_t Digraph::in_mask(int v) const {
    std::uint64_t m = 0;
    for (int u = 0; u < n_; ++u)
        if (has_edge(u, v)) m |= 1ull << u;
    return m;
}

int Digraph::edge_count() const {
    int e = 0;
    for (int v = 0; v < n_; ++v) e += std::popcount(out_[static_cast<unsigned>(v)]);
    return e;
}

bool Digraph::operator==(const Digraph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (out_[static_cast<unsigned>(v)] != other.out_[static_cast<unsigned>(v)]) return false;
    return true;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t m = out_mask(u);
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            result.emplace_back(u, v);
        }
    }
    return result;
}

std::string Digraph::to_text() const {
    std::string s = std::to_string(n_) + ";";
    bool first = true;
    for (auto [u, v] : edges()) {
        if (!first) s += ',';
        first = false;
        s += std::to_string(u);
        s += "->";
        s += std::to_string(v);
    }
    return s;
}

Digraph Digraph::parse(std::string_view text) {
    auto semi = text.find(';');
    std::string_view head = semi == std::string_view::npos ? text : text.substr(0, semi);
    Digraph g(parse_int(head, "vertex count"));
    if (semi == std::string_view::npos) return g;
    std::string_view rest = text.substr(semi + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = comma == std::string_view::npos ? rest : rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (item.empty()) bad("empty edge in digraph literal");
        auto arrow = item.find("->");
        if (arrow == std::string_view::npos) bad("edge must be written u->v");
        int u = parse_int(item.substr(0, arrow), "edge tail");
        int v = parse_int(item.substr(arrow + 2), "edge head");
        if (g.has_edge(u, v)) bad("duplicate edge in digraph literal");
        g.add_edge(u, v);
    }
    return g;
}

std::string Digraph::to_hex() const {
    static const char* digits = "0123456789abcdef";
    int bits = n_ * n_;
    int bytes = (bits + 7) / 8;
    std::string raw(static_cast<size_t>(bytes), '\0');
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_edge(u, v)) {
                int idx = u * n_ + v;
                raw[static_cast<unsigned>(idx >> 3)] |= static_cast<char>(1 << (idx & 7));
            }
    std::string s = std::to_string(n_) + ":";
    for (char c : raw) {
        s += digits[(static_cast<unsigned char>(c) >> 4) & 0xf];
        s += digits[static_cast<unsigned char>(c) & 0xf];
    }
    return s;
}

Digraph Digraph::from_hex(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) bad("hex digraph must be n:hexbytes");
    Digraph g(parse_int(text.substr(0, colon), "vertex count"));
    std::string_view hex = text.substr(colon + 1);
    int bits = g.order() * g.order();
    if (static_cast<int>(hex.size()) != 2 * ((bits + 7) / 8))
        bad("hex digraph has wrong length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        bad("bad hex digit");
    };
    for (int idx = 0; idx < bits; ++idx) {
        int byte = nibble(hex[static_cast<unsigned>(2 * (idx >> 3))]) * 16 +
                   nibble(hex[static_cast<unsigned>(2 * (idx >> 3) + 1)]);
        if ((byte >> (idx & 7)) & 1) {
            int u = idx / g.order(), v = idx % g.order();
            if (u == v) bad("hex digraph encodes a loop");
            g.add_edge(u, v);
        }
    }
    return g;
}

GraphFamily parse_family(std::string_view s) {
    if (s == "oriented") return GraphFamily::oriented;
    if (s == "digraph") return GraphFamily::digraph;
    bad("family must be 'oriented' or 'digraph'");
}

std::string family_name(GraphFamily f) {
    return f == GraphFamily::oriented ? "oriented" : "digraph";
}

bool is_oriented(const Digraph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v) && g.has_edge(v, u)) return false;
    return true;
}

WeightedSize weighted_size(const Digraph& g) {
    WeightedSize ws;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            int present = (g.has_edge(u, v) ? 1 : 0) + (g.has_edge(v, u) ? 1 : 0);
            if (present == 1) ++ws.f1;
            if (present == 2) ++ws.f2;
        }
    return ws;
}

long long nonadjacent_pairs(const Digraph& g) {
    auto ws = weighted_size(g);
    long long pairs = static_cast<long long>(g.order()) * (g.order() - 1) / 2;
    return pairs - ws.f1 - ws.f2;
}

bool is_acyclic(const Digraph& g) {
    // Iterative DFS with colours: 0 unseen, 1 on stack, 2 done.
    std::array<unsigned char, kMaxVertices> colour{};
    std::array<int, kMaxVertices> stack;
    std::array<std::uint64_t, kMaxVertices> pending;
    for (int s = 0; s < g.order(); ++s) {
        if (colour[static_cast<unsigned>(s)]) continue;
        int top = 0;
        stack[0] = s;
        pending[0] = g.out_mask(s);
        colour[static_cast<unsigned>(s)] = 1;
        while (top >= 0) {
            if (pending[static_cast<unsigned>(top)] == 0) {
                colour[static_cast<unsigned>(stack[static_cast<unsigned>(top)])] = 2;
                --top;
                continue;
            }
            int v = std::countr_zero(pending[static_cast<unsigned>(top)]);
            pending[static_cast<unsigned>(top)] &= pending[static_cast<unsigned>(top)] - 1;
            if (colour[static_cast<unsigned>(v)] == 1) return false;
            if (colour[static_cast<unsigned>(v)] == 0) {
                ++top;
                stack[static_cast<unsigned>(top)] = v;
                pending[static_cast<unsigned>(top)] = g.out_mask(v);
                colour[static_cast<unsigned>(v)] = 1;
            }
        }
    }
    return true;
}

bool edge_closes_cycle(const Digraph& g, int u, int v) {
    if (u == v) return true;
    // Bitmask BFS from v: does v reach u?
    std::uint64_t reached = 1ull << v;
    std::uint64_t frontier = reached;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t m = frontier;
        while (m) {
            int w = std::countr_zero(m);
            m &= m - 1;
            next |= g.out_mask(w);
        }
        next &= ~reached;
        if ((next >> u) & 1u) return true;
        reached |= next;
        frontier = next;
    }
    return false;
}

std::uint64_t pair_code(const Digraph& g) {
    if (g.order() > 8) throw std::invalid_argument("pair_code needs n <= 8");
    std::uint64_t code = 0;
    int p = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v, ++p) {
            std::uint64_t state =
                (g.has_edge(u, v) ? 1u : 0u) | (g.has_edge(v, u) ? 2u : 0u);
            code |= state << (2 * p);
        }
    return code;
}

Digraph from_pair_code(int n, std::uint64_t code) {
    if (n > 8) throw std::invalid_argument("pair_code needs n <= 8");
    Digraph g(n);
    int p = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++p) {
            std::uint64_t state = (code >> (2 * p)) & 3u;
            if (state & 1u) g.add_edge(u, v);
            if (state & 2u) g.add_edge(v, u);
        }
    return g;
}

}  // namespace tdl
