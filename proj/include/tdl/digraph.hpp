#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdl {

inline constexpr int kMaxVertices = 64;

/// Labelled digraph on vertices 0..n-1 with one out-neighbour bitmask per
/// vertex. No loops, no parallel edges in the same direction; a pair may
/// carry edges in both directions. Values are immutable once built up and
/// cheap to copy, so they can be shared freely across worker threads.
class Digraph {
public:
    Digraph() : n_(1) {}
    explicit Digraph(int n);

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        return (out_[static_cast<unsigned>(u)] >> v) & 1u;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void set_edge(int u, int v, bool present);

    /// Bitmask of out-neighbours of v.
    std::uint64_t out_mask(int v) const { return out_[static_cast<unsigned>(v)]; }
    /// Bitmask of in-neighbours of v (recomputed, O(n)).
    std::uint64_t in_mask(int v) const;
    /// Bitmask of vertices joined to v by edges in both directions.
    std::uint64_t double_mask(int v) const { return out_mask(v) & in_mask(v); }

    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~0ull : ((1ull << n_) - 1);
    }

    int edge_count() const;
    int out_degree(int v) const { return std::popcount(out_mask(v)); }
    int in_degree(int v) const { return std::popcount(in_mask(v)); }

    bool operator==(const Digraph& other) const;

    /// Canonical text form "n;u->v,u->v,..." with edges sorted
    /// lexicographically. Round-trips bit-exactly.
    std::string to_text() const;
    static Digraph parse(std::string_view text);

    /// Compact row-major adjacency-bitmask form "n:hex" (bit i*n+j set iff
    /// edge i->j, bits packed LSB-first into bytes). Round-trips bit-exactly.
    std::string to_hex() const;
    static Digraph from_hex(std::string_view text);

    std::vector<std::pair<int, int>> edges() const;

private:
    int n_;
    std::array<std::uint64_t, kMaxVertices> out_{};
};

enum class GraphFamily { oriented, digraph };

GraphFamily parse_family(std::string_view s);
std::string family_name(GraphFamily f);

/// True iff no pair carries edges in both directions.
bool is_oriented(const Digraph& g);

/// Counts of single-direction pairs (f1) and double-edge pairs (f2).
/// The weighted size under weight a is a*f2 + f1.
struct WeightedSize {
    long long f1 = 0;
    long long f2 = 0;

    bool operator==(const WeightedSize&) const = default;
};

WeightedSize weighted_size(const Digraph& g);

/// Unordered pairs with no edge in either direction ("gamma").
/// Satisfies gamma + f1 + f2 = n(n-1)/2.
long long nonadjacent_pairs(const Digraph& g);

/// True iff g has no directed cycle (independent DFS check, not the
/// feedback-arc solver).
bool is_acyclic(const Digraph& g);

/// True iff adding edge u->v to g would close a directed cycle, i.e. v
/// already reaches u.
bool edge_closes_cycle(const Digraph& g, int u, int v);

/// Pair-state code for graphs with at most 8 vertices: 2 bits per unordered
/// pair in lexicographic order (0 absent, 1 u->v, 2 v->u, 3 both).
std::uint64_t pair_code(const Digraph& g);
Digraph from_pair_code(int n, std::uint64_t code);

}  // namespace tdl
