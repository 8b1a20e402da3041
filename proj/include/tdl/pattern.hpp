#pragma once

#include "tdl/digraph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace tdl {

/// Forbidden-subgraph descriptor. Grammar used by the CLI and serialized
/// forms: "T:<k>" transitive tournament, "C:<k>" directed cycle,
/// "DK:<a>,<b>" complete bipartite digraph (edges in both directions),
/// "X:<digraph-literal>" explicit digraph.
struct Pattern {
    enum class Kind { trans_tournament, directed_cycle, complete_bipartite, explicit_graph };

    Kind kind = Kind::trans_tournament;
    int k = 0;  // order for T/C
    int a = 0, b = 0;  // class sizes for DK
    Digraph graph;  // payload for explicit patterns

    static Pattern trans_tournament(int k);
    static Pattern directed_cycle(int k);
    static Pattern complete_bipartite(int a, int b);
    static Pattern explicit_graph(Digraph g);

    static std::optional<Pattern> parse(std::string_view s);
    std::string to_string() const;

    /// Number of vertices a copy of the pattern occupies.
    int order() const;

    bool operator==(const Pattern&) const = default;
};

/// True iff g contains the pattern as a not-necessarily-induced subdigraph.
bool contains_pattern(const Digraph& g, const Pattern& p);

/// True iff g contains a copy of the pattern that uses the directed edge
/// u->v. When a graph was pattern-free before u->v was inserted, this
/// decides whether it still is, searching only copies through the new edge.
bool contains_pattern_with_edge(const Digraph& g, const Pattern& p, int u, int v);

/// Copies through any of the newly assigned edges of the pair {u,v}.
/// `forward`/`backward` say which directions were just added.
bool contains_pattern_with_pair(const Digraph& g, const Pattern& p, int u, int v,
                                bool forward, bool backward);

}  // namespace tdl
