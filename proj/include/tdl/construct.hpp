#pragma once

#include "tdl/digraph.hpp"

#include <vector>

namespace tdl {

/// Edge count t_k(n) of the complete k-partite graph with balanced classes
/// (the Turan graph). k >= n gives the complete graph.
long long turan_edge_count(int k, int n);

/// Balanced class sizes of the Turan graph, largest classes first.
std::vector<int> turan_class_sizes(int k, int n);

/// Transitive tournament on n vertices: edges i->j for all i < j.
Digraph transitive_tournament(int n);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0. Needs n >= 2.
Digraph directed_cycle_graph(int n);

/// Complete digraph on n vertices (every pair doubled).
Digraph complete_digraph(int n);

/// Complete bipartite digraph with classes {0..a-1} and {a..a+b-1}, all
/// cross pairs doubled.
Digraph complete_bipartite_digraph(int a, int b);

/// The Turan graph with every edge doubled: balanced k classes in label
/// order, all cross-class pairs carrying edges in both directions. This is
/// the extremal graph for forbidden T_{k+1}. Needs 1 <= k <= n.
Digraph turan_digraph(int k, int n);

/// Transitive chain of complete-digraph blocks of size k: edges u->v for all
/// u < v, plus v->u whenever floor(u/k) == floor(v/k). Extremal for
/// forbidden C_{k+1}. Needs 1 <= k <= n.
Digraph clique_chain_digraph(int n, int k);

/// Exact weighted size of clique_chain_digraph(n, k):
/// f1 = C(n,2) - (within-block pairs), f2 = within-block pairs, where the
/// within-block pairs number floor(n/k)*C(k,2) + C(n mod k, 2).
WeightedSize clique_chain_weighted_size(int n, int k);

/// All |A||A'| single edges directed from class {0..a-1} to {a..a+b-1}.
Digraph arrow_digraph(int a, int b);

/// One part of a transitive-bipartite blow up: a single vertex, or a
/// complete balanced bipartite digraph on an even number of vertices.
struct BlowUpPart {
    enum class Kind { single_vertex, balanced_bipartite };
    Kind kind = Kind::single_vertex;
    int size = 1;  // 1 for single vertices, even >= 2 for bipartite parts

    static BlowUpPart single() { return {}; }
    static BlowUpPart bipartite(int size);
};

/// Transitive-bipartite blow up: parts laid out in label order; all edges
/// between distinct parts run forward as single edges; bipartite parts carry
/// a complete balanced bipartite digraph between their two halves.
Digraph transitive_bipartite_blow_up(const std::vector<BlowUpPart>& parts);

}  // namespace tdl
