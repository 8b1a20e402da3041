#pragma once

#include "tdl/bigint.hpp"
#include "tdl/digraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tdl {

/// A vertex ordering: sigma[v] is the rank of v (0-based), backwards counts
/// the edges u->v with sigma[u] > sigma[v].
struct VertexOrdering {
    std::vector<int> sigma;
    long long backwards = 0;
};

/// Recount backwards edges of g under sigma.
long long backwards_edges(const Digraph& g, const std::vector<int>& sigma);

enum class OrderingTieBreak {
    lex_smallest,  // canonical: lexicographically smallest vertex sequence
    lex_largest,   // used to probe tie-break sensitivity
};

/// Exact minimum number of backwards edges over all orderings (the minimum
/// feedback arc set size), with one witness ordering. Subset DP, O(2^n n),
/// refused above n = 22. Among optimal orderings the witness realises the
/// requested tie-break on the vertex sequence (rank 0 first).
VertexOrdering transitive_optimal_ordering(
    const Digraph& g, OrderingTieBreak tie = OrderingTieBreak::lex_smallest);

/// The backwards count alone.
long long beta(const Digraph& g);

/// Brute-force reference: minimum over all n! orderings. Test oracle only.
long long beta_brute_force(const Digraph& g);

/// Report of the beta <= gamma sweep over {C_2,C_3}-free digraphs.
struct CssReport {
    int n_max = 0;
    BigInt graphs_checked = 0;
    BigInt violations = 0;
    // empirical maximum of beta/gamma over graphs with gamma > 0
    long long max_ratio_beta = 0;
    long long max_ratio_gamma = 1;
    std::string witness_text;  // a graph attaining the maximum ratio
    bool pass = false;
};

/// Iterates every labelled digraph on 1..n_max vertices, filters the
/// {C_2,C_3}-free ones, asserts beta <= gamma, and records the empirical
/// maximum of beta/gamma (probing the conjectured beta <= gamma/2).
CssReport css_check(int n_max);

/// Same check over `samples` uniformly drawn digraphs on n vertices
/// (seeded, reproducible).
CssReport css_sample_check(int n, std::uint64_t samples, std::uint64_t seed);

/// k-colouring of the vertices; classes[v] in 0..k-1. non_crossing counts
/// directed edges with both endpoints in one class (a double edge counts 2).
struct Partition {
    int k = 1;
    std::vector<int> classes;
    long long non_crossing = 0;
};

long long non_crossing_edges(const Digraph& g, const std::vector<int>& classes);

/// Exact minimum of non-crossing edges over all k-partitions, with the
/// lexicographically least optimal class assignment (vertex 0 in class 0,
/// classes numbered by first appearance). Refused above n = 24.
Partition optimal_partition(const Digraph& g, int k);

/// True iff g admits a k-partition with no non-crossing edges. Same search
/// as optimal_partition but stops at the first zero-cost assignment.
bool is_k_partite(const Digraph& g, int k);

/// Directed edges joining x to its own class (in + out), per vertex.
std::vector<int> degree_into_own_class(const Digraph& g, const Partition& p);

/// True iff no single-vertex move to another class reduces the non-crossing
/// count. Global optima always pass.
bool optimality_local_check(const Digraph& g, const Partition& p);

enum class TargetFamily {
    subgraph_of_transitive_tournament,
    k_partite,
    transitive_bipartite_blow_up_subgraph,
};

/// Minimum number of single-edge changes (add, delete, reorient) needed to
/// land in the family. k is only used for the k_partite family. Exact; the
/// blow-up case runs a subset DP over ordered typed parts and is refused
/// above n = 16.
long long distance_to_family(const Digraph& g, TargetFamily family, int k = 0);

/// Breadth-first search in edit space until an acyclic digraph is reached.
/// Test oracle for distance_to_family(subgraph_of_transitive_tournament).
long long acyclic_distance_brute_force(const Digraph& g);

/// Minimum edit distance from g to any digraph isomorphic to the doubled
/// balanced complete k-partite graph (minimised over balanced labelled
/// k-partitions).
long long distance_to_turan_digraph(const Digraph& g, int k);

}  // namespace tdl
