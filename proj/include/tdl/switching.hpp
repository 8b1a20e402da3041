#pragma once

#include "tdl/bigint.hpp"
#include "tdl/digraph.hpp"
#include "tdl/order.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tdl {

/// Rank-aligned block of consecutive vertices in the canonical
/// transitive-optimal ordering, eligible for the acyclic-to-cycle switch.
/// Blocks have 4 vertices when the forbidden cycle is C_3 and 3 vertices
/// for longer forbidden cycles.
struct FlippableSet {
    std::vector<int> vertices;  // in rank order
    int rank = 0;               // rank of the first vertex; multiple of the block size
};

int flip_block_size(int cycle_len);

/// The floor(n/block) flippable sets of an acyclic oriented graph, in rank
/// order, under the canonical (lexicographic tie-break) transitive-optimal
/// ordering. Rejects graphs with backwards edges. The tie-break parameter
/// exists to probe that downstream counts do not depend on which optimal
/// ordering is fixed.
std::vector<FlippableSet> flippable_sets(const Digraph& g, int cycle_len = 3,
                                         OrderingTieBreak tie = OrderingTieBreak::lex_smallest);

/// Deletes every edge inside each chosen block and plants a directed cycle
/// over the block's vertices in rank order. Rejects non-acyclic inputs and
/// malformed or duplicate blocks.
Digraph flip(const Digraph& g, const std::vector<FlippableSet>& chosen, int cycle_len = 3,
             OrderingTieBreak tie = OrderingTieBreak::lex_smallest);

/// Number of induced directed cycles of the given length (vertex subsets
/// whose induced subgraph is exactly one directed cycle).
long long count_induced_cycles(const Digraph& g, int len);

/// Sizes of the backwards-edge classes of C_k-free oriented graphs:
/// histogram r -> #graphs with exactly r backwards edges. Exhaustive census.
std::map<long long, BigInt> switch_class_sizes(int n, int cycle_len, int jobs = 1,
                                               std::uint64_t budget = 0);

struct SwitchForwardReport {
    int n = 0, m2 = 0, cycle_len = 3;
    int restricted_edge_max = 0;  // 0 = full enumeration
    BigInt source_count = 0;
    BigInt images_per_source = 0;  // C(floor(n/block), m2)
    BigInt distinct_images = 0;
    std::uint64_t max_preimages = 0;
    BigInt preimage_bound = 0;  // 2^{8 m2} (blocks of 4) or 2^{5 m2} (blocks of 3)
    bool per_source_degree_ok = true;
    bool images_well_formed = true;  // cycle-free for the forbidden length, beta == m2,
                                     // exactly m2 induced planted cycles
    bool preimage_bound_ok = true;
    bool pass = false;
};

/// Enumerates the acyclic class, applies every m2-subset of flips, and
/// verifies the double-counting identity: every source has exactly
/// C(floor(n/block), m2) distinct images, every image lands in the
/// backwards-count-m2 class, and no image has more than the stated number
/// of preimages. Full enumeration needs n <= 6; n = 7, 8 run with an edge
/// cap and are labelled restricted.
SwitchForwardReport forward_degree_identity_check(
    int n, int m2, int cycle_len = 3, int jobs = 1, int restricted_edge_max = 0,
    OrderingTieBreak tie = OrderingTieBreak::lex_smallest);

struct SwitchBackwardReport {
    int n = 0, m1 = 0, cycle_len = 3;
    BigInt class_count = 0;   // graphs with exactly m1 backwards edges
    BigInt distinct_images = 0;
    std::uint64_t max_preimages = 0;
    BigInt bound = 0;  // C(floor(n^2/2), m1) * 2^{m1}
    bool images_acyclic = true;
    bool pass = false;
};

/// Maps every C_k-free oriented graph with m1 backwards edges to its
/// backwards-edge-deleted image and checks the preimage bound
/// C(floor(n^2/2), m1) * 2^{m1}.
SwitchBackwardReport backward_preimage_bound_check(int n, int m1, int cycle_len = 3,
                                                   int jobs = 1);

struct SwitchRatioReport {
    int n = 0, m1 = 0, m2 = 0, cycle_len = 3;
    BigInt class_m1 = 0, class_m2 = 0;
    // |O_m2| * C(floor(n^2/2), m1) * 2^{m1} * preimage_bound >=
    // |O_m1| * C(floor(n/block), m2)
    bool pass = false;
};

/// Combines the two counting identities into the lower-bound direction for
/// the class-size ratio, from exhaustive class sizes.
SwitchRatioReport switch_ratio_check(int n, int m1, int m2, int cycle_len = 3, int jobs = 1);

}  // namespace tdl
