#pragma once

#include "tdl/digraph.hpp"

namespace tdl {

/// Exact isomorphism test by permutation search with degree-profile pruning.
/// Intended for small instances (n <= 10 or so).
bool isomorphic(const Digraph& g, const Digraph& h);

}  // namespace tdl
