#pragma once

namespace tdl {

/// Binary entropy H(p) = -p log2 p - (1-p) log2 (1-p), for 0 < p < 1.
double binary_entropy(double p);

/// Verifies sum_{i <= floor(pn)} C(n,i) <= 2^{H(p) n} for 0 < p < 1/2.
/// The partial sum is an exact big integer; the comparison is done at
/// 100-decimal-digit precision on the logarithmic scale.
bool entropy_partial_sum_check(int n, double p);

}  // namespace tdl
