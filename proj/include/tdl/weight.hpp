#pragma once

#include "tdl/digraph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace tdl {

/// Edge weight a with 1 <= a <= 2: either an exact rational p/q in lowest
/// terms or the symbolic value log2(3). The weighted size of a digraph is
/// a*f2 + f1; comparisons between weighted sizes are always decided exactly
/// (integer arithmetic for rationals, interval arithmetic with an exact
/// big-integer fallback for log2(3)), never by floating-point ties.
class Weight {
public:
    enum class Kind { rational, log3 };

    static Weight two() { return rational(2, 1); }
    static Weight log3() { return Weight(Kind::log3, 0, 1); }
    static Weight rational(long long num, long long den);

    static std::optional<Weight> parse(std::string_view s);
    std::string to_string() const;

    Kind kind() const { return kind_; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    double approx() const;

    bool operator==(const Weight&) const = default;

private:
    Weight(Kind kind, long long num, long long den) : kind_(kind), num_(num), den_(den) {}

    Kind kind_;
    long long num_;
    long long den_;
};

/// Sign of (a*x.f2 + x.f1) - (a*y.f2 + y.f1): -1, 0 or +1. Exact.
int weighted_compare(const WeightedSize& x, const WeightedSize& y, const Weight& a);

/// a*f2 + f1 as a double, for display only.
double weighted_value(const WeightedSize& ws, const Weight& a);

}  // namespace tdl
