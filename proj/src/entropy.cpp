#include "tdl/entropy.hpp"

#include "tdl/bigint.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

namespace tdl {

double binary_entropy(double p) {
    if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("entropy needs 0 < p < 1");
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

bool entropy_partial_sum_check(int n, double p) {
    if (n < 1) throw std::invalid_argument("partial-sum check needs n >= 1");
    if (!(p > 0.0) || !(p < 0.5)) throw std::invalid_argument("partial-sum check needs 0 < p < 1/2");

    auto cut = static_cast<std::uint64_t>(std::floor(p * n));
    BigInt sum = 0;
    for (std::uint64_t i = 0; i <= cut; ++i) sum += binomial(static_cast<std::uint64_t>(n), i);

    using Float = boost::multiprecision::cpp_bin_float_100;
    Float fp(p);
    Float entropy = -fp * log(fp) / log(Float(2)) - (1 - fp) * log(1 - fp) / log(Float(2));
    Float lhs_log = log(Float(sum)) / log(Float(2));
    return lhs_log <= entropy * n;
}

}  // namespace tdl
