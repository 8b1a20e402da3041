#include "tdl/weight.hpp"

#include "tdl/bigint.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tdl {

namespace {

std::optional<long long> parse_ll(std::string_view s) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

Weight Weight::rational(long long num, long long den) {
    if (den <= 0 || num <= 0) throw std::invalid_argument("weight must be a positive rational");
    long long g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (num < den || num > 2 * den)
        throw std::invalid_argument("weight must lie in [1, 2]");
    return Weight(Kind::rational, num, den);
}

std::optional<Weight> Weight::parse(std::string_view s) {
    if (s == "log3") return log3();
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            auto n = parse_ll(s);
            if (!n) return std::nullopt;
            return rational(*n, 1);
        }
        auto n = parse_ll(s.substr(0, slash));
        auto d = parse_ll(s.substr(slash + 1));
        if (!n || !d) return std::nullopt;
        return rational(*n, *d);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string Weight::to_string() const {
    if (kind_ == Kind::log3) return "log3";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double Weight::approx() const {
    if (kind_ == Kind::log3) return std::log2(3.0);
    return static_cast<double>(num_) / static_cast<double>(den_);
}

int weighted_compare(const WeightedSize& x, const WeightedSize& y, const Weight& a) {
    long long d1 = x.f1 - y.f1;
    long long d2 = x.f2 - y.f2;
    if (d1 == 0 && d2 == 0) return 0;
    if (a.kind() == Weight::Kind::rational) {
        // sign of d1 + (p/q) d2  ==  sign of q*d1 + p*d2
        long long v = a.den() * d1 + a.num() * d2;
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
    // a = log2(3), irrational: the difference is never zero here. Interval
    // check with doubles first; exact fallback compares 2^d1 * 3^d2 with 1.
    static const double kLog3Lo = 1.5849625007211560;
    static const double kLog3Hi = 1.5849625007211565;
    double lo = static_cast<double>(d1) + (d2 >= 0 ? kLog3Lo : kLog3Hi) * static_cast<double>(d2);
    double hi = static_cast<double>(d1) + (d2 >= 0 ? kLog3Hi : kLog3Lo) * static_cast<double>(d2);
    double slack = 1e-9 * (std::abs(static_cast<double>(d1)) + std::abs(static_cast<double>(d2)) + 1.0);
    if (lo - slack > 0) return 1;
    if (hi + slack < 0) return -1;
    BigInt lhs = big_pow(2, static_cast<std::uint64_t>(d1 > 0 ? d1 : 0)) *
                 big_pow(3, static_cast<std::uint64_t>(d2 > 0 ? d2 : 0));
    BigInt rhs = big_pow(2, static_cast<std::uint64_t>(d1 < 0 ? -d1 : 0)) *
                 big_pow(3, static_cast<std::uint64_t>(d2 < 0 ? -d2 : 0));
    return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

double weighted_value(const WeightedSize& ws, const Weight& a) {
    return a.approx() * static_cast<double>(ws.f2) + static_cast<double>(ws.f1);
}

}  // namespace tdl
