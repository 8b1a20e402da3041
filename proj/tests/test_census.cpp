#include "tdl/census.hpp"
#include "tdl/construct.hpp"
#include "tdl/errors.hpp"
#include "tdl/extremal.hpp"
#include "tdl/order.hpp"
#include "tdl/rng.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using namespace tdl;

namespace {

CensusOptions make_options(int n, GraphFamily family, std::optional<Pattern> pattern = {},
                           const std::string& predicates = "") {
    CensusOptions options;
    options.n = n;
    options.family = family;
    options.pattern = std::move(pattern);
    options.predicates = PredicateSpec::parse_list(predicates);
    return options;
}

}  // namespace

TEST_CASE("census totals match closed forms") {
    for (int n = 1; n <= 4; ++n) {
        auto o = exhaustive_census(make_options(n, GraphFamily::oriented));
        auto d = exhaustive_census(make_options(n, GraphFamily::digraph));
        int m = n * (n - 1) / 2;
        CHECK(o.total == big_pow(3, static_cast<std::uint64_t>(m)));
        CHECK(d.total == big_pow(4, static_cast<std::uint64_t>(m)));
    }
}

TEST_CASE("pattern-free counts on small instances") {
    // 27 oriented graphs on 3 vertices, 6 of them transitive tournaments
    auto f3 = exhaustive_census(make_options(3, GraphFamily::oriented,
                                             Pattern::trans_tournament(3)));
    CHECK(f3.total == 21);

    // T_3 needs three vertices
    auto f2 = exhaustive_census(make_options(2, GraphFamily::oriented,
                                             Pattern::trans_tournament(3)));
    CHECK(f2.total == 3);

    // C_2-free digraphs are exactly the oriented graphs
    for (int n = 2; n <= 4; ++n) {
        auto record = exhaustive_census(make_options(n, GraphFamily::digraph,
                                                     Pattern::directed_cycle(2)));
        CHECK(record.total == big_pow(3, static_cast<std::uint64_t>(n * (n - 1) / 2)));
    }

    // among the 21 T_3-free oriented graphs on 3 vertices, all but the two
    // cyclic triangles are 2-partite
    auto partite = exhaustive_census(make_options(3, GraphFamily::oriented,
                                                  Pattern::trans_tournament(3),
                                                  "k-partite:2"));
    REQUIRE(partite.tally("k-partite:2") != nullptr);
    CHECK(*partite.tally("k-partite:2") == 19);
}

TEST_CASE("census agrees with a plain filter loop") {
    // independent check of the incremental filtering: enumerate every code,
    // run whole-graph detection
    for (auto family : {GraphFamily::oriented, GraphFamily::digraph})
        for (const auto& pattern : {Pattern::trans_tournament(3), Pattern::directed_cycle(3)}) {
            for (int n = 2; n <= 4; ++n) {
                int m = n * (n - 1) / 2;
                int radix = family == GraphFamily::digraph ? 4 : 3;
                std::uint64_t states = 1;
                for (int i = 0; i < m; ++i) states *= static_cast<std::uint64_t>(radix);
                BigInt expected = 0;
                for (std::uint64_t code = 0; code < states; ++code) {
                    Digraph g(n);
                    std::uint64_t c = code;
                    int p = 0;
                    for (int u = 0; u < n; ++u)
                        for (int v = u + 1; v < n; ++v, ++p) {
                            auto state = static_cast<int>(c % static_cast<std::uint64_t>(radix));
                            c /= static_cast<std::uint64_t>(radix);
                            if (state == 1 || state == 3) g.add_edge(u, v);
                            if (state == 2 || state == 3) g.add_edge(v, u);
                        }
                    if (!contains_pattern(g, pattern)) ++expected;
                }
                auto record = exhaustive_census(make_options(n, family, pattern));
                CHECK(record.total == expected);
            }
        }
}

TEST_CASE("incremental filtering sampled cross-check at n=5") {
    // random pair-state codes, whole-graph detection as the referee
    Pattern pattern = Pattern::trans_tournament(3);
    SplitMix64 rng(314);
    BigInt free_count = 0;
    std::uint64_t draws = 3000;
    for (std::uint64_t i = 0; i < draws; ++i) {
        Digraph g(5);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) {
                auto state = rng.below(3);
                if (state == 1) g.add_edge(u, v);
                if (state == 2) g.add_edge(v, u);
            }
        if (!contains_pattern(g, pattern)) ++free_count;
    }
    // exhaustive incremental census: 9735 of 3^10 graphs are pattern-free
    auto record = exhaustive_census(make_options(5, GraphFamily::oriented, pattern));
    CHECK(record.total == 9735);
    double p = 9735.0 / 59049.0;
    double sigma = std::sqrt(p * (1 - p) / static_cast<double>(draws));
    double sampled = static_cast<double>(free_count) / static_cast<double>(draws);
    CHECK(std::abs(sampled - p) <= 4 * sigma);
}

TEST_CASE("census is schedule independent") {
    auto options = make_options(4, GraphFamily::digraph, Pattern::directed_cycle(3),
                                "k-partite:2,acyclic,beta-histogram");
    options.jobs = 1;
    auto serial = exhaustive_census(options);
    options.jobs = 8;
    auto parallel = exhaustive_census(options);
    CHECK(serial.total == parallel.total);
    REQUIRE(serial.tallies.size() == parallel.tallies.size());
    for (std::size_t i = 0; i < serial.tallies.size(); ++i) {
        CHECK(serial.tallies[i].first == parallel.tallies[i].first);
        CHECK(serial.tallies[i].second == parallel.tallies[i].second);
    }
}

TEST_CASE("k-partite counts") {
    CHECK(count_k_partite(2, 2, GraphFamily::oriented) == 3);
    // 2-colourability excludes all 8 orientations of the underlying
    // triangle, leaving 19 of the 27 graphs on 3 vertices
    CHECK(count_k_partite(3, 2, GraphFamily::oriented) == 19);
    CHECK(count_k_partite(2, 2, GraphFamily::digraph) == 4);
    CHECK(count_k_partite(3, 2, GraphFamily::digraph) == 37);

    // cross-check the dedicated counter against census predicates
    for (int n = 2; n <= 4; ++n)
        for (int k = 2; k <= 3; ++k)
            for (auto family : {GraphFamily::oriented, GraphFamily::digraph}) {
                auto record = exhaustive_census(
                    make_options(n, family, std::nullopt, "k-partite:" + std::to_string(k)));
                CHECK(count_k_partite(n, k, family) ==
                      *record.tally("k-partite:" + std::to_string(k)));
            }
}

TEST_CASE("sandwich report") {
    auto report = sandwich_check(3, 2, GraphFamily::oriented);
    CHECK(report.count == 19);
    CHECK(report.upper == big_pow(2, 3) * big_pow(3, 2));  // k^n 3^{t_2(3)} = 8*9
    CHECK(report.pass);  // informational below n = 2k^2
    CHECK_FALSE(report.asserted);
    auto big = sandwich_check(6, 2, GraphFamily::oriented);
    CHECK(big.holds_upper);
    CHECK(big.holds_middle);
    CHECK(big.count == 246603);
}

TEST_CASE("sampling is reproducible and unbiased") {
    auto options = make_options(4, GraphFamily::oriented, Pattern::trans_tournament(3),
                                "bipartite");
    auto one = sample_census(options, 200000, 42);
    auto two = sample_census(options, 200000, 42);
    CHECK(one.total == two.total);
    CHECK(*one.tally("bipartite") == *two.tally("bipartite"));
    CHECK(one.attempts == two.attempts);

    options.jobs = 8;
    auto parallel = sample_census(options, 200000, 42);
    CHECK(parallel.attempts == one.attempts);
    CHECK(*parallel.tally("bipartite") == *one.tally("bipartite"));

    // within 3 sigma of the exhaustive fraction
    auto exact = exhaustive_census(make_options(4, GraphFamily::oriented,
                                                Pattern::trans_tournament(3), "bipartite"));
    double p = static_cast<double>(*exact.tally("bipartite")) /
               static_cast<double>(exact.total);
    double sampled = static_cast<double>(*one.tally("bipartite")) /
                     static_cast<double>(one.total);
    double sigma = std::sqrt(p * (1 - p) / static_cast<double>(one.total));
    CHECK(std::abs(sampled - p) <= 3 * sigma);
}

TEST_CASE("sampling input validation") {
    auto options = make_options(4, GraphFamily::oriented);
    CHECK_THROWS_AS(sample_census(options, 0, 1), std::invalid_argument);
    // a pattern contained in the empty graph rejects every sample
    auto hopeless = make_options(3, GraphFamily::oriented, Pattern::trans_tournament(1));
    CHECK_THROWS_AS(sample_census(hopeless, 10, 1), budget_error);
}

TEST_CASE("budget refusals name the required budget") {
    auto options = make_options(30, GraphFamily::digraph, Pattern::directed_cycle(3));
    try {
        exhaustive_census(options);
        FAIL("expected a budget refusal");
    } catch (const budget_error& e) {
        CHECK(e.allowed() > 0);
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("pattern-free counts dominate the extremal lower bound") {
    // each family's count is at least 2^(weighted optimum): every subgraph of
    // an extremal witness is pattern-free
    for (int n = 2; n <= 4; ++n) {
        for (const auto& pattern : {Pattern::trans_tournament(3), Pattern::directed_cycle(3)}) {
            auto oriented = exhaustive_census(make_options(n, GraphFamily::oriented, pattern));
            ExtremalQuery q;
            q.n = n;
            q.pattern = pattern;
            q.family = GraphFamily::oriented;
            q.weight = Weight::log3();
            auto opt = extremal_number(q);
            // 2^{e_log3} = 3^{f2} 2^{f1} with f2 = 0 for oriented witnesses
            BigInt bound = big_pow(2, static_cast<std::uint64_t>(opt.optimum.f1)) *
                           big_pow(3, static_cast<std::uint64_t>(opt.optimum.f2));
            CHECK(oriented.total >= bound);

            auto digraph = exhaustive_census(make_options(n, GraphFamily::digraph, pattern));
            q.family = GraphFamily::digraph;
            q.weight = Weight::two();
            auto opt2 = extremal_number(q);
            BigInt bound2 = big_pow(2, static_cast<std::uint64_t>(opt2.optimum.f1)) *
                            big_pow(4, static_cast<std::uint64_t>(opt2.optimum.f2));
            CHECK(digraph.total >= bound2);
        }
    }
}

TEST_CASE("trend report") {
    auto report = trend_report(Pattern::trans_tournament(3), GraphFamily::oriented, 3, 4,
                               *PredicateSpec::parse("k-partite:2"));
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].fraction == doctest::Approx(19.0 / 21.0));
    CHECK(report.rows[1].hits == 249);
    CHECK(report.rows[1].total == 317);

    auto empty = trend_report(Pattern::trans_tournament(3), GraphFamily::oriented, 5, 4,
                              *PredicateSpec::parse("k-partite:2"));
    CHECK(empty.rows.empty());
}

TEST_CASE("predicate grammar") {
    CHECK(PredicateSpec::parse("k-partite:3")->to_string() == "k-partite:3");
    CHECK(PredicateSpec::parse("acyclic")->to_string() == "acyclic");
    CHECK(PredicateSpec::parse("beta-histogram")->to_string() == "beta-histogram");
    CHECK(PredicateSpec::parse("bipartite")->to_string() == "bipartite");
    CHECK_FALSE(PredicateSpec::parse("nonsense").has_value());
    CHECK_FALSE(PredicateSpec::parse("k-partite:0").has_value());
    CHECK_THROWS_AS(PredicateSpec::parse_list("acyclic,nonsense"), std::invalid_argument);
}
