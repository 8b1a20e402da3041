#include "tdl/construct.hpp"
#include "tdl/containers.hpp"
#include "tdl/errors.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using namespace tdl;

TEST_CASE("pattern hypergraph edge counts") {
    auto c3 = directed_cycle_graph(3);
    auto t3 = transitive_tournament(3);

    auto d4 = build_pattern_hypergraph(4, c3);
    CHECK(d4.edges.size() == 8);  // two orientations per 3-subset
    CHECK(d4.ground_n == 12);
    CHECK(d4.r == 3);

    auto d3 = build_pattern_hypergraph(3, t3);
    CHECK(d3.edges.size() == 6);  // all labellings of the transitive triangle

    auto d2 = build_pattern_hypergraph(2, c3);
    CHECK(d2.edges.empty());

    for (int base_n = 3; base_n <= 9; ++base_n) {
        BigInt triples = binomial(static_cast<std::uint64_t>(base_n), 3);
        CHECK(BigInt(build_pattern_hypergraph(base_n, c3).edges.size()) == 2 * triples);
        CHECK(BigInt(build_pattern_hypergraph(base_n, t3).edges.size()) == 6 * triples);
    }

    // every edge is a genuine labelled copy: r elements each
    for (const auto& edge : d4.edges) CHECK(edge.size() == 3);
}

TEST_CASE("hyperedges decode to copies of the pattern") {
    auto decode = [](const std::vector<std::uint32_t>& edge, int base_n) {
        Digraph g(base_n);
        for (auto id : edge) {
            int i = static_cast<int>(id) / (base_n - 1);
            int rem = static_cast<int>(id) % (base_n - 1);
            int j = rem + (rem >= i ? 1 : 0);
            g.add_edge(i, j);
        }
        return g;
    };
    for (const auto& h : {directed_cycle_graph(3), transitive_tournament(3),
                          directed_cycle_graph(4)}) {
        auto dh = build_pattern_hypergraph(5, h);
        for (const auto& edge : dh.edges) {
            auto g = decode(edge, 5);
            CHECK(g.edge_count() == h.edge_count());
            // restrict to the support and compare up to isomorphism
            CHECK(contains_pattern(g, Pattern::explicit_graph(h)));
        }
    }
}

TEST_CASE("m density") {
    auto c3 = m_density(directed_cycle_graph(3));
    CHECK(c3.num == 2);
    CHECK(c3.den == 1);
    auto t3 = m_density(transitive_tournament(3));
    CHECK(t3.num == 2);
    CHECK(t3.den == 1);
    auto c5 = m_density(directed_cycle_graph(5));
    CHECK(c5.num == 4);
    CHECK(c5.den == 3);
    auto c4 = m_density(directed_cycle_graph(4));
    CHECK(c4.num == 3);
    CHECK(c4.den == 2);

    // paths maximise at 1
    auto path = m_density(Digraph::parse("4;0->1,1->2,2->3"));
    CHECK(path.num == 1);
    CHECK(path.den == 1);

    CHECK_THROWS_AS(m_density(Digraph::parse("3;0->1")), std::invalid_argument);
    CHECK_THROWS_AS(m_density(Digraph::parse("2;0->1,1->0")), std::invalid_argument);
}

TEST_CASE("co-degree identities") {
    auto dh = build_pattern_hypergraph(4, directed_cycle_graph(3));
    // average degree: n d = r e
    auto profile = co_degree(dh, 1.0);
    long double nd = profile.average_degree * profile.ground_n;
    CHECK(static_cast<double>(nd) ==
          doctest::Approx(3.0 * static_cast<double>(dh.edges.size())).epsilon(1e-12));

    // at tau = 1 the defining identity reads delta_j * n * d = sum_v d^(j)(v)
    for (std::size_t j = 0; j < profile.delta_j.size(); ++j) {
        long double lhs = profile.delta_j[j] * nd;
        long double rhs = profile.degree_sums[j].convert_to<long double>();
        CHECK(static_cast<double>(lhs) == doctest::Approx(static_cast<double>(rhs)).epsilon(1e-12));
    }

    // zero-edge hypergraph: delta defined as 0
    auto empty = build_pattern_hypergraph(2, directed_cycle_graph(3));
    auto zero = co_degree(empty, 1.0);
    CHECK(zero.delta == 0.0L);

    // delta is non-increasing in tau
    auto dh6 = build_pattern_hypergraph(6, directed_cycle_graph(3));
    long double prev = -1;
    for (double tau : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        auto p = co_degree(dh6, tau);
        if (prev >= 0) CHECK(p.delta <= prev + 1e-15L);
        prev = p.delta;
    }
    CHECK_THROWS_AS(co_degree(dh6, 0.0), std::invalid_argument);

    // regression: D(6, C_3) at tau = 1/2 has d = 4, delta_2 = 1/2,
    // delta_3 = 1, delta = 2^2 (1/2 + 1/2) = 4 (hand-checked: any two edges
    // of a triangle determine the third, so every pair degree is 1)
    auto pinned = co_degree(dh6, 0.5);
    CHECK(pinned.edge_count == 40);
    CHECK(static_cast<double>(pinned.average_degree) == doctest::Approx(4.0));
    CHECK(static_cast<double>(pinned.delta_j[0]) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(static_cast<double>(pinned.delta_j[1]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(static_cast<double>(pinned.delta) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("delta bound check") {
    auto c3 = directed_cycle_graph(3);
    auto report = delta_bound_check(c3, "C:3", 1.0, 8, 10);
    CHECK(report.pass);
    for (const auto& row : report.rows) {
        CHECK(row.margin > 0);
        // r 2^{r^2} v!^2 = 3 * 512 * 36 for three-edge triangle patterns
        CHECK(static_cast<double>(row.bound) == doctest::Approx(55296.0));
    }
    auto t3 = transitive_tournament(3);
    CHECK(delta_bound_check(t3, "T:3", 0.5, 9, 9).rows.size() == 1);
    CHECK_THROWS_AS(delta_bound_check(c3, "C:3", 1.5, 8, 9), std::invalid_argument);
}

TEST_CASE("hypergraph budget guard") {
    CHECK_THROWS_AS(build_pattern_hypergraph(40, directed_cycle_graph(3)), budget_error);
}
