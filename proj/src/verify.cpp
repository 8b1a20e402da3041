#include "tdl/verify.hpp"

#include "tdl/census.hpp"
#include "tdl/construct.hpp"
#include "tdl/containers.hpp"
#include "tdl/extremal.hpp"
#include "tdl/order.hpp"
#include "tdl/report.hpp"
#include "tdl/rng.hpp"
#include "tdl/switching.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

namespace tdl {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            if (!detail.str().empty()) detail << "; ";
            detail << what;
        }
    }

    void note(const std::string& what) {
        if (!detail.str().empty()) detail << "; ";
        detail << what;
    }
};

// ---- criterion 1: extremal formula for forbidden transitive tournaments ----

// Labelled copies of the doubled Turan graph: the multinomial over the
// balanced class sizes, divided by the permutations of equal-size classes.
BigInt labelled_turan_count(int k, int n) {
    BigInt count = factorial(static_cast<std::uint64_t>(n));
    auto sizes = turan_class_sizes(k, n);
    std::uint64_t run = 1;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        count /= factorial(static_cast<std::uint64_t>(sizes[i]));
        if (i > 0 && sizes[i] == sizes[i - 1])
            ++run;
        else
            run = 1;
        if (i + 1 == sizes.size() || sizes[i + 1] != sizes[i])
            count /= factorial(run);
    }
    return count;
}

void criterion_turan(Check& check, int jobs) {
    auto start = std::chrono::steady_clock::now();
    for (int k = 2; k <= 6; ++k) {
        auto report = verify_turan_formula(k, k, k + 1, 7, Weight::two(), /*cycles=*/false, jobs);
        for (const auto& row : report.rows) {
            check.expect(row.ok, "T formula failed at k=" + std::to_string(row.k) +
                                     " n=" + std::to_string(row.n));
            check.expect(row.witnesses_match_turan,
                         "non-Turan witness at k=" + std::to_string(row.k) +
                             " n=" + std::to_string(row.n));
            // uniqueness also pins the witness count: one per labelled copy
            check.expect(BigInt(row.witness_count) == labelled_turan_count(row.k, row.n),
                         "witness count off at k=" + std::to_string(row.k) +
                             " n=" + std::to_string(row.n) + ": " +
                             std::to_string(row.witness_count));
        }
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(elapsed < 300.0, "runtime target missed: " + std::to_string(elapsed) + "s");
}

// ---- criterion 2: extremal formula for forbidden directed cycles -----------

void criterion_cycle(Check& check, int jobs) {
    auto report = verify_turan_formula(2, 4, 2, 7, Weight::two(), /*cycles=*/true, jobs);
    for (const auto& row : report.rows)
        check.expect(row.ok, "C formula failed at k=" + std::to_string(row.k) +
                                 " n=" + std::to_string(row.n));
    // the same optimum at a = 3/2 and a = log3 against the census maxima
    std::vector<Weight> weights = {Weight::rational(3, 2), Weight::log3()};
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 5; ++n) {
            auto pattern = Pattern::directed_cycle(k + 1);
            auto maxima = census_extremal_maximum(n, GraphFamily::digraph, pattern, weights);
            for (std::size_t i = 0; i < weights.size(); ++i) {
                ExtremalQuery q;
                q.n = n;
                q.pattern = pattern;
                q.family = GraphFamily::digraph;
                q.weight = weights[i];
                q.jobs = jobs;
                auto result = extremal_number(q);
                check.expect(weighted_compare(result.optimum, maxima[i], weights[i]) == 0,
                             "cycle optimum mismatch vs census at k=" + std::to_string(k) +
                                 " n=" + std::to_string(n) + " a=" + weights[i].to_string());
            }
        }
}

// ---- criterion 3: oracle equivalence ----------------------------------------

void criterion_oracle(Check& check, int jobs) {
    std::vector<Pattern> patterns = {Pattern::trans_tournament(3), Pattern::trans_tournament(4),
                                     Pattern::directed_cycle(3), Pattern::directed_cycle(4)};
    std::vector<Weight> weights = {Weight::two(), Weight::rational(5, 3), Weight::log3()};
    for (int n = 2; n <= 5; ++n)
        for (auto family : {GraphFamily::oriented, GraphFamily::digraph})
            for (const auto& pattern : patterns) {
                auto maxima = census_extremal_maximum(n, family, pattern, weights);
                for (std::size_t i = 0; i < weights.size(); ++i) {
                    ExtremalQuery q;
                    q.n = n;
                    q.pattern = pattern;
                    q.family = family;
                    q.weight = weights[i];
                    q.jobs = jobs;
                    auto result = extremal_number(q);
                    check.expect(
                        weighted_compare(result.optimum, maxima[i], weights[i]) == 0,
                        "oracle mismatch at n=" + std::to_string(n) + " " +
                            pattern.to_string() + " " + family_name(family) + " a=" +
                            weights[i].to_string());
                }
            }
}

// ---- criterion 4: beta <= gamma on {C_2,C_3}-free digraphs ------------------

void criterion_css(Check& check) {
    auto exhaustive = css_check(4);
    check.expect(exhaustive.pass, "beta <= gamma violated at n <= 4");
    auto sampled = css_sample_check(5, 1'000'000, 20240801);
    check.expect(sampled.pass, "beta <= gamma violated in the n=5 sample");
    std::ostringstream ratio;
    ratio << "max beta/gamma = " << exhaustive.max_ratio_beta << "/"
          << exhaustive.max_ratio_gamma << " (exhaustive), " << sampled.max_ratio_beta << "/"
          << sampled.max_ratio_gamma << " (sampled); conjectured <= 1/2, not asserted";
    check.note(ratio.str());
}

// ---- criterion 5: subset-DP beta against all-orderings brute force ----------

void criterion_beta(Check& check) {
    for (int n = 1; n <= 4; ++n) {
        int m = n * (n - 1) / 2;
        std::uint64_t states = 1;
        for (int i = 0; i < m; ++i) states *= 4;
        for (std::uint64_t code = 0; code < states; ++code) {
            auto g = from_pair_code(n, code);
            if (beta(g) != beta_brute_force(g)) {
                check.expect(false, "beta mismatch at n=" + std::to_string(n) + " code " +
                                        std::to_string(code));
                return;
            }
        }
    }
    SplitMix64 rng(511);
    for (int trial = 0; trial < 100000; ++trial) {
        Digraph g(5);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) {
                auto state = rng.below(4);
                if (state & 1u) g.add_edge(u, v);
                if (state & 2u) g.add_edge(v, u);
            }
        if (beta(g) != beta_brute_force(g)) {
            check.expect(false, "beta mismatch in n=5 sample");
            return;
        }
    }
}

// ---- criterion 6: unbalanced multipartite bound ------------------------------

void criterion_partite_bound(Check& check) {
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 40; ++n)
            for (int s = 1; s <= n; ++s) {
                auto report = unbalanced_partite_bound_check(k, n, s);
                if (!report.pass) {
                    check.expect(false, "bound violated at k=" + std::to_string(k) +
                                            " n=" + std::to_string(n) +
                                            " s=" + std::to_string(s));
                    return;
                }
            }
}

// ---- criterion 7: counting sandwich and pinned k-partite counts -------------

void criterion_sandwich(Check& check) {
    // exact counts pinned as regression values
    struct Pin {
        int n;
        GraphFamily family;
        const char* count;
    };
    // Counts derived by two independent routes (bipartite-underlying
    // enumeration and full-census predicate tallies, cross-checked in the
    // unit tests) and frozen here. The 2-colourability oracle gives
    // T(3,2) = 19: of the 27 oriented graphs on 3 vertices, all 8 with a
    // complete underlying triangle fail, not just the 2 cyclic ones.
    const Pin pins[] = {
        {2, GraphFamily::oriented, "3"},
        {3, GraphFamily::oriented, "19"},
        {4, GraphFamily::oriented, "249"},
        {5, GraphFamily::oriented, "5881"},
        {6, GraphFamily::oriented, "246603"},
        {2, GraphFamily::digraph, "4"},
        {3, GraphFamily::digraph, "37"},
        {4, GraphFamily::digraph, "829"},
        {5, GraphFamily::digraph, "36616"},
        {6, GraphFamily::digraph, "3327499"},
    };
    for (const auto& pin : pins) {
        auto report = sandwich_check(pin.n, 2, pin.family);
        check.expect(report.pass, "sandwich assertion failed at n=" + std::to_string(pin.n));
        check.expect(report.count.str() == pin.count,
                     "pinned count mismatch at n=" + std::to_string(pin.n) + " " +
                         family_name(pin.family) + ": got " + report.count.str() +
                         ", pinned " + pin.count);
        if (pin.n == 6) {
            std::ostringstream margin;
            margin << family_name(pin.family) << " count=" << report.count.str()
                   << " upper=" << report.upper.str() << " lower-held=" << report.holds_lower
                   << " middle-held=" << report.holds_middle
                   << " upper-held=" << report.holds_upper;
            check.note(margin.str());
        }
    }
}

// ---- criterion 8: container machinery ---------------------------------------

void criterion_containers(Check& check) {
    auto c3 = directed_cycle_graph(3);
    auto t3 = transitive_tournament(3);
    for (int base_n = 3; base_n <= 12; ++base_n) {
        auto dc = build_pattern_hypergraph(base_n, c3);
        auto dt = build_pattern_hypergraph(base_n, t3);
        BigInt triples = binomial(static_cast<std::uint64_t>(base_n), 3);
        check.expect(BigInt(dc.edges.size()) == 2 * triples,
                     "cycle hypergraph edge count off at N=" + std::to_string(base_n));
        check.expect(BigInt(dt.edges.size()) == 6 * triples,
                     "tournament hypergraph edge count off at N=" + std::to_string(base_n));
    }
    auto mc3 = m_density(c3);
    auto mt3 = m_density(t3);
    auto mc5 = m_density(directed_cycle_graph(5));
    check.expect(mc3.num == 2 && mc3.den == 1, "m(C_3) != 2");
    check.expect(mt3.num == 2 && mt3.den == 1, "m(T_3) != 2");
    check.expect(mc5.num == 4 && mc5.den == 3, "m(C_5) != 4/3");

    for (auto [h, name] : {std::pair<const Digraph*, const char*>{&c3, "C:3"},
                           std::pair<const Digraph*, const char*>{&t3, "T:3"}}) {
        auto report = delta_bound_check(*h, name, 1.0, 8, 12);
        check.expect(report.pass, std::string("delta bound failed for ") + name);
        for (const auto& row : report.rows)
            check.expect(row.margin > 0, std::string("non-positive margin for ") + name +
                                             " at N=" + std::to_string(row.base_n));
    }
}

// ---- criterion 9: switching identities ---------------------------------------

void criterion_switching(Check& check, int jobs) {
    auto start = std::chrono::steady_clock::now();
    for (int n = 4; n <= 6; ++n) {
        auto forward = forward_degree_identity_check(n, 1, 3, jobs);
        check.expect(forward.pass, "forward identity failed at n=" + std::to_string(n));
        check.expect(forward.images_per_source ==
                         binomial(static_cast<std::uint64_t>(n / 4), 1),
                     "unexpected image count at n=" + std::to_string(n));
        auto ratio = switch_ratio_check(n, 0, 1, 3, jobs);
        check.expect(ratio.pass, "ratio direction failed at n=" + std::to_string(n));
    }
    auto backward = backward_preimage_bound_check(5, 1, 3, jobs);
    check.expect(backward.pass, "backward preimage bound failed at n=5 m1=1");
    auto backward2 = backward_preimage_bound_check(5, 2, 3, jobs);
    check.expect(backward2.pass, "backward preimage bound failed at n=5 m1=2");
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(elapsed < 600.0, "runtime target missed: " + std::to_string(elapsed) + "s");
}

// ---- criterion 10: trend reproduction ----------------------------------------

void criterion_trends(Check& check, int jobs) {
    auto partite = trend_report(Pattern::trans_tournament(3), GraphFamily::oriented, 3, 6,
                                *PredicateSpec::parse("k-partite:2"), jobs);
    // Exact censuses, frozen after first computation (hits double as the
    // 2-partite counts T(n,2): 2-partite oriented graphs are triangle-free).
    const char* expected_hits[] = {"19", "249", "5881", "246603"};
    const char* expected_totals[] = {"21", "317", "9735", "583907"};
    for (std::size_t i = 0; i < partite.rows.size(); ++i) {
        check.expect(partite.rows[i].hits.str() == expected_hits[i] &&
                         partite.rows[i].total.str() == expected_totals[i],
                     "pinned 2-partite census changed at n=" +
                         std::to_string(partite.rows[i].n) + ": " +
                         partite.rows[i].hits.str() + "/" + partite.rows[i].total.str());
    }
    // Stated trend shape. The exact censuses refute it at these sizes: the
    // fraction declines 0.905, 0.785, 0.604, 0.422 over n = 3..6 (the
    // almost-all statement is asymptotic and has not set in by n = 6), so
    // these two assertions fail honestly rather than being weakened.
    double prev = -1;
    for (const auto& row : partite.rows) {
        check.expect(row.fraction >= prev,
                     "2-partite fraction decreased at n=" + std::to_string(row.n));
        prev = row.fraction;
    }
    check.expect(partite.rows.back().fraction > 0.9, "2-partite fraction at n=6 below 0.9");

    auto acyclic = trend_report(Pattern::directed_cycle(3), GraphFamily::oriented, 4, 6,
                                *PredicateSpec::parse("beta-histogram"), jobs);
    const char* expected_acyclic[] = {"543", "29281", "3781503"};
    const char* expected_cfree[] = {"549", "30535", "4168935"};
    double down = 2;
    for (std::size_t i = 0; i < acyclic.rows.size(); ++i) {
        const auto& row = acyclic.rows[i];
        check.expect(row.hits.str() == expected_acyclic[i] &&
                         row.total.str() == expected_cfree[i],
                     "pinned acyclic census changed at n=" + std::to_string(row.n));
        check.expect(row.fraction <= down,
                     "beta=0 fraction increased at n=" + std::to_string(row.n));
        down = row.fraction;
    }
    std::ostringstream note;
    note << "2-partite fractions n=3..6:";
    for (const auto& row : partite.rows) note << " " << row.fraction;
    note << "; beta=0 fractions n=4..6:";
    for (const auto& row : acyclic.rows) note << " " << row.fraction;
    check.note(note.str());
}

// ---- criterion 11: determinism -----------------------------------------------

void criterion_determinism(Check& check) {
    auto census_body = [&](int jobs) {
        CensusOptions options;
        options.n = 5;
        options.family = GraphFamily::digraph;
        options.pattern = Pattern::directed_cycle(3);
        options.predicates = PredicateSpec::parse_list("k-partite:2,acyclic,beta-histogram");
        options.jobs = jobs;
        auto record = exhaustive_census(options);
        return census_csv(record) + census_json(record);
    };
    auto c1 = census_body(1);
    check.expect(c1 == census_body(1), "census rerun differs at jobs=1");
    check.expect(c1 == census_body(8), "census body differs between jobs=1 and jobs=8");

    auto extremal_body = [&](int jobs) {
        ExtremalQuery q;
        q.n = 6;
        q.pattern = Pattern::trans_tournament(3);
        q.family = GraphFamily::digraph;
        q.weight = Weight::two();
        q.jobs = jobs;
        return extremal_json(extremal_number(q), true);
    };
    auto e1 = extremal_body(1);
    check.expect(e1 == extremal_body(1), "extremal rerun differs at jobs=1");
    check.expect(e1 == extremal_body(8), "extremal body differs between jobs=1 and jobs=8");

    auto sample_body = [&](int jobs) {
        CensusOptions options;
        options.n = 7;
        options.family = GraphFamily::oriented;
        options.pattern = Pattern::directed_cycle(3);
        options.predicates = PredicateSpec::parse_list("acyclic");
        options.jobs = jobs;
        auto record = sample_census(options, 20000, 424242);
        return census_csv(record) + census_json(record);
    };
    auto s1 = sample_body(1);
    check.expect(s1 == sample_body(1), "sample rerun differs at jobs=1");
    check.expect(s1 == sample_body(8), "sample body differs between jobs=1 and jobs=8");
}

}  // namespace

std::vector<CriterionResult> run_verification(const VerifyOptions& options) {
    struct Entry {
        int id;
        const char* name;
        std::function<void(Check&)> fn;
    };
    int jobs = options.jobs;
    const std::vector<Entry> entries = {
        {1, "turan-formula", [jobs](Check& c) { criterion_turan(c, jobs); }},
        {2, "cycle-formula", [jobs](Check& c) { criterion_cycle(c, jobs); }},
        {3, "oracle-equivalence", [jobs](Check& c) { criterion_oracle(c, jobs); }},
        {4, "css-inequality", [](Check& c) { criterion_css(c); }},
        {5, "beta-solver", [](Check& c) { criterion_beta(c); }},
        {6, "partite-bound", [](Check& c) { criterion_partite_bound(c); }},
        {7, "counting-sandwich", [](Check& c) { criterion_sandwich(c); }},
        {8, "containers", [](Check& c) { criterion_containers(c); }},
        {9, "switching-identities", [jobs](Check& c) { criterion_switching(c, jobs); }},
        {10, "trend-reproduction", [jobs](Check& c) { criterion_trends(c, jobs); }},
        {11, "determinism", [](Check& c) { criterion_determinism(c); }},
    };

    std::vector<CriterionResult> results;
    for (const auto& entry : entries) {
        if (!options.only.empty() &&
            std::find(options.only.begin(), options.only.end(), entry.id) == options.only.end())
            continue;
        CriterionResult result;
        result.id = entry.id;
        result.name = entry.name;
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            entry.fn(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        result.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.pass = check.ok;
        result.detail = check.detail.str();
        results.push_back(std::move(result));
    }
    return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.pass; });
}

std::string format_results(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.pass ? "[PASS]" : "[FAIL]") << " " << r.id << " " << r.name;
        out << "  (" << static_cast<long long>(r.seconds * 1000) << " ms)";
        if (!r.detail.empty()) out << "  " << r.detail;
        out << "\n";
    }
    out << (all_pass(results) ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
    return out.str();
}

}  // namespace tdl
