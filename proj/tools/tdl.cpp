// tdl: exact enumeration, extremal search and verification for labelled
// digraphs and oriented graphs with forbidden substructures.
//
// Exit codes: 0 success, 2 usage error, 3 budget refusal, 4 invariant or
// identity violation, 5 internal error.

#include "tdl/census.hpp"
#include "tdl/construct.hpp"
#include "tdl/containers.hpp"
#include "tdl/errors.hpp"
#include "tdl/extremal.hpp"
#include "tdl/order.hpp"
#include "tdl/parallel.hpp"
#include "tdl/report.hpp"
#include "tdl/switching.hpp"
#include "tdl/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kBudget = 3,
    kViolation = 4,
    kInternal = 5,
};

struct OutputSink {
    std::string out_path;
    std::string format = "json";
    std::string command_line;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::uint64_t budget = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    // Body bytes are deterministic for a fixed (command, seed, budget); the
    // manifest carries the volatile run metadata and is stored separately.
    void deliver(const std::string& body) const {
        if (out_path.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file: " + out_path);
        file << body;
        file.close();

        nlohmann::ordered_json manifest;
        manifest["tool"] = "tdl";
        manifest["version"] = kVersion;
        manifest["command_line"] = command_line;
        manifest["seed"] = seed;
        manifest["jobs"] = jobs;
        manifest["budget"] = budget ? budget : tdl::default_state_budget();
        manifest["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
        manifest["written"] = std::time(nullptr);
        std::ofstream mf(out_path + ".manifest.json", std::ios::binary);
        mf << manifest.dump(2) << "\n";
    }
};

std::string join_args(int argc, char** argv) {
    std::ostringstream out;
    for (int i = 0; i < argc; ++i) {
        if (i) out << ' ';
        out << argv[i];
    }
    return out.str();
}

tdl::Pattern require_pattern(const std::string& text) {
    auto pattern = tdl::Pattern::parse(text);
    if (!pattern)
        throw CLI::ValidationError("--pattern", "malformed pattern '" + text +
                                                    "' (grammar: T:<k>, C:<k>, DK:<a>,<b>, "
                                                    "X:<digraph>)");
    return *pattern;
}

tdl::Weight require_weight(const std::string& text) {
    auto weight = tdl::Weight::parse(text);
    if (!weight)
        throw CLI::ValidationError("--weight",
                                   "malformed weight '" + text + "' (grammar: 2, log3, <p>/<q>)");
    return *weight;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact digraph enumeration and extremal search"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    int jobs = tdl::default_jobs();
    app.add_option("--jobs", jobs, "worker threads (1 = serial reference run)")
        ->capture_default_str();

    OutputSink sink;
    sink.command_line = join_args(argc, argv);
    app.add_option("--out", sink.out_path, "output file (default: stdout)");
    app.add_option("--format", sink.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // census ------------------------------------------------------------------
    auto* census_cmd = app.add_subcommand("census", "enumerate or sample labelled graphs");
    int census_n = 4;
    std::string census_family = "oriented";
    std::string census_pattern;
    std::string census_predicates;
    std::uint64_t census_samples = 0;
    std::uint64_t census_seed = 1;
    std::uint64_t census_budget = 0;
    census_cmd->add_option("--n", census_n, "vertex count")->required();
    census_cmd->add_option("--family", census_family)->check(CLI::IsMember({"oriented", "digraph"}));
    census_cmd->add_option("--pattern", census_pattern, "forbidden pattern (optional)");
    census_cmd->add_option("--predicates", census_predicates,
                           "comma list: k-partite:<k>, bipartite, acyclic, beta-histogram");
    census_cmd->add_option("--samples", census_samples,
                           "sample count (0 = exhaustive enumeration)");
    census_cmd->add_option("--seed", census_seed, "sampling seed")->capture_default_str();
    census_cmd->add_option("--budget", census_budget,
                           "state budget override (default TDL_BUDGET or 2e7)");

    // extremal ------------------------------------------------------------------
    auto* extremal_cmd = app.add_subcommand("extremal", "weighted Turan numbers with witnesses");
    int extremal_n = 4;
    std::string extremal_pattern;
    std::string extremal_family = "digraph";
    std::string extremal_weight = "2";
    std::size_t witness_cap = 100000;
    bool list_witnesses = false;
    extremal_cmd->add_option("--n", extremal_n)->required();
    extremal_cmd->add_option("--pattern", extremal_pattern)->required();
    extremal_cmd->add_option("--family", extremal_family)
        ->check(CLI::IsMember({"oriented", "digraph"}));
    extremal_cmd->add_option("--weight", extremal_weight)->capture_default_str();
    extremal_cmd->add_option("--witness-cap", witness_cap)->capture_default_str();
    extremal_cmd->add_flag("--witnesses", list_witnesses, "include witness digraphs in output");

    // fas -------------------------------------------------------------------------
    auto* fas_cmd = app.add_subcommand("fas", "exact minimum feedback arc set");
    std::string fas_graph;
    fas_cmd->add_option("--graph", fas_graph, "digraph literal n;u->v,...")->required();

    // partition ---------------------------------------------------------------------
    auto* partition_cmd = app.add_subcommand("partition", "optimal k-partition");
    std::string partition_graph;
    int partition_k = 2;
    partition_cmd->add_option("--graph", partition_graph)->required();
    partition_cmd->add_option("--k", partition_k)->required();

    // containers ----------------------------------------------------------------------
    auto* containers_cmd =
        app.add_subcommand("containers", "pattern hypergraph co-degree statistics");
    std::string containers_pattern = "C:3";
    int containers_n = 8;
    double containers_tau = 0.0;
    double containers_gamma = 1.0;
    int containers_nmax = 0;
    containers_cmd->add_option("--pattern", containers_pattern)->capture_default_str();
    containers_cmd->add_option("--N", containers_n, "ground construction size")->required();
    containers_cmd->add_option("--tau", containers_tau,
                               "co-degree parameter (0 = gamma^-1 N^{-1/m})");
    containers_cmd->add_option("--gamma", containers_gamma)->capture_default_str();
    containers_cmd->add_option("--N-max", containers_nmax,
                               "check the bound over N..N-max instead of one profile");

    // switch -----------------------------------------------------------------------------
    auto* switch_cmd = app.add_subcommand("switch", "acyclic-to-cycle switching identities");
    int switch_n = 5;
    int switch_m1 = 0;
    int switch_m2 = 1;
    int switch_cycle = 3;
    int switch_edge_cap = 0;
    std::string switch_mode = "forward";
    switch_cmd->add_option("--n", switch_n)->required();
    switch_cmd->add_option("--m1", switch_m1)->capture_default_str();
    switch_cmd->add_option("--m2", switch_m2)->capture_default_str();
    switch_cmd->add_option("--cycle", switch_cycle, "forbidden cycle length")
        ->capture_default_str();
    switch_cmd->add_option("--edge-cap", switch_edge_cap,
                           "restricted-edge enumeration cap for n = 7, 8");
    switch_cmd->add_option("--mode", switch_mode)
        ->check(CLI::IsMember({"forward", "backward", "ratio"}));

    // verify --------------------------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
    std::vector<int> verify_only;
    verify_cmd->add_option("--only", verify_only, "criterion ids (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    sink.jobs = jobs;
    sink.seed = census_seed;
    sink.budget = census_budget;

    try {
        if (*census_cmd) {
            tdl::CensusOptions options;
            options.n = census_n;
            options.family = tdl::parse_family(census_family);
            if (!census_pattern.empty()) options.pattern = require_pattern(census_pattern);
            options.predicates = tdl::PredicateSpec::parse_list(census_predicates);
            options.jobs = jobs;
            options.budget = census_budget;
            auto record = census_samples
                              ? tdl::sample_census(options, census_samples, census_seed)
                              : tdl::exhaustive_census(options);
            sink.deliver(sink.format == "csv" ? tdl::census_csv(record)
                                              : tdl::census_json(record));
        } else if (*extremal_cmd) {
            tdl::ExtremalQuery query;
            query.n = extremal_n;
            query.pattern = require_pattern(extremal_pattern);
            query.family = tdl::parse_family(extremal_family);
            query.weight = require_weight(extremal_weight);
            query.witness_cap = witness_cap;
            query.jobs = jobs;
            auto result = tdl::extremal_number(query);
            sink.deliver(tdl::extremal_json(result, list_witnesses));
        } else if (*fas_cmd) {
            auto g = tdl::Digraph::parse(fas_graph);
            auto ordering = tdl::transitive_optimal_ordering(g);
            sink.deliver(tdl::fas_json(g, ordering));
        } else if (*partition_cmd) {
            auto g = tdl::Digraph::parse(partition_graph);
            auto partition = tdl::optimal_partition(g, partition_k);
            sink.deliver(tdl::partition_json(g, partition,
                                             tdl::optimality_local_check(g, partition)));
        } else if (*containers_cmd) {
            auto pattern = require_pattern(containers_pattern);
            if (pattern.kind == tdl::Pattern::Kind::complete_bipartite)
                throw CLI::ValidationError("--pattern", "co-degree profiles need T/C/X patterns");
            tdl::Digraph h = pattern.kind == tdl::Pattern::Kind::explicit_graph
                                 ? pattern.graph
                                 : (pattern.kind == tdl::Pattern::Kind::directed_cycle
                                        ? tdl::directed_cycle_graph(pattern.k)
                                        : tdl::transitive_tournament(pattern.k));
            if (containers_nmax > 0) {
                auto report = tdl::delta_bound_check(h, pattern.to_string(), containers_gamma,
                                                     containers_n, containers_nmax);
                sink.deliver(tdl::delta_bound_json(report));
                if (!report.pass) return kViolation;
            } else {
                auto dh = tdl::build_pattern_hypergraph(containers_n, h);
                double tau = containers_tau;
                if (tau <= 0) {
                    auto density = tdl::m_density(h);
                    tau = std::pow(containers_n, -1.0 / density.approx()) / containers_gamma;
                }
                auto profile = tdl::co_degree(dh, tau);
                sink.deliver(tdl::co_degree_json(profile, pattern.to_string(), nullptr));
            }
        } else if (*switch_cmd) {
            if (switch_mode == "forward") {
                auto report = tdl::forward_degree_identity_check(switch_n, switch_m2,
                                                                 switch_cycle, jobs,
                                                                 switch_edge_cap);
                sink.deliver(tdl::switch_forward_json(report));
                if (!report.pass) return kViolation;
            } else if (switch_mode == "backward") {
                auto report =
                    tdl::backward_preimage_bound_check(switch_n, switch_m1, switch_cycle, jobs);
                sink.deliver(tdl::switch_backward_json(report));
                if (!report.pass) return kViolation;
            } else {
                auto report =
                    tdl::switch_ratio_check(switch_n, switch_m1, switch_m2, switch_cycle, jobs);
                sink.deliver(tdl::switch_ratio_json(report));
                if (!report.pass) return kViolation;
            }
        } else if (*verify_cmd) {
            tdl::VerifyOptions options;
            options.jobs = jobs;
            options.only = verify_only;
            auto results = tdl::run_verification(options);
            sink.deliver(tdl::format_results(results));
            if (!tdl::all_pass(results)) return kViolation;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const tdl::budget_error& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
