#include "tdl/census.hpp"
#include "tdl/digraph.hpp"
#include "tdl/pattern.hpp"
#include "tdl/weight.hpp"

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using namespace tdl;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string out_file = "cli_test_stdout.tmp";
    std::string command = (env.empty() ? "" : env + " ") + std::string(TDL_CLI_PATH) + " " +
                          args + " > " + out_file + " 2>&1";
    int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    std::remove(out_file.c_str());
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("pattern grammar round trips") {
    for (const char* text : {"T:3", "T:5", "C:2", "C:4", "DK:2,2", "DK:1,3",
                             "X:3;0->1,1->2,2->0", "X:2;"}) {
        auto p = Pattern::parse(text);
        REQUIRE(p.has_value());
        CHECK(p->to_string() == text);
        CHECK(Pattern::parse(p->to_string()) == *p);
    }
    CHECK_FALSE(Pattern::parse("T:").has_value());
    CHECK_FALSE(Pattern::parse("T:0").has_value());
    CHECK_FALSE(Pattern::parse("C:1").has_value());
    CHECK_FALSE(Pattern::parse("Q:3").has_value());
    CHECK_FALSE(Pattern::parse("DK:2").has_value());
    CHECK_FALSE(Pattern::parse("3").has_value());
}

TEST_CASE("weight grammar") {
    CHECK(Weight::parse("2")->to_string() == "2");
    CHECK(Weight::parse("log3")->to_string() == "log3");
    CHECK(Weight::parse("3/2")->to_string() == "3/2");
    CHECK(Weight::parse("6/4")->to_string() == "3/2");
    CHECK_FALSE(Weight::parse("5/2").has_value());  // above 2
    CHECK_FALSE(Weight::parse("1/2").has_value());  // below 1
    CHECK_FALSE(Weight::parse("x").has_value());
    CHECK_FALSE(Weight::parse("-1").has_value());
}

TEST_CASE("cli census with closed-form total") {
    auto result = run_cli("census --n 4 --family oriented --format csv");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("total,729,729") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    // budget refusal
    auto refused = run_cli("census --n 30 --family digraph --pattern C:3");
    CHECK(refused.exit_code == 3);

    // usage error: malformed pattern
    auto usage = run_cli("census --n 4 --family oriented --pattern Q:9");
    CHECK(usage.exit_code == 2);

    // usage error: unknown flag
    auto unknown = run_cli("census --n 4 --bogus 1");
    CHECK(unknown.exit_code == 2);

    // verify on a failing criterion id would exit 4; a passing subset exits 0
    auto verified = run_cli("verify --only 5");
    CHECK(verified.exit_code == 0);
    CHECK(verified.output.find("[PASS] 5") != std::string::npos);
}

TEST_CASE("cli budget env override") {
    auto refused = run_cli("census --n 4 --family oriented", "TDL_BUDGET=200");
    CHECK(refused.exit_code == 3);  // 3^6 = 729 states exceed the budget
    auto allowed = run_cli("census --n 4 --family oriented", "TDL_BUDGET=1000");
    CHECK(allowed.exit_code == 0);
}

TEST_CASE("cli fas") {
    auto result = run_cli("fas --graph \"3;0->1,1->2,2->0\"");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"beta\": 1") != std::string::npos);
}

TEST_CASE("cli extremal") {
    auto result = run_cli("extremal --n 5 --pattern C:3 --family digraph --weight 2");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"optimum_value\": 12") != std::string::npos);
}

TEST_CASE("cli determinism across job counts") {
    std::string base = "census --n 5 --family digraph --pattern C:3 "
                       "--predicates acyclic,k-partite:2 --format csv";
    auto a = run_cli(base + " --jobs 1 --out cli_det_a.csv");
    auto b = run_cli(base + " --jobs 8 --out cli_det_b.csv");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    auto body_a = slurp("cli_det_a.csv");
    auto body_b = slurp("cli_det_b.csv");
    CHECK(!body_a.empty());
    CHECK(body_a == body_b);
    // manifests exist and carry the differing command lines
    CHECK(!slurp("cli_det_a.csv.manifest.json").empty());
    std::remove("cli_det_a.csv");
    std::remove("cli_det_b.csv");
    std::remove("cli_det_a.csv.manifest.json");
    std::remove("cli_det_b.csv.manifest.json");
}

TEST_CASE("cli seeded sampling determinism") {
    std::string base = "census --n 6 --family oriented --pattern T:3 --samples 20000 "
                       "--seed 7 --predicates bipartite --format json";
    auto a = run_cli(base + " --jobs 1 --out cli_mc_a.json");
    auto b = run_cli(base + " --jobs 8 --out cli_mc_b.json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(slurp("cli_mc_a.json") == slurp("cli_mc_b.json"));
    std::remove("cli_mc_a.json");
    std::remove("cli_mc_b.json");
    std::remove("cli_mc_a.json.manifest.json");
    std::remove("cli_mc_b.json.manifest.json");
}
