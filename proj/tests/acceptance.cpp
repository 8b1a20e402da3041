// Verification suite runner: one pass/fail line per criterion, exit code 4
// on any failure (matching the CLI's invariant-violation contract).

#include "tdl/parallel.hpp"
#include "tdl/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    tdl::VerifyOptions options;
    options.jobs = tdl::default_jobs();
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--jobs" && i + 1 < argc) options.jobs = std::atoi(argv[++i]);
        if (arg == "--only" && i + 1 < argc) options.only.push_back(std::atoi(argv[++i]));
    }
    auto results = tdl::run_verification(options);
    std::cout << tdl::format_results(results);
    return tdl::all_pass(results) ? 0 : 4;
}
