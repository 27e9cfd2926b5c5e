// Acceptance suite: runs every criterion, one PASS/FAIL line each.
// Exit code 0 iff all pass.

#include <cstdlib>
#include <iostream>
#include <string>

#include "tc/selftest.hpp"

int main(int argc, char** argv) {
    tc::SelftestOptions opt;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--filter" && i + 1 < argc) {
            opt.filter = argv[++i];
        } else if (arg == "--seed" && i + 1 < argc) {
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::cerr << "usage: acceptance [--filter NAME] [--seed N]\n";
            return 2;
        }
    }
    auto results = tc::run_acceptance(opt, std::cout);
    std::size_t passed = 0;
    for (const auto& r : results)
        if (r.passed) ++passed;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return tc::all_passed(results) ? 0 : 1;
}
