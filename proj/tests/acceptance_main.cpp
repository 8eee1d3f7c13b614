// Cross-validation suite: one pass/fail line per criterion.
// Usage: acceptance [--criterion N]

#include <cstdio>
#include <cstring>
#include <string>

#include "dressedpair/acceptance.hpp"
#include "dressedpair/io.hpp"

int main(int argc, char** argv) {
    int only = -1;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 1;
        }
    }

    std::vector<dressedpair::CriterionResult> results;
    if (only >= 0) {
        results.push_back(dressedpair::run_acceptance_criterion(only));
    } else {
        results = dressedpair::run_acceptance();
    }

    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%s %-24s residual=%-12s tolerance=%-8s %s\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    dressedpair::format_double(r.residual).c_str(),
                    dressedpair::format_double(r.tolerance).c_str(),
                    r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 2;
}
