// One line per acceptance criterion; nonzero exit if any criterion fails.
#include "pconf/verify.hpp"

#include <cstdio>

int main() {
    int failed = 0;
    for (const auto& r : pconf::run_acceptance()) {
        std::printf("%s\n", pconf::format_result(r).c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    }
    std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
