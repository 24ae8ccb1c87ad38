// One line per acceptance criterion; exit status 1 if any fails.
#include "projendo/acceptance.hpp"

#include <cstdio>

int main() {
    int failed = 0;
    for (const auto& r : projendo::run_acceptance()) {
        std::printf("%s criterion %d: %s [%.3f s%s]%s%s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.time_limit > 0 ? (", limit " + std::to_string(static_cast<int>(r.time_limit)) + " s").c_str() : "",
                    r.detail.empty() ? "" : " -- ", r.detail.c_str());
        failed += !r.passed;
    }
    std::printf("%d of 8 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
