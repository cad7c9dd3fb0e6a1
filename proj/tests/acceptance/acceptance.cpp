#include <cstdio>

#include "battery.hpp"

int main() {
    int failed = 0;
    for (const auto& r : battery::run_core()) {
        std::printf("%s %2d %s", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str());
        if (!r.detail.empty()) std::printf(" | %s", r.detail.c_str());
        std::printf("\n");
        failed += r.passed ? 0 : 1;
    }
    std::printf("%d of 12 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
