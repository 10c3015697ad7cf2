#include <cstdio>
#include <cstdlib>
#include <string>

#include "golden/verify.hpp"

int main() {
    const char* env = std::getenv("GOLDEN_DATA_DIR");
    std::string data_dir = env ? env : "tests/golden";
    int failures = 0;
    for (int id = 1; id <= golden::verify::kNumCriteria; ++id) {
        auto r = golden::verify::run_criterion(id, data_dir);
        std::printf("[%s] %2d %-22s %7.2fs  %s\n", r.passed ? "pass" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failures;
    }
    if (failures) std::printf("%d of %d checks failed\n", failures, golden::verify::kNumCriteria);
    return failures ? 1 : 0;
}
