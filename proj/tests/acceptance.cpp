// Acceptance gate: runs every criterion and prints one pass/fail line each.
#include <cstdio>

#include "bicolor/suite.hpp"

int main() {
    bool all_ok = true;
    for (const auto& r : bicolor::suite::all_criteria()) {
        std::printf("%s %s  %s — %s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL",
                    r.title.c_str(), r.detail.c_str());
        all_ok = all_ok && r.pass;
    }
    return all_ok ? 0 : 1;
}
