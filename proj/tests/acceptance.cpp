// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "charlab/verify.hpp"

int main(int argc, char** argv) {
    bool full = true;
    std::uint64_t seed = 12345;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--small") == 0) full = false;
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            seed = std::strtoull(argv[++i], nullptr, 10);
    }
    charlab::VerifyReport report = charlab::verify_all(full, seed);
    std::fputs(charlab::format_report(report).c_str(), stdout);
    return report.all_pass ? 0 : 1;
}
