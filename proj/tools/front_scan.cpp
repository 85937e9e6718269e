// Prints the disconnected-front interval constants two ways: the pinned
// closed-form values and a fresh numeric scan, so drift is easy to spot.

#include <cstdio>
#include <cstdlib>

#include "mudist/fronts.hpp"

int main(int argc, char** argv) {
    std::size_t samples = 2000000;
    if (argc > 1) samples = std::strtoull(argv[1], nullptr, 10);

    mudist::DisconnectedIntervals pinned = mudist::disconnected_intervals();
    mudist::DisconnectedIntervals scanned = mudist::scan_disconnected_intervals(samples);

    std::printf("%-8s %-22s %-22s %s\n", "param", "pinned", "scanned", "abs diff");
    auto row = [](const char* name, double a, double b) {
        std::printf("%-8s %-22.17g %-22.17g %.3g\n", name, a, b, a > b ? a - b : b - a);
    };
    row("t1", pinned.t1, scanned.t1);
    row("t2", pinned.t2, scanned.t2);
    row("t3", pinned.t3, scanned.t3);
    row("k_max", pinned.k_max, scanned.k_max);
    return 0;
}
