// Runs acceptance criteria 1-9 and prints one line per criterion.
// Usage: radial_acceptance [bench.csv]
#include <iostream>

#include "suite.hpp"

int main(int argc, char** argv) {
    radial::suite::SuiteOptions opts;
    if (argc > 1) opts.bench_csv = argv[1];
    bool ok = true;
    for (const auto& r : radial::suite::run({1, 2, 3, 4, 5, 6, 7, 8, 9}, opts)) {
        std::cout << radial::suite::format(r) << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
