#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace termalg {

struct SelftestLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Small seeded runs of the invariant suites of every module.
std::vector<SelftestLine> run_selftest(std::uint64_t seed);

} // namespace termalg
