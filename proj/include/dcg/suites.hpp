#pragma once

// Named verification suites behind the `verify` subcommand. Each suite
// reproduces a family of exact constants and identities and returns a
// Report; `all` runs every suite in a fixed order.

#include "dcg/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dcg {

struct SuiteOptions {
    int kmax = 30;
    std::uint64_t seed = 424242;
    bool quiet = false;
};

// clifford-table, membership, fixed-points, orbit-types, hilbert, degree,
// rigidity, betti, schubert, oracle-calibration.
const std::vector<std::string>& suite_names();

// Runs one suite (or all of them, in order, for "all").
// Throws DomainError for an unknown suite name.
std::vector<Report> run_suites(const std::string& name, const SuiteOptions& opts);

} // namespace dcg
