#pragma once

// Command-line front end.  Lives in the library so tests can drive it
// without spawning processes.

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "specht/classifier.hpp"

namespace specht {

struct SweepMismatch {
    Partition lambda;
    int classifier_dim = 0;
    int oracle_dim = 0;
    int h0 = 0;
    bool h0_matches = true;
    /// False when a witness was built and failed the relation check.
    bool witness_ok = true;
    std::string case_tag;
};

struct SweepReport {
    std::int64_t p = 2;
    std::int64_t d_max = 0;
    int parts_max = 0;  // 0 means no cap
    std::size_t instances = 0;
    std::vector<SweepMismatch> mismatches;
    std::chrono::duration<double> elapsed{};
};

struct SweepOptions {
    std::int64_t d_max = 0;
    int parts_max = 0;
    unsigned jobs = 1;
    /// Also build every witness and run it through the relation check.
    bool verify_witnesses = false;
};

/// Compares ext1_dim against ext1_dim_oracle, and h0 against the James
/// predicate, for every partition of every d <= d_max.  A failed witness
/// also counts as a mismatch.  Mismatches are
/// listed in enumeration order whatever the number of workers.
[[nodiscard]] SweepReport run_sweep(Prime p, const SweepOptions& options);

/// Entry point.  args excludes the program name.
/// Exit codes: 0 ok, 1 mismatch, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

} // namespace specht
