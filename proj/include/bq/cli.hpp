#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bq::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,        ///< bad flags, unparsable or mathematically invalid input
    kRestrictionFailed = 2, ///< p rejected by R1–R3
    kVerificationFailed = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// CSV header written by `sweep`.
inline constexpr const char* kSweepHeader = "case,alpha_re,alpha_im,beta_re,beta_im,a_i,a_j,C,maximal";

/**
 * Writes the N⁴ parameter sweep for one theorem case: amplitude split χ and p angle
 * on N points of [0, π/2], phases of α and β on N points of [0, 2π). Rows are
 * ordered by grid index; `maximal` is 1 when C ≥ 1 − 1e-9.
 */
void write_sweep(int grid, int case_id, std::ostream& out);

} // namespace bq::cli
