#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "casson/liealg.hpp"

namespace casson::cli {

struct RunConfig {
    std::string subcommand;
    int q1 = 3, q2 = 3, q = 3;
    std::string out;     // empty: stdout
    std::string format;  // empty: the subcommand's default
    int nmax = 8;
    std::uint64_t seed = 20240611;
    double tol_rank = kTolRank;
    double tol_mat = kTolMat;
    int threads = 1;
    int samples = 1;
    std::vector<double> alpha{0, 0, 0};
    std::vector<double> beta{0, 0, 0};
    std::optional<int> only;  // selfcheck: run a single criterion
};

/// CASSON_THREADS caps the hardware thread count; unset means all hardware threads.
int threads_from_env();

// Each command writes its payload to cfg.out (or `out` when empty) and a short summary to `log`.
// The return value is the process exit code.
int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_casson(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_cohomology(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_pillowcase(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_selfcheck(const RunConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace casson::cli
