#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "grovercorr/grover_core.hpp"

namespace grovercorr::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3 };

/// Sweeps longer than this are refused with a capacity error.
inline constexpr std::int64_t kMaxSweepRows = 1'000'000;

/// printf("%.12g") with negative zero printed as 0.
std::string format_number(double x);

struct SweepOptions {
    int n = 0;
    std::uint64_t target = 0;
    std::optional<std::int64_t> rmax; // default 2R
    int grid = 256;
    std::vector<int> k_list;          // default 1..min(4, n/2)
    bool pair = true;
    bool one_rest = true;
    bool json = false;
};

/// Fills defaults and validates; throws grovercorr::Error.
SweepOptions resolve(SweepOptions options);

std::vector<std::string> sweep_columns(const SweepOptions &options);

/// One row in column order: r, theta_r, a, b, P, rate, then the pair, 1:rest
/// and C_k groups as enabled.
std::vector<double> sweep_row(const GroverConfig &config, std::int64_t r, const SweepOptions &options);

void write_sweep(std::ostream &out, const SweepOptions &options);

struct VerifyOptions {
    int n = 0;
    std::uint64_t target = 0;
    std::optional<std::int64_t> rmax;
    int grid = 256;
    double tol_matrix = 1e-10;
    double tol_entropy = 5e-3;
    double tol_concurrence = 1e-9;
};

struct Deviation {
    std::string measure;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool asserted = true; // false: reported only
    bool ok() const { return !asserted || max_deviation <= tolerance; }
};

struct VerifyReport {
    int n = 0;
    std::int64_t rmax = 0;
    std::vector<Deviation> deviations;
    bool ok() const;
};

/// Closed forms against the brute-force oracle for every r in [0, rmax].
/// Capacity error for n > 12.
VerifyReport run_verify(const VerifyOptions &options);
void write_report(std::ostream &out, const VerifyReport &report);

struct PeakRow {
    int n = 0;
    double alpha = 0.0;
    std::int64_t optimal = 0;
    std::int64_t r1 = 0;
    std::int64_t r2 = 0;
    std::int64_t argmax_rate = 0;
    std::int64_t argmax_c11 = 0;
    bool listed_gap_one = false;
};

/// n values often quoted with r1 - r2 = 1. The CI formulas give 0 for all of
/// them; the integer argmaxes differ by one there.
inline constexpr int kReportedGapOne[] = {9, 11, 25, 26, 28, 30};

/// Integer argmax over r in [0, R] of the success-probability rate and of the
/// pairwise concurrence; exhaustive for R <= 2^20, ternary search beyond
/// (both are single-humped on [0, R]).
PeakRow peak_row(int n);
void write_peaks(std::ostream &out, int n_lo, int n_hi);

void write_matrix(std::ostream &out, int n, std::int64_t r, int k);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace grovercorr::cli
