#pragma once

#include <cstdint>
#include <utility>

namespace grovercorr {

/// Register and database description for one search problem.
///
/// Any marked-state count 1 <= j < N is accepted here; the amplitude-level
/// machinery downstream (density matrices, correlations) requires j == 1.
class GroverConfig {
  public:
    static constexpr int kMaxQubits = 62;

    /// Throws InvalidConfig unless 1 <= n <= 62, 1 <= j < 2^n and target < 2^n.
    explicit GroverConfig(int n, std::uint64_t marked = 1, std::uint64_t target = 0);

    int n() const noexcept { return n_; }
    std::uint64_t dim() const noexcept { return std::uint64_t{1} << n_; }
    std::uint64_t marked() const noexcept { return marked_; }
    std::uint64_t target() const noexcept { return target_; }

    /// Throws InvalidConfig when j != 1.
    void require_single_target(const char *what) const;

  private:
    int n_;
    std::uint64_t marked_;
    std::uint64_t target_;
};

struct Angles {
    double alpha;  // rotation per iteration
    double theta0; // pi/2 - alpha/2
    std::int64_t optimal;
    std::int64_t rate_peak;        // r1; -1 when j != 1
    std::int64_t concurrence_peak; // r2; -1 when j != 1
};

struct IterationPoint {
    std::int64_t r;
    double theta_r; // (2r+1) alpha / 2
    double a;       // sin(theta_r), amplitude along the marked subspace
    double b;       // cos(theta_r) / sqrt(N - j), amplitude per unmarked basis state
    double probability;
    double rate; // dP/dr
};

/// Nearest integer, exact halves away from zero. Non-finite input or a value
/// outside the int64 range throws NumericDomain.
std::int64_t closest_integer(double x);

/// alpha = arccos((N - 2j)/N), evaluated as 2 asin(sqrt(j/N)) which stays
/// accurate for large N.
double angle(const GroverConfig &config);

/// Throws NumericDomain for r < 0.
IterationPoint iteration_point(const GroverConfig &config, std::int64_t r);

/// R = CI((pi/2 - alpha/2) / alpha).
std::int64_t optimal_iterations(const GroverConfig &config);

/// (r1, r2) = (CI((pi/(2 alpha) - 1)/2), CI((pi/(2 alpha) - 1.5)/2)): the
/// iterations at which the success-probability rate and the pairwise
/// concurrence peak. Requires j == 1.
std::pair<std::int64_t, std::int64_t> peak_iterations(const GroverConfig &config);

Angles angles(const GroverConfig &config);

} // namespace grovercorr
