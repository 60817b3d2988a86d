#include "grovercorr/grover_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "grovercorr/error.hpp"

namespace grovercorr {

GroverConfig::GroverConfig(int n, std::uint64_t marked, std::uint64_t target)
    : n_(n), marked_(marked), target_(target) {
    if (n < 1 || n > kMaxQubits)
        throw Error(ErrorKind::InvalidConfig, "qubit count " + std::to_string(n) + " outside [1, 62]");
    if (marked < 1 || marked >= dim())
        throw Error(ErrorKind::InvalidConfig, "marked-state count must satisfy 1 <= j < N");
    if (target >= dim()) throw Error(ErrorKind::InvalidConfig, "target index must be < N");
}

void GroverConfig::require_single_target(const char *what) const {
    if (marked_ != 1)
        throw Error(ErrorKind::InvalidConfig, std::string(what) + " is only defined for a single marked state");
}

std::int64_t closest_integer(double x) {
    if (!std::isfinite(x)) throw Error(ErrorKind::NumericDomain, "closest_integer: non-finite argument");
    const double rounded = std::round(x); // halves away from zero
    if (std::abs(rounded) >= 9.2e18) throw Error(ErrorKind::NumericDomain, "closest_integer: out of range");
    return static_cast<std::int64_t>(rounded);
}

double angle(const GroverConfig &config) {
    const double fraction = static_cast<double>(config.marked()) / static_cast<double>(config.dim());
    return 2.0 * std::asin(std::sqrt(fraction));
}

IterationPoint iteration_point(const GroverConfig &config, std::int64_t r) {
    if (r < 0) throw Error(ErrorKind::NumericDomain, "iteration index must be >= 0");
    const double alpha = angle(config);
    const double theta = (2.0 * static_cast<double>(r) + 1.0) * alpha / 2.0;
    const double unmarked = static_cast<double>(config.dim() - config.marked());

    IterationPoint p;
    p.r = r;
    p.theta_r = theta;
    p.a = std::sin(theta);
    p.b = std::cos(theta) / std::sqrt(unmarked);
    p.probability = p.a * p.a;
    p.rate = alpha * std::sin(2.0 * theta);
    return p;
}

std::int64_t optimal_iterations(const GroverConfig &config) {
    const double alpha = angle(config);
    return closest_integer((std::numbers::pi / 2.0 - alpha / 2.0) / alpha);
}

std::pair<std::int64_t, std::int64_t> peak_iterations(const GroverConfig &config) {
    config.require_single_target("peak_iterations");
    const double ratio = std::numbers::pi / (2.0 * angle(config));
    return {closest_integer(0.5 * (ratio - 1.0)), closest_integer(0.5 * (ratio - 1.5))};
}

Angles angles(const GroverConfig &config) {
    Angles out{};
    out.alpha = angle(config);
    out.theta0 = std::numbers::pi / 2.0 - out.alpha / 2.0;
    out.optimal = optimal_iterations(config);
    if (config.marked() == 1) {
        const auto [r1, r2] = peak_iterations(config);
        out.rate_peak = r1;
        out.concurrence_peak = r2;
    } else {
        out.rate_peak = out.concurrence_peak = -1;
    }
    return out;
}

} // namespace grovercorr
