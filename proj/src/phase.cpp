#include "hardyz/phase.hpp"

#include <cmath>
#include <numbers>

#include "hardyz/errors.hpp"

namespace hardyz::phase {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
} // namespace

PhaseFunction::PhaseFunction(long long n) : n_(n) {
    if (n < 1) throw DomainError("phase: frequency index n must be >= 1");
    log_n_ = std::log(static_cast<double>(n));
}

double PhaseFunction::tau(double t) {
    if (t < 0.0) throw DomainError("phase: tau requires t >= 0");
    return std::sqrt(t / kTwoPi);
}

double PhaseFunction::f(double t) const {
    if (t <= 0.0) throw DomainError("phase: F requires t > 0");
    return t * (0.5 * std::log(t / kTwoPi) - log_n_) - 0.5 * t - kPi / 8.0;
}

double PhaseFunction::f_prime(double t) const {
    if (t <= 0.0) throw DomainError("phase: F' requires t > 0");
    return 0.5 * std::log(t / kTwoPi) - log_n_;
}

double PhaseFunction::f_second(double t) const {
    if (t <= 0.0) throw DomainError("phase: F'' requires t > 0");
    return 0.5 / t;
}

double PhaseFunction::f_k(double t, int k) const {
    if (k < 1) throw DomainError("phase: derivative order must be >= 1");
    if (k == 1) return f_prime(t);
    if (t <= 0.0) throw DomainError("phase: F^(k) requires t > 0");
    double fact = 1.0;
    for (int j = 2; j <= k - 2; ++j) fact *= j; // (k-2)!
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * fact * std::pow(t, 1.0 - k) * 0.5;
}

double PhaseFunction::saddle() const {
    return kTwoPi * static_cast<double>(n_) * static_cast<double>(n_);
}

double t1_lower_limit(double T, long long n) {
    double half = 0.5 * static_cast<double>(n);
    return std::max(T, kTwoPi * half * half);
}

RangeSplit split_ranges(double T, double epsilon) {
    if (T < 100.0) throw DomainError("split_ranges: requires T >= 100");
    double w = std::pow(T, epsilon);
    double lo = std::sqrt(T / kTwoPi);
    double hi = std::sqrt(T / kPi);
    if (!(w < 0.5 * (hi - lo)))
        throw DomainError("split_ranges: T^eps windows collide");
    RangeSplit out;
    out.T = T;
    out.epsilon = epsilon;
    out.boundaries = {lo - w, lo + w, hi - w, hi + w};
    out.upper = 2.0 * hi;
    double prev = 0.0;
    for (int j = 0; j < 5; ++j) {
        double next = (j < 4) ? out.boundaries[static_cast<size_t>(j)] : out.upper;
        out.ranges[static_cast<size_t>(j)].first =
            static_cast<long long>(std::floor(prev)) + 1;
        out.ranges[static_cast<size_t>(j)].last =
            static_cast<long long>(std::floor(next));
        prev = next;
    }
    return out;
}

} // namespace hardyz::phase
