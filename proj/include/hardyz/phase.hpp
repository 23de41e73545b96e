#pragma once

#include <array>

namespace hardyz::phase {

// Phase of the n-th AFE term after Eq.-style substitution tau = sqrt(t/2pi):
// F(t) = t log(tau(t)/n) - t/2 - pi/8, with closed-form derivatives
// F'(t) = log(tau/n), F^(k)(t) = (-1)^k (k-2)! t^{1-k} / 2 for k >= 2,
// and unique stationary point c_n = 2 pi n^2.
class PhaseFunction {
public:
    explicit PhaseFunction(long long n);

    long long n() const { return n_; }
    static double tau(double t); // sqrt(t / 2pi), t >= 0

    double f(double t) const;
    double f_prime(double t) const;
    double f_second(double t) const;
    double f_k(double t, int k) const; // k >= 1

    double saddle() const; // 2 pi n^2, exactly

private:
    long long n_;
    double log_n_;
};

struct RangeSplit {
    struct IntRange {
        long long first = 1; // inclusive
        long long last = 0;  // inclusive; empty when last < first
        bool empty() const { return last < first; }
        long long count() const { return empty() ? 0 : last - first + 1; }
    };

    double T = 0.0;
    double epsilon = 0.0;
    // sqrt(T/2pi) -+ T^eps, sqrt(T/pi) -+ T^eps (increasing order)
    std::array<double, 4> boundaries{};
    double upper = 0.0; // 2 sqrt(T/pi)
    std::array<IntRange, 5> ranges{};
};

// Five integer ranges partitioning (0, 2 sqrt(T/pi)].  Throws when the
// T^eps windows collide.
RangeSplit split_ranges(double T, double epsilon);

// Lower integration limit T1(n) = max(T, 2 pi (n/2)^2).
double t1_lower_limit(double T, long long n);

} // namespace hardyz::phase
