#include "hardyz/smoothing.hpp"
#include "hardyz/errors.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace hardyz::smoothing {

namespace {

constexpr int kMaxSupportedOrder = 6;

// sigma(u) = exp(-1/u) and derivatives.  sigma^(k)(u) = sigma(u) * P_k(1/u)
// with the polynomial recurrence P_{k+1}(v) = v^2 (P_k(v) - P_k'(v)).
void sigma_derivs(double u, int m, double* out) {
    if (u <= 0.0) {
        for (int k = 0; k <= m; ++k) out[k] = 0.0;
        return;
    }
    double sig = std::exp(-1.0 / u);
    double v = 1.0 / u;
    // P_k stored as coefficient vector in v, low order first.
    std::vector<double> poly{1.0};
    for (int k = 0; k <= m; ++k) {
        double pval = 0.0;
        for (int j = static_cast<int>(poly.size()) - 1; j >= 0; --j)
            pval = pval * v + poly[static_cast<size_t>(j)];
        out[k] = sig * pval;
        // next polynomial: v^2 * (P - P')
        std::vector<double> next(poly.size() + 2, 0.0);
        for (size_t j = 0; j < poly.size(); ++j) {
            next[j + 2] += poly[j];
            if (j >= 1) next[j + 1] -= static_cast<double>(j) * poly[j];
        }
        poly.swap(next);
    }
}

constexpr double kBinom[7][7] = {
    {1, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0},
    {1, 2, 1, 0, 0, 0, 0},
    {1, 3, 3, 1, 0, 0, 0},
    {1, 4, 6, 4, 1, 0, 0},
    {1, 5, 10, 10, 5, 1, 0},
    {1, 6, 15, 20, 15, 6, 1},
};

// S(u) = f/(f+g), f = sigma(u), g = sigma(1-u); derivatives from
// Leibniz on S*(f+g) = f.
void step_derivs(double u, int m, double* out) {
    if (u <= 0.0) {
        out[0] = 0.0;
        for (int k = 1; k <= m; ++k) out[k] = 0.0;
        return;
    }
    if (u >= 1.0) {
        out[0] = 1.0;
        for (int k = 1; k <= m; ++k) out[k] = 0.0;
        return;
    }
    double f[kMaxSupportedOrder + 1], graw[kMaxSupportedOrder + 1];
    sigma_derivs(u, m, f);
    sigma_derivs(1.0 - u, m, graw);
    double h[kMaxSupportedOrder + 1];
    for (int k = 0; k <= m; ++k) {
        double gk = (k % 2 == 0) ? graw[k] : -graw[k];
        h[k] = f[k] + gk;
    }
    out[0] = f[0] / h[0];
    for (int k = 1; k <= m; ++k) {
        double acc = f[k];
        for (int j = 1; j <= k; ++j)
            acc -= kBinom[k][j] * h[j] * out[k - j];
        out[k] = acc / h[0];
    }
}

// Signed Stirling numbers of the first kind: d^n/dx^n g(log x) =
// x^{-n} sum_k s(n,k) g^(k)(log x).
constexpr double kStirling[7][7] = {
    {0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0},
    {0, -1, 1, 0, 0, 0, 0},
    {0, 2, -3, 1, 0, 0, 0},
    {0, -6, 11, -6, 1, 0, 0},
    {0, 24, -50, 35, -10, 1, 0},
    {0, -120, 274, -225, 85, -15, 1},
};

} // namespace

Kernel::Kernel(double b, int max_derivative_order)
    : b_(b), inv_b_(1.0 / b), log_b_(std::log(b)), max_order_(max_derivative_order) {
    if (!(b > 1.0) || !(b <= 2.0))
        throw DomainError("smoothing: plateau parameter b must lie in (1, 2]");
    if (max_derivative_order < 1 || max_derivative_order > kMaxSupportedOrder)
        throw DomainError("smoothing: max_derivative_order out of range [1,6]");
}

Kernel make_kernel(double b) { return Kernel(b); }

double Kernel::rho(double x) const {
    if (x < 0.0) throw DomainError("smoothing: rho requires x >= 0");
    if (x <= inv_b_) return 1.0;
    if (x >= b_) return 0.0;
    double u = (std::log(x) + log_b_) / (2.0 * log_b_);
    double s[kMaxSupportedOrder + 1];
    step_derivs(u, 0, s);
    return 1.0 - s[0];
}

double Kernel::rho_deriv(double x, int order) const {
    if (order < 1 || order > max_order_)
        throw DomainError("smoothing: derivative order out of range");
    if (x <= inv_b_ || x >= b_) return 0.0;
    double u = (std::log(x) + log_b_) / (2.0 * log_b_);
    double s[kMaxSupportedOrder + 1];
    step_derivs(u, order, s);
    // In y = log x coordinates R(y) = 1 - S((y + log b)/(2 log b)).
    double ry[kMaxSupportedOrder + 1];
    double scale = 1.0;
    for (int k = 1; k <= order; ++k) {
        scale /= 2.0 * log_b_;
        ry[k] = -s[k] * scale;
    }
    double acc = 0.0;
    for (int k = 1; k <= order; ++k)
        acc += kStirling[order][k] * ry[k];
    return acc / std::pow(x, order);
}

} // namespace hardyz::smoothing
