#pragma once

#include <array>
#include <vector>

#include "hardyz/smoothing.hpp"

namespace hardyz::primitive {

struct IntegralRecord {
    double T = 0.0;
    double value_direct = 0.0; // quadrature of Z
    double value_afe = 0.0;    // smoothed-AFE decomposition (NaN if skipped)
    std::array<double, 5> sum_contributions{}; // doubled Sigma_1..Sigma_5
    double afe_error_budget = 0.0;
    double normalized = 0.0; // value_direct / T^{1/4}
};

struct ScanResult {
    std::vector<IntegralRecord> grid;
    double sup_normalized = 0.0;
    double argmax_T = 0.0;
    int sign_changes = 0;
};

struct DirectResult {
    double value = 0.0;
    double quad_err = 0.0;      // adaptive-quadrature error estimate
    double method_budget = 0.0; // integrated pointwise Z-evaluator bound
    long long evaluations = 0;
};

// Fast real Z evaluator used inside the integrators: zeta oracle below
// t = 500, Riemann-Siegel with two correction terms above.
double z_for_quadrature(double t);
double z_for_quadrature_err_bound(double t);

// int_{t1}^{t2} Z(t) dt, panels tied to the local theta-phase density.
DirectResult integrate_z_direct_detailed(double t1, double t2, double tol,
                                         long long eval_cap = 100'000'000);
double integrate_z_direct(double t1, double t2, double tol);

// Default direct tolerance: 1e-6 per unit interval length.
double default_direct_tol(double t1, double t2);

// I(T)-style record over [T, 2T]: value_afe from the per-n oscillatory
// integrals split into the five Sigma ranges (range 3 through the J/K window
// around each saddle), value_direct from quadrature of Z.
IntegralRecord integrate_z_afe(double T, const smoothing::Kernel& kernel,
                               double epsilon, int workers = 1);

// sqrt(8) pi cos(pi/8) sum_{range 3} (-1)^n sqrt(n)
double sum3_main_term(double T, double epsilon);

// sum_{k1 < n <= k2} (-1)^n sqrt(n), compensated
double alternating_sqrt_sum(long long k1, long long k2);

// Cumulative int_0^T Z dt on a geometric grid in [100, t_max].
ScanResult primitive_scan(double t_max, int grid_points,
                          const smoothing::Kernel& kernel, double epsilon,
                          int workers = 1);

// Least-squares growth exponent of the sup-envelope of |int_0^T Z| vs T.
double exponent_fit(const ScanResult& scan);

// Constant in the integrated AFE pointwise error budget (measured, with
// margin; see calibration tests).
double afe_budget_constant();

} // namespace hardyz::primitive
