#pragma once

#include <complex>

#include "hardyz/smoothing.hpp"

namespace hardyz::special_fns {

using cd = std::complex<double>;

enum class ZMethod { oracle, riemann_siegel, afe_k1 };

struct ZSample {
    double t = 0.0;
    double value = 0.0;
    ZMethod method = ZMethod::oracle;
    double err_est = 0.0; // a-priori absolute method error bound
};

struct ChiValue {
    cd s;
    cd value;
};

// Principal-branch log Gamma, analytic for Re z > 0; reflection elsewhere.
// Stable for |Im z| up to 1e8.
cd log_gamma(cd z);

// log sin z without overflow for large |Im z| (branch fixed only mod 2*pi*i).
cd log_sin(cd z);

// chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s), evaluated via logarithms.
cd chi(cd s);
ChiValue chi_value(cd s);

// Riemann-Siegel theta.  rs_theta switches from the log-Gamma definition to
// the asymptotic series at t = 10 (series remainder < 1e-12 there).
double theta_via_loggamma(double t);
double rs_theta(double t);

// Trusted slow reference for zeta(1/2 + it): accelerated alternating (eta)
// series for t <= 500, Euler-Maclaurin with ceil(10 + t/2) terms above.
cd zeta_critical_oracle(double t, double tol = 1e-12);

ZSample hardy_z(double t, ZMethod method);
ZSample riemann_siegel_z(double t, int num_corrections);
ZSample afe_z_k1(double t, const smoothing::Kernel& kernel);

// Documented error-bound constants (measured with margin; see tests).
double riemann_siegel_err_bound(double t, int num_corrections);
double afe_k1_err_bound(double t);

// Correction-term profile C0(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p),
// evaluated through removable singularities at p = 1/4, 3/4.
double rs_c0_profile(double p);

} // namespace hardyz::special_fns
