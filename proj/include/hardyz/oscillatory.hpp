#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace hardyz::oscillatory {

using cd = std::complex<double>;
using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cd(double)>;
// f(t, k) = k-th derivative of the phase, k = 0..4
using PhaseWithDerivs = std::function<double(double, int)>;

struct IntegralEstimate {
    cd value{0.0, 0.0};
    double abs_error_est = 0.0;
    long long evaluations = 0;
};

struct SaddleEvaluation {
    cd main_term{0.0, 0.0};    // phi(c)/sqrt(f''(c)) e^{2 pi i f(c) + pi i/4}
    double err_interior = 0.0; // H A / U
    double err_left = 0.0;     // H min(|f'(a)|^{-1}, sqrt A)
    double err_right = 0.0;
    double saddle_location = 0.0;
    double H = 0.0, A = 0.0, U = 0.0;
    std::vector<std::string> warnings; // hypothesis violations, reported not fatal

    double error_budget() const { return err_interior + err_left + err_right; }
};

// closed form sqrt(pi/B) exp(A^2/4B), Re B > 0
cd gaussian_integral(cd A, cd B);

// int x^{2k} exp(-B x^2) dx = Gamma(k + 1/2) B^{-k-1/2}, Re B > 0
cd gaussian_moment(int k, cd B);

// a-priori first/second derivative test bounds with documented constants
// 4 and 8; valid whenever the monotonicity / convexity hypotheses hold
double first_derivative_bound(double f_prime_min, double phi_max);
double second_derivative_bound(double f_second_min, double phi_max,
                               double interval_len);

// Saddle-point lemma: main term plus the three-part error budget for
// int_a^b phi(x) exp(2 pi i f(x)) dx with a stationary point of f in [a,b].
SaddleEvaluation saddle_point_eval(const RealFn& phi, const PhaseWithDerivs& f,
                                   double a, double b, double H, double A,
                                   double U);

// Brute-force oracle: int_a^b phi(t) e^{i F(t)} dt by adaptive panel
// subdivision (>= 8 points per 2 pi of phase change, 16-point Gauss-Legendre,
// panel halving until refinements agree).
IntegralEstimate oscillatory_quadrature(const RealFn& phi, const RealFn& F,
                                        double a, double b, double tol,
                                        long long eval_cap = 100'000'000);

// Generic driver behind oscillatory_quadrature; phase_hint (may be null)
// only controls panel density, the integrand is integrated as given.
IntegralEstimate integrate_adaptive(const ComplexFn& integrand,
                                    const RealFn& phase_hint, double a,
                                    double b, double tol,
                                    long long eval_cap = 100'000'000);

} // namespace hardyz::oscillatory
