#include "hardyz/oscillatory.hpp"

#include <cmath>
#include <numbers>

#include "hardyz/errors.hpp"

namespace hardyz::oscillatory {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

// 16-point Gauss-Legendre on [-1, 1]
constexpr double kGlNode[8] = {
    0.0950125098376374401853, 0.2816035507792589132304,
    0.4580167776572273863424, 0.6178762444026437484467,
    0.7554044083550030338951, 0.8656312023878317438805,
    0.9445750230732325760780, 0.9894009349916499325962};
constexpr double kGlWeight[8] = {
    0.1894506104550684962854, 0.1826034150449235888667,
    0.1691565193950025381893, 0.1495959888165767320815,
    0.1246289712555338720525, 0.0951585116824927848099,
    0.0622535239386478928628, 0.0271524594117540948518};

struct Driver {
    const ComplexFn& fn;
    const RealFn* phase;
    double total_len;
    long long cap;
    long long evals = 0;
    double err = 0.0;
    cd total{0.0, 0.0};

    cd gl16(double lo, double hi) {
        evals += 16;
        if (evals > cap)
            throw BudgetExceededError("oscillatory quadrature: evaluation cap exceeded");
        double mid = 0.5 * (lo + hi);
        double half = 0.5 * (hi - lo);
        cd acc{0.0, 0.0};
        for (int i = 0; i < 8; ++i) {
            double dx = half * kGlNode[i];
            acc += kGlWeight[i] * (fn(mid + dx) + fn(mid - dx));
        }
        return half * acc;
    }

    double phase_span(double lo, double hi) const {
        if (!phase || !*phase) return 0.0;
        double span = 0.0;
        double prev = (*phase)(lo);
        for (int i = 1; i <= 4; ++i) {
            double cur = (*phase)(lo + (hi - lo) * i / 4.0);
            span += std::abs(cur - prev);
            prev = cur;
        }
        return span;
    }

    void visit(double lo, double hi, double tol, int depth) {
        double mid = 0.5 * (lo + hi);
        // panel sized to >= 8 nodes per 2 pi of phase: 16 nodes -> span <= 4 pi
        if (depth < 48 && phase_span(lo, hi) > 2.0 * kTwoPi) {
            visit(lo, mid, 0.5 * tol, depth + 1);
            visit(mid, hi, 0.5 * tol, depth + 1);
            return;
        }
        cd whole = gl16(lo, hi);
        cd halves = gl16(lo, mid) + gl16(mid, hi);
        double diff = std::abs(whole - halves);
        if (diff <= 0.5 * tol || depth >= 52) {
            total += halves;
            err += diff;
            return;
        }
        visit(lo, mid, 0.5 * tol, depth + 1);
        visit(mid, hi, 0.5 * tol, depth + 1);
    }
};

} // namespace

IntegralEstimate integrate_adaptive(const ComplexFn& integrand,
                                    const RealFn& phase_hint, double a,
                                    double b, double tol, long long eval_cap) {
    if (!(b >= a)) throw DomainError("integrate_adaptive: requires b >= a");
    if (!(tol > 0.0)) throw DomainError("integrate_adaptive: requires tol > 0");
    if (a == b) return IntegralEstimate{};
    Driver d{integrand, &phase_hint, b - a, eval_cap};
    d.visit(a, b, tol, 0);
    return IntegralEstimate{d.total, d.err, d.evals};
}

IntegralEstimate oscillatory_quadrature(const RealFn& phi, const RealFn& F,
                                        double a, double b, double tol,
                                        long long eval_cap) {
    ComplexFn integrand = [&phi, &F](double t) {
        double ph = F(t);
        return phi(t) * cd(std::cos(ph), std::sin(ph));
    };
    return integrate_adaptive(integrand, F, a, b, tol, eval_cap);
}

cd gaussian_integral(cd A, cd B) {
    if (!(B.real() > 0.0))
        throw DomainError("gaussian_integral: requires Re B > 0");
    return std::sqrt(kPi / B) * std::exp(A * A / (4.0 * B));
}

cd gaussian_moment(int k, cd B) {
    if (!(B.real() > 0.0))
        throw DomainError("gaussian_moment: requires Re B > 0");
    if (k < 0) throw DomainError("gaussian_moment: requires k >= 0");
    // Gamma(k + 1/2) = sqrt(pi) (2k-1)!! / 2^k
    double g = std::sqrt(kPi);
    for (int j = 1; j <= k; ++j) g *= (j - 0.5);
    return g * std::exp(-(k + 0.5) * std::log(B));
}

double first_derivative_bound(double f_prime_min, double phi_max) {
    if (!(f_prime_min > 0.0))
        throw DomainError("first_derivative_bound: requires min|f'| > 0");
    return 4.0 * phi_max / f_prime_min;
}

double second_derivative_bound(double f_second_min, double phi_max,
                               double interval_len) {
    if (!(f_second_min > 0.0))
        throw DomainError("second_derivative_bound: requires min f'' > 0");
    double vdc = 8.0 * phi_max / std::sqrt(f_second_min);
    if (interval_len > 0.0) vdc = std::min(vdc, phi_max * interval_len);
    return vdc;
}

namespace {

double find_saddle(const PhaseWithDerivs& f, double a, double b) {
    double fa = f(a, 1), fb = f(b, 1);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa > 0.0 || fb < 0.0)
        throw DomainError("saddle_point_eval: f' has no sign change in [a,b]");
    double lo = a, hi = b;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * (std::abs(lo) + 1.0); ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid, 1);
        if (fm == 0.0) return mid;
        (fm < 0.0 ? lo : hi) = mid;
    }
    double c = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) { // Newton polish; f'' > 0 by hypothesis
        double step = f(c, 1) / f(c, 2);
        double next = c - step;
        if (next <= a || next >= b) break;
        c = next;
        if (std::abs(step) <= 1e-13 * (std::abs(c) + 1.0)) break;
    }
    return c;
}

} // namespace

SaddleEvaluation saddle_point_eval(const RealFn& phi, const PhaseWithDerivs& f,
                                   double a, double b, double H, double A,
                                   double U) {
    if (!(b > a)) throw DomainError("saddle_point_eval: requires b > a");
    if (!(H > 0.0 && A > 0.0 && U > 0.0))
        throw DomainError("saddle_point_eval: requires H, A, U > 0");

    double c = find_saddle(f, a, b);

    SaddleEvaluation out;
    out.saddle_location = c;
    out.H = H;
    out.A = A;
    out.U = U;

    double f2c = f(c, 2);
    if (!(f2c > 0.0))
        throw DomainError("saddle_point_eval: f'' not positive at the saddle");
    double arg = kTwoPi * f(c, 0) + 0.25 * kPi;
    out.main_term = phi(c) / std::sqrt(f2c) * cd(std::cos(arg), std::sin(arg));

    out.err_interior = H * A / U;
    double sqrtA = std::sqrt(A);
    double fpa = std::abs(f(a, 1));
    double fpb = std::abs(f(b, 1));
    out.err_left = H * (fpa > 0.0 ? std::min(1.0 / fpa, sqrtA) : sqrtA);
    out.err_right = H * (fpb > 0.0 ? std::min(1.0 / fpb, sqrtA) : sqrtA);

    // hypothesis audit by sampling; violations are reported, never silent
    if (!(A < U)) out.warnings.push_back("requires A < U");
    if (!(H < U)) out.warnings.push_back("requires H < U");
    if (!(b - a <= U)) out.warnings.push_back("requires b - a <= U");
    const int kSamples = 33;
    double f2_min = 1e300, f2_max = -1e300, f3_max = 0.0, f4_max = 0.0,
           phi_max = 0.0;
    for (int i = 0; i < kSamples; ++i) {
        double x = a + (b - a) * i / (kSamples - 1.0);
        double f2 = f(x, 2);
        f2_min = std::min(f2_min, f2);
        f2_max = std::max(f2_max, f2);
        f3_max = std::max(f3_max, std::abs(f(x, 3)));
        f4_max = std::max(f4_max, std::abs(f(x, 4)));
        phi_max = std::max(phi_max, std::abs(phi(x)));
    }
    const double kSlack = 16.0;
    if (!(f2_min > 0.0))
        out.warnings.push_back("f'' <= 0 somewhere in [a,b]");
    else if (f2_max * A > kSlack || f2_min * A < 1.0 / kSlack)
        out.warnings.push_back("f'' not comparable to 1/A");
    if (f3_max > kSlack / (A * U))
        out.warnings.push_back("f''' exceeds O(1/(A U)) scale");
    if (f4_max > kSlack / (A * U * U))
        out.warnings.push_back("f'''' exceeds O(1/(A U^2)) scale");
    if (phi_max > kSlack * H)
        out.warnings.push_back("|phi| exceeds O(H) scale");
    return out;
}

} // namespace hardyz::oscillatory
