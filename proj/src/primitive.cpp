#include "hardyz/primitive.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>

#include "hardyz/errors.hpp"
#include "hardyz/kahan.hpp"
#include "hardyz/oscillatory.hpp"
#include "hardyz/phase.hpp"
#include "hardyz/special_fns.hpp"

namespace hardyz::primitive {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kZEvalSwitch = 500.0;
// integral of c t^{-3/4} over [T, 2T] = c * 4 (2^{1/4} - 1) T^{1/4}
const double kQuarterIntegralFactor = 4.0 * (std::pow(2.0, 0.25) - 1.0);

// Deterministic fan-out: every index is an independent pure task, results
// land in index order regardless of the worker count.
void parallel_for(long long count, int workers,
                  const std::function<void(long long)>& task) {
    if (workers <= 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) task(i);
        return;
    }
    int nthreads = static_cast<int>(std::min<long long>(workers, count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int w = 0; w < nthreads; ++w) {
        pool.emplace_back([&, w] {
            for (long long i = w; i < count; i += nthreads) task(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

double z_for_quadrature(double t) {
    if (t < kZEvalSwitch)
        return special_fns::hardy_z(t, special_fns::ZMethod::oracle).value;
    return special_fns::riemann_siegel_z(t, 2).value;
}

double z_for_quadrature_err_bound(double t) {
    if (t < kZEvalSwitch) return 1e-10;
    return special_fns::riemann_siegel_err_bound(t, 2);
}

double default_direct_tol(double t1, double t2) {
    return std::max(1e-9, 1e-6 * (t2 - t1));
}

DirectResult integrate_z_direct_detailed(double t1, double t2, double tol,
                                         long long eval_cap) {
    if (!(t1 >= 0.0 && t2 >= t1 && t2 <= 1e7))
        throw DomainError("integrate_z_direct: requires 0 <= t1 <= t2 <= 1e7");
    if (t1 == t2) return DirectResult{};
    auto integrand = [](double t) {
        return oscillatory::cd(z_for_quadrature(t), 0.0);
    };
    auto phase = [](double t) { return special_fns::rs_theta(t); };
    auto est =
        oscillatory::integrate_adaptive(integrand, phase, t1, t2, tol, eval_cap);
    // integrated pointwise evaluator bound; only the RS region contributes
    double lo = std::max(t1, kZEvalSwitch);
    double method = 1e-10 * (t2 - t1);
    if (t2 > lo) {
        double c = special_fns::riemann_siegel_err_bound(1.0, 2); // c * t^{-5/4}
        method += c * 4.0 * (std::pow(lo, -0.25) - std::pow(t2, -0.25));
    }
    return DirectResult{est.value.real(), est.abs_error_est, method,
                        est.evaluations};
}

double integrate_z_direct(double t1, double t2, double tol) {
    return integrate_z_direct_detailed(t1, t2, tol).value;
}

double afe_budget_constant() { return 5.0; }

IntegralRecord integrate_z_afe(double T, const smoothing::Kernel& kernel,
                               double epsilon, int workers) {
    if (!(T >= 100.0)) throw DomainError("integrate_z_afe: requires T >= 100");
    auto split = phase::split_ranges(T, epsilon);
    double window = std::pow(T, epsilon);
    double upper_t = 2.0 * T;
    long long n_max = split.ranges[4].last;

    struct PerN {
        double contrib = 0.0; // 2 n^{-1/2} Re(integral), already weighted
        double qerr = 0.0;    // weighted quadrature error
    };
    std::vector<PerN> per_n(static_cast<size_t>(n_max) + 1);

    auto range_of = [&split](long long n) {
        for (int j = 0; j < 5; ++j) {
            const auto& r = split.ranges[static_cast<size_t>(j)];
            if (!r.empty() && n >= r.first && n <= r.last) return j;
        }
        return -1;
    };

    const double per_n_tol = 1e-4;
    auto task = [&](long long idx) {
        long long n = idx + 1;
        double t_lo = phase::t1_lower_limit(T, n);
        if (t_lo >= upper_t) return;
        phase::PhaseFunction ph(n);
        auto phi = [&](double t) {
            return kernel.rho(static_cast<double>(n) / phase::PhaseFunction::tau(t));
        };
        auto F = [&](double t) { return ph.f(t); };
        oscillatory::cd val{0.0, 0.0};
        double qerr = 0.0;
        auto add_piece = [&](double lo, double hi) {
            if (hi <= lo) return;
            auto est = oscillatory::oscillatory_quadrature(phi, F, lo, hi, per_n_tol);
            val += est.value;
            qerr += est.abs_error_est;
        };
        if (range_of(n) == 2) {
            // range 3: split [T1, 2T] into K-part / J-window / K-part
            double c = ph.saddle();
            double j_lo = std::max(t_lo, c - window);
            double j_hi = std::min(upper_t, c + window);
            add_piece(t_lo, j_lo);
            add_piece(j_lo, j_hi);
            add_piece(j_hi, upper_t);
        } else {
            add_piece(t_lo, upper_t);
        }
        double weight = 2.0 / std::sqrt(static_cast<double>(n));
        per_n[static_cast<size_t>(n)] =
            PerN{weight * val.real(), weight * qerr};
    };
    parallel_for(n_max, workers, task);

    IntegralRecord rec;
    rec.T = T;
    KahanSum qerr_sum;
    for (int j = 0; j < 5; ++j) {
        const auto& r = split.ranges[static_cast<size_t>(j)];
        KahanSum s;
        for (long long n = r.first; n <= r.last; ++n) {
            s.add(per_n[static_cast<size_t>(n)].contrib);
            qerr_sum.add(per_n[static_cast<size_t>(n)].qerr);
        }
        rec.sum_contributions[static_cast<size_t>(j)] = s.value();
    }
    KahanSum total;
    for (double sj : rec.sum_contributions) total.add(sj);
    rec.value_afe = total.value();

    double direct_tol = default_direct_tol(T, upper_t);
    auto direct = integrate_z_direct_detailed(T, upper_t, direct_tol);
    rec.value_direct = direct.value;
    rec.afe_error_budget = afe_budget_constant() * kQuarterIntegralFactor *
                               std::pow(T, 0.25) +
                           qerr_sum.value() + direct.quad_err +
                           direct.method_budget;
    rec.normalized = rec.value_direct / std::pow(T, 0.25);
    return rec;
}

double alternating_sqrt_sum(long long k1, long long k2) {
    if (!(k1 >= 0 && k1 < k2))
        throw DomainError("alternating_sqrt_sum: requires 0 <= k1 < k2");
    KahanSum s;
    for (long long n = k1 + 1; n <= k2; ++n) {
        double term = std::sqrt(static_cast<double>(n));
        s.add((n % 2 == 0) ? term : -term);
    }
    return s.value();
}

double sum3_main_term(double T, double epsilon) {
    auto split = phase::split_ranges(T, epsilon);
    const auto& r3 = split.ranges[2];
    if (r3.empty()) throw DomainError("sum3_main_term: range 3 is empty");
    // e^{iF(c_n)} = e^{-i pi n^2 - i pi/8}: taking the real part of the
    // saddle main terms leaves cos(pi/8) and (-1)^{n^2} = (-1)^n
    return std::sqrt(8.0) * kPi * std::cos(kPi / 8.0) *
           alternating_sqrt_sum(r3.first - 1, r3.last);
}

ScanResult primitive_scan(double t_max, int grid_points,
                          const smoothing::Kernel& kernel, double epsilon,
                          int workers) {
    (void)kernel;
    (void)epsilon;
    if (!(t_max > 100.0 && t_max <= 1e7))
        throw DomainError("primitive_scan: requires 100 < t_max <= 1e7");
    if (grid_points < 2)
        throw DomainError("primitive_scan: requires grid_points >= 2");

    std::vector<double> grid(static_cast<size_t>(grid_points));
    double ratio = std::log(t_max / 100.0) / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i)
        grid[static_cast<size_t>(i)] = 100.0 * std::exp(ratio * i);
    grid.back() = t_max;

    // independent increments, reduced in fixed grid order
    std::vector<DirectResult> pieces(static_cast<size_t>(grid_points));
    auto task = [&](long long i) {
        double lo = (i == 0) ? 0.0 : grid[static_cast<size_t>(i - 1)];
        double hi = grid[static_cast<size_t>(i)];
        pieces[static_cast<size_t>(i)] =
            integrate_z_direct_detailed(lo, hi, default_direct_tol(lo, hi));
    };
    parallel_for(grid_points, workers, task);

    ScanResult out;
    out.grid.reserve(static_cast<size_t>(grid_points));
    KahanSum cum, cum_err;
    double prev_value = 0.0;
    bool have_prev = false;
    for (int i = 0; i < grid_points; ++i) {
        const auto& p = pieces[static_cast<size_t>(i)];
        cum.add(p.value);
        cum_err.add(p.quad_err + p.method_budget);
        IntegralRecord rec;
        rec.T = grid[static_cast<size_t>(i)];
        rec.value_direct = cum.value();
        rec.value_afe = std::numeric_limits<double>::quiet_NaN();
        rec.afe_error_budget = cum_err.value();
        rec.normalized = rec.value_direct / std::pow(rec.T, 0.25);
        if (std::abs(rec.normalized) > out.sup_normalized) {
            out.sup_normalized = std::abs(rec.normalized);
            out.argmax_T = rec.T;
        }
        if (have_prev && prev_value * rec.value_direct < 0.0) ++out.sign_changes;
        if (rec.value_direct != 0.0) {
            prev_value = rec.value_direct;
            have_prev = true;
        }
        out.grid.push_back(rec);
    }
    return out;
}

double exponent_fit(const ScanResult& scan) {
    if (scan.grid.size() < 10)
        throw DomainError("exponent_fit: need at least 10 grid points");
    double env = 0.0;
    KahanSum sx, sy, sxx, sxy;
    long long m = 0;
    for (const auto& rec : scan.grid) {
        env = std::max(env, std::abs(rec.value_direct));
        if (env <= 0.0) continue;
        double x = std::log(rec.T);
        double y = std::log(env);
        sx.add(x);
        sy.add(y);
        sxx.add(x * x);
        sxy.add(x * y);
        ++m;
    }
    if (m < 10) throw DomainError("exponent_fit: too few usable points");
    double md = static_cast<double>(m);
    double denom = md * sxx.value() - sx.value() * sx.value();
    return (md * sxy.value() - sx.value() * sy.value()) / denom;
}

} // namespace hardyz::primitive
