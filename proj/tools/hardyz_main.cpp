// hardyz: evaluate Hardy's Z function, its smoothed functional-equation
// decomposition, and the primitive int_0^T Z dt; emit CSV/JSON tables.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <random>
#include <thread>
#include <vector>
#include <string>

#include "CLI11.hpp"

#include "hardyz/errors.hpp"
#include "hardyz/io.hpp"
#include "hardyz/oscillatory.hpp"
#include "hardyz/phase.hpp"
#include "hardyz/primitive.hpp"
#include "hardyz/smoothing.hpp"
#include "hardyz/special_fns.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Output {
    std::string path;   // empty -> stdout
    std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--out", out.path, "output file (default: stdout)");
    cmd->add_option("--format", out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void deliver(const hardyz::io::Table& table, const Output& out) {
    using hardyz::io::Format;
    Format f = out.format == "json" ? Format::json : Format::csv;
    if (out.path.empty()) {
        std::cout << (f == Format::json ? hardyz::io::to_json(table)
                                        : hardyz::io::to_csv(table));
    } else {
        hardyz::io::emit(table, f, out.path);
    }
}

// strided fan-out; each index computed exactly once, results land in
// preallocated slots so the reduction order is fixed
template <typename Fn>
void fan_out(int count, int workers, Fn&& fn) {
    if (workers < 1) workers = 1;
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < count; i += workers) fn(i);
        });
    for (auto& th : pool) th.join();
}

int env_workers() {
    const char* v = std::getenv("HARDYZ_WORKERS");
    if (!v) return 1;
    int n = std::atoi(v);
    return n >= 1 ? n : 1;
}

double method_code(hardyz::special_fns::ZMethod m) {
    using hardyz::special_fns::ZMethod;
    switch (m) {
        case ZMethod::oracle: return 0.0;
        case ZMethod::riemann_siegel: return 1.0;
        default: return 2.0;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hardy Z-function toolkit"};
    app.set_config("--config", "",
                   "INI file with per-subcommand sections; place before the "
                   "subcommand; explicit flags win");
    app.require_subcommand(1);

    Output out;
    int workers = env_workers();
    unsigned long long seed = 1;
    double b = 2.0, epsilon = 0.1, tol = 1e-8;

    // z-eval
    double t = 1000.0;
    std::string method = "oracle";
    auto* zeval = app.add_subcommand("z-eval", "evaluate Z(t)");
    zeval->add_option("--t", t, "evaluation point")->required();
    zeval->add_option("--method", method, "oracle | rs | afe")
        ->check(CLI::IsMember({"oracle", "rs", "afe"}));
    zeval->add_option("--b", b, "smoothing plateau parameter, (1,2]");
    add_output_flags(zeval, out);

    // theta
    auto* theta = app.add_subcommand("theta", "Riemann-Siegel theta(t)");
    theta->add_option("--t", t, "evaluation point")->required();
    add_output_flags(theta, out);

    // afe-check
    int count = 20;
    double tmin = 100.0, tmax = 1e5;
    auto* afec = app.add_subcommand(
        "afe-check", "random-t check of the smoothed decomposition of Z");
    afec->add_option("--count", count, "number of samples");
    afec->add_option("--seed", seed, "RNG seed");
    afec->add_option("--tmin", tmin, "lower end of the t range");
    afec->add_option("--tmax", tmax, "upper end of the t range");
    afec->add_option("--b", b, "smoothing plateau parameter, (1,2]");
    afec->add_option("--workers", workers, "worker threads");
    add_output_flags(afec, out);

    // saddle-check
    long long nmin = 15, nmax = 80;
    auto* sadc = app.add_subcommand(
        "saddle-check",
        "random (n,T) check of the stationary-phase main term vs quadrature");
    sadc->add_option("--count", count, "number of samples");
    sadc->add_option("--seed", seed, "RNG seed");
    sadc->add_option("--nmin", nmin, "smallest frequency index");
    sadc->add_option("--nmax", nmax, "largest frequency index");
    sadc->add_option("--b", b, "smoothing plateau parameter, (1,2]");
    add_output_flags(sadc, out);

    // integrate
    double T = 1000.0;
    auto* integ = app.add_subcommand(
        "integrate", "int_T^2T Z dt, direct and term-by-term decomposition");
    integ->add_option("--T", T, "lower limit")->required();
    integ->add_option("--b", b, "smoothing plateau parameter, (1,2]");
    integ->add_option("--epsilon", epsilon, "range-splitting window exponent");
    integ->add_option("--workers", workers, "worker threads");
    add_output_flags(integ, out);

    // scan
    double scan_tmax = 1e4;
    int grid_points = 32;
    auto* scan = app.add_subcommand(
        "scan", "cumulative int_0^T Z dt on a geometric grid up to tmax");
    scan->add_option("--tmax", scan_tmax, "largest T")->required();
    scan->add_option("--grid", grid_points, "number of grid points");
    scan->add_option("--b", b, "smoothing plateau parameter, (1,2]");
    scan->add_option("--epsilon", epsilon, "range-splitting window exponent");
    scan->add_option("--workers", workers, "worker threads");
    add_output_flags(scan, out);

    // sum-demo
    long long k1 = 100, k2 = 200;
    auto* sumd = app.add_subcommand(
        "sum-demo", "alternating sum of sqrt(n) and its 2 sqrt(K) bound");
    sumd->add_option("--k1", k1, "sum over k1 < n <= k2")->required();
    sumd->add_option("--k2", k2, "sum over k1 < n <= k2")->required();
    add_output_flags(sumd, out);

    // integrate direct range (extra utility): z integral between two points
    double t1 = 0.0, t2 = 100.0;
    auto* direct = app.add_subcommand(
        "integrate-direct", "int_{t1}^{t2} Z dt by adaptive quadrature");
    direct->add_option("--t1", t1, "lower limit")->required();
    direct->add_option("--t2", t2, "upper limit")->required();
    direct->add_option("--tol", tol, "absolute quadrature tolerance");
    long long max_evals = 100'000'000;
    direct->add_option("--max-evals", max_evals,
                       "integrand evaluation budget (exit 2 when exhausted)");
    add_output_flags(direct, out);

    for (auto* sc : app.get_subcommands({})) sc->configurable();
    CLI11_PARSE(app, argc, argv);

    using namespace hardyz;
    try {
        if (zeval->parsed()) {
            special_fns::ZSample s;
            if (method == "oracle") {
                s = special_fns::hardy_z(t, special_fns::ZMethod::oracle);
            } else if (method == "rs") {
                s = special_fns::riemann_siegel_z(t, 2);
            } else {
                smoothing::Kernel kernel(b);
                s = special_fns::afe_z_k1(t, kernel);
            }
            io::Table tab;
            tab.columns = {"t", "value", "method", "err_est"};
            tab.rows = {{s.t, s.value, method_code(s.method), s.err_est}};
            deliver(tab, out);
        } else if (theta->parsed()) {
            io::Table tab;
            tab.columns = {"t", "theta"};
            tab.rows = {{t, special_fns::rs_theta(t)}};
            deliver(tab, out);
        } else if (afec->parsed()) {
            if (count < 1) throw DomainError("afe-check: count must be >= 1");
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> ut(tmin, tmax);
            smoothing::Kernel kernel(b);
            std::vector<double> ts(count);
            for (auto& x : ts) x = ut(rng);
            io::Table tab;
            tab.columns = {"t", "afe", "oracle", "diff", "bound", "ok"};
            tab.rows.resize(count);
            fan_out(count, workers, [&](int i) {
                double afe = special_fns::afe_z_k1(ts[i], kernel).value;
                double oracle =
                    special_fns::hardy_z(ts[i], special_fns::ZMethod::oracle).value;
                double diff = std::fabs(afe - oracle);
                double bound = special_fns::afe_k1_err_bound(ts[i]);
                tab.rows[i] = {ts[i], afe, oracle, diff, bound,
                               diff <= bound ? 1.0 : 0.0};
            });
            deliver(tab, out);
            for (const auto& r : tab.rows)
                if (r.back() == 0.0) return 1;
        } else if (sadc->parsed()) {
            if (count < 1) throw DomainError("saddle-check: count must be >= 1");
            if (nmin < 1 || nmax < nmin)
                throw DomainError("saddle-check: need 1 <= nmin <= nmax");
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<long long> un(nmin, nmax);
            std::uniform_real_distribution<double> ur(1.05, 1.9);
            smoothing::Kernel kernel(b);
            io::Table tab;
            tab.columns = {"n", "T", "diff", "budget", "ok"};
            for (int i = 0; i < count; ++i) {
                long long n = un(rng);
                double r = ur(rng);
                phase::PhaseFunction p(n);
                double c = p.saddle();
                double Tl = c / r;
                double w = 0.9 * std::min(c - Tl, 2 * Tl - c);
                auto phi = [&](double x) {
                    return kernel.rho(static_cast<double>(n) /
                                      phase::PhaseFunction::tau(x));
                };
                auto f = [&](double x, int k) {
                    return (k == 0 ? p.f(x) : p.f_k(x, k)) / (2.0 * kPi);
                };
                auto sp = oscillatory::saddle_point_eval(phi, f, Tl, 2 * Tl, 1.0,
                                                         Tl, Tl);
                auto q = oscillatory::oscillatory_quadrature(
                    phi, [&](double x) { return p.f(x); }, c - w, c + w, 1e-7);
                double diff = std::abs(q.value - sp.main_term);
                double budget = sp.error_budget();
                tab.rows.push_back({static_cast<double>(n), Tl, diff, budget,
                                    diff <= budget ? 1.0 : 0.0});
            }
            deliver(tab, out);
            for (const auto& r : tab.rows)
                if (r.back() == 0.0) return 1;
        } else if (integ->parsed()) {
            smoothing::Kernel kernel(b);
            primitive::IntegralRecord rec =
                primitive::integrate_z_afe(T, kernel, epsilon, workers);
            io::Table tab;
            tab.columns = {"T",    "value_direct", "value_afe", "sum1", "sum2",
                           "sum3", "sum4",         "sum5",      "budget",
                           "normalized"};
            tab.rows = {{rec.T, rec.value_direct, rec.value_afe,
                         rec.sum_contributions[0], rec.sum_contributions[1],
                         rec.sum_contributions[2], rec.sum_contributions[3],
                         rec.sum_contributions[4], rec.afe_error_budget,
                         rec.normalized}};
            deliver(tab, out);
        } else if (scan->parsed()) {
            smoothing::Kernel kernel(b);
            primitive::ScanResult res = primitive::primitive_scan(
                scan_tmax, grid_points, kernel, epsilon, workers);
            io::Table tab;
            tab.columns = {"T", "value_direct", "value_afe", "normalized",
                           "budget"};
            for (const auto& rec : res.grid)
                tab.rows.push_back({rec.T, rec.value_direct, rec.value_afe,
                                    rec.normalized, rec.afe_error_budget});
            deliver(tab, out);
            std::cerr << "sup |int Z| / T^(1/4) = "
                      << io::format_double(res.sup_normalized) << " at T = "
                      << io::format_double(res.argmax_T) << ", "
                      << res.sign_changes << " sign changes\n";
        } else if (sumd->parsed()) {
            double s = primitive::alternating_sqrt_sum(k1, k2);
            double bound = 2.0 * std::sqrt(static_cast<double>(k2 - k1));
            io::Table tab;
            tab.columns = {"k1", "k2", "sum", "bound", "ok"};
            tab.rows = {{static_cast<double>(k1), static_cast<double>(k2), s,
                         bound, std::fabs(s) <= bound ? 1.0 : 0.0}};
            deliver(tab, out);
            if (std::fabs(s) > bound) return 1;
        } else if (direct->parsed()) {
            primitive::DirectResult r =
                primitive::integrate_z_direct_detailed(t1, t2, tol, max_evals);
            io::Table tab;
            tab.columns = {"t1", "t2", "value", "quad_err", "method_budget",
                           "evaluations"};
            tab.rows = {{t1, t2, r.value, r.quad_err, r.method_budget,
                         static_cast<double>(r.evaluations)}};
            deliver(tab, out);
        }
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
