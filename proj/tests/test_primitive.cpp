#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "hardyz/primitive.hpp"
#include "hardyz/smoothing.hpp"
#include "hardyz/special_fns.hpp"

using namespace hardyz::primitive;

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

TEST_CASE("hybrid Z evaluator matches the oracle across its switchover") {
    using hardyz::special_fns::hardy_z;
    using hardyz::special_fns::ZMethod;
    for (double t : {10.0, 100.0, 499.0, 501.0, 2000.0, 12345.6789}) {
        double z = hardy_z(t, ZMethod::oracle).value;
        CHECK(std::fabs(z_for_quadrature(t) - z) <= z_for_quadrature_err_bound(t) + 1e-12);
    }
    CHECK(z_for_quadrature_err_bound(100.0) <= 1e-9); // oracle region: tolerance only
    CHECK(z_for_quadrature_err_bound(1e4) > 0.0);
}

TEST_CASE("direct integral against a high-precision reference") {
    // int_0^50 Z dt, 30-digit reference -2.77131820020535474
    double v = integrate_z_direct(0.0, 50.0, 1e-9);
    CHECK(std::fabs(v - (-2.77131820020535474)) <= 1e-8);
    // int_0^500 Z dt, reference -5.03602786320139726
    double v2 = integrate_z_direct(0.0, 500.0, 1e-8);
    CHECK(std::fabs(v2 - (-5.03602786320139726)) <= 1e-6);
}

TEST_CASE("direct integral is additive over subdivision") {
    double tol = 1e-9;
    double whole = integrate_z_direct(100.0, 400.0, tol);
    double parts = integrate_z_direct(100.0, 250.0, tol) +
                   integrate_z_direct(250.0, 400.0, tol);
    CHECK(std::fabs(whole - parts) <= 1e-7);
}

TEST_CASE("direct integral detailed budget") {
    DirectResult r = integrate_z_direct_detailed(1000.0, 1100.0, 1e-8);
    CHECK(r.evaluations > 0);
    CHECK(r.quad_err <= 1e-7);
    CHECK(r.method_budget > 0.0);          // RS region contributes a bound
    CHECK(r.method_budget < 1.0);          // but a small one
    CHECK(std::isfinite(r.value));
}

TEST_CASE("alternating sqrt sum") {
    // sum_{n=1}^{4} (-1)^n sqrt(n) = -1 + sqrt2 - sqrt3 + 2
    double exact = -1.0 + std::sqrt(2.0) - std::sqrt(3.0) + 2.0;
    CHECK(alternating_sqrt_sum(0, 4) == doctest::Approx(exact).epsilon(1e-15));
    // boundedness: |sum| <= 2 sqrt(K)
    for (long long K : {100LL, 10000LL, 1000000LL}) {
        CHECK(std::fabs(alternating_sqrt_sum(0, K)) <= 2.0 * std::sqrt(double(K)));
    }
    CHECK_THROWS_AS(alternating_sqrt_sum(5, 5), std::domain_error);
}

TEST_CASE("afe decomposition reproduces the direct integral") {
    hardyz::smoothing::Kernel kernel(2.0);
    IntegralRecord rec = integrate_z_afe(1000.0, kernel, 0.1, 2);
    double sum = 0.0;
    for (double s : rec.sum_contributions) sum += s;
    CHECK(rec.value_afe == doctest::Approx(sum).epsilon(1e-12));
    CHECK(std::fabs(rec.value_direct - rec.value_afe) <= rec.afe_error_budget);
    CHECK(rec.afe_error_budget <= 10.0 * std::pow(1000.0, 0.25));
    CHECK(rec.normalized == doctest::Approx(rec.value_direct / std::pow(1000.0, 0.25)));
}

TEST_CASE("afe saddle main terms track the alternating sum over range 3") {
    // the saddle contribution of each range-3 term is
    // sqrt(8) pi cos(pi/8) (-1)^n sqrt(n) up to lower order
    double main = sum3_main_term(1000.0, 0.1);
    hardyz::smoothing::Kernel kernel(2.0);
    IntegralRecord rec = integrate_z_afe(1000.0, kernel, 0.1, 2);
    // budget at this scale is loose; the two should agree to a few units
    CHECK(std::fabs(rec.sum_contributions[2] - main) <= 5.0);
}

TEST_CASE("workers do not change the result") {
    hardyz::smoothing::Kernel kernel(2.0);
    IntegralRecord a = integrate_z_afe(1000.0, kernel, 0.1, 1);
    IntegralRecord b = integrate_z_afe(1000.0, kernel, 0.1, 4);
    CHECK(a.value_afe == b.value_afe); // bitwise: deterministic reduction order
    for (int i = 0; i < 5; ++i)
        CHECK(a.sum_contributions[i] == b.sum_contributions[i]);
}

TEST_CASE("scan grid and envelope") {
    hardyz::smoothing::Kernel kernel(2.0);
    ScanResult scan = primitive_scan(2000.0, 24, kernel, 0.1, 2);
    REQUIRE(scan.grid.size() == 24);
    CHECK(scan.grid.front().T == doctest::Approx(100.0));
    CHECK(scan.grid.back().T == doctest::Approx(2000.0));
    // geometric spacing
    double r0 = scan.grid[1].T / scan.grid[0].T;
    double r1 = scan.grid[11].T / scan.grid[10].T;
    CHECK(r0 == doctest::Approx(r1).epsilon(1e-9));
    // normalized column consistent with the primitive value
    for (const auto& rec : scan.grid) {
        CHECK(rec.normalized ==
              doctest::Approx(rec.value_direct / std::pow(rec.T, 0.25)));
    }
    CHECK(scan.sup_normalized > 0.0);
    CHECK(scan.argmax_T >= 100.0);
    CHECK(scan.sign_changes >= 0);
    // spot check one grid value against a direct evaluation
    const auto& mid = scan.grid[12];
    double direct = integrate_z_direct(0.0, mid.T, 1e-7);
    CHECK(std::fabs(mid.value_direct - direct) <= 1e-2);
}

TEST_CASE("exponent fit on synthetic data") {
    // feed the fitter an exact T^0.25 envelope: the fit must recover 0.25
    ScanResult s;
    for (int i = 0; i < 32; ++i) {
        IntegralRecord r;
        r.T = 100.0 * std::pow(1.2, i);
        r.value_direct = std::pow(r.T, 0.25) * (i % 2 ? -1.0 : 1.0); // alternating sign
        s.grid.push_back(r);
    }
    double e = exponent_fit(s);
    CHECK(e == doctest::Approx(0.25).epsilon(0.05));
    ScanResult tiny;
    tiny.grid.resize(3);
    CHECK_THROWS_AS(exponent_fit(tiny), std::domain_error);
}

TEST_CASE("argument validation") {
    hardyz::smoothing::Kernel kernel(2.0);
    CHECK_THROWS_AS(integrate_z_direct(-1.0, 10.0, 1e-8), std::domain_error);
    CHECK_THROWS_AS(integrate_z_direct(10.0, 5.0, 1e-8), std::domain_error);
    CHECK_THROWS_AS(integrate_z_afe(50.0, kernel, 0.1, 1), std::domain_error);
    CHECK_THROWS_AS(primitive_scan(1000.0, 1, kernel, 0.1, 1), std::domain_error);
}
