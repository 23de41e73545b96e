#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "hardyz/smoothing.hpp"

using hardyz::smoothing::Kernel;
using hardyz::smoothing::make_kernel;

TEST_CASE("kernel partition of unity") {
    Kernel k(2.0);
    CHECK(k.rho(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    for (double x : {0.51, 0.6, 0.75, 0.9, 0.999, 1.0, 1.1, 1.3, 1.7, 1.95}) {
        double s = k.rho(x) + k.rho(1.0 / x);
        CHECK(std::fabs(s - 1.0) <= 1e-15);
    }
}

TEST_CASE("kernel plateau and support") {
    Kernel k(2.0);
    // rho == 1 on (0, 1/b], rho == 0 on [b, inf)
    CHECK(k.rho(0.1) == 1.0);
    CHECK(k.rho(0.5) == 1.0);
    CHECK(k.rho(2.0) == 0.0);
    CHECK(k.rho(5.0) == 0.0);
    CHECK(k.rho(0.75) > 0.0);
    CHECK(k.rho(0.75) < 1.0);
    CHECK(k.rho(1.5) > 0.0);
    CHECK(k.rho(1.5) < 1.0);
}

TEST_CASE("kernel monotone decreasing on transition") {
    Kernel k(2.0);
    double prev = 1.0;
    for (int i = 1; i <= 40; ++i) {
        double x = 0.5 + 1.5 * i / 40.0;
        double v = k.rho(x);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
}

TEST_CASE("kernel narrower b") {
    Kernel k(1.5);
    CHECK(k.rho(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(k.rho(2.0 / 3.0) == 1.0);
    CHECK(k.rho(1.5) == 0.0);
    double s = k.rho(1.2) + k.rho(1.0 / 1.2);
    CHECK(std::fabs(s - 1.0) <= 1e-15);
}

TEST_CASE("kernel derivatives vs central differences") {
    Kernel k(2.0);
    for (int order = 1; order <= 4; ++order) {
        for (double x : {0.7, 0.9, 1.0, 1.2, 1.6}) {
            double h = 1e-3;
            auto lower = [&](double y) {
                return order == 1 ? k.rho(y) : k.rho_deriv(y, order - 1);
            };
            double fd = (lower(x + h) - lower(x - h)) / (2 * h);
            double ex = k.rho_deriv(x, order);
            double scale = std::max(1.0, std::fabs(ex));
            CHECK(std::fabs(fd - ex) <= 1e-3 * scale);
        }
    }
}

TEST_CASE("kernel derivatives vanish off the transition") {
    Kernel k(2.0);
    for (int order = 1; order <= 4; ++order) {
        CHECK(k.rho_deriv(0.3, order) == 0.0);
        CHECK(k.rho_deriv(3.0, order) == 0.0);
    }
}

TEST_CASE("smooth join at the plateau edges") {
    // all derivatives tend to 0 approaching x = 1/b and x = b from inside
    Kernel k(2.0);
    for (int order = 1; order <= 4; ++order) {
        CHECK(std::fabs(k.rho_deriv(0.5001, order)) < 1e-3);
        CHECK(std::fabs(k.rho_deriv(1.9999, order)) < 1e-3);
    }
}

TEST_CASE("kernel argument validation") {
    CHECK_THROWS_AS(Kernel(1.0), std::domain_error);
    CHECK_THROWS_AS(Kernel(2.5), std::domain_error);
    CHECK_THROWS_AS(Kernel(0.5), std::domain_error);
    Kernel k(2.0);
    CHECK(k.rho(0.0) == 1.0);
    CHECK_THROWS_AS(k.rho(-1.0), std::domain_error);
    CHECK_THROWS_AS(k.rho_deriv(1.0, 5), std::domain_error); // default max order 4
    CHECK_THROWS_AS(k.rho_deriv(1.0, 0), std::domain_error);
    CHECK_THROWS_AS(Kernel(2.0, 7), std::domain_error);
}

TEST_CASE("make_kernel factory") {
    auto k = make_kernel(1.8);
    CHECK(k.rho(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(k.rho(1.8) == 0.0);
}
