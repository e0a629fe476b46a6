#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dickman/gamma.hpp"
#include "dickman/kahan.hpp"

using dickman::log_gamma;

namespace {

// Independent oracle: shift the argument up by 25 and close with the
// Euler-Maclaurin (Stirling) tail. About 50 terms of work in total, good to
// well below 1e-14 relative for x in (0, 1e7].
double log_gamma_oracle(double x) {
    // B_{2m} / (2m (2m-1)) for m = 1..12
    static const double tail_coef[12] = {
        1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0,
        1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
        43867.0 / 244188.0, -174611.0 / 125400.0, 77683.0 / 5796.0,
        -236364091.0 / 1506960.0};
    dickman::KahanSum shift;
    double y = x;
    while (y < 25.0) {
        shift.add(std::log(y));
        y += 1.0;
    }
    double acc = (y - 0.5) * std::log(y) - y + 0.5 * std::log(2.0 * 3.14159265358979323846);
    double p = 1.0 / y;
    for (int m = 0; m < 12; ++m) {
        acc += tail_coef[m] * p;
        p /= y * y;
    }
    return acc - shift.value();
}

} // namespace

TEST_CASE("half-integer value ln Gamma(1/2) = ln sqrt(pi)") {
    double expect = 0.5 * std::log(3.14159265358979323846);
    CHECK(std::abs(log_gamma(0.5) - expect) < 1e-14);
    CHECK(std::abs(log_gamma_oracle(0.5) - expect) < 1e-14);
    CHECK(doctest::Approx(log_gamma(0.5)).epsilon(1e-10) == 0.5723649429);
}

TEST_CASE("integers: ln Gamma(n) = ln (n-1)!") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-14);
    CHECK(std::abs(log_gamma(2.0)) < 1e-14);
    CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-13);
    CHECK(std::abs(log_gamma(11.0) - std::log(3628800.0)) < 2e-13);
}

TEST_CASE("matches the Stirling oracle to 1e-13 relative across the domain") {
    const double xs[] = {0.05, 0.21, 0.5,  0.77, 1.0,    1.5,   2.0,
                         2.72, 3.75, 7.3,  10.0, 25.5,   100.0, 317.2,
                         1e3,  1e4,  2e5,  1e6,  2.0e6 + 1.0};
    for (double x : xs) {
        double got = log_gamma(x);
        double want = log_gamma_oracle(x);
        double scale = std::max(1.0, std::abs(want));
        CHECK_MESSAGE(std::abs(got - want) <= 1e-13 * scale, "x = ", x);
    }
}

TEST_CASE("recurrence ln Gamma(x+1) = ln Gamma(x) + ln x") {
    for (double x : {0.1, 0.4, 0.9, 1.3, 6.2, 41.7}) {
        double lhs = log_gamma(x + 1.0);
        double rhs = log_gamma(x) + std::log(x);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("rejects non-positive arguments") {
    CHECK_THROWS_AS((void)log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS((void)log_gamma(-2.5), std::domain_error);
}
