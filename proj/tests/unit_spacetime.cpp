#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dickman/renewal.hpp"
#include "dickman/spacetime.hpp"
#include "dickman/verify.hpp"

using namespace dickman;

namespace {

// single deterministic step to one of the four neighbors, any m
LatticePmf four_neighbor_row(long) {
    LatticePmf p(1);
    p.cell(1, 0) = 0.25;
    p.cell(-1, 0) = 0.25;
    p.cell(0, 1) = 0.25;
    p.cell(0, -1) = 0.25;
    return p;
}

}  // namespace

TEST_CASE("lattice table reads zero outside its square") {
    LatticePmf p(2);
    p.cell(1, -2) = 0.5;
    CHECK(p.at(1, -2) == 0.5);
    CHECK(p.at(3, 0) == 0.0);
    CHECK(p.at(0, -3) == 0.0);
    CHECK(p.total() == 0.5);
}

TEST_CASE("walk kernel rows match hand values") {
    SpaceTimeLaw law = spacetime_srw_law(8);

    const LatticePmf& one = law.row(1);
    CHECK(one.at(1, 0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(one.at(-1, 0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(one.at(0, 1) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(one.at(0, -1) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(one.at(0, 0) == 0.0);
    CHECK(one.at(1, 1) == 0.0);

    const LatticePmf& two = law.row(2);
    CHECK(two.at(0, 0) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(two.at(1, 1) == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(two.at(2, 0) == doctest::Approx(0.0625).epsilon(1e-13));
    CHECK(two.at(1, 0) == 0.0);
    CHECK(two.total() == doctest::Approx(1.0).epsilon(1e-14));

    for (long m : {1L, 2L, 5L, 8L})
        CHECK(law.row(m).second_moment() ==
              doctest::Approx(static_cast<double>(m)).epsilon(1e-12));

    CHECK(law.axis(3, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(law.axis(3, 0.7) ==
          doctest::Approx(std::pow(std::cos(0.7), 3.0)).epsilon(1e-15));
    CHECK(law.rotated_parity());
    CHECK(law.separable());
    CHECK_THROWS_AS(law.row(0), std::domain_error);
    CHECK_THROWS_AS(law.row(9), std::domain_error);
}

TEST_CASE("kernel validation rejects malformed rows") {
    InterArrivalLaw base = law_from_harmonic(3);

    SpaceTimeLaw deficient(base, [](long) {
        LatticePmf p(1);
        p.cell(0, 0) = 0.9;
        return p;
    });
    CHECK_THROWS_AS(deficient.row(1), std::runtime_error);

    SpaceTimeLaw drifting(base, [](long) {
        LatticePmf p(1);
        p.cell(1, 0) = 0.75;
        p.cell(-1, 0) = 0.25;
        return p;
    });
    CHECK_THROWS_AS(drifting.row(1), std::runtime_error);

    SpaceTimeLaw spread(base, [](long) {
        LatticePmf p(10);
        p.cell(10, 0) = 0.5;
        p.cell(-10, 0) = 0.5;
        return p;
    });
    CHECK_THROWS_AS(spread.row(1), std::runtime_error);

    SpaceTimeLaw negative(base, [](long) {
        LatticePmf p(1);
        p.cell(1, 0) = 1.5;
        p.cell(-1, 0) = -0.5;
        return p;
    });
    CHECK_THROWS_AS(negative.row(1), std::runtime_error);
}

TEST_CASE("dense program starts from a point mass and keeps its marginal") {
    SpaceTimeLaw law = spacetime_srw_law(4);
    double lambda = 0.9;
    SpaceTimeDensity d = spacetime_renewal_density(law, lambda, 6);

    CHECK(d.slice[0].at(0, 0) == 1.0);
    CHECK(d.slice[0].at(1, 0) == 0.0);
    CHECK(d.time_marginal[0] == 1.0);

    std::vector<double> u = renewal_density(law.base(), lambda, 6);
    for (long n = 0; n <= 6; ++n)
        CHECK(d.time_marginal[n] == doctest::Approx(u[n]).epsilon(1e-12));

    for (long n = 0; n <= 6; ++n) {
        const LatticePmf& s = d.slice[n];
        for (long x1 = -s.radius; x1 <= s.radius; ++x1)
            for (long x2 = -s.radius; x2 <= s.radius; ++x2) {
                double v = s.at(x1, x2);
                CHECK(v >= 0.0);
                if ((n + x1 + x2) % 2 != 0) CHECK(v == 0.0);
                double mirror = s.at(-x1, -x2);
                CHECK(v == doctest::Approx(mirror).epsilon(1e-13));
            }
    }
}

TEST_CASE("dense program honors lambda zero and its guards") {
    SpaceTimeLaw law = spacetime_srw_law(4);
    SpaceTimeDensity dead = spacetime_renewal_density(law, 0.0, 4);
    for (long n = 1; n <= 4; ++n) CHECK(dead.time_marginal[n] == 0.0);

    CHECK_THROWS_AS(spacetime_renewal_density(law, -1.0, 4),
                    std::domain_error);
    CHECK_THROWS_AS(spacetime_renewal_density(law, 1.0, 50, 10),
                    std::length_error);
}

TEST_CASE("frequency route reproduces the dense values") {
    SpaceTimeLaw law = spacetime_srw_law(8);
    std::vector<std::pair<long, long>> probes = {
        {0, 0}, {1, 1}, {2, 0}, {3, 1}, {0, 2}};
    for (double lambda : {0.8, 1.1}) {
        SpaceTimeDensity d = spacetime_renewal_density(law, lambda, 13);
        for (long n : {5L, 8L, 13L})
            for (auto [px, py] : probes) {
                long x1 = px, x2 = py;
                if ((n + x1 + x2) % 2 != 0) x1 += 1;
                double dense = d.slice[n].at(x1, x2);
                double fourier = spacetime_point(law, lambda, n, x1, x2);
                CHECK(fourier == doctest::Approx(dense).epsilon(1e-6));
            }
    }
}

TEST_CASE("frequency route respects parity and its preconditions") {
    SpaceTimeLaw law = spacetime_srw_law(8);
    CHECK(spacetime_point(law, 1.0, 5, 0, 0) == 0.0);
    CHECK(spacetime_point(law, 1.0, 4, 1, 0) == 0.0);
    CHECK(spacetime_point(law, 1.0, 0, 0, 0) == 1.0);
    CHECK(spacetime_point(law, 1.0, 0, 1, 1) == 0.0);

    SpaceTimeLaw blind(law_from_harmonic(3), four_neighbor_row);
    CHECK_THROWS_AS(spacetime_point(blind, 1.0, 4, 0, 0), std::domain_error);
    CHECK_THROWS_AS(spacetime_point(law, -1.0, 4, 0, 0), std::domain_error);
    CHECK_THROWS_AS(spacetime_point(law, 1.0, -1, 0, 0), std::domain_error);
}

TEST_CASE("scaled space-time density approaches its continuum product") {
    SpacetimePointReport big = verify_spacetime_theorem(1 << 12, 0.0, 0.5, 0.0, 0.0);
    CHECK(big.n == 2048);
    CHECK(big.x1 == 0);
    CHECK_FALSE(big.parity_adjusted);
    CHECK(std::abs(big.ratio - 1.0) < 0.2);
    // regression values from the build-time sweep
    CHECK(big.ratio == doctest::Approx(1.069136).epsilon(1e-3));

    SpacetimePointReport small = verify_spacetime_theorem(1 << 10, 0.0, 0.5, 0.0, 0.0);
    CHECK(std::abs(big.ratio - 1.0) < std::abs(small.ratio - 1.0));
}

TEST_CASE("off-sublattice queries are nudged and flagged") {
    SpacetimePointReport r = verify_spacetime_theorem(1022, 0.0, 0.5, 0.0, 0.0);
    CHECK(r.n == 511);
    CHECK(r.parity_adjusted);
    CHECK((r.n + r.x1 + r.x2) % 2 == 0);
    CHECK(r.bsu > 0.0);

    CHECK_THROWS_AS(verify_spacetime_theorem(1, 0.0, 0.5, 0.0, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(verify_spacetime_theorem(1 << 10, 0.0, 1.5, 0.0, 0.0),
                    std::domain_error);
}

TEST_CASE("mass stays on the diffusive scale") {
    SpaceTimeLaw law = spacetime_srw_law(64);
    auto prof = diffusive_mass_profile(law, 1.0, 32, {1.0, 2.0, 4.0});
    REQUIRE(prof.size() == 3);
    for (double v : prof) {
        CHECK(std::isfinite(v));
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    // regression values from the build-time sweep
    CHECK(prof[0] == doctest::Approx(0.381025).epsilon(1e-3));
    CHECK(prof[1] == doctest::Approx(0.075019).epsilon(1e-3));
    CHECK(prof[2] < 1e-4);
}
