#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "oneshot/metrics.hpp"
#include "oneshot/rng.hpp"
#include "oneshot/sequences.hpp"

using namespace oneshot;

TEST_CASE("min_distance basics") {
    UnitSample sample(2, 1);
    sample(0, 0) = 0.0;
    sample(1, 0) = 0.9;
    const std::vector<double> at_point = {0.9};
    CHECK(min_distance(at_point, sample) == 0.0);
    const std::vector<double> between = {0.4};
    CHECK(min_distance(between, sample) == doctest::Approx(0.4).epsilon(1e-15));

    RealSample origin(1, 2);
    const std::vector<double> far = {3.0, 4.0};
    CHECK(min_distance(far, origin) == 5.0);

    const std::vector<double> wrong_dim = {0.1, 0.2};
    CHECK_THROWS_AS(min_distance(wrong_dim, sample), std::invalid_argument);
}

TEST_CASE("min_distance is permutation-invariant and 1-Lipschitz in the probe") {
    const UnitSample sample = gen_base(BaseSequenceKind::Random, 20, 3, 55);
    UnitSample reversed(20, 3);
    for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = 0; j < 3; ++j) reversed(i, j) = sample(19 - i, j);

    Rng rng(66);
    std::vector<double> x(3), y(3);
    for (int trial = 0; trial < 50; ++trial) {
        double shift2 = 0.0;
        for (std::size_t j = 0; j < 3; ++j) {
            x[j] = rng.next_double();
            y[j] = rng.next_double();
            shift2 += (x[j] - y[j]) * (x[j] - y[j]);
        }
        CHECK(min_distance(x, sample) == min_distance(x, reversed));
        CHECK(std::abs(min_distance(x, sample) - min_distance(y, sample)) <=
              std::sqrt(shift2) + 1e-12);
    }
}

TEST_CASE("exact star discrepancy of a single centered point is 1/2") {
    UnitSample sample(1, 1);
    sample(0, 0) = 0.5;
    const DiscrepancyEstimate est = star_discrepancy(sample, DiscrepancyMethod::ExactSmall);
    CHECK(est.value == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("exact star discrepancy of equispaced midpoints is 1/(2n)") {
    for (std::size_t n : {4u, 16u, 51u}) {
        UnitSample sample(n, 1);
        for (std::size_t i = 0; i < n; ++i)
            sample(i, 0) = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        const DiscrepancyEstimate est = star_discrepancy(sample, DiscrepancyMethod::ExactSmall);
        CHECK(est.value == doctest::Approx(0.5 / static_cast<double>(n)).epsilon(1e-12));
        CHECK(est.value <= 1.0 / static_cast<double>(n));
    }
}

TEST_CASE("exact star discrepancy rejects large instances") {
    CHECK_THROWS_AS(star_discrepancy(UnitSample(4, 4), DiscrepancyMethod::ExactSmall),
                    std::invalid_argument);
    CHECK_THROWS_AS(star_discrepancy(UnitSample(500, 2), DiscrepancyMethod::ExactSmall),
                    std::invalid_argument);
}

TEST_CASE("monte-carlo discrepancy lower-bounds the exact value") {
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const UnitSample sample = gen_base(BaseSequenceKind::Random, 16, 2, rng.next_u64());
        const double exact = star_discrepancy(sample, DiscrepancyMethod::ExactSmall).value;
        const double mc = star_discrepancy(sample, DiscrepancyMethod::MonteCarlo, 7, 20000).value;
        CHECK(mc <= exact + 1e-12);
        CHECK(mc >= 0.5 * exact);  // 2e4 boxes resolve a 16-point set well
    }
}

TEST_CASE("unit ball volumes at small dimension") {
    constexpr double pi = 3.14159265358979323846;
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(unit_ball_volume(2) == doctest::Approx(pi).epsilon(1e-12));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-12));
    CHECK(lanczos_gamma(5.0) == doctest::Approx(24.0).epsilon(1e-12));
    CHECK(lanczos_gamma(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-12));
}

TEST_CASE("stochastic dispersion hits zero at grid cell centers") {
    const UnitSample grid = gen_base(BaseSequenceKind::Grid, 9, 2, 0);
    const std::vector<double> center = {0.5 / 3.0, 0.5 / 3.0};
    CHECK(min_distance(center, grid) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("stochastic dispersion of random search shrinks like n^{-1/2} in d=2") {
    auto sampler_for = [](std::size_t n) {
        return [n](std::uint64_t seed) {
            return gen_base(BaseSequenceKind::Random, n, 2, seed);
        };
    };
    const auto small = stochastic_dispersion(sampler_for(100), 100, 2, 40, 128, 12);
    const auto mid = stochastic_dispersion(sampler_for(400), 400, 2, 40, 128, 12);
    const auto large = stochastic_dispersion(sampler_for(1600), 1600, 2, 40, 128, 12);
    CHECK(small.value > mid.value);
    CHECK(mid.value > large.value);
    // quadrupling n roughly halves the estimate at the n^{-1/2} rate
    for (double ratio : {small.value / mid.value, mid.value / large.value}) {
        CHECK(ratio > 1.4);
        CHECK(ratio < 2.9);
    }
    CHECK(small.stderr_ >= 0.0);
    CHECK_THROWS_AS(stochastic_dispersion(sampler_for(10), 10, 2, 5, 128, 1),
                    std::invalid_argument);
}

TEST_CASE("LHS corner bound: degenerate cases") {
    const BoundCheckReport d1 = check_lhs_corner_bound(64, 4, 1, 500, 3);
    CHECK(d1.estimate == 0.0);
    CHECK(d1.bound == 0.0);
    CHECK(d1.pass);

    const BoundCheckReport full = check_lhs_corner_bound(64, 64, 3, 200, 3);
    CHECK(full.estimate == 0.0);
    CHECK(full.pass);

    CHECK_THROWS_AS(check_lhs_corner_bound(63, 4, 3, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_lhs_corner_bound(64, 5, 3, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_lhs_corner_bound(32, 64, 3, 10, 1), std::invalid_argument);
}

TEST_CASE("LHS corner bound holds at the acceptance parameters (small replica smoke)") {
    const BoundCheckReport report = check_lhs_corner_bound(64, 4, 3, 2000, 7);
    CHECK(report.estimate <= report.bound + 3.0 * report.stderr_);
    CHECK(report.pass);
    CHECK(report.line().find("lhs_corner") == 0);
    CHECK(report.line().find("pass=1") != std::string::npos);
}

TEST_CASE("projected jittered dispersion bound (small replica smoke)") {
    const BoundCheckReport report = check_projected_jittered(81, 4, 2, 0.1, 1000, 11);
    CHECK(report.pass);
    CHECK(report.estimate <= report.bound);
    // d' = d degenerates to the unprojected check
    const BoundCheckReport full = check_projected_jittered(16, 2, 2, 0.1, 500, 11);
    CHECK(full.pass);
    CHECK_THROWS_AS(check_projected_jittered(80, 4, 2, 0.1, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_projected_jittered(81, 4, 5, 0.1, 10, 1), std::invalid_argument);
}

TEST_CASE("middle point theorem check in and out of regime") {
    const BoundCheckReport in_regime = check_middle_point_theorem(30, 100, 400, 13);
    CHECK(in_regime.asserted);
    CHECK(in_regime.pass);
    CHECK(in_regime.estimate < in_regime.bound);
    double ratio = 0.0;
    for (const auto& [key, value] : in_regime.params)
        if (key == "median_norm2_over_d") ratio = value;
    CHECK(ratio > 0.9);
    CHECK(ratio < 1.1);

    const BoundCheckReport out_of_regime = check_middle_point_theorem(1, 2, 100, 13);
    CHECK(!out_of_regime.asserted);
    CHECK(out_of_regime.pass);
    CHECK(out_of_regime.line().find("asserted=0") != std::string::npos);
}

TEST_CASE("bound checks are reproducible from parameters and seed") {
    const BoundCheckReport a = check_lhs_corner_bound(64, 4, 3, 500, 99);
    const BoundCheckReport b = check_lhs_corner_bound(64, 4, 3, 500, 99);
    CHECK(a.estimate == b.estimate);
    CHECK(a.stderr_ == b.stderr_);
    CHECK(a.line() == b.line());
}
