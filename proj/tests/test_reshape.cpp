#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "oneshot/distributions.hpp"
#include "oneshot/reshape.hpp"
#include "oneshot/sequences.hpp"

using namespace oneshot;

namespace {
UnitSample single(double u) {
    UnitSample s(1, 1);
    s(0, 0) = u;
    return s;
}
}  // namespace

TEST_CASE("recenter with lambda 1 is the identity up to clamping") {
    const UnitSample sample = gen_base(BaseSequenceKind::Random, 50, 3, 17);
    const UnitSample out = recenter(sample, 1.0, Distribution::Normal);
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = 0; j < sample.dim(); ++j)
            CHECK(out(i, j) == doctest::Approx(sample(i, j)).epsilon(1e-12));
}

TEST_CASE("recenter with lambda 0 sends everything to the middle") {
    const UnitSample sample = gen_base(BaseSequenceKind::LHS, 20, 4, 3);
    for (Distribution dist : {Distribution::Normal, Distribution::Cauchy}) {
        const UnitSample out = recenter(sample, 0.0, dist);
        for (double u : out.data()) CHECK(u == 0.5);
    }
}

TEST_CASE("recenter composes the two CDFs") {
    const UnitSample out = recenter(single(0.975), 0.5, Distribution::Normal);
    const double expected = normal_cdf(0.5 * normal_inv_cdf(0.975));
    CHECK(out(0, 0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(out(0, 0) == doctest::Approx(0.8364).epsilon(5e-4));
}

TEST_CASE("recenter contracts towards the center when lambda <= 1") {
    const UnitSample sample = gen_base(BaseSequenceKind::Random, 100, 2, 5);
    for (double lambda : {0.2, 0.55, 0.9}) {
        const UnitSample out = recenter(sample, lambda, Distribution::Normal);
        for (std::size_t i = 0; i < sample.size(); ++i)
            for (std::size_t j = 0; j < sample.dim(); ++j)
                CHECK(std::abs(out(i, j) - 0.5) <= std::abs(sample(i, j) - 0.5) + 1e-15);
    }
}

TEST_CASE("recenter is monotone in each coordinate") {
    for (Distribution dist : {Distribution::Normal, Distribution::Cauchy}) {
        for (double lambda : {0.3, 1.0, 1.7}) {
            double prev = -1.0;
            for (double u = 0.01; u < 1.0; u += 0.01) {
                const double v = recenter(single(u), lambda, dist)(0, 0);
                CHECK(v >= prev);  // clamping flattens the far tails
                prev = v;
            }
            // strictly increasing away from the clamp horizon
            prev = -1.0;
            for (double u = 0.2; u <= 0.8; u += 0.01) {
                const double v = recenter(single(u), lambda, dist)(0, 0);
                CHECK(v > prev);
                prev = v;
            }
        }
    }
}

TEST_CASE("meta lambda follows (1 + log n) / (4 log d)") {
    CHECK(meta_lambda(100, 25) ==
          doctest::Approx((1.0 + std::log(100.0)) / (4.0 * std::log(25.0))).epsilon(1e-15));
    CHECK(meta_lambda(100, 25) == doctest::Approx(0.43534).epsilon(1e-4));
    const double e = std::exp(1.0);
    CHECK(meta_lambda(e * e * e, e) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(meta_lambda(1.0, e * e) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK_THROWS_AS(meta_lambda(100, 1.9), std::invalid_argument);
    CHECK_THROWS_AS(meta_lambda(0.5, 10), std::invalid_argument);
}

TEST_CASE("convert_unbounded applies lambda times the quantile") {
    CHECK(convert_unbounded(single(0.5), 1.0, Distribution::Normal)(0, 0) == 0.0);
    CHECK(convert_unbounded(single(0.75), 2.0, Distribution::Cauchy)(0, 0) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(convert_unbounded(single(0.975), 1.0, Distribution::Normal)(0, 0) ==
          doctest::Approx(1.9599639845400545).epsilon(1e-12));
}

TEST_CASE("convert_unbounded agrees with recenter pulled back through the normal CDF") {
    const UnitSample sample = gen_base(BaseSequenceKind::LHS, 40, 2, 9);
    for (Distribution dist : {Distribution::Normal, Distribution::Cauchy}) {
        const double lambda = 0.55;
        const UnitSample cube = recenter(sample, lambda, dist);
        const RealSample real = convert_unbounded(sample, lambda, dist);
        for (std::size_t i = 0; i < sample.size(); ++i)
            for (std::size_t j = 0; j < sample.dim(); ++j) {
                if (std::abs(real(i, j)) > 6.0) continue;  // beyond the unit clamp horizon
                CHECK(normal_inv_cdf(cube(i, j)) ==
                      doctest::Approx(real(i, j)).epsilon(1e-8));
            }
    }
}

TEST_CASE("middle point replaces the first point and is idempotent") {
    UnitSample sample = gen_base(BaseSequenceKind::Random, 5, 3, 21);
    const UnitSample once = add_middle_point(sample);
    CHECK(once.size() == 5);
    for (std::size_t j = 0; j < 3; ++j) CHECK(once(0, j) == 0.5);
    for (std::size_t i = 1; i < 5; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(once(i, j) == sample(i, j));
    const UnitSample twice = add_middle_point(once);
    CHECK(twice.data() == once.data());

    UnitSample one_point(1, 2);
    one_point(0, 0) = 0.1;
    one_point(0, 1) = 0.9;
    const UnitSample centered = add_middle_point(one_point);
    CHECK(centered(0, 0) == 0.5);
    CHECK(centered(0, 1) == 0.5);

    // the center maps to the origin under any unbounded conversion
    for (Distribution dist : {Distribution::Normal, Distribution::Cauchy})
        CHECK(convert_unbounded(centered, 2.5, dist)(0, 0) == 0.0);
}

TEST_CASE("opposite reflects through the center") {
    UnitSample sample(2, 2);
    sample(0, 0) = 0.2;
    sample(0, 1) = 0.7;
    sample(1, 0) = 0.9;  // dropped: only the first ceil(n/2) points survive
    sample(1, 1) = 0.1;
    const UnitSample out = oppose(sample, Opposition::Opposite, 1);
    CHECK(out(0, 0) == 0.2);
    CHECK(out(0, 1) == 0.7);
    CHECK(out(1, 0) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(out(1, 1) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("opposite keeps the mean at the center for even n") {
    const UnitSample sample = gen_base(BaseSequenceKind::Random, 64, 3, 8);
    const UnitSample out = oppose(sample, Opposition::Opposite, 2);
    for (std::size_t j = 0; j < 3; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < out.size(); ++i) mean += out(i, j);
        mean /= static_cast<double>(out.size());
        CHECK(mean == doctest::Approx(0.5).epsilon(1e-13));
    }
}

TEST_CASE("odd-n opposition centers the unpaired slot") {
    const UnitSample sample = gen_base(BaseSequenceKind::Random, 7, 2, 4);
    const UnitSample out = oppose(sample, Opposition::Opposite, 3);
    CHECK(out(3, 0) == 0.5);
    CHECK(out(3, 1) == 0.5);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(out(i, j) == sample(i, j));
            CHECK(out(4 + i, j) == doctest::Approx(1.0 - sample(i, j)).epsilon(1e-15));
        }
}

TEST_CASE("quasi-opposite contracts towards the center with one ratio per point") {
    const UnitSample sample = gen_base(BaseSequenceKind::Random, 10, 3, 14);
    const UnitSample out = oppose(sample, Opposition::QuasiOpposite, 6);
    for (std::size_t i = 0; i < 5; ++i) {
        const std::size_t dst = 5 + i;
        double ratio = -2.0;
        for (std::size_t j = 0; j < 3; ++j) {
            const double base_offset = 0.5 - sample(i, j);
            const double opp_offset = out(dst, j) - 0.5;
            if (std::abs(base_offset) < 1e-12) continue;
            const double r = opp_offset / base_offset;
            CHECK(r >= -1e-12);
            CHECK(r <= 1.0 + 1e-12);
            if (ratio == -2.0) ratio = r;
            else CHECK(r == doctest::Approx(ratio).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(oppose(UnitSample(1, 1), Opposition::Opposite, 0), std::invalid_argument);
}

TEST_CASE("rescale stretches every column onto the clamped boundaries") {
    UnitSample sample(2, 1);
    sample(0, 0) = 0.25;
    sample(1, 0) = 0.75;
    const UnitSample out = rescale_to_bounds(sample);
    CHECK(out(0, 0) == kUnitClamp);
    CHECK(out(1, 0) == 1.0 - kUnitClamp);
}

TEST_CASE("rescale preserves ranks and fixes spanning columns") {
    const UnitSample sample = gen_base(BaseSequenceKind::Random, 30, 2, 18);
    const UnitSample out = rescale_to_bounds(sample);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t a = 0; a < 30; ++a)
            for (std::size_t b = 0; b < 30; ++b)
                if (sample(a, j) < sample(b, j)) CHECK(out(a, j) < out(b, j));

    UnitSample spanning(3, 1);
    spanning(0, 0) = 0.0;
    spanning(1, 0) = 0.5;
    spanning(2, 0) = 1.0 - kUnitClamp;
    const UnitSample fixed = rescale_to_bounds(spanning);
    CHECK(fixed(1, 0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("rescale rejects degenerate columns") {
    UnitSample flat(2, 1);
    flat(0, 0) = flat(1, 0) = 0.4;
    CHECK_THROWS_AS(rescale_to_bounds(flat), std::invalid_argument);
    CHECK_THROWS_AS(rescale_to_bounds(UnitSample(1, 1)), std::invalid_argument);
}

TEST_CASE("reshape spec invariants") {
    ReshapeSpec spec;
    spec.lambda = 0.0;
    spec.target = TargetSpace::Unbounded;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.target = TargetSpace::UnitCube;
    CHECK_NOTHROW(spec.validate());
    spec.lambda = 1.0;
    spec.rescale = true;
    spec.target = TargetSpace::Unbounded;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}
