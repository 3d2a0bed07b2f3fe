#include <gtest/gtest.h>

#include <cmath>

#include "cohomo/errors.hpp"
#include "cohomo/orbit.hpp"
#include "oracles.hpp"

namespace cohomo::orbit {
namespace {

const char* kShift = "s+1";
const char* kWobble = "s + 1 + 0.1*sin(s)";

MonotoneShiftMap make(const char* src, MapOptions options = {})
{
    return MonotoneShiftMap(RealFunction::parse(src), options);
}

TEST(ValidateMap, Shift)
{
    const MapValidationReport r = validate_map(RealFunction::parse(kShift), Grid{-50.0, 50.0, 1001});
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.min_gap, 1.0);
    EXPECT_EQ(r.min_slope, 1.0);
}

TEST(ValidateMap, Wobble)
{
    const MapValidationReport r = validate_map(RealFunction::parse(kWobble), Grid{-50.0, 50.0, 1001});
    EXPECT_TRUE(r.passed());
    // Minima of 1 + 0.1 sin and 1 + 0.1 cos over a 0.1-spaced grid are near 0.9.
    EXPECT_NEAR(r.min_gap, 0.9, 1e-3);
    EXPECT_NEAR(r.min_slope, 0.9, 1e-3);
    const MapValidationReport fine = validate_map(RealFunction::parse(kWobble), Grid{-50.0, 50.0, 2000001});
    EXPECT_NEAR(fine.min_gap, 0.9, 1e-9);
    EXPECT_NEAR(fine.min_slope, 0.9, 1e-9);
}

TEST(ValidateMap, AffineWithSlopeTwoFailsGap)
{
    const MapValidationReport r = validate_map(RealFunction::parse("2*s+1"), Grid{-50.0, 50.0, 1001});
    EXPECT_FALSE(r.psi1);
    EXPECT_TRUE(r.psi3);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.min_gap, -49.0);
    EXPECT_THROW(make("2*s+1").require_valid(), AssumptionViolation);
}

TEST(ValidateMap, BoundedBelowFailsDivergence)
{
    const MapValidationReport r = validate_map(RealFunction::parse("s + 1 + exp(-s)"), Grid{-5.0, 5.0, 101});
    EXPECT_TRUE(r.psi1);
    EXPECT_FALSE(r.psi2);
    const MapValidationReport flat = validate_map(RealFunction::parse("exp(s)"), Grid{-5.0, 5.0, 101});
    EXPECT_FALSE(flat.psi2);
}

TEST(Iterate, Examples)
{
    const MonotoneShiftMap shift = make(kShift);
    EXPECT_EQ(iterate(shift, 0.0, 5), 5.0);
    EXPECT_EQ(iterate(shift, 2.75, 0), 2.75);
    const MonotoneShiftMap wobble = make(kWobble);
    const double v = iterate(wobble, 0.0, -3);
    EXPECT_NEAR(iterate(wobble, v, 3), 0.0, 1e-10);
}

TEST(Iterate, RoundTrip)
{
    const MonotoneShiftMap m = make(kWobble);
    auto gen = oracle::rng();
    std::uniform_real_distribution<double> dist(-30.0, 30.0);
    for (int i = 0; i < 200; ++i) {
        const double s = dist(gen);
        EXPECT_NEAR(iterate(m, iterate(m, s, -1), 1), s, m.inverse_tolerance() * (1.0 + std::abs(s)));
    }
}

TEST(Inverse, Examples)
{
    EXPECT_EQ(inverse(make(kShift), 7.0), 6.0);

    const MonotoneShiftMap fast = make("s+exp(s)", MapOptions{.validation_grid = Grid{-20.0, 5.0, 501}});
    EXPECT_NEAR(inverse(fast, 1.0), oracle::bisect([](double x) { return x + std::exp(x) - 1.0; }, -1.0, 1.0),
                1e-10);
    EXPECT_NEAR(inverse(fast, 1.0), 0.0, 1e-10);
    const double root = oracle::bisect([](double x) { return x + std::exp(x) - 2.5; }, 0.0, 1.0);
    EXPECT_NEAR(inverse(fast, 2.5), root, 1e-10);

    const auto wobble = [](double x) { return x + 1.0 + 0.1 * std::sin(x); };
    EXPECT_NEAR(inverse(make(kWobble), 0.0), oracle::bisect(wobble, -2.0, 0.0), 1e-10);
}

TEST(Inverse, NoPreimageBracketFails)
{
    // psi is bounded below by 0, so negative targets have no preimage.
    const MonotoneShiftMap m(RealFunction::parse("s + 1 + exp(-s)"), MapOptions{.validation_grid = Grid{0, 1, 3}});
    EXPECT_THROW(inverse(m, -1.0), NumericalError);
}

TEST(HittingTime, Examples)
{
    const MonotoneShiftMap shift = make(kShift);
    EXPECT_EQ(hitting_time_up(shift, 0.0, 1.0), 1);
    EXPECT_EQ(hitting_time_down(shift, 3.0, 0.0), 3);
    EXPECT_EQ(hitting_time_up(shift, 5.0, 1.0), 0);
    EXPECT_EQ(hitting_time_up(shift, 1.0, 1.0), 0);
    EXPECT_EQ(hitting_time_down(shift, -1.0, 0.0), 0);

    const MonotoneShiftMap wobble = make(kWobble);
    const auto psi = [](double x) { return x + 1.0 + 0.1 * std::sin(x); };
    EXPECT_EQ(hitting_time_up(wobble, 0.0, 5.0), oracle::count_up(psi, 0.0, 5.0));
    EXPECT_EQ(hitting_time_down(wobble, 4.0, -2.0), oracle::count_down(psi, 4.0, -2.0));
}

TEST(HittingTime, AgreesWithIterationOracle)
{
    const MonotoneShiftMap wobble = make(kWobble);
    const auto psi = [](double x) { return x + 1.0 + 0.1 * std::sin(x); };
    auto gen = oracle::rng(7);
    std::uniform_real_distribution<double> dist(-20.0, 20.0);
    for (int i = 0; i < 300; ++i) {
        const double s = dist(gen);
        const double t = dist(gen);
        EXPECT_EQ(hitting_time_up(wobble, s, t), oracle::count_up(psi, s, t)) << s << " " << t;
        EXPECT_EQ(hitting_time_down(wobble, s, t), oracle::count_down(psi, s, t)) << s << " " << t;
    }
}

TEST(HittingTime, Monotone)
{
    const MonotoneShiftMap m = make(kWobble);
    auto gen = oracle::rng(11);
    std::uniform_real_distribution<double> dist(-20.0, 20.0);
    for (int i = 0; i < 300; ++i) {
        const double s = dist(gen);
        double t1 = dist(gen);
        double t2 = dist(gen);
        if (t1 > t2) {
            std::swap(t1, t2);
        }
        EXPECT_LE(hitting_time_up(m, s, t1), hitting_time_up(m, s, t2));
        EXPECT_GE(hitting_time_down(m, s, t1), hitting_time_down(m, s, t2));
    }
}

TEST(HittingTime, WindowInequality)
{
    for (const char* src : {kShift, kWobble}) {
        const MonotoneShiftMap m = make(src);
        auto gen = oracle::rng(13);
        std::uniform_real_distribution<double> dist(-20.0, 20.0);
        for (int i = 0; i < 1000; ++i) {
            const double s = dist(gen);
            double t1 = dist(gen);
            double t2 = dist(gen);
            if (t1 == t2) {
                continue;
            }
            if (t1 > t2) {
                std::swap(t1, t2);
            }
            EXPECT_LE(-hitting_time_down(m, s, t1), hitting_time_up(m, s, t2) - 1) << src;
        }
    }
}

TEST(HittingTime, IterationCapRaisesNumericalError)
{
    const MonotoneShiftMap m = make(kShift, MapOptions{.max_iterations = 10});
    EXPECT_EQ(hitting_time_up(m, 0.0, 10.0), 10);
    EXPECT_THROW(hitting_time_up(m, 0.0, 10.5), NumericalError);
    EXPECT_THROW(hitting_time_down(m, 0.0, -11.0), NumericalError);
}

} // namespace
} // namespace cohomo::orbit
