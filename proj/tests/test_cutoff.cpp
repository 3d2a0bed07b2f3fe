#include <gtest/gtest.h>

#include <cmath>

#include "cohomo/cutoff.hpp"
#include "cohomo/errors.hpp"
#include "oracles.hpp"

namespace cohomo::cutoff {
namespace {

TEST(Kappa, Endpoints)
{
    const CutoffSpec spec{0.0, 1.0};
    EXPECT_EQ(kappa(spec, 0.0), 0.0);
    EXPECT_EQ(kappa(spec, 1.0), 1.0);
    EXPECT_EQ(kappa(spec, -3.0), 0.0);
    EXPECT_EQ(kappa(spec, 7.0), 1.0);
    EXPECT_DOUBLE_EQ(kappa(spec, 0.5), 0.5);
    const CutoffSpec shifted{-2.5, 4.0};
    EXPECT_EQ(kappa(shifted, -2.5), 0.0);
    EXPECT_EQ(kappa(shifted, 4.0), 1.0);
    EXPECT_DOUBLE_EQ(kappa(shifted, 0.75), 0.5);
}

TEST(Kappa, Symmetry)
{
    const CutoffSpec spec{0.0, 1.0};
    for (int i = 1; i < 100; ++i) {
        const double x = i / 100.0;
        EXPECT_NEAR(kappa(spec, x) + kappa(spec, 1.0 - x), 1.0, 1e-15);
    }
}

TEST(Kappa, MonotoneOnFineGrid)
{
    const CutoffSpec spec{0.0, 1.0};
    double previous = kappa(spec, -0.5);
    for (int i = 1; i <= 10000; ++i) {
        const double v = kappa(spec, -0.5 + 2.0 * i / 10000.0);
        EXPECT_GE(v, previous);
        previous = v;
    }
}

TEST(Kappa, InvalidWindow)
{
    EXPECT_THROW(kappa(CutoffSpec{1.0, 1.0}, 0.0), InvalidArgument);
    EXPECT_THROW(kappa(CutoffSpec{2.0, 1.0}, 0.0), InvalidArgument);
}

TEST(KappaJet, ConstantOutsideWindow)
{
    const CutoffSpec spec{0.0, 1.0};
    const Jet left = kappa_jet(spec, -1.0, 5);
    for (int n = 0; n <= 5; ++n) {
        EXPECT_EQ(left[static_cast<std::size_t>(n)], 0.0);
    }
    const Jet right = kappa_jet(spec, 2.0, 5);
    EXPECT_EQ(right[0], 1.0);
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(right[static_cast<std::size_t>(n)], 0.0);
    }
}

TEST(KappaJet, MidpointSlopePositive)
{
    const CutoffSpec spec{0.0, 1.0};
    EXPECT_GT(kappa_jet(spec, 0.5, 1)[1], 0.0);
}

TEST(KappaJet, FlatNearLeftEndpoint)
{
    for (const CutoffSpec spec : {CutoffSpec{0.0, 1.0}, CutoffSpec{-1.0, 3.0}}) {
        const double s0 = spec.a + 1e-3 * (spec.b - spec.a);
        const Jet j = kappa_jet(spec, s0, 6);
        for (int n = 1; n <= 6; ++n) {
            EXPECT_LE(std::abs(j.derivative(n)), 1e-9) << n;
        }
    }
}

TEST(KappaJet, MatchesFiniteDifferences)
{
    const CutoffSpec spec{0.0, 1.0};
    const auto k = [&spec](double s) { return kappa(spec, s); };
    for (double s0 : {0.2, 0.35, 0.5, 0.65, 0.8}) {
        const Jet j = kappa_jet(spec, s0, 4);
        EXPECT_EQ(j.value(), kappa(spec, s0));
        for (int n = 1; n <= 4; ++n) {
            const double fd = oracle::derivative(k, s0, n, 0.05);
            EXPECT_LE(std::abs(j.derivative(n) - fd), 1e-6 * std::max(1.0, std::abs(fd))) << s0 << " " << n;
        }
    }
}

TEST(KappaJet, Conditioning)
{
    const CutoffSpec spec{0.0, 1.0};
    EXPECT_TRUE(kappa_jet_well_conditioned(spec, 0.5, kMaxConditionedOrder));
    EXPECT_TRUE(kappa_jet_well_conditioned(spec, 0.5, kMaxConditionedOrder + 1));
    EXPECT_FALSE(kappa_jet_well_conditioned(spec, 0.05, kMaxConditionedOrder + 1));
    EXPECT_FALSE(kappa_jet_well_conditioned(spec, 0.97, kMaxConditionedOrder + 1));
    EXPECT_TRUE(kappa_jet_well_conditioned(spec, -1.0, 40));
}

TEST(SplitChi, Support)
{
    const CutoffSpec spec{0.0, 1.0};
    const SplitChi split = split_chi(RealFunction::constant(1.0), spec);
    EXPECT_EQ(split.plus(2.0), 0.0);
    EXPECT_EQ(split.minus(-1.0), 0.0);
    EXPECT_EQ(split.plus(-1.0), 1.0);
    EXPECT_EQ(split.minus(2.0), 1.0);
}

TEST(SplitChi, PartitionIsExact)
{
    const CutoffSpec spec{0.0, 1.0};
    auto gen = oracle::rng(3);
    std::uniform_real_distribution<double> dist(-2.0, 3.0);
    for (const char* src : {"1", "exp(-s^2)", "cos(s)", "s^3-7*s", "1/3+sin(1e3*s)"}) {
        const RealFunction chi = RealFunction::parse(src);
        const SplitChi split = split_chi(chi, spec);
        for (int i = 0; i < 1000; ++i) {
            const double s = dist(gen);
            EXPECT_EQ(split.plus(s) + split.minus(s), chi(s)) << src << " at " << s;
            if (s >= spec.b) {
                EXPECT_EQ(split.plus(s), 0.0);
            }
            if (s <= spec.a) {
                EXPECT_EQ(split.minus(s), 0.0);
            }
        }
    }
}

TEST(SplitChi, KeepsJets)
{
    const SplitChi split = split_chi(RealFunction::parse("cos(s)"), CutoffSpec{0.0, 1.0});
    ASSERT_TRUE(split.plus.has_jet());
    ASSERT_TRUE(split.minus.has_jet());
    const Jet p = split.plus.jet(0.4, 3);
    const Jet m = split.minus.jet(0.4, 3);
    const Jet c = RealFunction::parse("cos(s)").jet(0.4, 3);
    for (std::size_t n = 0; n <= 3; ++n) {
        EXPECT_NEAR(p[n] + m[n], c[n], 1e-14);
    }
}

} // namespace
} // namespace cohomo::cutoff
