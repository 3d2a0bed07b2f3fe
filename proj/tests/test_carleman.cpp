#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cohomo/carleman.hpp"
#include "cohomo/cutoff.hpp"
#include "cohomo/errors.hpp"

namespace cohomo::carleman {
namespace {

TEST(Sequence, Generators)
{
    const CarlemanSequence f = CarlemanSequence::generator("factorial", 10);
    EXPECT_EQ(f.last_index(), 10);
    EXPECT_NEAR(f.term(5), 120.0, 1e-9);
    const CarlemanSequence g = CarlemanSequence::generator("factorial^2", 10);
    EXPECT_NEAR(g.term(4), 576.0, 1e-9);
    EXPECT_NEAR(CarlemanSequence::generator("factorial^2", 200).log_term(200), 2.0 * std::lgamma(201.0), 1e-9);
    EXPECT_THROW(g.log_term(11), InvalidArgument);
    EXPECT_THROW(CarlemanSequence::generator("factorial^0.5", 10), InvalidArgument);
    EXPECT_THROW(CarlemanSequence::generator("gevrey", 10), InvalidArgument);
    EXPECT_THROW(CarlemanSequence::from_terms({1.0, -1.0, 2.0}), InvalidArgument);
}

TEST(Check, Factorial)
{
    const SequenceReport r = check_sequence(CarlemanSequence::generator("factorial", 40));
    EXPECT_TRUE(r.passed());
    EXPECT_NEAR(r.seq1.witness, 1.0, 1e-12);
    EXPECT_NEAR(r.seq3.witness, 1.0, 1e-12);
}

TEST(Check, FactorialSquared)
{
    const CarlemanSequence m = CarlemanSequence::generator("factorial^2", 60);
    const SequenceReport r = check_sequence(m);
    EXPECT_TRUE(r.seq1.pass);
    EXPECT_TRUE(r.seq2.pass);
    EXPECT_TRUE(r.seq3.pass);
    EXPECT_TRUE(r.seq4.pass);
    EXPECT_TRUE(r.seq5.pass);
    EXPECT_EQ(r.seq1.witness, 1.0);
    EXPECT_TRUE(r.seq1.surrogate);
    EXPECT_FALSE(r.seq2.surrogate);

    // Exhaustive check of the seq1 witness and of log-convexity.
    const std::vector<double> a = normalized_roots(m);
    for (int p = 1; p <= 60; ++p) {
        for (int q = p; q <= 60; ++q) {
            EXPECT_LE(a[static_cast<std::size_t>(p)], r.seq1.witness * a[static_cast<std::size_t>(q)] * (1.0 + 1e-12));
        }
    }
    for (int n = 0; n <= 58; ++n) {
        const double lhs = 2.0 * (m.log_term(n + 1) - std::lgamma(n + 2.0));
        const double rhs = (m.log_term(n) - std::lgamma(n + 1.0)) + (m.log_term(n + 2) - std::lgamma(n + 3.0));
        EXPECT_LE(lhs, rhs + 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST(Check, NormalisationFailure)
{
    std::vector<double> terms;
    for (int n = 0; n <= 20; ++n) {
        terms.push_back(1.0 / (n + 1.0));
    }
    const SequenceReport r = check_sequence(CarlemanSequence::from_terms(terms));
    EXPECT_FALSE(r.seq2.pass);
    EXPECT_FALSE(r.passed());
}

TEST(Check, TooShort)
{
    EXPECT_THROW(check_sequence(CarlemanSequence::from_terms({1.0, 1.0, 2.0})), InvalidArgument);
}

TEST(Diagnostic, FactorialSquaredConverges)
{
    const Diagnostic d = nonquasianalytic_diagnostic(CarlemanSequence::generator("factorial^2", 1001), 1000);
    ASSERT_EQ(d.partial_sums.size(), 1000u);
    EXPECT_NEAR(d.partial_sums.back(), std::numbers::pi * std::numbers::pi / 6.0 - 1.0, 1e-3);
    EXPECT_EQ(d.verdict, Trend::converging);
    for (std::size_t i = 1; i < d.partial_sums.size(); ++i) {
        EXPECT_GE(d.partial_sums[i], d.partial_sums[i - 1]);
    }
}

TEST(Diagnostic, FactorialDiverges)
{
    const Diagnostic d = nonquasianalytic_diagnostic(CarlemanSequence::generator("factorial", 1001), 1000);
    EXPECT_EQ(d.verdict, Trend::diverging);
    // Harmonic partial sums: sum_{n=1}^{1000} 1/(n+1).
    double h = 0.0;
    for (int n = 1; n <= 1000; ++n) {
        h += 1.0 / (n + 1.0);
    }
    EXPECT_NEAR(d.partial_sums.back(), h, 1e-9);
}

TEST(Diagnostic, GeometricFactorialDiverges)
{
    std::vector<double> terms;
    double t = 1.0;
    for (int n = 0; n <= 149; ++n) {
        terms.push_back(t);
        t *= 2.0 * (n + 1.0);
    }
    const Diagnostic d = nonquasianalytic_diagnostic(CarlemanSequence::from_terms(terms), 148);
    EXPECT_EQ(d.verdict, Trend::diverging);
}

TEST(Diagnostic, Preconditions)
{
    EXPECT_THROW(nonquasianalytic_diagnostic(CarlemanSequence::generator("factorial", 20), 5), InvalidArgument);
    EXPECT_THROW(nonquasianalytic_diagnostic(CarlemanSequence::generator("factorial", 20), 20), InvalidArgument);
}

TEST(Probe, Exponential)
{
    const MembershipProbe p =
        probe_membership(RealFunction::parse("exp(s)"), 0.0, 1.0, CarlemanSequence::generator("factorial", 8), 8);
    ASSERT_EQ(p.norms.size(), 9u);
    for (double v : p.norms) {
        EXPECT_NEAR(v, std::numbers::e, 1e-9);
    }
    EXPECT_TRUE(p.pass);
    EXPECT_NEAR(p.constant, std::numbers::e, 1e-6);
    EXPECT_NEAR(p.rho, 1.0, 1e-6);
}

TEST(Probe, Zero)
{
    const MembershipProbe p =
        probe_membership(RealFunction::constant(0.0), 0.0, 1.0, CarlemanSequence::generator("factorial", 8), 8);
    EXPECT_TRUE(p.degenerate);
    EXPECT_TRUE(p.pass);
    EXPECT_EQ(p.constant, 0.0);
    EXPECT_EQ(p.rho, 1.0);
}

TEST(Probe, ScalingInvariance)
{
    const CarlemanSequence m = CarlemanSequence::generator("factorial^2", 10);
    const MembershipProbe p = probe_membership(RealFunction::parse("sin(2*s)+s^2"), -1.0, 2.0, m, 8);
    const MembershipProbe q = probe_membership(RealFunction::parse("3*(sin(2*s)+s^2)"), -1.0, 2.0, m, 8);
    EXPECT_EQ(p.pass, q.pass);
    EXPECT_NEAR(q.rho, p.rho, 1e-9 * p.rho);
    EXPECT_NEAR(q.constant, 3.0 * p.constant, 1e-9 * q.constant);
}

TEST(Probe, FitCoversEveryOrder)
{
    const CarlemanSequence m = CarlemanSequence::generator("factorial^2", 10);
    const MembershipProbe p = probe_membership(cutoff::kappa_function(cutoff::CutoffSpec{0.0, 1.0}), 0.0, 1.0, m, 8);
    EXPECT_TRUE(p.pass);
    for (int n = 0; n <= 8; ++n) {
        EXPECT_LE(p.norms[static_cast<std::size_t>(n)], p.constant * std::pow(p.rho, n) * m.term(n) * (1.0 + 1e-9));
    }
}

TEST(Probe, PointOnlyIsUnsupported)
{
    const RealFunction g("g", [](double s) { return s; });
    EXPECT_THROW(probe_membership(g, 0.0, 1.0, CarlemanSequence::generator("factorial", 8), 8), UnsupportedCapability);
}

} // namespace
} // namespace cohomo::carleman
