#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cohomo/errors.hpp"
#include "cohomo/stability.hpp"
#include "oracles.hpp"

namespace cohomo::stability {
namespace {

const cutoff::CutoffSpec kWindow{0.0, 1.0};
const Grid kGrid{-10.0, 10.0, 401};

orbit::MonotoneShiftMap shift()
{
    return orbit::MonotoneShiftMap(RealFunction::parse("s+1"));
}

RealFunction solution(const orbit::MonotoneShiftMap& m, const RealFunction& chi)
{
    return solver::solve_ce(m, chi, kWindow).g_function();
}

TEST(Stabilize, ExactSolutionIsFixed)
{
    const auto m = shift();
    const RealFunction chi = RealFunction::constant(1.0);
    const RealFunction y = solution(m, chi);
    const Stabilized st = stabilize(m, chi, y, kWindow);
    for (double s : kGrid.points()) {
        EXPECT_NEAR(st.phi(s), 0.0, 1e-14);
        EXPECT_NEAR(st.h(s), 0.0, 1e-13);
        EXPECT_NEAR(st.z(s), y(s), 1e-13);
    }
    const StabilityCertificate cert = verify_ggs(m, chi, y, RealFunction::constant(0.0), kWindow, kGrid);
    EXPECT_TRUE(cert.passed());
    for (const StabilityRow& r : cert.rows) {
        EXPECT_NEAR(r.phi, 0.0, 1e-14);
        EXPECT_NEAR(r.deviation, 0.0, 1e-13);
        EXPECT_EQ(r.ggs_bound, 0.0);
    }
}

TEST(Stabilize, PeriodicKernelElement)
{
    const auto m = shift();
    const RealFunction chi = RealFunction::constant(1.0);
    const RealFunction p = RealFunction::parse("sin(2*pi*s)");
    const RealFunction y = solution(m, chi) + p;
    const Stabilized st = stabilize(m, chi, y, kWindow);
    for (double s : {-3.3, -0.75, 0.25, 1.7, 6.1}) {
        EXPECT_NEAR(st.phi(s), 0.0, 1e-12);
        EXPECT_NEAR(st.z(s), y(s), 1e-11);
        EXPECT_GT(std::abs(y(s) - solution(m, chi)(s)), 0.1);
    }
}

TEST(Stabilize, LinearPerturbation)
{
    const auto m = shift();
    const RealFunction chi = RealFunction::constant(1.0);
    const RealFunction y = solution(m, chi) + 0.01 * RealFunction::identity();
    const Stabilized st = stabilize(m, chi, y, kWindow);
    for (double s : kGrid.points()) {
        EXPECT_NEAR(st.phi(s), -0.01, 1e-14);
        // h solves h - h(s+1) = -0.01 with the cutoff split; direct summation.
        long double plus = 0.0L;
        for (double x = s; x < kWindow.b; x += 1.0) {
            plus += -0.01L * (1.0L - cutoff::kappa(kWindow, x));
        }
        long double minus = 0.0L;
        for (double x = s - 1.0; x + 1.0 > kWindow.a; x -= 1.0) {
            minus -= -0.01L * cutoff::kappa(kWindow, x);
        }
        EXPECT_NEAR(st.h(s), static_cast<double>(plus + minus), 1e-12) << s;
    }
    const StabilityCertificate cert = verify_ggs(m, chi, y, RealFunction::constant(0.01), kWindow, kGrid);
    EXPECT_TRUE(cert.passed());
    EXPECT_EQ(cert.status(), Status::pass);
    for (const StabilityRow& r : cert.rows) {
        EXPECT_LE(r.deviation, r.ggs_bound + 1e-8);
        EXPECT_LE(std::abs(r.z_residual), 1e-8);
        EXPECT_EQ(r.deviation, std::abs(r.h));
    }
}

TEST(Stabilize, TooSmallToleranceIsAdmissibilityFailure)
{
    const auto m = shift();
    const RealFunction chi = RealFunction::constant(1.0);
    const RealFunction y = solution(m, chi) + 0.01 * RealFunction::identity();
    const StabilityCertificate cert = verify_ggs(m, chi, y, RealFunction::constant(0.001), kWindow, kGrid);
    EXPECT_FALSE(cert.passed());
    EXPECT_EQ(cert.status(), Status::admissibility_failure);
    EXPECT_STREQ(status_name(cert.status()), "admissibility_failure");
}

TEST(GgsBound, ClosedForms)
{
    const auto m = shift();
    EXPECT_EQ(ggs_bound(m, RealFunction::constant(0.0), kWindow, 2.0), 0.0);
    EXPECT_EQ(ggs_bound(m, RealFunction::constant(0.25), kWindow, 2.0), 0.5);
    const RealFunction periodic = RealFunction::parse("2+sin(2*pi*s)");
    for (double s : {-4.3, -0.2, 0.0, 0.5, 1.0, 2.3, 7.9}) {
        const double w = std::ceil(std::max(1.0 - s, 0.0)) + std::ceil(std::max(s, 0.0));
        EXPECT_NEAR(ggs_bound(m, periodic, kWindow, s), w * periodic(s), 1e-12 * w) << s;
    }
}

TEST(GgsBound, NegativeToleranceRejected)
{
    EXPECT_THROW(ggs_bound(shift(), RealFunction::constant(-1.0), kWindow, 2.0), InvalidTolerance);
}

} // namespace
} // namespace cohomo::stability
