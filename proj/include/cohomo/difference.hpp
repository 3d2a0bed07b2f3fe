#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cohomo/real_function.hpp"

/// Specialization to the unit shift psi0(s) = s + 1, where hitting times have
/// closed forms and the stability bound admits Euler–Maclaurin refinements.
namespace cohomo::difference {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxBernoulliOrder = 30;
inline constexpr int kMaxEulerMaclaurinOrder = 10;
inline constexpr int kDefaultSupSamples = 4097;

/// ceil((t - s)^+)
long long hitting_up_closed(double s, double t);
/// ceil((s - t)^+)
long long hitting_down_closed(double s, double t);

/// I_s = [s - ceil((s-a)^+), s + ceil((b-s)^+) - 1] and its point count W.
struct WindowInterval {
    double s = 0.0;
    double a = 0.0;
    double b = 0.0;
    long long down = 0; ///< ceil((s-a)^+)
    long long up = 0;   ///< ceil((b-s)^+)
    double lo = 0.0;
    double hi = 0.0;

    long long width() const noexcept { return up + down; }
    bool degenerate() const noexcept { return width() == 0; }
    /// Summation point s + n; n ranges over [-down, up - 1].
    double point(long long n) const noexcept { return s + static_cast<double>(n); }
};

WindowInterval window_interval(double s, double a, double b);

/// B_r in the convention 1/6, 1/30, 1/42, ... (absolute value of the classical B_{2r}).
/// Valid for 1 <= r <= 30; the table is built once.
const Rational& bernoulli(int r);
double bernoulli_double(int r);

/// B_1..B_r; entry i holds B_{i+1}.
using BernoulliTable = std::vector<Rational>;
BernoulliTable bernoulli_table(int r);

/// sum_{n=-down}^{up-1} delta(s + n); 0 for an empty window. Throws InvalidTolerance on negative delta.
double window_sum_bound(const RealFunction& delta, double s, double a, double b);

/// W * delta(s) for a 1-periodic delta. Spot-checks delta(s +- 1) against delta(s)
/// (relative 1e-12) and throws AssumptionViolation on mismatch.
double periodic_bound(const RealFunction& delta, double s, double a, double b);

/// Estimate of sup |f| on [lo, hi]: dense grid, then golden-section refinement
/// around the grid argmax. Approaches the true supremum from below.
double sup_norm(const RealFunction& f, double lo, double hi, int samples = kDefaultSupSamples);

/// sup |f^(n)| on [lo, hi] for n = 0..max_order, from jets on one shared grid.
std::vector<double> derivative_sup_norms(const RealFunction& f, double lo, double hi, int max_order,
                                         int samples = kDefaultSupSamples);

/// W ||delta|| + (W - 1)/2 ||delta'||, norms over I_s.
double em_bound_c1(const RealFunction& delta, double s, double a, double b);

/// W ||delta|| + sum_{j=1}^r B_j/(2j)! W ||delta^(2j)|| + (r + 1/2) B_r/(2r+1)! (W - 1) ||delta^(2r+1)||.
double em_bound_high(const RealFunction& delta, double s, double a, double b, int r);

/// Coefficient B_j / (2j)!.
double em_even_coefficient(int j);
/// Coefficient (r + 1/2) B_r / (2r + 1)!.
double em_remainder_coefficient(int r);

/// False when em_bound_high(r) needs jets beyond the conditioned order (2r + 1 > 12).
bool em_order_well_conditioned(int r);

struct EulerMaclaurinCheck {
    double sum = 0.0;          ///< direct window sum
    double identity_rhs = 0.0; ///< integral + endpoint average + sawtooth correction
    double integral = 0.0;
    double endpoint_average = 0.0;
    double correction = 0.0;
};

/// Both sides of sum delta(s+n) = ∫ delta + (delta(lo) + delta(hi))/2 + ∫ ({u-s} - 1/2) delta'(u) du.
/// Integrals are taken panel by panel over [lo + k, lo + k + 1] so the sawtooth is continuous on each.
EulerMaclaurinCheck em_identity_check(const RealFunction& delta, double s, double a, double b,
                                      double panel_tolerance = 1e-9);

} // namespace cohomo::difference
