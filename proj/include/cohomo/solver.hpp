#pragma once

#include <vector>

#include "cohomo/cutoff.hpp"
#include "cohomo/grid.hpp"
#include "cohomo/orbit.hpp"
#include "cohomo/real_function.hpp"

namespace cohomo::solver {

inline constexpr double kDefaultResidualTolerance = 1e-8;
inline constexpr double kDefaultBoundSlack = 1e-10;

/// Orbit points psi^<n>(s) for n in [-down, up - 1], where down = N^-_a(s)
/// and up = N^+_b(s). `forward` holds n = 0..up-1, `backward` holds n = -1..-down.
struct OrbitWindow {
    long long down = 0;
    long long up = 0;
    std::vector<double> forward;
    std::vector<double> backward;

    long long first_index() const noexcept { return -down; }
    long long last_index() const noexcept { return up - 1; }
};

OrbitWindow orbit_window(const orbit::MonotoneShiftMap& map, const cutoff::CutoffSpec& window, double s);

/// Solution g = g_plus + g_minus of g - g∘psi = chi as finite orbit sums:
///
///   g_plus(s)  =  sum_{n=0}^{N^+_b(s)-1} chi_plus(psi^<n>(s))
///   g_minus(s) = -sum_{m=1}^{N^-_a(s)}   chi_minus(psi^<-m>(s))
///
/// Evaluated on demand; point evaluation only.
class CESolution {
public:
    CESolution(orbit::MonotoneShiftMap map, RealFunction chi, cutoff::CutoffSpec window);

    double g(double s) const;
    double g_plus(double s) const;
    double g_minus(double s) const;

    RealFunction g_function() const;
    RealFunction g_plus_function() const;
    RealFunction g_minus_function() const;

    const orbit::MonotoneShiftMap& map() const noexcept { return map_; }
    const RealFunction& chi() const noexcept { return chi_; }
    const RealFunction& chi_plus() const noexcept { return split_.plus; }
    const RealFunction& chi_minus() const noexcept { return split_.minus; }
    const cutoff::CutoffSpec& window() const noexcept { return window_; }

    struct Parts {
        double plus;
        double minus;
    };
    /// Both halves from a single orbit computation.
    Parts parts(double s) const;

private:
    orbit::MonotoneShiftMap map_;
    RealFunction chi_;
    cutoff::CutoffSpec window_;
    cutoff::SplitChi split_;
};

/// Requires a validated map (throws AssumptionViolation otherwise).
CESolution solve_ce(orbit::MonotoneShiftMap map, RealFunction chi, cutoff::CutoffSpec window);

/// g(s) - g(psi(s)) - chi(s).
double residual(const CESolution& sol, double s);

/// sum over n in [-N^-_a(s), N^+_b(s) - 1] of |chi(psi^<n>(s))|.
double solution_bound(const CESolution& sol, double s);

struct CertificateRow {
    double s = 0.0;
    double g = 0.0;
    double g_plus = 0.0;
    double g_minus = 0.0;
    double residual = 0.0;
    double bound = 0.0;
    long long window_lo = 0; ///< -N^-_a(s)
    long long window_hi = 0; ///< N^+_b(s) - 1
    bool residual_ok = false;
    bool bound_ok = false;

    bool passed() const noexcept { return residual_ok && bound_ok; }
};

struct SolutionCertificate {
    Grid grid;
    double residual_tolerance = kDefaultResidualTolerance;
    double bound_slack = kDefaultBoundSlack;
    std::vector<CertificateRow> rows;
    std::vector<int> failed; ///< grid indices of failed rows

    bool passed() const noexcept { return failed.empty(); }
    double max_abs_residual() const;
};

SolutionCertificate certify(const CESolution& sol, const Grid& grid,
                            double residual_tolerance = kDefaultResidualTolerance,
                            double bound_slack = kDefaultBoundSlack);

} // namespace cohomo::solver
