#pragma once

#include <array>
#include <string>

#include "cohomo/grid.hpp"
#include "cohomo/real_function.hpp"

namespace cohomo::orbit {

inline constexpr long long kDefaultMaxIterations = 1'000'000;
inline constexpr double kDefaultInverseTolerance = 1e-13;

/// Sampled evidence for psi(s) > s, psi -> -inf at -inf, psi' > 0.
///
/// This is a finite probe, not a proof: the conditions are only checked on
/// `grid` and at the points -10^k, k = 1..6.
struct MapValidationReport {
    Grid grid;
    double min_gap = 0.0;      ///< min of psi(s) - s on the grid
    double min_gap_at = 0.0;
    double min_slope = 0.0;    ///< min of psi'(s) on the grid
    double min_slope_at = 0.0;
    std::array<double, 6> divergence_probes{}; ///< psi(-10^k); NaN when evaluation failed
    bool psi1 = false;
    bool psi2 = false;
    bool psi3 = false;

    bool passed() const noexcept { return psi1 && psi2 && psi3; }
    static constexpr const char* note = "sampled check on a finite grid; not a proof";
};

/// psi2 passes when the probes strictly decrease and the deepest one lies below this value.
inline constexpr double kDivergenceProbeFloor = -1000.0;

MapValidationReport validate_map(const RealFunction& psi, const Grid& grid);

struct MapOptions {
    long long max_iterations = kDefaultMaxIterations;
    double inverse_tolerance = kDefaultInverseTolerance;
    Grid validation_grid{-50.0, 50.0, 1001};
};

/// A map psi together with its validation report and numerical settings.
class MonotoneShiftMap {
public:
    explicit MonotoneShiftMap(RealFunction psi, MapOptions options = {});

    const RealFunction& psi() const noexcept { return psi_; }
    const MapValidationReport& validation() const noexcept { return report_; }
    bool valid() const noexcept { return report_.passed(); }
    /// Throws AssumptionViolation naming the failed conditions.
    void require_valid() const;

    long long max_iterations() const noexcept { return options_.max_iterations; }
    double inverse_tolerance() const noexcept { return options_.inverse_tolerance; }

    double operator()(double s) const { return psi_(s); }

private:
    RealFunction psi_;
    MapOptions options_;
    MapValidationReport report_;
};

/// psi^<n>(s); negative n iterates the numerical inverse.
double iterate(const MonotoneShiftMap& m, double s, long long n);

/// x with psi(x) = t. Brackets downward from t, bisects, then polishes with two Newton steps.
double inverse(const MonotoneShiftMap& m, double t);

/// Smallest p >= 0 with psi^<p>(s) >= t. Exact comparison; a tie counts as reached.
long long hitting_time_up(const MonotoneShiftMap& m, double s, double t);

/// Smallest p >= 0 with psi^<-p>(s) <= t.
long long hitting_time_down(const MonotoneShiftMap& m, double s, double t);

} // namespace cohomo::orbit
