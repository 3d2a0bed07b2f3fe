#pragma once

#include <vector>

#include "cohomo/cutoff.hpp"
#include "cohomo/grid.hpp"
#include "cohomo/orbit.hpp"
#include "cohomo/real_function.hpp"
#include "cohomo/solver.hpp"

namespace cohomo::stability {

/// Exact solution z = y - h recovered from an approximate solution y, where
/// h solves h - h∘psi = phi for the defect phi = y - y∘psi - chi.
struct Stabilized {
    RealFunction phi;
    solver::CESolution correction; ///< solution operator applied to phi
    RealFunction h;
    RealFunction z;
};

Stabilized stabilize(const orbit::MonotoneShiftMap& map, const RealFunction& chi, const RealFunction& y,
                     const cutoff::CutoffSpec& window);

/// sum over n in [-N^-_a(s), N^+_b(s) - 1] of delta(psi^<n>(s)).
/// Throws InvalidTolerance if delta is negative at any orbit point.
double ggs_bound(const orbit::MonotoneShiftMap& map, const RealFunction& delta, const cutoff::CutoffSpec& window,
                 double s);

struct Tolerances {
    double residual = solver::kDefaultResidualTolerance; ///< on |z - z∘psi - chi|
    double bound_slack = 1e-8;                           ///< deviation <= ggs_bound + slack
    double admissibility_slack = 1e-12;                  ///< |phi| <= delta + slack
};

/// Failure classes in priority order: an inadmissible input voids the bound.
enum class Status { pass, admissibility_failure, bound_failure, residual_failure };

const char* status_name(Status s) noexcept;

struct StabilityRow {
    double s = 0.0;
    double phi = 0.0;
    double delta = 0.0;
    double h = 0.0;
    double z = 0.0;
    double deviation = 0.0;   ///< |y - z|, which is |h| since z := y - h
    double phi_bound = 0.0;   ///< sum of |phi| over the orbit window
    double ggs_bound = 0.0;   ///< sum of delta over the orbit window
    double z_residual = 0.0;
    bool admissible = false;  ///< |phi| <= delta at s and every orbit point in its window
    bool bound_ok = false;
    bool residual_ok = false;
    Status status = Status::pass;
};

struct StabilityCertificate {
    Grid grid;
    Tolerances tolerances;
    std::vector<StabilityRow> rows;
    std::vector<int> failed;

    bool passed() const noexcept { return failed.empty(); }
    /// Most severe status over all rows.
    Status status() const noexcept;
};

StabilityCertificate verify_ggs(const orbit::MonotoneShiftMap& map, const RealFunction& chi, const RealFunction& y,
                                const RealFunction& delta, const cutoff::CutoffSpec& window, const Grid& grid,
                                const Tolerances& tolerances = {});

} // namespace cohomo::stability
