#pragma once

#include <utility>

#include "cohomo/jet.hpp"
#include "cohomo/real_function.hpp"

namespace cohomo::cutoff {

/// Transition window [a, b] of the smooth step.
struct CutoffSpec {
    double a = 0.0;
    double b = 1.0;

    /// Throws InvalidArgument unless a < b (both finite).
    void validate() const;
};

/// Highest jet order for which kappa_jet is considered well conditioned near the window ends.
inline constexpr int kMaxConditionedOrder = 12;

/// Smooth step S((s - a)/(b - a)) with S(x) = e(x)/(e(x) + e(1 - x)), e(x) = exp(-1/x).
///
/// Returns exactly 0 for s <= a and exactly 1 for s >= b (by branch, not by underflow).
double kappa(const CutoffSpec& spec, double s);

/// Taylor data of kappa at s0. All coefficients past c0 are exactly zero outside (a, b).
Jet kappa_jet(const CutoffSpec& spec, double s0, int order);

/// True when a jet of this order at s0 stays within the documented conditioning limit.
bool kappa_jet_well_conditioned(const CutoffSpec& spec, double s0, int order);

RealFunction kappa_function(const CutoffSpec& spec);

struct SplitChi {
    RealFunction plus;  ///< (1 - kappa) chi, vanishes for s >= b
    RealFunction minus; ///< kappa chi, vanishes for s <= a
};

/// Splits chi into halves supported left of b and right of a.
///
/// plus is evaluated as chi - kappa*chi so that plus + minus reproduces chi.
SplitChi split_chi(const RealFunction& chi, const CutoffSpec& spec);

} // namespace cohomo::cutoff
