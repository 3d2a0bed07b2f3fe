#pragma once

#include <functional>

namespace cohomo::quadrature {

/// Adaptive Simpson with Richardson correction on [a, b].
/// Throws NumericalError when max_depth is reached without meeting abs_tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double abs_tolerance,
                        int max_depth = 50);

} // namespace cohomo::quadrature
