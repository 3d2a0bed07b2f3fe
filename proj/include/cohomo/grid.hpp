#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cohomo {

/// Uniform sample grid over [lo, hi], endpoints inclusive. A single-point grid is {lo}.
struct Grid {
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;

    double point(int i) const;
    std::vector<double> points() const;

    /// Parses "lo:hi:count". Throws InvalidArgument.
    static Grid parse(std::string_view text);
    void validate() const;
};

} // namespace cohomo
