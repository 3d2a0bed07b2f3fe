#include "cohomo/orbit.hpp"

#include <cmath>
#include <limits>

#include "cohomo/errors.hpp"

namespace cohomo::orbit {

namespace {

double finite_or_throw(double v, const char* what)
{
    if (!std::isfinite(v)) {
        throw NumericalError(std::string("non-finite orbit point in ") + what);
    }
    return v;
}

} // namespace

MapValidationReport validate_map(const RealFunction& psi, const Grid& grid)
{
    if (grid.count < 2) {
        throw InvalidArgument("map validation needs at least 2 grid points");
    }
    grid.validate();
    MapValidationReport r;
    r.grid = grid;
    r.min_gap = std::numeric_limits<double>::infinity();
    r.min_slope = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.count; ++i) {
        const double s = grid.point(i);
        const Jet j = psi.jet(s, 1);
        const double gap = j.value() - s;
        if (gap < r.min_gap) {
            r.min_gap = gap;
            r.min_gap_at = s;
        }
        if (j[1] < r.min_slope) {
            r.min_slope = j[1];
            r.min_slope_at = s;
        }
    }
    r.psi1 = r.min_gap > 0.0;
    r.psi3 = r.min_slope > 0.0;

    bool decreasing = true;
    double previous = std::numeric_limits<double>::infinity();
    double probe_point = -1.0;
    for (std::size_t k = 0; k < r.divergence_probes.size(); ++k) {
        probe_point *= 10.0;
        double v = std::numeric_limits<double>::quiet_NaN();
        try {
            v = psi(probe_point);
        } catch (const DomainError&) {
        }
        r.divergence_probes[k] = v;
        decreasing = decreasing && std::isfinite(v) && v < previous;
        previous = v;
    }
    r.psi2 = decreasing && r.divergence_probes.back() < kDivergenceProbeFloor;
    return r;
}

MonotoneShiftMap::MonotoneShiftMap(RealFunction psi, MapOptions options)
    : psi_(std::move(psi)), options_(options), report_(validate_map(psi_, options_.validation_grid))
{
    if (options_.max_iterations < 1) {
        throw InvalidArgument("max_iterations must be positive");
    }
    if (!(options_.inverse_tolerance > 0.0)) {
        throw InvalidArgument("inverse_tolerance must be positive");
    }
}

void MonotoneShiftMap::require_valid() const
{
    if (valid()) {
        return;
    }
    std::string failed;
    auto add = [&failed](bool ok, const char* name) {
        if (!ok) {
            failed += failed.empty() ? name : std::string(", ") + name;
        }
    };
    add(report_.psi1, "psi(s) > s");
    add(report_.psi2, "psi -> -inf at -inf");
    add(report_.psi3, "psi' > 0");
    throw AssumptionViolation("map '" + psi_.name() + "' fails: " + failed);
}

double iterate(const MonotoneShiftMap& m, double s, long long n)
{
    if (n > m.max_iterations() || -n > m.max_iterations()) {
        throw InvalidArgument("iteration count " + std::to_string(n) + " exceeds the cap");
    }
    double x = s;
    if (n >= 0) {
        for (long long i = 0; i < n; ++i) {
            x = finite_or_throw(m(x), "forward iteration");
        }
    } else {
        for (long long i = 0; i < -n; ++i) {
            x = inverse(m, x);
        }
    }
    return x;
}

double inverse(const MonotoneShiftMap& m, double t)
{
    const RealFunction& psi = m.psi();
    double hi = t;
    const double at_hi = psi(hi);
    if (!(at_hi > t)) {
        throw NumericalError("inverse bracket failure: psi(t) <= t at t = " + std::to_string(t));
    }
    const auto probe = [&psi, t](double x) {
        try {
            return psi(x);
        } catch (const DomainError& e) {
            throw NumericalError("inverse bracket failure at t = " + std::to_string(t) + ": " + e.what());
        }
    };
    double width = 1.0;
    double lo = t - width;
    double at_lo = probe(lo);
    while (at_lo > t) {
        width *= 2.0;
        if (width > 0x1p60) {
            throw NumericalError("inverse bracket exceeded width 2^60 at t = " + std::to_string(t));
        }
        hi = lo;
        lo = t - width;
        at_lo = probe(lo);
    }
    if (at_lo == t) {
        return lo;
    }

    const double tolerance = m.inverse_tolerance() * (1.0 + std::fabs(t));
    while (hi - lo > tolerance) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double v = psi(mid);
        if (v == t) {
            return mid;
        }
        (v < t ? lo : hi) = mid;
    }

    double x = lo + 0.5 * (hi - lo);
    double residual = std::fabs(psi(x) - t);
    if (psi.has_jet()) {
        for (int step = 0; step < 2 && residual > 0.0; ++step) {
            const Jet j = psi.jet(x, 1);
            if (!(j[1] > 0.0)) {
                break;
            }
            const double candidate = x - (j.value() - t) / j[1];
            if (candidate < lo || candidate > hi) {
                break;
            }
            const double r = std::fabs(psi(candidate) - t);
            if (!(r < residual)) {
                break;
            }
            x = candidate;
            residual = r;
        }
    }
    return x;
}

long long hitting_time_up(const MonotoneShiftMap& m, double s, double t)
{
    long long p = 0;
    double x = s;
    while (x < t) {
        if (++p > m.max_iterations()) {
            throw NumericalError("hitting time above cap of " + std::to_string(m.max_iterations()) +
                                 " iterations");
        }
        x = finite_or_throw(m(x), "forward iteration");
    }
    return p;
}

long long hitting_time_down(const MonotoneShiftMap& m, double s, double t)
{
    long long p = 0;
    double x = s;
    while (x > t) {
        if (++p > m.max_iterations()) {
            throw NumericalError("hitting time above cap of " + std::to_string(m.max_iterations()) +
                                 " iterations");
        }
        x = inverse(m, x);
    }
    return p;
}

} // namespace cohomo::orbit
