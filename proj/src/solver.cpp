#include "cohomo/solver.hpp"

#include <algorithm>
#include <cmath>

#include "cohomo/errors.hpp"

namespace cohomo::solver {

namespace {

// Far end of the window first, toward n = 0.
template <typename F>
double sum_far_to_near(const std::vector<double>& points, F term)
{
    double acc = 0.0;
    for (auto it = points.rbegin(); it != points.rend(); ++it) {
        acc += term(*it);
    }
    return acc;
}

std::vector<double> forward_points(const orbit::MonotoneShiftMap& map, double b, double s)
{
    std::vector<double> out;
    double x = s;
    while (x < b) {
        if (static_cast<long long>(out.size()) >= map.max_iterations()) {
            throw NumericalError("forward hitting time above cap of " + std::to_string(map.max_iterations()));
        }
        out.push_back(x);
        x = map(x);
        if (!std::isfinite(x)) {
            throw NumericalError("non-finite forward orbit point");
        }
    }
    return out;
}

std::vector<double> backward_points(const orbit::MonotoneShiftMap& map, double a, double s)
{
    std::vector<double> out;
    double x = s;
    while (x > a) {
        if (static_cast<long long>(out.size()) >= map.max_iterations()) {
            throw NumericalError("backward hitting time above cap of " + std::to_string(map.max_iterations()));
        }
        x = orbit::inverse(map, x);
        out.push_back(x);
    }
    return out;
}

} // namespace

OrbitWindow orbit_window(const orbit::MonotoneShiftMap& map, const cutoff::CutoffSpec& window, double s)
{
    window.validate();
    OrbitWindow w;
    w.forward = forward_points(map, window.b, s);
    w.backward = backward_points(map, window.a, s);
    w.up = static_cast<long long>(w.forward.size());
    w.down = static_cast<long long>(w.backward.size());
    return w;
}

CESolution::CESolution(orbit::MonotoneShiftMap map, RealFunction chi, cutoff::CutoffSpec window)
    : map_(std::move(map)), chi_(std::move(chi)), window_(window), split_(cutoff::split_chi(chi_, window_))
{
}

CESolution::Parts CESolution::parts(double s) const
{
    const OrbitWindow w = orbit_window(map_, window_, s);
    const double plus = sum_far_to_near(w.forward, [this](double x) { return split_.plus(x); });
    const double minus = -sum_far_to_near(w.backward, [this](double x) { return split_.minus(x); });
    return {plus, minus};
}

double CESolution::g(double s) const
{
    const Parts p = parts(s);
    return p.plus + p.minus;
}

double CESolution::g_plus(double s) const
{
    return sum_far_to_near(forward_points(map_, window_.b, s), [this](double x) { return split_.plus(x); });
}

double CESolution::g_minus(double s) const
{
    return -sum_far_to_near(backward_points(map_, window_.a, s), [this](double x) { return split_.minus(x); });
}

RealFunction CESolution::g_function() const
{
    return RealFunction("g", [self = *this](double s) { return self.g(s); });
}

RealFunction CESolution::g_plus_function() const
{
    return RealFunction("g_plus", [self = *this](double s) { return self.g_plus(s); });
}

RealFunction CESolution::g_minus_function() const
{
    return RealFunction("g_minus", [self = *this](double s) { return self.g_minus(s); });
}

CESolution solve_ce(orbit::MonotoneShiftMap map, RealFunction chi, cutoff::CutoffSpec window)
{
    window.validate();
    map.require_valid();
    return CESolution(std::move(map), std::move(chi), window);
}

double residual(const CESolution& sol, double s)
{
    return sol.g(s) - sol.g(sol.map()(s)) - sol.chi()(s);
}

double solution_bound(const CESolution& sol, double s)
{
    const OrbitWindow w = orbit_window(sol.map(), sol.window(), s);
    auto term = [&sol](double x) { return std::fabs(sol.chi()(x)); };
    return sum_far_to_near(w.backward, term) + sum_far_to_near(w.forward, term);
}

double SolutionCertificate::max_abs_residual() const
{
    double m = 0.0;
    for (const auto& r : rows) {
        m = std::max(m, std::fabs(r.residual));
    }
    return m;
}

SolutionCertificate certify(const CESolution& sol, const Grid& grid, double residual_tolerance, double bound_slack)
{
    grid.validate();
    if (!(residual_tolerance >= 0.0) || !(bound_slack >= 0.0)) {
        throw InvalidArgument("certificate tolerances must be non-negative");
    }
    SolutionCertificate cert;
    cert.grid = grid;
    cert.residual_tolerance = residual_tolerance;
    cert.bound_slack = bound_slack;
    cert.rows.reserve(static_cast<std::size_t>(grid.count));
    auto abs_chi = [&sol](double x) { return std::fabs(sol.chi()(x)); };
    for (int i = 0; i < grid.count; ++i) {
        CertificateRow row;
        row.s = grid.point(i);
        const OrbitWindow w = orbit_window(sol.map(), sol.window(), row.s);
        row.g_plus = sum_far_to_near(w.forward, [&sol](double x) { return sol.chi_plus()(x); });
        row.g_minus = -sum_far_to_near(w.backward, [&sol](double x) { return sol.chi_minus()(x); });
        row.g = row.g_plus + row.g_minus;
        row.residual = row.g - sol.g(sol.map()(row.s)) - sol.chi()(row.s);
        row.bound = sum_far_to_near(w.backward, abs_chi) + sum_far_to_near(w.forward, abs_chi);
        row.window_lo = w.first_index();
        row.window_hi = w.last_index();
        row.residual_ok = std::fabs(row.residual) <= residual_tolerance;
        row.bound_ok = std::fabs(row.g) <= row.bound + bound_slack;
        if (!row.passed()) {
            cert.failed.push_back(i);
        }
        cert.rows.push_back(row);
    }
    return cert;
}

} // namespace cohomo::solver
