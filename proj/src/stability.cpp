#include "cohomo/stability.hpp"

#include <cmath>

#include "cohomo/errors.hpp"

namespace cohomo::stability {

namespace {

double checked_delta(const RealFunction& delta, double x)
{
    const double d = delta(x);
    if (d < 0.0) {
        throw InvalidTolerance("tolerance function is negative (" + std::to_string(d) + ") at " + std::to_string(x));
    }
    return d;
}

// Ascending n: -down .. -1, then 0 .. up-1.
template <typename F>
void for_each_window_point(const solver::OrbitWindow& w, F f)
{
    for (auto it = w.backward.rbegin(); it != w.backward.rend(); ++it) {
        f(*it);
    }
    for (double x : w.forward) {
        f(x);
    }
}

} // namespace

const char* status_name(Status s) noexcept
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::admissibility_failure: return "admissibility_failure";
    case Status::bound_failure: return "bound_failure";
    case Status::residual_failure: return "residual_failure";
    }
    return "?";
}

Stabilized stabilize(const orbit::MonotoneShiftMap& map, const RealFunction& chi, const RealFunction& y,
                     const cutoff::CutoffSpec& window)
{
    RealFunction phi = y - compose(y, map.psi()) - chi;
    solver::CESolution correction = solver::solve_ce(map, phi, window);
    RealFunction h = correction.g_function();
    RealFunction z = y - h;
    return {std::move(phi), std::move(correction), std::move(h), std::move(z)};
}

double ggs_bound(const orbit::MonotoneShiftMap& map, const RealFunction& delta, const cutoff::CutoffSpec& window,
                 double s)
{
    const solver::OrbitWindow w = solver::orbit_window(map, window, s);
    double sum = 0.0;
    for_each_window_point(w, [&](double x) { sum += checked_delta(delta, x); });
    return sum;
}

Status StabilityCertificate::status() const noexcept
{
    Status worst = Status::pass;
    for (const auto& r : rows) {
        if (r.status == Status::admissibility_failure) {
            return r.status;
        }
        if (r.status == Status::bound_failure || (r.status == Status::residual_failure && worst == Status::pass)) {
            worst = r.status;
        }
    }
    return worst;
}

StabilityCertificate verify_ggs(const orbit::MonotoneShiftMap& map, const RealFunction& chi, const RealFunction& y,
                                const RealFunction& delta, const cutoff::CutoffSpec& window, const Grid& grid,
                                const Tolerances& tolerances)
{
    grid.validate();
    const Stabilized st = stabilize(map, chi, y, window);
    StabilityCertificate cert;
    cert.grid = grid;
    cert.tolerances = tolerances;
    for (int i = 0; i < grid.count; ++i) {
        StabilityRow row;
        row.s = grid.point(i);
        const solver::OrbitWindow w = solver::orbit_window(map, window, row.s);

        row.phi = st.phi(row.s);
        row.delta = checked_delta(delta, row.s);
        row.admissible = std::fabs(row.phi) <= row.delta + tolerances.admissibility_slack;
        for_each_window_point(w, [&](double x) {
            const double p = st.phi(x);
            const double d = checked_delta(delta, x);
            row.phi_bound += std::fabs(p);
            row.ggs_bound += d;
            row.admissible = row.admissible && std::fabs(p) <= d + tolerances.admissibility_slack;
        });

        row.h = st.h(row.s);
        row.z = y(row.s) - row.h;
        row.deviation = std::fabs(row.h);
        const double next = map(row.s);
        const double z_next = y(next) - st.h(next);
        row.z_residual = row.z - z_next - chi(row.s);

        row.bound_ok = row.deviation <= row.ggs_bound + tolerances.bound_slack;
        row.residual_ok = std::fabs(row.z_residual) <= tolerances.residual;
        row.status = !row.admissible  ? Status::admissibility_failure
                     : !row.bound_ok   ? Status::bound_failure
                     : !row.residual_ok ? Status::residual_failure
                                        : Status::pass;
        if (row.status != Status::pass) {
            cert.failed.push_back(i);
        }
        cert.rows.push_back(row);
    }
    return cert;
}

} // namespace cohomo::stability
