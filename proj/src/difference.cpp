#include "cohomo/difference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cohomo/cutoff.hpp"
#include "cohomo/errors.hpp"
#include "cohomo/quadrature.hpp"

namespace cohomo::difference {

namespace {

constexpr double kGoldenSection = 0.6180339887498949;

void validate_window(double a, double b)
{
    cutoff::CutoffSpec{a, b}.validate();
}

// Akiyama–Tanigawa; yields the classical B_n with B_1 = +1/2 (odd indices unused).
std::vector<Rational> build_table()
{
    const int n_max = 2 * kMaxBernoulliOrder;
    std::vector<Rational> a(static_cast<std::size_t>(n_max) + 1);
    std::vector<Rational> classical(static_cast<std::size_t>(n_max) + 1);
    for (int m = 0; m <= n_max; ++m) {
        a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[static_cast<std::size_t>(j - 1)] =
                j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
        }
        classical[static_cast<std::size_t>(m)] = a[0];
    }
    std::vector<Rational> table(static_cast<std::size_t>(kMaxBernoulliOrder) + 1);
    for (int r = 1; r <= kMaxBernoulliOrder; ++r) {
        table[static_cast<std::size_t>(r)] = abs(classical[static_cast<std::size_t>(2 * r)]);
    }
    return table;
}

Rational factorial(int n)
{
    Rational f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

double checked_delta(const RealFunction& delta, double x)
{
    const double d = delta(x);
    if (d < 0.0) {
        throw InvalidTolerance("tolerance function is negative (" + std::to_string(d) + ") at " + std::to_string(x));
    }
    return d;
}

// Golden-section maximisation of g on [lo, hi]; returns the best value seen.
template <typename G>
double golden_max(G g, double lo, double hi)
{
    double x1 = hi - kGoldenSection * (hi - lo);
    double x2 = lo + kGoldenSection * (hi - lo);
    double f1 = g(x1);
    double f2 = g(x2);
    double best = std::max(f1, f2);
    for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + std::fabs(lo)); ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGoldenSection * (hi - lo);
            f2 = g(x2);
            best = std::max(best, f2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGoldenSection * (hi - lo);
            f1 = g(x1);
            best = std::max(best, f1);
        }
    }
    return best;
}

double grid_point(double lo, double hi, int i, int samples)
{
    if (i == 0) {
        return lo;
    }
    if (i == samples - 1) {
        return hi;
    }
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
}

void validate_interval(double lo, double hi, int samples)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
        throw InvalidArgument("sup norm needs finite lo <= hi");
    }
    if (samples < 2) {
        throw InvalidArgument("sup norm needs at least 2 samples");
    }
}

// sup |delta| over I_s, also sampling every summation point so that W * sup
// dominates the window sum term by term.
double window_sup(const RealFunction& delta, const WindowInterval& w)
{
    double m = sup_norm(delta, w.lo, w.hi);
    for (long long n = -w.down; n < w.up; ++n) {
        m = std::max(m, std::fabs(delta(w.point(n))));
    }
    return m;
}

} // namespace

long long hitting_up_closed(double s, double t) { return static_cast<long long>(std::ceil(std::max(t - s, 0.0))); }

long long hitting_down_closed(double s, double t) { return static_cast<long long>(std::ceil(std::max(s - t, 0.0))); }

WindowInterval window_interval(double s, double a, double b)
{
    validate_window(a, b);
    if (!std::isfinite(s)) {
        throw InvalidArgument("window centre must be finite");
    }
    WindowInterval w;
    w.s = s;
    w.a = a;
    w.b = b;
    w.down = hitting_down_closed(s, a);
    w.up = hitting_up_closed(s, b);
    w.lo = w.point(-w.down);
    w.hi = w.point(w.up - 1);
    return w;
}

const Rational& bernoulli(int r)
{
    static const std::vector<Rational> table = build_table();
    if (r < 1 || r > kMaxBernoulliOrder) {
        throw InvalidArgument("Bernoulli order must lie in [1, " + std::to_string(kMaxBernoulliOrder) + "]");
    }
    return table[static_cast<std::size_t>(r)];
}

double bernoulli_double(int r) { return bernoulli(r).convert_to<double>(); }

BernoulliTable bernoulli_table(int r)
{
    bernoulli(r);
    BernoulliTable out;
    out.reserve(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) {
        out.push_back(bernoulli(i));
    }
    return out;
}

double window_sum_bound(const RealFunction& delta, double s, double a, double b)
{
    const WindowInterval w = window_interval(s, a, b);
    // extended accumulator: a sum of W equal terms rounds once, like W * c
    long double sum = 0.0L;
    for (long long n = -w.down; n < w.up; ++n) {
        sum += checked_delta(delta, w.point(n));
    }
    return static_cast<double>(sum);
}

double periodic_bound(const RealFunction& delta, double s, double a, double b)
{
    const WindowInterval w = window_interval(s, a, b);
    const double here = checked_delta(delta, s);
    for (double neighbour : {s - 1.0, s + 1.0}) {
        const double v = delta(neighbour);
        if (std::fabs(v - here) > 1e-12 * std::max(1.0, std::fabs(here))) {
            throw AssumptionViolation("tolerance function is not 1-periodic near s = " + std::to_string(s));
        }
    }
    return static_cast<double>(w.width()) * here;
}

double sup_norm(const RealFunction& f, double lo, double hi, int samples)
{
    if (lo == hi) {
        return std::fabs(f(lo));
    }
    validate_interval(lo, hi, samples);
    double best = -1.0;
    int arg = 0;
    for (int i = 0; i < samples; ++i) {
        const double v = std::fabs(f(grid_point(lo, hi, i, samples)));
        if (v > best) {
            best = v;
            arg = i;
        }
    }
    const double left = grid_point(lo, hi, std::max(arg - 1, 0), samples);
    const double right = grid_point(lo, hi, std::min(arg + 1, samples - 1), samples);
    return std::max(best, golden_max([&f](double x) { return std::fabs(f(x)); }, left, right));
}

std::vector<double> derivative_sup_norms(const RealFunction& f, double lo, double hi, int max_order, int samples)
{
    if (max_order < 0) {
        throw InvalidArgument("derivative order must be non-negative");
    }
    const auto orders = static_cast<std::size_t>(max_order) + 1;
    if (lo == hi) {
        const Jet j = f.jet(lo, max_order);
        std::vector<double> out(orders);
        for (int n = 0; n <= max_order; ++n) {
            out[static_cast<std::size_t>(n)] = std::fabs(j.derivative(n));
        }
        return out;
    }
    validate_interval(lo, hi, samples);
    std::vector<double> best(orders, -1.0);
    std::vector<int> arg(orders, 0);
    for (int i = 0; i < samples; ++i) {
        const Jet j = f.jet(grid_point(lo, hi, i, samples), max_order);
        for (int n = 0; n <= max_order; ++n) {
            const double v = std::fabs(j.derivative(n));
            if (v > best[static_cast<std::size_t>(n)]) {
                best[static_cast<std::size_t>(n)] = v;
                arg[static_cast<std::size_t>(n)] = i;
            }
        }
    }
    for (int n = 0; n <= max_order; ++n) {
        const int i = arg[static_cast<std::size_t>(n)];
        const double left = grid_point(lo, hi, std::max(i - 1, 0), samples);
        const double right = grid_point(lo, hi, std::min(i + 1, samples - 1), samples);
        auto g = [&f, n](double x) { return std::fabs(f.jet(x, n).derivative(n)); };
        best[static_cast<std::size_t>(n)] = std::max(best[static_cast<std::size_t>(n)], golden_max(g, left, right));
    }
    return best;
}

double em_bound_c1(const RealFunction& delta, double s, double a, double b)
{
    const WindowInterval w = window_interval(s, a, b);
    if (w.degenerate()) {
        return 0.0;
    }
    const auto width = static_cast<double>(w.width());
    const double norm0 = window_sup(delta, w);
    if (w.width() == 1) {
        return norm0;
    }
    const double norm1 = derivative_sup_norms(delta, w.lo, w.hi, 1)[1];
    return width * norm0 + 0.5 * (width - 1.0) * norm1;
}

double em_even_coefficient(int j) { return (bernoulli(j) / factorial(2 * j)).convert_to<double>(); }

double em_remainder_coefficient(int r)
{
    const Rational c = Rational(2 * r + 1, 2) * bernoulli(r) / factorial(2 * r + 1);
    return c.convert_to<double>();
}

bool em_order_well_conditioned(int r) { return 2 * r + 1 <= cutoff::kMaxConditionedOrder; }

double em_bound_high(const RealFunction& delta, double s, double a, double b, int r)
{
    if (r < 1 || r > kMaxEulerMaclaurinOrder) {
        throw InvalidArgument("Euler–Maclaurin order r must lie in [1, " + std::to_string(kMaxEulerMaclaurinOrder) +
                              "]");
    }
    const WindowInterval w = window_interval(s, a, b);
    if (w.degenerate()) {
        return 0.0;
    }
    const auto width = static_cast<double>(w.width());
    const std::vector<double> norms = derivative_sup_norms(delta, w.lo, w.hi, 2 * r + 1);
    double bound = width * window_sup(delta, w);
    for (int j = 1; j <= r; ++j) {
        bound += em_even_coefficient(j) * width * norms[static_cast<std::size_t>(2 * j)];
    }
    bound += em_remainder_coefficient(r) * (width - 1.0) * norms[static_cast<std::size_t>(2 * r + 1)];
    return bound;
}

EulerMaclaurinCheck em_identity_check(const RealFunction& delta, double s, double a, double b,
                                      double panel_tolerance)
{
    const WindowInterval w = window_interval(s, a, b);
    if (w.degenerate()) {
        throw InvalidArgument("Euler–Maclaurin identity needs a non-empty window");
    }
    EulerMaclaurinCheck out;
    long double sum = 0.0L;
    for (long long n = -w.down; n < w.up; ++n) {
        sum += delta(w.point(n));
    }
    out.sum = static_cast<double>(sum);
    out.endpoint_average = 0.5 * (delta(w.lo) + delta(w.hi));

    const std::function<double(double)> value = [&delta](double u) { return delta(u); };
    for (long long k = 0; k + 1 < w.width(); ++k) {
        const double left = w.lo + static_cast<double>(k);
        const double right = w.lo + static_cast<double>(k + 1);
        out.integral += quadrature::adaptive_simpson(value, left, right, panel_tolerance);
        // on this panel {u - s} = u - left, continuous up to the right end
        const std::function<double(double)> sawtooth = [&delta, left](double u) {
            return ((u - left) - 0.5) * derivative(delta, u, 1);
        };
        out.correction += quadrature::adaptive_simpson(sawtooth, left, right, panel_tolerance);
    }
    out.identity_rhs = out.integral + out.endpoint_average + out.correction;
    return out;
}

} // namespace cohomo::difference
