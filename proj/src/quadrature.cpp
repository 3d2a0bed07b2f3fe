#include "cohomo/quadrature.hpp"

#include <cmath>

#include "cohomo/errors.hpp"

namespace cohomo::quadrature {

namespace {

struct Panel {
    double a, fa, m, fm, b, fb, whole;
};

double simpson(double a, double fa, double fm, double b, double fb) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); }

double refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth)
{
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, p.fa, flm, p.m, p.fm);
    const double right = simpson(p.m, p.fm, frm, p.b, p.fb);
    const double delta = left + right - p.whole;
    if (std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        throw NumericalError("adaptive Simpson did not converge on [" + std::to_string(p.a) + ", " +
                             std::to_string(p.b) + "]");
    }
    return refine(f, {p.a, p.fa, lm, flm, p.m, p.fm, left}, 0.5 * tol, depth - 1) +
           refine(f, {p.m, p.fm, rm, frm, p.b, p.fb, right}, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double abs_tolerance,
                        int max_depth)
{
    if (a == b) {
        return 0.0;
    }
    if (!(abs_tolerance > 0.0)) {
        throw InvalidArgument("quadrature tolerance must be positive");
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    return refine(f, {a, fa, m, fm, b, fb, simpson(a, fa, fm, b, fb)}, abs_tolerance, max_depth);
}

} // namespace cohomo::quadrature
