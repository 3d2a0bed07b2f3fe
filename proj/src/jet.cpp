#include "cohomo/jet.hpp"

#include <cmath>
#include <string>

#include "cohomo/errors.hpp"

namespace cohomo {

namespace {

void require_finite(const std::vector<double>& c, const char* op)
{
    for (double v : c) {
        if (!std::isfinite(v)) {
            throw DomainError(std::string("non-finite jet coefficient in ") + op);
        }
    }
}

void require_compatible(const Jet& a, const Jet& b)
{
    if (a.order() != b.order()) {
        throw InvalidArgument("jet orders differ: " + std::to_string(a.order()) + " vs " +
                              std::to_string(b.order()));
    }
}

// sin/cos and sinh/cosh share one recurrence; sign = -1 for the circular pair.
void paired_recurrence(const Jet& a, std::vector<double>& s, std::vector<double>& c, double sign)
{
    const int k = a.order();
    for (int n = 1; n <= k; ++n) {
        double sn = 0.0;
        double cn = 0.0;
        for (int j = 1; j <= n; ++j) {
            sn += j * a[j] * c[n - j];
            cn += j * a[j] * s[n - j];
        }
        s[n] = sn / n;
        c[n] = sign * cn / n;
    }
}

} // namespace

Jet::Jet(double basepoint, std::vector<double> coeffs) : basepoint_(basepoint), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw InvalidArgument("jet needs at least one coefficient");
    }
    require_finite(coeffs_, "construction");
}

Jet Jet::constant(double basepoint, int order, double value)
{
    if (order < 0) {
        throw InvalidArgument("jet order must be non-negative");
    }
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = value;
    return Jet(basepoint, std::move(c));
}

Jet Jet::variable(double basepoint, int order)
{
    Jet j = constant(basepoint, order, basepoint);
    if (order >= 1) {
        j.coeffs_[1] = 1.0;
    }
    return j;
}

double Jet::derivative(int n) const
{
    if (n < 0 || n > order()) {
        throw InvalidArgument("derivative order " + std::to_string(n) + " outside jet order " +
                              std::to_string(order()));
    }
    double factorial = 1.0;
    for (int i = 2; i <= n; ++i) {
        factorial *= i;
    }
    return factorial * coeffs_[static_cast<std::size_t>(n)];
}

Jet operator+(const Jet& a, const Jet& b)
{
    require_compatible(a, b);
    std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] += b[i];
    }
    return Jet(a.basepoint(), std::move(c));
}

Jet operator-(const Jet& a, const Jet& b)
{
    require_compatible(a, b);
    std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] -= b[i];
    }
    return Jet(a.basepoint(), std::move(c));
}

Jet operator*(const Jet& a, const Jet& b)
{
    require_compatible(a, b);
    const std::size_t n = a.coeffs().size();
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j + i < n; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    require_finite(c, "multiplication");
    return Jet(a.basepoint(), std::move(c));
}

Jet operator/(const Jet& a, const Jet& b)
{
    require_compatible(a, b);
    if (b.value() == 0.0) {
        throw DomainError("division by zero in jet arithmetic");
    }
    const std::size_t n = a.coeffs().size();
    std::vector<double> q(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = a[k];
        for (std::size_t j = 0; j < k; ++j) {
            acc -= q[j] * b[k - j];
        }
        q[k] = acc / b.value();
    }
    require_finite(q, "division");
    return Jet(a.basepoint(), std::move(q));
}

Jet operator-(const Jet& a)
{
    std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
    for (double& v : c) {
        v = -v;
    }
    return Jet(a.basepoint(), std::move(c));
}

Jet operator+(const Jet& a, double c) { return a + Jet::constant(a.basepoint(), a.order(), c); }
Jet operator+(double c, const Jet& a) { return Jet::constant(a.basepoint(), a.order(), c) + a; }
Jet operator-(const Jet& a, double c) { return a - Jet::constant(a.basepoint(), a.order(), c); }
Jet operator-(double c, const Jet& a) { return Jet::constant(a.basepoint(), a.order(), c) - a; }

Jet operator*(const Jet& a, double c)
{
    std::vector<double> r(a.coeffs().begin(), a.coeffs().end());
    for (double& v : r) {
        v *= c;
    }
    require_finite(r, "scaling");
    return Jet(a.basepoint(), std::move(r));
}

Jet operator*(double c, const Jet& a) { return a * c; }

Jet operator/(const Jet& a, double c)
{
    if (c == 0.0) {
        throw DomainError("division by zero in jet arithmetic");
    }
    std::vector<double> r(a.coeffs().begin(), a.coeffs().end());
    for (double& v : r) {
        v /= c;
    }
    require_finite(r, "division");
    return Jet(a.basepoint(), std::move(r));
}

Jet operator/(double c, const Jet& a) { return Jet::constant(a.basepoint(), a.order(), c) / a; }

Jet exp(const Jet& a)
{
    const int k = a.order();
    std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
    e[0] = std::exp(a.value());
    for (int n = 1; n <= k; ++n) {
        double acc = 0.0;
        for (int j = 1; j <= n; ++j) {
            acc += j * a[j] * e[n - j];
        }
        e[n] = acc / n;
    }
    require_finite(e, "exp");
    return Jet(a.basepoint(), std::move(e));
}

Jet log(const Jet& a)
{
    if (!(a.value() > 0.0)) {
        throw DomainError("log of non-positive value " + std::to_string(a.value()));
    }
    const int k = a.order();
    std::vector<double> l(static_cast<std::size_t>(k) + 1, 0.0);
    l[0] = std::log(a.value());
    for (int n = 1; n <= k; ++n) {
        double acc = 0.0;
        for (int j = 1; j < n; ++j) {
            acc += j * l[j] * a[n - j];
        }
        l[n] = (a[n] - acc / n) / a.value();
    }
    require_finite(l, "log");
    return Jet(a.basepoint(), std::move(l));
}

Jet sqrt(const Jet& a)
{
    if (a.value() < 0.0) {
        throw DomainError("sqrt of negative value " + std::to_string(a.value()));
    }
    const int k = a.order();
    if (a.value() == 0.0 && k > 0) {
        throw DomainError("sqrt is not differentiable at 0");
    }
    std::vector<double> r(static_cast<std::size_t>(k) + 1, 0.0);
    r[0] = std::sqrt(a.value());
    for (int n = 1; n <= k; ++n) {
        double acc = a[n];
        for (int j = 1; j < n; ++j) {
            acc -= r[j] * r[n - j];
        }
        r[n] = acc / (2.0 * r[0]);
    }
    require_finite(r, "sqrt");
    return Jet(a.basepoint(), std::move(r));
}

Jet sin(const Jet& a)
{
    std::vector<double> s(a.coeffs().size(), 0.0);
    std::vector<double> c(a.coeffs().size(), 0.0);
    s[0] = std::sin(a.value());
    c[0] = std::cos(a.value());
    paired_recurrence(a, s, c, -1.0);
    return Jet(a.basepoint(), std::move(s));
}

Jet cos(const Jet& a)
{
    std::vector<double> s(a.coeffs().size(), 0.0);
    std::vector<double> c(a.coeffs().size(), 0.0);
    s[0] = std::sin(a.value());
    c[0] = std::cos(a.value());
    paired_recurrence(a, s, c, -1.0);
    return Jet(a.basepoint(), std::move(c));
}

Jet tan(const Jet& a) { return sin(a) / cos(a); }

Jet sinh(const Jet& a)
{
    std::vector<double> s(a.coeffs().size(), 0.0);
    std::vector<double> c(a.coeffs().size(), 0.0);
    s[0] = std::sinh(a.value());
    c[0] = std::cosh(a.value());
    paired_recurrence(a, s, c, 1.0);
    require_finite(s, "sinh");
    return Jet(a.basepoint(), std::move(s));
}

Jet cosh(const Jet& a)
{
    std::vector<double> s(a.coeffs().size(), 0.0);
    std::vector<double> c(a.coeffs().size(), 0.0);
    s[0] = std::sinh(a.value());
    c[0] = std::cosh(a.value());
    paired_recurrence(a, s, c, 1.0);
    require_finite(c, "cosh");
    return Jet(a.basepoint(), std::move(c));
}

Jet tanh(const Jet& a)
{
    Jet t = sinh(a) / cosh(a);
    // keep c0 consistent with the scalar path, which saturates cleanly
    std::vector<double> c(t.coeffs().begin(), t.coeffs().end());
    c[0] = std::tanh(a.value());
    return Jet(a.basepoint(), std::move(c));
}

Jet pow(const Jet& base, long long exponent)
{
    if (exponent < 0) {
        if (base.value() == 0.0) {
            throw DomainError("negative power of zero");
        }
        return 1.0 / pow(base, -exponent);
    }
    Jet result = Jet::constant(base.basepoint(), base.order(), 1.0);
    Jet square = base;
    auto e = static_cast<unsigned long long>(exponent);
    while (e != 0) {
        if ((e & 1ULL) != 0) {
            result = result * square;
        }
        e >>= 1U;
        if (e != 0) {
            square = square * square;
        }
    }
    return result;
}

Jet pow(const Jet& base, double exponent)
{
    if (!(base.value() > 0.0)) {
        throw DomainError("non-integer power requires a positive base");
    }
    Jet r = exp(log(base) * exponent);
    std::vector<double> c(r.coeffs().begin(), r.coeffs().end());
    c[0] = std::pow(base.value(), exponent);
    return Jet(base.basepoint(), std::move(c));
}

Jet pow(const Jet& base, const Jet& exponent)
{
    if (!(base.value() > 0.0)) {
        throw DomainError("variable power requires a positive base");
    }
    return exp(exponent * log(base));
}

Jet compose(const Jet& outer, const Jet& inner)
{
    require_compatible(outer, inner);
    // outer(c0 + u) = sum_i o_i u^i with u = inner - c0 (no constant term); Horner.
    std::vector<double> du(inner.coeffs().begin(), inner.coeffs().end());
    du[0] = 0.0;
    const Jet u(inner.basepoint(), std::move(du));
    Jet acc = Jet::constant(inner.basepoint(), inner.order(), outer[static_cast<std::size_t>(outer.order())]);
    for (int i = outer.order() - 1; i >= 0; --i) {
        acc = acc * u + outer[static_cast<std::size_t>(i)];
    }
    return acc;
}

} // namespace cohomo
