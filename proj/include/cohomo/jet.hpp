#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cohomo {

/// Truncated Taylor expansion f(x0 + h) = sum_i c_i h^i + O(h^{k+1}).
///
/// All arithmetic keeps the order of its operands (which must agree) and
/// propagates coefficients with the usual O(k^2) recurrences. Elementary
/// functions throw DomainError outside their real domain and whenever a
/// coefficient overflows to a non-finite value.
class Jet {
public:
    Jet(double basepoint, std::vector<double> coeffs);

    static Jet constant(double basepoint, int order, double value);
    /// Jet of the identity map at x0: (x0, 1, 0, ...).
    static Jet variable(double basepoint, int order);

    double basepoint() const noexcept { return basepoint_; }
    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    double value() const noexcept { return coeffs_.front(); }
    double operator[](std::size_t i) const { return coeffs_.at(i); }
    std::span<const double> coeffs() const noexcept { return coeffs_; }

    /// n! * c_n.
    double derivative(int n) const;

    bool operator==(const Jet&) const = default;

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a);

    friend Jet operator+(const Jet& a, double c);
    friend Jet operator+(double c, const Jet& a);
    friend Jet operator-(const Jet& a, double c);
    friend Jet operator-(double c, const Jet& a);
    friend Jet operator*(const Jet& a, double c);
    friend Jet operator*(double c, const Jet& a);
    friend Jet operator/(const Jet& a, double c);
    friend Jet operator/(double c, const Jet& a);

private:
    double basepoint_;
    std::vector<double> coeffs_;
};

Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet tan(const Jet& a);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet tanh(const Jet& a);

/// Integer power by repeated squaring; exact for polynomials.
Jet pow(const Jet& base, long long exponent);
/// Real power; requires a positive base value.
Jet pow(const Jet& base, double exponent);
/// base^exponent with both sides varying; requires a positive base value.
Jet pow(const Jet& base, const Jet& exponent);

/// Taylor composition outer(inner(x0 + h)), where `outer` is expanded at inner's value.
Jet compose(const Jet& outer, const Jet& inner);

} // namespace cohomo
