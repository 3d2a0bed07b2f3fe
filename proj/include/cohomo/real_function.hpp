#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "cohomo/expression.hpp"
#include "cohomo/jet.hpp"

namespace cohomo {

/// Evaluable univariate real function: point evaluation always, jets when the
/// underlying construction supports them.
///
/// A RealFunction is a cheap-to-copy immutable value. Sums, products and
/// compositions of jet-capable functions are jet-capable; anything built from
/// a point-only function is point-only.
class RealFunction {
public:
    using PointFn = std::function<double(double)>;
    using JetFn = std::function<Jet(double, int)>;

    RealFunction(std::string name, PointFn point, JetFn jet = {});

    static RealFunction from_expression(const Expression& e);
    /// Parses `source` and wraps the result; the name is the canonical formatting.
    static RealFunction parse(std::string_view source);
    static RealFunction constant(double value);
    static RealFunction identity();

    /// f(s); throws DomainError on a non-finite result.
    double operator()(double s) const;
    /// Taylor data at s0; throws UnsupportedCapability for point-only functions.
    Jet jet(double s0, int order) const;
    bool has_jet() const noexcept { return static_cast<bool>(jet_); }
    const std::string& name() const noexcept { return name_; }

    friend RealFunction operator+(const RealFunction& f, const RealFunction& g);
    friend RealFunction operator-(const RealFunction& f, const RealFunction& g);
    friend RealFunction operator*(const RealFunction& f, const RealFunction& g);
    friend RealFunction operator*(double c, const RealFunction& f);
    friend RealFunction operator-(const RealFunction& f);

private:
    std::string name_;
    PointFn point_;
    JetFn jet_;
};

/// outer ∘ inner.
RealFunction compose(const RealFunction& outer, const RealFunction& inner);

double eval_scalar(const RealFunction& f, double s);
Jet eval_jet(const RealFunction& f, double s0, int order);
/// n! times the n-th Taylor coefficient at s0.
double derivative(const RealFunction& f, double s0, int n);

} // namespace cohomo
