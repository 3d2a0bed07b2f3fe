#include "cohomo/real_function.hpp"

#include <cmath>

#include "cohomo/errors.hpp"

namespace cohomo {

RealFunction::RealFunction(std::string name, PointFn point, JetFn jet)
    : name_(std::move(name)), point_(std::move(point)), jet_(std::move(jet))
{
    if (!point_) {
        throw InvalidArgument("function '" + name_ + "' needs a point evaluator");
    }
}

RealFunction RealFunction::from_expression(const Expression& e)
{
    return RealFunction(
        e.format(), [e](double s) { return e.evaluate(s); },
        [e](double s0, int order) { return e.evaluate(Jet::variable(s0, order)); });
}

RealFunction RealFunction::parse(std::string_view source) { return from_expression(cohomo::parse(source)); }

RealFunction RealFunction::constant(double value) { return from_expression(Expression::literal(value)); }

RealFunction RealFunction::identity() { return from_expression(Expression::variable()); }

double RealFunction::operator()(double s) const
{
    const double v = point_(s);
    if (!std::isfinite(v)) {
        throw DomainError("non-finite value of '" + name_ + "' at " + std::to_string(s));
    }
    return v;
}

Jet RealFunction::jet(double s0, int order) const
{
    if (!jet_) {
        throw UnsupportedCapability("function '" + name_ + "' supports point evaluation only");
    }
    if (order < 0) {
        throw InvalidArgument("jet order must be non-negative");
    }
    return jet_(s0, order);
}

RealFunction operator+(const RealFunction& f, const RealFunction& g)
{
    RealFunction::JetFn jet;
    if (f.has_jet() && g.has_jet()) {
        jet = [f, g](double s0, int k) { return f.jet(s0, k) + g.jet(s0, k); };
    }
    return RealFunction("(" + f.name() + ") + (" + g.name() + ")", [f, g](double s) { return f(s) + g(s); },
                        std::move(jet));
}

RealFunction operator-(const RealFunction& f, const RealFunction& g)
{
    RealFunction::JetFn jet;
    if (f.has_jet() && g.has_jet()) {
        jet = [f, g](double s0, int k) { return f.jet(s0, k) - g.jet(s0, k); };
    }
    return RealFunction("(" + f.name() + ") - (" + g.name() + ")", [f, g](double s) { return f(s) - g(s); },
                        std::move(jet));
}

RealFunction operator*(const RealFunction& f, const RealFunction& g)
{
    RealFunction::JetFn jet;
    if (f.has_jet() && g.has_jet()) {
        jet = [f, g](double s0, int k) { return f.jet(s0, k) * g.jet(s0, k); };
    }
    return RealFunction("(" + f.name() + ")*(" + g.name() + ")", [f, g](double s) { return f(s) * g(s); },
                        std::move(jet));
}

RealFunction operator*(double c, const RealFunction& f)
{
    RealFunction::JetFn jet;
    if (f.has_jet()) {
        jet = [c, f](double s0, int k) { return c * f.jet(s0, k); };
    }
    return RealFunction(std::to_string(c) + "*(" + f.name() + ")", [c, f](double s) { return c * f(s); },
                        std::move(jet));
}

RealFunction operator-(const RealFunction& f)
{
    RealFunction::JetFn jet;
    if (f.has_jet()) {
        jet = [f](double s0, int k) { return -f.jet(s0, k); };
    }
    return RealFunction("-(" + f.name() + ")", [f](double s) { return -f(s); }, std::move(jet));
}

RealFunction compose(const RealFunction& outer, const RealFunction& inner)
{
    RealFunction::JetFn jet;
    if (outer.has_jet() && inner.has_jet()) {
        jet = [outer, inner](double s0, int k) {
            const Jet in = inner.jet(s0, k);
            return compose(outer.jet(in.value(), k), in);
        };
    }
    return RealFunction("(" + outer.name() + ")∘(" + inner.name() + ")",
                        [outer, inner](double s) { return outer(inner(s)); }, std::move(jet));
}

double eval_scalar(const RealFunction& f, double s) { return f(s); }

Jet eval_jet(const RealFunction& f, double s0, int order) { return f.jet(s0, order); }

double derivative(const RealFunction& f, double s0, int n)
{
    if (n < 0) {
        throw InvalidArgument("derivative order must be non-negative");
    }
    return f.jet(s0, n).derivative(n);
}

} // namespace cohomo
