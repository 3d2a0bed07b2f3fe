#include "cohomo/cutoff.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "cohomo/errors.hpp"

namespace cohomo::cutoff {

void CutoffSpec::validate() const
{
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw InvalidArgument("cutoff window needs finite a < b");
    }
}

double kappa(const CutoffSpec& spec, double s)
{
    spec.validate();
    if (s <= spec.a) {
        return 0.0;
    }
    if (s >= spec.b) {
        return 1.0;
    }
    const double x = (s - spec.a) / (spec.b - spec.a);
    // S(x) = 1 / (1 + exp(1/x - 1/(1-x))); every step is monotone in x
    const double u = 1.0 / x - 1.0 / (1.0 - x);
    return 1.0 / (1.0 + std::exp(u));
}

Jet kappa_jet(const CutoffSpec& spec, double s0, int order)
{
    spec.validate();
    if (order < 0) {
        throw InvalidArgument("jet order must be non-negative");
    }
    if (s0 <= spec.a || s0 >= spec.b) {
        return Jet::constant(s0, order, kappa(spec, s0));
    }
    const double width = spec.b - spec.a;
    std::vector<double> xc(static_cast<std::size_t>(order) + 1, 0.0);
    xc[0] = (s0 - spec.a) / width;
    if (order >= 1) {
        xc[1] = 1.0 / width;
    }
    const Jet x(s0, std::move(xc));
    const Jet u = 1.0 / x - 1.0 / (1.0 - x);
    // exp of the negative-leaning exponent only, so nothing overflows near either end
    Jet k = u.value() > 0.0 ? exp(-u) / (1.0 + exp(-u)) : 1.0 / (1.0 + exp(u));
    std::vector<double> c(k.coeffs().begin(), k.coeffs().end());
    c[0] = kappa(spec, s0);
    return Jet(s0, std::move(c));
}

bool kappa_jet_well_conditioned(const CutoffSpec& spec, double s0, int order)
{
    if (order <= kMaxConditionedOrder || s0 <= spec.a || s0 >= spec.b) {
        return true;
    }
    const double x = (s0 - spec.a) / (spec.b - spec.a);
    return x > 0.1 && x < 0.9;
}

RealFunction kappa_function(const CutoffSpec& spec)
{
    spec.validate();
    std::ostringstream name;
    name.imbue(std::locale::classic());
    name << "kappa[" << spec.a << "," << spec.b << "]";
    return RealFunction(
        name.str(), [spec](double s) { return kappa(spec, s); },
        [spec](double s0, int order) { return kappa_jet(spec, s0, order); });
}

namespace {

struct Halves {
    double plus;
    double minus;
};

// Multiplies by the larger of kappa and 1 - kappa and recovers the other half
// by a subtraction that is exact (the operands are within a factor of two).
Halves split_value(double k, double c)
{
    if (k >= 0.5) {
        const double minus = k * c;
        return {c - minus, minus};
    }
    const double plus = (1.0 - k) * c;
    return {plus, c - plus};
}

Jet with_value(Jet j, double value)
{
    std::vector<double> coeffs(j.coeffs().begin(), j.coeffs().end());
    coeffs.front() = value;
    return Jet(j.basepoint(), std::move(coeffs));
}

} // namespace

SplitChi split_chi(const RealFunction& chi, const CutoffSpec& spec)
{
    spec.validate();
    RealFunction::JetFn minus_jet;
    RealFunction::JetFn plus_jet;
    if (chi.has_jet()) {
        minus_jet = [chi, spec](double s0, int k) {
            const Jet c = chi.jet(s0, k);
            return with_value(kappa_jet(spec, s0, k) * c, split_value(kappa(spec, s0), c.value()).minus);
        };
        plus_jet = [chi, spec](double s0, int k) {
            const Jet c = chi.jet(s0, k);
            return with_value(c - kappa_jet(spec, s0, k) * c, split_value(kappa(spec, s0), c.value()).plus);
        };
    }
    RealFunction minus(
        "chi_minus", [chi, spec](double s) { return split_value(kappa(spec, s), chi(s)).minus; },
        std::move(minus_jet));
    RealFunction plus(
        "chi_plus", [chi, spec](double s) { return split_value(kappa(spec, s), chi(s)).plus; },
        std::move(plus_jet));
    return {std::move(plus), std::move(minus)};
}

} // namespace cohomo::cutoff
