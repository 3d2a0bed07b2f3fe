#include "cohomo/carleman.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "cohomo/difference.hpp"
#include "cohomo/errors.hpp"

namespace cohomo::carleman {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// log((M_n / n!)^(1/n)) for n >= 1
double log_root(const CarlemanSequence& m, int n) { return (m.log_term(n) - log_factorial(n)) / n; }

// minimal C (as a log) with a_p <= C a_q for first <= p <= q <= last
double log_almost_increasing_constant(const std::vector<double>& log_a, int first, int last)
{
    double running = -kInf;
    double worst = 0.0;
    for (int q = first; q <= last; ++q) {
        running = std::max(running, log_a[static_cast<std::size_t>(q)]);
        worst = std::max(worst, running - log_a[static_cast<std::size_t>(q)]);
    }
    return worst;
}

} // namespace

CarlemanSequence::CarlemanSequence(std::string name, std::vector<double> log_terms)
    : name_(std::move(name)), log_terms_(std::move(log_terms))
{
    if (log_terms_.size() < 3) {
        throw InvalidArgument("Carleman sequence needs at least M_0, M_1, M_2");
    }
}

CarlemanSequence CarlemanSequence::from_terms(const std::vector<double>& terms)
{
    std::vector<double> logs;
    logs.reserve(terms.size());
    for (std::size_t n = 0; n < terms.size(); ++n) {
        if (!std::isfinite(terms[n]) || !(terms[n] > 0.0)) {
            throw InvalidArgument("Carleman sequence term M_" + std::to_string(n) + " is not a positive finite number");
        }
        logs.push_back(std::log(terms[n]));
    }
    return CarlemanSequence("explicit", std::move(logs));
}

CarlemanSequence CarlemanSequence::factorial_power(double alpha, int last)
{
    if (!std::isfinite(alpha) || alpha < 1.0) {
        throw InvalidArgument("factorial^alpha generator needs alpha >= 1");
    }
    if (last < 2) {
        throw InvalidArgument("Carleman sequence needs at least M_0, M_1, M_2");
    }
    std::vector<double> logs;
    logs.reserve(static_cast<std::size_t>(last) + 1);
    for (int n = 0; n <= last; ++n) {
        logs.push_back(alpha * log_factorial(n));
    }
    std::ostringstream name;
    name.imbue(std::locale::classic());
    name << "factorial^" << alpha;
    return CarlemanSequence(name.str(), std::move(logs));
}

CarlemanSequence CarlemanSequence::generator(std::string_view spec, int last)
{
    constexpr std::string_view prefix = "factorial^";
    if (spec == "factorial") {
        return factorial_power(1.0, last);
    }
    if (spec.substr(0, prefix.size()) != prefix) {
        throw InvalidArgument("unknown sequence generator '" + std::string(spec) + "' (expected factorial^alpha)");
    }
    const std::string_view number = spec.substr(prefix.size());
    double alpha = 0.0;
    const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), alpha);
    if (ec != std::errc() || ptr != number.data() + number.size()) {
        throw InvalidArgument("bad exponent in sequence generator '" + std::string(spec) + "'");
    }
    return factorial_power(alpha, last);
}

double CarlemanSequence::log_term(int n) const
{
    if (n < 0 || n > last_index()) {
        throw InvalidArgument("sequence index " + std::to_string(n) + " beyond truncation " +
                              std::to_string(last_index()));
    }
    return log_terms_[static_cast<std::size_t>(n)];
}

double CarlemanSequence::term(int n) const { return std::exp(log_term(n)); }

std::vector<double> normalized_roots(const CarlemanSequence& m)
{
    std::vector<double> a(static_cast<std::size_t>(m.last_index()) + 1, kNaN);
    for (int n = 1; n <= m.last_index(); ++n) {
        a[static_cast<std::size_t>(n)] = std::exp(log_root(m, n));
    }
    return a;
}

SequenceReport check_sequence(const CarlemanSequence& m)
{
    const int last = m.last_index();
    if (last < 4) {
        throw InvalidArgument("sequence checks need a truncation N >= 4");
    }
    SequenceReport r;
    r.truncation = last;

    std::vector<double> log_a(static_cast<std::size_t>(last) + 1, kNaN);
    for (int n = 1; n <= last; ++n) {
        log_a[static_cast<std::size_t>(n)] = log_root(m, n);
    }

    r.seq1.surrogate = true;
    r.seq1.witness = std::exp(log_almost_increasing_constant(log_a, 1, last));
    r.seq1_half_constant = std::exp(log_almost_increasing_constant(log_a, 1, last / 2));
    r.seq1.pass = std::isfinite(r.seq1.witness) && r.seq1.witness <= 1.1 * r.seq1_half_constant;

    r.m0 = m.term(0);
    r.m1 = m.term(1);
    r.seq2.witness = r.m1;
    r.seq2.pass = std::fabs(r.m0 - 1.0) <= 1e-12 && r.m0 <= r.m1;

    double worst = -kInf;
    for (int n = 0; n + 2 <= last; ++n) {
        const double ln = m.log_term(n) - log_factorial(n);
        const double l1 = m.log_term(n + 1) - log_factorial(n + 1);
        const double l2 = m.log_term(n + 2) - log_factorial(n + 2);
        const double excess = 2.0 * l1 - ln - l2;
        if (excess > worst) {
            worst = excess;
            r.seq3_worst_index = n;
        }
    }
    r.seq3.witness = std::exp(worst);
    r.seq3.pass = worst <= std::log1p(kLogConvexitySlack);

    auto seq4_max = [&m](int upto) {
        double best = -kInf;
        for (int n = 1; n + 1 <= upto; ++n) {
            const double v = (m.log_term(n + 1) - std::log(static_cast<double>(n) + 1.0) - m.log_term(n)) / n;
            best = std::max(best, v);
        }
        return std::exp(best);
    };
    r.seq4.surrogate = true;
    r.seq4.witness = seq4_max(last);
    r.seq4_half_max = seq4_max(std::max(2, last / 2));
    r.seq4.pass = std::isfinite(r.seq4.witness) && r.seq4.witness <= 1.1 * r.seq4_half_max;

    auto min_root = [&log_a](int first, int upto) {
        double best = kInf;
        for (int n = first; n <= upto; ++n) {
            best = std::min(best, log_a[static_cast<std::size_t>(n)]);
        }
        return std::exp(best);
    };
    r.seq5.surrogate = true;
    r.seq5.witness = min_root((last + 1) / 2, last);
    r.seq5_reference_min = min_root(std::max(1, last / 4), last / 2);
    r.seq5.pass = r.seq5.witness > 0.0 && r.seq5.witness >= 0.9 * r.seq5_reference_min;
    return r;
}

const char* trend_name(Trend t) noexcept
{
    switch (t) {
    case Trend::converging: return "converging";
    case Trend::diverging: return "diverging";
    case Trend::inconclusive: return "inconclusive";
    }
    return "?";
}

Diagnostic nonquasianalytic_diagnostic(const CarlemanSequence& m, int terms)
{
    if (terms < 10) {
        throw InvalidArgument("diagnostic needs at least 10 terms");
    }
    if (terms + 1 > m.last_index()) {
        throw InvalidArgument("diagnostic with " + std::to_string(terms) + " terms needs M up to index " +
                              std::to_string(terms + 1));
    }
    Diagnostic d;
    d.partial_sums.reserve(static_cast<std::size_t>(terms));
    double sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
        sum += std::exp(m.log_term(n) - m.log_term(n + 1));
        d.partial_sums.push_back(sum);
    }
    auto partial = [&d](int k) { return d.partial_sums[static_cast<std::size_t>(k) - 1]; };
    const double recent = partial(terms) - partial(terms / 2);
    const double earlier = partial(terms / 2) - partial(terms / 4);
    d.block_ratio = earlier > 0.0 ? recent / earlier : kNaN;
    if (std::isnan(d.block_ratio)) {
        d.verdict = Trend::inconclusive;
    } else if (d.block_ratio < 0.8) {
        d.verdict = Trend::converging;
    } else if (d.block_ratio > 0.97) {
        d.verdict = Trend::diverging;
    } else {
        d.verdict = Trend::inconclusive;
    }
    return d;
}

MembershipProbe probe_membership(const RealFunction& f, double lo, double hi, const CarlemanSequence& m,
                                 int max_order)
{
    if (!f.has_jet()) {
        throw UnsupportedCapability("membership probe needs derivatives, but '" + f.name() +
                                    "' supports point evaluation only");
    }
    if (max_order < 1 || max_order > kMaxProbeOrder) {
        throw InvalidArgument("probe order must lie in [1, " + std::to_string(kMaxProbeOrder) + "]");
    }
    if (max_order > m.last_index()) {
        throw InvalidArgument("sequence truncation is shorter than the probe order");
    }
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo <= hi)) {
        throw InvalidArgument("probe interval needs finite lo <= hi");
    }
    MembershipProbe p;
    p.lo = lo;
    p.hi = hi;
    p.max_order = max_order;
    p.norms = difference::derivative_sup_norms(f, lo, hi, max_order);

    const double nu0 = p.norms[0];
    double log_rho = -kInf;
    for (int n = 1; n <= max_order; ++n) {
        const double nu = p.norms[static_cast<std::size_t>(n)];
        if (nu == 0.0) {
            continue;
        }
        const double scale = nu0 > 0.0 ? std::log(nu0) - m.log_term(0) : 0.0;
        log_rho = std::max(log_rho, (std::log(nu) - scale - m.log_term(n)) / n);
    }
    if (log_rho == -kInf) {
        p.degenerate = true;
        p.rho = 1.0;
        p.constant = nu0;
        p.max_violation = nu0 > 0.0 ? 1.0 : 0.0;
        p.pass = std::isfinite(p.constant);
        return p;
    }
    p.rho = std::exp(log_rho);
    double log_c = -kInf;
    for (int n = 0; n <= max_order; ++n) {
        const double nu = p.norms[static_cast<std::size_t>(n)];
        if (nu > 0.0) {
            log_c = std::max(log_c, std::log(nu) - n * log_rho - m.log_term(n));
        }
    }
    p.constant = std::exp(log_c);
    for (int n = 0; n <= max_order; ++n) {
        const double envelope = p.constant * std::exp(n * log_rho + m.log_term(n));
        p.max_violation = std::max(p.max_violation, p.norms[static_cast<std::size_t>(n)] / envelope);
    }
    p.pass = std::isfinite(p.constant) && std::isfinite(p.rho) && p.max_violation <= 1.0 + p.tolerance;
    return p;
}

} // namespace cohomo::carleman
