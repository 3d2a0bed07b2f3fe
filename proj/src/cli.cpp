#include "cohomo/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cohomo/carleman.hpp"
#include "cohomo/cutoff.hpp"
#include "cohomo/difference.hpp"
#include "cohomo/errors.hpp"
#include "cohomo/grid.hpp"
#include "cohomo/orbit.hpp"
#include "cohomo/real_function.hpp"
#include "cohomo/report.hpp"
#include "cohomo/solver.hpp"
#include "cohomo/stability.hpp"

namespace cohomo::cli {

namespace {

using report::Cell;
using report::Null;
using report::Table;

struct Common {
    std::string format = "csv";
    std::string out_path;
    long long max_iterations = 0;
};

struct SolveConfig {
    std::string psi;
    std::string chi;
    double a = 0.0;
    double b = 1.0;
    std::string grid = "-10:10:401";
    std::string validation_grid = "-50:50:1001";
    double residual_tolerance = solver::kDefaultResidualTolerance;
    double bound_slack = solver::kDefaultBoundSlack;
};

struct StabilizeConfig {
    std::string psi;
    std::string chi;
    std::string y = "0";
    std::string delta;
    bool add_solution = false;
    double a = 0.0;
    double b = 1.0;
    std::string grid = "-10:10:401";
    std::string validation_grid = "-50:50:1001";
    stability::Tolerances tolerances;
};

struct BoundsConfig {
    std::string delta;
    double a = 0.0;
    double b = 1.0;
    std::string grid = "-10:10:401";
    int r = 1;
};

struct CheckMapConfig {
    std::string psi;
    std::string grid = "-50:50:1001";
};

struct CheckSeqConfig {
    std::string generator = "factorial^2";
    std::string terms;
    int truncation = 60;
    int diagnostic_terms = 1000;
};

struct BernoulliConfig {
    int r = 1;
};

struct ProbeConfig {
    std::string f;
    bool kappa = false;
    double a = 0.0;
    double b = 1.0;
    std::string interval = "0:1";
    std::string generator = "factorial";
    std::string terms;
    int max_order = 8;
};

// Thrown when a certificate or validation fails after the report is complete.
struct Outcome {
    Table table;
    int code = kSuccess;
};

long long resolve_max_iterations(long long flag)
{
    if (flag > 0) {
        return flag;
    }
    if (const char* env = std::getenv("COHOMO_MAX_ITER"); env != nullptr && *env != '\0') {
        long long v = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size() || v < 1) {
            throw InvalidArgument("COHOMO_MAX_ITER must be a positive integer, got '" + std::string(text) + "'");
        }
        return v;
    }
    return orbit::kDefaultMaxIterations;
}

std::pair<double, double> parse_interval(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos || text.find(':', colon + 1) != std::string::npos) {
        throw InvalidArgument("interval must look like lo:hi, got '" + text + "'");
    }
    auto number = [&text](std::string_view part) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size()) {
            throw InvalidArgument("bad interval '" + text + "'");
        }
        return v;
    };
    const std::string_view view(text);
    const double lo = number(view.substr(0, colon));
    const double hi = number(view.substr(colon + 1));
    if (!(lo <= hi)) {
        throw InvalidArgument("interval needs lo <= hi");
    }
    return {lo, hi};
}

std::vector<double> parse_terms(const std::string& text)
{
    std::vector<double> out;
    std::string_view rest(text);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view part = rest.substr(0, comma);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size()) {
            throw InvalidArgument("bad sequence term '" + std::string(part) + "'");
        }
        out.push_back(v);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return out;
}

orbit::MonotoneShiftMap make_map(const std::string& psi, const std::string& validation_grid, const Common& common)
{
    orbit::MapOptions options;
    options.max_iterations = resolve_max_iterations(common.max_iterations);
    options.validation_grid = Grid::parse(validation_grid);
    return orbit::MonotoneShiftMap(RealFunction::parse(psi), options);
}

void add_meta_head(Table& t, const std::string& subcommand)
{
    t.meta.emplace_back("tool", std::string("cohomo"));
    t.meta.emplace_back("version", std::string(kVersion));
    t.meta.emplace_back("subcommand", subcommand);
}

Outcome run_solve(const SolveConfig& cfg, const Common& common)
{
    const cutoff::CutoffSpec window{cfg.a, cfg.b};
    window.validate();
    const Grid grid = Grid::parse(cfg.grid);
    const solver::CESolution sol =
        solver::solve_ce(make_map(cfg.psi, cfg.validation_grid, common), RealFunction::parse(cfg.chi), window);
    const solver::SolutionCertificate cert = solver::certify(sol, grid, cfg.residual_tolerance, cfg.bound_slack);

    Outcome o;
    Table& t = o.table;
    add_meta_head(t, "solve");
    t.meta.emplace_back("psi", sol.map().psi().name());
    t.meta.emplace_back("chi", sol.chi().name());
    t.meta.emplace_back("a", cfg.a);
    t.meta.emplace_back("b", cfg.b);
    t.meta.emplace_back("grid", cfg.grid);
    t.meta.emplace_back("residual_tolerance", cfg.residual_tolerance);
    t.meta.emplace_back("bound_slack", cfg.bound_slack);
    t.meta.emplace_back("max_iterations", sol.map().max_iterations());
    t.meta.emplace_back("max_abs_residual", cert.max_abs_residual());
    t.meta.emplace_back("passed", cert.passed());
    t.columns = {"s", "g", "g_plus", "g_minus", "residual", "bound", "window_lo", "window_hi", "residual_ok",
                 "bound_ok"};
    for (const auto& r : cert.rows) {
        t.add_row({r.s, r.g, r.g_plus, r.g_minus, r.residual, r.bound, r.window_lo, r.window_hi, r.residual_ok,
                   r.bound_ok});
    }
    o.code = cert.passed() ? kSuccess : kCertificateFailure;
    return o;
}

Outcome run_stabilize(const StabilizeConfig& cfg, const Common& common)
{
    const cutoff::CutoffSpec window{cfg.a, cfg.b};
    window.validate();
    const Grid grid = Grid::parse(cfg.grid);
    const orbit::MonotoneShiftMap map = make_map(cfg.psi, cfg.validation_grid, common);
    map.require_valid();
    const RealFunction chi = RealFunction::parse(cfg.chi);
    const RealFunction delta = RealFunction::parse(cfg.delta);
    RealFunction y = RealFunction::parse(cfg.y);
    if (cfg.add_solution) {
        y = solver::solve_ce(map, chi, window).g_function() + y;
    }
    const stability::StabilityCertificate cert =
        stability::verify_ggs(map, chi, y, delta, window, grid, cfg.tolerances);

    Outcome o;
    Table& t = o.table;
    add_meta_head(t, "stabilize");
    t.meta.emplace_back("psi", map.psi().name());
    t.meta.emplace_back("chi", chi.name());
    t.meta.emplace_back("y", cfg.add_solution ? "g + " + RealFunction::parse(cfg.y).name() : y.name());
    t.meta.emplace_back("delta", delta.name());
    t.meta.emplace_back("a", cfg.a);
    t.meta.emplace_back("b", cfg.b);
    t.meta.emplace_back("grid", cfg.grid);
    t.meta.emplace_back("residual_tolerance", cfg.tolerances.residual);
    t.meta.emplace_back("bound_slack", cfg.tolerances.bound_slack);
    t.meta.emplace_back("admissibility_slack", cfg.tolerances.admissibility_slack);
    t.meta.emplace_back("max_iterations", map.max_iterations());
    t.meta.emplace_back("status", std::string(stability::status_name(cert.status())));
    t.meta.emplace_back("passed", cert.passed());
    t.columns = {"s",         "phi",       "delta",      "h",          "z",        "deviation", "phi_bound",
                 "ggs_bound", "z_residual", "admissible", "bound_ok", "residual_ok", "status"};
    for (const auto& r : cert.rows) {
        t.add_row({r.s, r.phi, r.delta, r.h, r.z, r.deviation, r.phi_bound, r.ggs_bound, r.z_residual, r.admissible,
                   r.bound_ok, r.residual_ok, std::string(stability::status_name(r.status))});
    }
    o.code = cert.passed() ? kSuccess : kCertificateFailure;
    return o;
}

Outcome run_bounds(const BoundsConfig& cfg, std::ostream& err)
{
    cutoff::CutoffSpec{cfg.a, cfg.b}.validate();
    const Grid grid = Grid::parse(cfg.grid);
    const RealFunction delta = RealFunction::parse(cfg.delta);
    if (cfg.r < 1 || cfg.r > difference::kMaxEulerMaclaurinOrder) {
        throw InvalidArgument("--r must lie in [1, " + std::to_string(difference::kMaxEulerMaclaurinOrder) + "]");
    }
    if (!difference::em_order_well_conditioned(cfg.r)) {
        err << "warning: r = " << cfg.r << " needs derivatives of order " << 2 * cfg.r + 1
            << ", beyond the conditioned jet order " << cutoff::kMaxConditionedOrder << "\n";
    }

    Outcome o;
    Table& t = o.table;
    add_meta_head(t, "bounds");
    t.meta.emplace_back("psi", std::string("s + 1"));
    t.meta.emplace_back("delta", delta.name());
    t.meta.emplace_back("a", cfg.a);
    t.meta.emplace_back("b", cfg.b);
    t.meta.emplace_back("grid", cfg.grid);
    t.meta.emplace_back("r", static_cast<long long>(cfg.r));
    t.columns = {"s", "width", "lo", "hi", "approx", "apprx0", "apprx1", "apprx2"};
    for (double s : grid.points()) {
        const difference::WindowInterval w = difference::window_interval(s, cfg.a, cfg.b);
        Cell periodic = Null{};
        try {
            periodic = difference::periodic_bound(delta, s, cfg.a, cfg.b);
        } catch (const AssumptionViolation&) {
        }
        t.add_row({s, w.width(), w.lo, w.hi, difference::window_sum_bound(delta, s, cfg.a, cfg.b), periodic,
                   difference::em_bound_c1(delta, s, cfg.a, cfg.b),
                   difference::em_bound_high(delta, s, cfg.a, cfg.b, cfg.r)});
    }
    return o;
}

Outcome run_check_map(const CheckMapConfig& cfg)
{
    const RealFunction psi = RealFunction::parse(cfg.psi);
    const orbit::MapValidationReport rep = orbit::validate_map(psi, Grid::parse(cfg.grid));

    Outcome o;
    Table& t = o.table;
    add_meta_head(t, "check-map");
    t.meta.emplace_back("psi", psi.name());
    t.meta.emplace_back("grid", cfg.grid);
    t.meta.emplace_back("note", std::string(orbit::MapValidationReport::note));
    t.meta.emplace_back("passed", rep.passed());
    t.columns = {"check", "value", "at", "pass"};
    t.add_row({std::string("psi1_min_gap"), rep.min_gap, rep.min_gap_at, rep.psi1});
    t.add_row({std::string("psi3_min_slope"), rep.min_slope, rep.min_slope_at, rep.psi3});
    double probe = -1.0;
    for (std::size_t k = 0; k < rep.divergence_probes.size(); ++k) {
        probe *= 10.0;
        t.add_row({"psi2_probe_" + std::to_string(k + 1), rep.divergence_probes[k], probe, Null{}});
    }
    t.add_row({std::string("psi2_divergence"), rep.divergence_probes.back(), probe, rep.psi2});
    o.code = rep.passed() ? kSuccess : kCertificateFailure;
    return o;
}

Outcome run_check_seq(const CheckSeqConfig& cfg)
{
    const bool explicit_terms = !cfg.terms.empty();
    const carleman::CarlemanSequence seq = explicit_terms
                                               ? carleman::CarlemanSequence::from_terms(parse_terms(cfg.terms))
                                               : carleman::CarlemanSequence::generator(cfg.generator, cfg.truncation);
    const carleman::SequenceReport rep = carleman::check_sequence(seq);

    Outcome o;
    Table& t = o.table;
    add_meta_head(t, "check-seq");
    t.meta.emplace_back("sequence", explicit_terms ? cfg.terms : seq.name());
    t.meta.emplace_back("truncation", static_cast<long long>(rep.truncation));
    t.meta.emplace_back("passed", rep.passed());
    t.columns = {"item", "witness", "reference", "pass", "surrogate"};
    t.add_row({std::string("seq1_almost_increasing"), rep.seq1.witness, rep.seq1_half_constant, rep.seq1.pass,
               rep.seq1.surrogate});
    t.add_row({std::string("seq2_normalisation"), rep.seq2.witness, rep.m0, rep.seq2.pass, rep.seq2.surrogate});
    t.add_row({std::string("seq3_log_convexity"), rep.seq3.witness, static_cast<long long>(rep.seq3_worst_index),
               rep.seq3.pass, rep.seq3.surrogate});
    t.add_row({std::string("seq4_ratio_growth"), rep.seq4.witness, rep.seq4_half_max, rep.seq4.pass,
               rep.seq4.surrogate});
    t.add_row({std::string("seq5_liminf"), rep.seq5.witness, rep.seq5_reference_min, rep.seq5.pass,
               rep.seq5.surrogate});

    int terms = cfg.diagnostic_terms;
    std::optional<carleman::CarlemanSequence> long_seq;
    if (explicit_terms) {
        terms = std::min(terms, seq.last_index() - 1);
        long_seq = seq;
    } else {
        long_seq = carleman::CarlemanSequence::generator(cfg.generator, terms + 1);
    }
    if (terms >= 10) {
        const carleman::Diagnostic d = carleman::nonquasianalytic_diagnostic(*long_seq, terms);
        t.add_row({std::string("denjoy_carleman_partial_sum"), d.partial_sums.back(),
                   static_cast<long long>(terms), Null{}, true});
        t.add_row({std::string("denjoy_carleman_block_ratio"), d.block_ratio, Null{}, Null{}, true});
        t.add_row({std::string("denjoy_carleman_verdict"), std::string(carleman::trend_name(d.verdict)), Null{},
                   Null{}, true});
    }
    o.code = rep.passed() ? kSuccess : kCertificateFailure;
    return o;
}

Outcome run_bernoulli(const BernoulliConfig& cfg)
{
    if (cfg.r < 1 || cfg.r > difference::kMaxBernoulliOrder) {
        throw InvalidArgument("--r must lie in [1, " + std::to_string(difference::kMaxBernoulliOrder) + "]");
    }
    Outcome o;
    Table& t = o.table;
    add_meta_head(t, "bernoulli");
    t.meta.emplace_back("convention", std::string("B_r = |B_2r| (1/6, 1/30, 1/42, ...)"));
    t.columns = {"r", "numerator", "denominator", "value"};
    const difference::BernoulliTable table = difference::bernoulli_table(cfg.r);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const difference::Rational& q = table[i];
        t.add_row({static_cast<long long>(i + 1), numerator(q).str(), denominator(q).str(),
                   q.convert_to<double>()});
    }
    return o;
}

Outcome run_probe(const ProbeConfig& cfg)
{
    if (cfg.kappa == !cfg.f.empty()) {
        throw InvalidArgument("probe-class needs exactly one of --f or --kappa");
    }
    const RealFunction f =
        cfg.kappa ? cutoff::kappa_function(cutoff::CutoffSpec{cfg.a, cfg.b}) : RealFunction::parse(cfg.f);
    const auto [lo, hi] = parse_interval(cfg.interval);
    const carleman::CarlemanSequence seq = cfg.terms.empty()
                                               ? carleman::CarlemanSequence::generator(cfg.generator, std::max(cfg.max_order, 2))
                                               : carleman::CarlemanSequence::from_terms(parse_terms(cfg.terms));
    const carleman::MembershipProbe p = carleman::probe_membership(f, lo, hi, seq, cfg.max_order);

    Outcome o;
    Table& t = o.table;
    add_meta_head(t, "probe-class");
    t.meta.emplace_back("f", f.name());
    t.meta.emplace_back("interval", cfg.interval);
    t.meta.emplace_back("sequence", cfg.terms.empty() ? seq.name() : cfg.terms);
    t.meta.emplace_back("max_order", static_cast<long long>(cfg.max_order));
    t.meta.emplace_back("C_K", p.constant);
    t.meta.emplace_back("rho_K", p.rho);
    t.meta.emplace_back("degenerate", p.degenerate);
    t.meta.emplace_back("passed", p.pass);
    t.columns = {"n", "norm", "M_n", "envelope", "ratio", "C_K", "rho_K"};
    for (int n = 0; n <= cfg.max_order; ++n) {
        const double nu = p.norms[static_cast<std::size_t>(n)];
        const double envelope = p.constant * std::pow(p.rho, n) * seq.term(n);
        const Cell ratio = envelope > 0.0 ? Cell{nu / envelope} : Cell{Null{}};
        t.add_row({static_cast<long long>(n), nu, seq.term(n), envelope, ratio, p.constant, p.rho});
    }
    o.code = p.pass ? kSuccess : kCertificateFailure;
    return o;
}

int emit(const Outcome& o, const Common& common, std::ostream& out)
{
    if (common.format != "csv" && common.format != "json") {
        throw InvalidArgument("--format must be csv or json");
    }
    const std::string text = common.format == "csv" ? report::to_csv(o.table) : report::to_json(o.table);
    if (common.out_path.empty() || common.out_path == "-") {
        out << text;
    } else {
        std::ofstream file(common.out_path, std::ios::binary);
        file << text;
        if (!file) {
            throw InvalidArgument("cannot write report to '" + common.out_path + "'");
        }
    }
    return o.code;
}

void add_common(CLI::App& sub, Common& common)
{
    sub.add_option("--format", common.format, "Report format: csv or json")->capture_default_str();
    sub.add_option("--out", common.out_path, "Report path (default: stdout)");
    sub.add_option("--max-iter", common.max_iterations,
                   "Iteration cap (overrides COHOMO_MAX_ITER; default 1000000)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cohomological equation solver and stability certifier", "cohomo"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Common common;
    SolveConfig solve;
    StabilizeConfig stab;
    BoundsConfig bounds;
    CheckMapConfig check_map;
    CheckSeqConfig check_seq;
    BernoulliConfig bern;
    ProbeConfig probe;

    auto* solve_cmd = app.add_subcommand("solve", "Solve f - f∘psi = chi and certify the solution");
    solve_cmd->add_option("--psi", solve.psi, "Map psi(s)")->required();
    solve_cmd->add_option("--chi", solve.chi, "Right-hand side chi(s)")->required();
    solve_cmd->add_option("--a", solve.a, "Cutoff window start")->capture_default_str();
    solve_cmd->add_option("--b", solve.b, "Cutoff window end")->capture_default_str();
    solve_cmd->add_option("--grid", solve.grid, "Sample grid lo:hi:count")->capture_default_str();
    solve_cmd->add_option("--validate-grid", solve.validation_grid, "Map validation grid")->capture_default_str();
    solve_cmd->add_option("--residual-tol", solve.residual_tolerance)->capture_default_str();
    solve_cmd->add_option("--slack", solve.bound_slack, "Slack on |g| <= bound")->capture_default_str();
    add_common(*solve_cmd, common);

    auto* stab_cmd = app.add_subcommand("stabilize", "Correct an approximate solution and certify the stability bound");
    stab_cmd->add_option("--psi", stab.psi)->required();
    stab_cmd->add_option("--chi", stab.chi)->required();
    stab_cmd->add_option("--y", stab.y, "Approximate solution y(s)")->capture_default_str();
    stab_cmd->add_flag("--add-solution", stab.add_solution, "Use y := g + (--y), g the constructed solution");
    stab_cmd->add_option("--delta", stab.delta, "Tolerance function delta(s) >= 0")->required();
    stab_cmd->add_option("--a", stab.a)->capture_default_str();
    stab_cmd->add_option("--b", stab.b)->capture_default_str();
    stab_cmd->add_option("--grid", stab.grid)->capture_default_str();
    stab_cmd->add_option("--validate-grid", stab.validation_grid)->capture_default_str();
    stab_cmd->add_option("--residual-tol", stab.tolerances.residual)->capture_default_str();
    stab_cmd->add_option("--slack", stab.tolerances.bound_slack)->capture_default_str();
    stab_cmd->add_option("--admissibility-slack", stab.tolerances.admissibility_slack)->capture_default_str();
    add_common(*stab_cmd, common);

    auto* bounds_cmd = app.add_subcommand("bounds", "Stability bounds for psi(s) = s + 1");
    bounds_cmd->add_option("--delta", bounds.delta)->required();
    bounds_cmd->add_option("--a", bounds.a)->capture_default_str();
    bounds_cmd->add_option("--b", bounds.b)->capture_default_str();
    bounds_cmd->add_option("--grid", bounds.grid)->capture_default_str();
    bounds_cmd->add_option("--r", bounds.r, "Euler–Maclaurin order")->capture_default_str();
    add_common(*bounds_cmd, common);

    auto* map_cmd = app.add_subcommand("check-map", "Sampled validation of the map assumptions");
    map_cmd->add_option("--psi", check_map.psi)->required();
    map_cmd->add_option("--grid", check_map.grid)->capture_default_str();
    add_common(*map_cmd, common);

    auto* seq_cmd = app.add_subcommand("check-seq", "Sequence conditions and nonquasianalyticity diagnostic");
    seq_cmd->add_option("--seq", check_seq.generator, "Generator factorial^alpha")->capture_default_str();
    seq_cmd->add_option("--terms", check_seq.terms, "Explicit comma-separated M_0,M_1,...");
    seq_cmd->add_option("--N", check_seq.truncation, "Truncation index")->capture_default_str();
    seq_cmd->add_option("--diag-terms", check_seq.diagnostic_terms)->capture_default_str();
    add_common(*seq_cmd, common);

    auto* bern_cmd = app.add_subcommand("bernoulli", "Exact Bernoulli numbers B_1..B_r");
    bern_cmd->add_option("--r", bern.r)->required();
    add_common(*bern_cmd, common);

    auto* probe_cmd = app.add_subcommand("probe-class", "Finite-order Carleman class probe");
    probe_cmd->add_option("--f", probe.f, "Function expression");
    probe_cmd->add_flag("--kappa", probe.kappa, "Probe the cutoff on [--a, --b]");
    probe_cmd->add_option("--a", probe.a)->capture_default_str();
    probe_cmd->add_option("--b", probe.b)->capture_default_str();
    probe_cmd->add_option("--K", probe.interval, "Compact interval lo:hi")->capture_default_str();
    probe_cmd->add_option("--seq", probe.generator)->capture_default_str();
    probe_cmd->add_option("--terms", probe.terms);
    probe_cmd->add_option("--max-order", probe.max_order)->capture_default_str();
    add_common(*probe_cmd, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        if (solve_cmd->parsed()) {
            return emit(run_solve(solve, common), common, out);
        }
        if (stab_cmd->parsed()) {
            return emit(run_stabilize(stab, common), common, out);
        }
        if (bounds_cmd->parsed()) {
            return emit(run_bounds(bounds, err), common, out);
        }
        if (map_cmd->parsed()) {
            return emit(run_check_map(check_map), common, out);
        }
        if (seq_cmd->parsed()) {
            return emit(run_check_seq(check_seq), common, out);
        }
        if (bern_cmd->parsed()) {
            return emit(run_bernoulli(bern), common, out);
        }
        if (probe_cmd->parsed()) {
            return emit(run_probe(probe), common, out);
        }
    } catch (const AssumptionViolation& e) {
        err << "validation failed: " << e.what() << "\n";
        return kCertificateFailure;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kConfigError;
    } catch (const InvalidArgument& e) {
        err << "configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const UnsupportedCapability& e) {
        err << "configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumericalFailure;
    } catch (const DomainError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumericalFailure;
    }
    err << "error: no subcommand\n";
    return kConfigError;
}

} // namespace cohomo::cli
