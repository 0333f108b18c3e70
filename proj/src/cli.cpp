#include <twistderiv/cli.hpp>
#include <twistderiv/closed_form.hpp>
#include <twistderiv/combinatorics.hpp>
#include <twistderiv/config_io.hpp>
#include <twistderiv/error.hpp>
#include <twistderiv/formula.hpp>
#include <twistderiv/oracle.hpp>
#include <twistderiv/report.hpp>

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/core.h>

namespace twistderiv::cli {

namespace {

// Maps library errors onto exit codes, with a hint for the numeric-domain cases.
int report_error(const error& e, std::ostream& err)
{
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    switch (e.code()) {
        case errc::branch_point:
            err << "hint: the trace is too close to 2 (L too small); the length derivatives are ill-conditioned\n";
            return numeric_error;
        case errc::step_too_small:
            err << "hint: use --step >= " << min_fd_step << '\n';
            return numeric_error;
        default:
            return input_error;
    }
}

template <typename F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const error& e) {
        return report_error(e, err);
    }
}

} // namespace

int cmd_derive(const RunSpec& spec, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto config = load_config(spec.input);
        const auto report = make_report(config, spec.order, DerivativeSource::closed_form);
        out << (spec.format == OutputFormat::structured ? render_structured(report) : render_text(report));
        return ok;
    });
}

int cmd_check(const RunSpec& spec, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (!(spec.tolerance > 0.0) || !(spec.fd_tolerance > 0.0)) {
            throw error(errc::invalid_range, "tolerances must be positive");
        }
        const auto config = load_config(spec.input);
        auto closed = make_report(config, spec.order, DerivativeSource::closed_form);
        const auto oracle = make_report(config, spec.order, DerivativeSource::jet_oracle);

        double worst_jet = 0.0;
        double worst_fd = 0.0;
        std::vector<double> deltas;
        std::vector<std::string> rows;
        for (unsigned m = 0; m <= spec.order; ++m) {
            const double dt = relative_delta(closed.trace_derivs[m], oracle.trace_derivs[m]);
            const double dl = relative_delta(closed.length_derivs[m], oracle.length_derivs[m]);
            worst_jet = std::max({worst_jet, dt, dl});
            deltas.push_back(std::abs(closed.trace_derivs[m] - oracle.trace_derivs[m]));
            std::string fd_col = "-";
            if (m >= 1 && m <= 3) {
                const double fd = finite_difference_check(config, m, spec.fd_step);
                const double df = relative_delta(closed.trace_derivs[m], fd);
                worst_fd = std::max(worst_fd, df);
                fd_col = fmt::format("{:.3e}", df);
            }
            rows.push_back(fmt::format("{:>3}  {:>24.16g}  {:>10.3e}  {:>24.16g}  {:>10.3e}  {:>10}", m,
                                       closed.trace_derivs[m], dt, closed.length_derivs[m], dl, fd_col));
        }
        closed.deltas = deltas;
        const bool jet_ok = worst_jet <= spec.tolerance;
        const bool fd_ok = worst_fd <= spec.fd_tolerance;

        if (spec.format == OutputFormat::structured) {
            out << render_structured(closed);
        } else {
            out << fmt::format("check: n = {}, L = {}, orders 0..{}\n", config.size(),
                               config.total_length, spec.order);
            out << fmt::format("{:>3}  {:>24}  {:>10}  {:>24}  {:>10}  {:>10}\n", "m", "T^(m) closed", "vs jet",
                               "L^(m) closed", "vs jet", "T vs fd");
            for (const auto& row : rows) {
                out << row << '\n';
            }
            out << fmt::format("max jet delta {:.3e} (tol {:g}): {}\n", worst_jet, spec.tolerance,
                               jet_ok ? "ok" : "FAIL");
            out << fmt::format("max fd delta  {:.3e} (tol {:g}): {}\n", worst_fd, spec.fd_tolerance,
                               fd_ok ? "ok" : "FAIL");
        }
        return jet_ok && fd_ok ? ok : tolerance_breach;
    });
}

int cmd_table(const RunSpec& spec, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (spec.n == 0) {
            throw error(errc::invalid_range, "table needs n >= 1");
        }
        out << fmt::format("B(n={}, k={}, r)\n", spec.n, spec.order);
        out << fmt::format("{:>4}  {}\n", "r", "B");
        for (std::size_t r = spec.order % 2; r <= std::min<std::size_t>(spec.order, spec.n); r += 2) {
            out << fmt::format("{:>4}  {}\n", r, coefficient_B(spec.n, spec.order, r).str());
        }
        return ok;
    });
}

int cmd_formula(const RunSpec& spec, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto formula = build_trace_formula(spec.n, spec.order);
        out << (spec.latex ? render_formula_latex(formula) : render_formula_text(formula));
        return ok;
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Higher twist derivatives of geodesic trace and length functions", "twistderiv"};
    app.require_subcommand(1);

    RunSpec spec;
    std::string format = "text";

    auto* derive = app.add_subcommand("derive", "T^(m)(0) and L^(m)(0) for m = 0..K from the closed form");
    derive->add_option("--input", spec.input, "config file (JSON)")->required();
    derive->add_option("--order", spec.order, "highest derivative order K")->required();
    derive->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    auto* check = app.add_subcommand("check", "compare the closed form against the jet oracle and finite differences");
    check->add_option("--input", spec.input, "config file (JSON)")->required();
    check->add_option("--max-order", spec.order, "highest derivative order K")->required();
    check->add_option("--tol", spec.tolerance, "relative tolerance against the jet oracle");
    check->add_option("--fd-tol", spec.fd_tolerance, "relative tolerance against finite differences (k <= 3)");
    check->add_option("--step", spec.fd_step, "finite-difference step");
    check->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    auto* table = app.add_subcommand("table", "exact coefficients B(n, k, r)");
    table->add_option("--n", spec.n, "number of crossings")->required();
    table->add_option("--k", spec.order, "derivative order")->required();

    auto* formula = app.add_subcommand("formula", "expanded symbolic k-th trace derivative");
    formula->add_option("--n", spec.n, "number of crossings")->required();
    formula->add_option("--k", spec.order, "derivative order")->required();
    formula->add_flag("--latex", spec.latex, "emit LaTeX");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        if (e.get_exit_code() == 0) {
            out << sub->help();
            return ok;
        }
        err << "error: " << e.what() << '\n' << sub->help();
        return input_error;
    }
    spec.format = format == "structured" ? OutputFormat::structured : OutputFormat::text;

    if (derive->parsed()) {
        spec.command = Command::derive;
        return cmd_derive(spec, out, err);
    }
    if (check->parsed()) {
        spec.command = Command::check;
        return cmd_check(spec, out, err);
    }
    if (table->parsed()) {
        spec.command = Command::table;
        return cmd_table(spec, out, err);
    }
    spec.command = Command::formula;
    return cmd_formula(spec, out, err);
}

} // namespace twistderiv::cli
