// hmeans: means from intersecting two-sided interpolants, identity
// verification, and property/asymptotics scans, with machine-readable output.

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hmeans/errors.hpp"
#include "hmeans/experiments.hpp"
#include "hmeans/identities.hpp"
#include "hmeans/mean.hpp"
#include "hmeans/report.hpp"
#include "hmeans/taylor.hpp"

using namespace hmeans;

namespace {

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
}

void emit(const OutputOptions& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::fputs(payload.c_str(), stdout);
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + opts.out_path);
    file << payload;
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string_view item(text.data() + pos, next - pos);
        double value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw CLI::ValidationError("--p-grid", "invalid number: '" + std::string(item) + "'");
        grid.push_back(value);
        pos = next + 1;
        if (next == text.size()) break;
    }
    if (grid.empty()) throw CLI::ValidationError("--p-grid", "empty grid");
    return grid;
}

// ---- mean ----

int run_mean(const std::string& f, int m1, int m2, double a, double b,
             const OutputOptions& opts) {
    FunctionModel model = parse_model(f);
    MeanResult result;
    if (model.kind() == FuncKind::power) {
        double p = model.exponent();
        if (power_snaps_to_log(p, m1, m2))
            std::fprintf(stderr,
                         "warning: p = %.17g is within 1e-12 of an integer in {0..n}; "
                         "using the x^k log x model\n",
                         p);
        result = mean_power(p, m1, m2, a, b);
    } else {
        result = mean_of({model, m1, m2}, a, b);
    }

    if (opts.format == "json") {
        JsonWriter w;
        w.begin_object()
            .field("verb", "mean")
            .field("f", f)
            .field("m1", m1)
            .field("m2", m2)
            .field("a", a)
            .field("b", b)
            .field("value", result.value)
            .field("residual", result.residual)
            .field("iterations", result.iterations)
            .field("method", to_string(result.method))
            .end_object();
        emit(opts, w.str() + "\n");
    } else if (opts.format == "csv") {
        CsvWriter w({"f", "m1", "m2", "a", "b", "value", "residual", "iterations", "method"});
        w.row({f, std::to_string(m1), std::to_string(m2), format_double(a), format_double(b),
               format_double(result.value), format_double(result.residual),
               std::to_string(result.iterations), to_string(result.method)});
        emit(opts, w.str());
    } else {
        emit(opts, "M[" + f + "," + std::to_string(m1) + "," + std::to_string(m2) + "](" +
                       format_double(a) + ", " + format_double(b) +
                       ") = " + format_double(result.value) + "\nmethod " +
                       to_string(result.method) + ", iterations " +
                       std::to_string(result.iterations) + ", residual " +
                       format_double(result.residual) + "\n");
    }
    return 0;
}

// ---- sweep ----

int run_sweep(int m1, int m2, double a, double b, const std::string& grid_text,
              const OutputOptions& opts) {
    std::vector<double> grid = parse_grid(grid_text);
    SweepResult sweep = p_sweep(m1, m2, a, b, grid);
    if (opts.format == "json") {
        JsonWriter w;
        w.begin_object()
            .field("verb", "sweep")
            .field("m1", m1)
            .field("m2", m2)
            .field("a", a)
            .field("b", b)
            .field("axis", sweep.axis);
        w.begin_array("params");
        for (double p : sweep.params) w.element(p);
        w.end_array();
        w.begin_array("values");
        for (double v : sweep.values) w.element(v);
        w.end_array();
        w.field("monotonicity", sweep.monotonicity).end_object();
        emit(opts, w.str() + "\n");
    } else if (opts.format == "csv") {
        CsvWriter w({"p", "value"});
        for (std::size_t i = 0; i < sweep.params.size(); ++i)
            w.row({format_double(sweep.params[i]), format_double(sweep.values[i])});
        emit(opts, w.str());
    } else {
        std::string body;
        for (std::size_t i = 0; i < sweep.params.size(); ++i)
            body += "p = " + format_double(sweep.params[i]) +
                    "  M = " + format_double(sweep.values[i]) + "\n";
        body += "monotonicity: " + sweep.monotonicity + "\n";
        emit(opts, body);
    }
    return 0;
}

// ---- verify ----

int run_verify(const std::string& which, bool serial, const OutputOptions& opts) {
    std::vector<TheoremSuite> suites;
    if (which == "all") {
        suites = all_suites();
    } else if (auto s = suite_from_string(which)) {
        suites = {*s};
    } else {
        throw CLI::ValidationError("--suite", "unknown suite: '" + which + "'");
    }
    Execution exec = serial ? Execution::serial : Execution::parallel;
    std::vector<SuiteReport> reports;
    reports.reserve(suites.size());
    for (TheoremSuite s : suites) reports.push_back(run_theorem_suite(s, exec));

    std::size_t failures = 0;
    for (const auto& r : reports) failures += r.failures;

    if (opts.format == "json") {
        JsonWriter w;
        w.begin_object().field("verb", "verify");
        w.begin_array("suites");
        for (const auto& r : reports) {
            w.begin_object_element()
                .field("name", r.name)
                .field("cases", static_cast<long long>(r.cases.size()))
                .field("failures", static_cast<long long>(r.failures))
                .field("worst_residual", r.worst_residual)
                .end_object();
        }
        w.end_array();
        w.field("failures", static_cast<long long>(failures)).end_object();
        emit(opts, w.str() + "\n");
    } else if (opts.format == "csv") {
        CsvWriter w({"suite", "case", "pass", "residual"});
        for (const auto& r : reports)
            for (const auto& c : r.cases)
                w.row({r.name, c.label, c.pass ? "true" : "false", format_double(c.residual)});
        emit(opts, w.str());
    } else {
        std::string body;
        for (const auto& r : reports) {
            for (const auto& c : r.cases)
                body += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.label + " (" +
                        format_double(c.residual) + ")\n";
            body += r.name + ": " + std::to_string(r.cases.size() - r.failures) + "/" +
                    std::to_string(r.cases.size()) + " cases pass, worst residual " +
                    format_double(r.worst_residual) + "\n";
        }
        emit(opts, body);
    }
    return failures == 0 ? 0 : 1;
}

// ---- identities ----

int run_identities(int max_m, bool serial, bool verbose, const OutputOptions& opts) {
    IdentityGrid grid;
    grid.max_m = max_m;
    IdentitySuiteResult result =
        run_identity_grid(grid, serial ? Execution::serial : Execution::parallel);

    if (opts.format == "json") {
        JsonWriter w;
        w.begin_object()
            .field("verb", "identities")
            .field("max_m", max_m)
            .field("instances", static_cast<long long>(result.instances.size()))
            .field("failures", static_cast<long long>(result.failures))
            .field("equal", result.failures == 0)
            .end_object();
        emit(opts, w.str() + "\n");
    } else if (opts.format == "csv") {
        CsvWriter w({"name", "m1", "m2", "param", "lhs", "rhs", "equal"});
        for (const auto& r : result.instances)
            w.row({r.name, std::to_string(r.m1), std::to_string(r.m2), to_string(r.param),
                   to_string(r.lhs), to_string(r.rhs), r.equal ? "true" : "false"});
        emit(opts, w.str());
    } else {
        std::string body;
        for (const auto& r : result.instances)
            if (verbose || !r.equal) body += format_report_line(r) + "\n";
        if (result.failures == 0)
            body += "all " + std::to_string(result.instances.size()) + " instances equal\n";
        else
            body += std::to_string(result.failures) + " of " +
                    std::to_string(result.instances.size()) + " instances UNEQUAL\n";
        emit(opts, body);
    }
    return result.failures == 0 ? 0 : 1;
}

// ---- conjecture ----

int run_conjecture1(double p, double a, double b, int n_max, int digits,
                    const OutputOptions& opts) {
    PrecisionConfig precision{digits};
    SweepResult scan = conjecture1_scan(p, a, b, n_max, precision);
    if (opts.format == "json") {
        JsonWriter w;
        w.begin_object()
            .field("verb", "conjecture")
            .field("which", 1)
            .field("p", p)
            .field("a", a)
            .field("b", b)
            .field("n_max", n_max)
            .field("digits", digits)
            .field("axis", scan.axis)
            .field("target", *scan.limit_target);
        w.begin_array("params");
        for (double n : scan.params) w.element(n);
        w.end_array();
        w.begin_array("values");
        for (double v : scan.values) w.element(v);
        w.end_array();
        w.begin_array("gaps");
        for (double g : scan.gaps) w.element(g);
        w.end_array();
        w.field("gap_decreased_monotonically", scan.gap_decreased_monotonically).end_object();
        emit(opts, w.str() + "\n");
    } else if (opts.format == "csv") {
        CsvWriter w({"n", "value", "gap"});
        for (std::size_t i = 0; i < scan.params.size(); ++i)
            w.row({format_double(scan.params[i]), format_double(scan.values[i]),
                   format_double(scan.gaps[i])});
        emit(opts, w.str());
    } else {
        std::string body;
        for (std::size_t i = 0; i < scan.params.size(); ++i)
            body += "n = " + format_double(scan.params[i]) +
                    "  M = " + format_double(scan.values[i]) +
                    "  gap = " + format_double(scan.gaps[i]) + "\n";
        body += std::string("gap decreased monotonically: ") +
                (scan.gap_decreased_monotonically ? "yes" : "no") + "\n";
        emit(opts, body);
    }
    return 0;
}

int run_conjecture2(const OutputOptions& opts) {
    Conjecture2Report report = conjecture2_probe();
    if (opts.format == "json") {
        JsonWriter w;
        w.begin_object().field("verb", "conjecture").field("which", 2);
        w.begin_array("pairs");
        for (auto [m1, m2] : report.pairs) {
            w.begin_array();
            w.element(static_cast<double>(m1));
            w.element(static_cast<double>(m2));
            w.end_array();
        }
        w.end_array();
        w.begin_array("rows");
        for (const auto& row : report.rows) {
            w.begin_object_element().field("model", row.model);
            w.begin_array("values");
            for (double v : row.values) w.element(v);
            w.end_array();
            w.field("spread", row.spread).end_object();
        }
        w.end_array().end_object();
        emit(opts, w.str() + "\n");
    } else if (opts.format == "csv") {
        CsvWriter w({"model", "m1", "m2", "value", "spread"});
        for (const auto& row : report.rows)
            for (std::size_t i = 0; i < row.values.size(); ++i)
                w.row({row.model, std::to_string(report.pairs[i].first),
                       std::to_string(report.pairs[i].second), format_double(row.values[i]),
                       format_double(row.spread)});
        emit(opts, w.str());
    } else {
        std::string body;
        for (const auto& row : report.rows)
            body += row.model + ": spread " + format_double(row.spread) + "\n";
        emit(opts, body);
    }
    return 0;
}

// ---- taylor-compare ----

int run_taylor(const std::string& f, int r, double a, double b, bool nonrep,
               const OutputOptions& opts) {
    if (!nonrep) {
        FunctionModel model = parse_model(f);
        double value = taylor_mean(model, r, a, b);
        if (opts.format == "json") {
            JsonWriter w;
            w.begin_object()
                .field("verb", "taylor-compare")
                .field("f", f)
                .field("r", r)
                .field("a", a)
                .field("b", b)
                .field("taylor_mean", value)
                .end_object();
            emit(opts, w.str() + "\n");
        } else if (opts.format == "csv") {
            CsvWriter w({"f", "r", "a", "b", "taylor_mean"});
            w.row({f, std::to_string(r), format_double(a), format_double(b),
                   format_double(value)});
            emit(opts, w.str());
        } else {
            emit(opts, "taylor mean order " + std::to_string(r) + " of " + f + " on (" +
                           format_double(a) + ", " + format_double(b) +
                           ") = " + format_double(value) + "\n");
        }
        return 0;
    }

    TaylorMatchReport report = section4_nonrepresentability();
    bool all_within =
        report.within[0] && report.within[1] && report.within[2] && report.within[3];
    if (opts.format == "json") {
        JsonWriter w;
        w.begin_object().field("verb", "taylor-compare").field("mode", "nonrepresentability");
        w.begin_array("h_derivatives");
        for (double v : report.estimate) w.element(v);
        w.end_array();
        w.begin_array("targets");
        for (double v : report.target) w.element(v);
        w.end_array();
        w.field("within_tolerance", all_within)
            .field("relation_derived", report.relation_derived)
            .field("quartic_reduces", report.quartic_reduces)
            .field("p", to_string(report.p_solution))
            .field("r", to_string(report.r_solution))
            .field("representable", report.representable)
            .end_object();
        emit(opts, w.str() + "\n");
    } else if (opts.format == "csv") {
        CsvWriter w({"quantity", "estimate", "target", "within"});
        const char* names[4] = {"h1", "h2", "h3", "h4"};
        for (int i = 0; i < 4; ++i)
            w.row({names[i], format_double(report.estimate[i]), format_double(report.target[i]),
                   report.within[i] ? "true" : "false"});
        emit(opts, w.str());
    } else {
        std::string body;
        const char* names[4] = {"h'", "h''", "h'''", "h''''"};
        for (int i = 0; i < 4; ++i)
            body += std::string(names[i]) + "(1) = " + format_double(report.estimate[i]) +
                    " (target " + format_double(report.target[i]) + ", " +
                    (report.within[i] ? "ok" : "OFF") + ")\n";
        body += "matching order works out to r = " + to_string(report.r_solution) + " at p = " +
                to_string(report.p_solution) + "\n";
        body += std::string("representable as a Taylor-intersection mean: ") +
                (report.representable ? "yes" : "no") + "\n";
        emit(opts, body);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"means from two-sided interpolant intersections"};
    app.require_subcommand(1);

    // mean
    auto* mean_cmd = app.add_subcommand("mean", "compute M_{f,m1,m2}(a, b)");
    std::string mean_f;
    int mean_m1 = 1, mean_m2 = 0;
    double mean_a = 1.0, mean_b = 2.0;
    OutputOptions mean_out;
    mean_cmd->add_option("--f", mean_f, "model literal (power:<p>, logpower:<k>, exp)")
        ->required();
    mean_cmd->add_option("--m1", mean_m1)->required();
    mean_cmd->add_option("--m2", mean_m2)->required();
    mean_cmd->add_option("--a", mean_a)->required();
    mean_cmd->add_option("--b", mean_b)->required();
    add_output_flags(mean_cmd, mean_out);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "M_{p,m1,m2}(a, b) over a p grid");
    int sweep_m1 = 2, sweep_m2 = 0;
    double sweep_a = 1.0, sweep_b = 2.0;
    std::string sweep_grid;
    OutputOptions sweep_out;
    sweep_cmd->add_option("--m1", sweep_m1)->required();
    sweep_cmd->add_option("--m2", sweep_m2)->required();
    sweep_cmd->add_option("--a", sweep_a)->required();
    sweep_cmd->add_option("--b", sweep_b)->required();
    sweep_cmd->add_option("--p-grid", sweep_grid, "comma-separated exponents")->required();
    add_output_flags(sweep_cmd, sweep_out);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
    std::string verify_suite = "all";
    bool verify_serial = false;
    OutputOptions verify_out;
    verify_cmd->add_option("--suite", verify_suite,
                           "arithmetic, harmonic, geometric, comparability, equivalence, "
                           "p-monotone, p-limits, or all");
    verify_cmd->add_flag("--serial", verify_serial, "run cases on one thread");
    add_output_flags(verify_cmd, verify_out);

    // identities
    auto* id_cmd = app.add_subcommand("identities", "exact identity battery");
    int id_max_m = 8;
    bool id_serial = false, id_verbose = false;
    OutputOptions id_out;
    id_cmd->add_option("--max-m", id_max_m, "grid depth")->check(CLI::Range(1, 16));
    id_cmd->add_flag("--serial", id_serial, "run instances on one thread");
    id_cmd->add_flag("--verbose", id_verbose, "print every instance line in text mode");
    add_output_flags(id_cmd, id_out);

    // conjecture
    auto* conj_cmd = app.add_subcommand("conjecture", "asymptotic scans");
    int conj_which = 1;
    double conj_p = 2.5, conj_a = 1.0, conj_b = 2.0;
    int conj_nmax = 21, conj_digits = 60;
    OutputOptions conj_out;
    conj_cmd->add_option("--which", conj_which)->check(CLI::IsMember({1, 2}));
    conj_cmd->add_option("--p", conj_p);
    conj_cmd->add_option("--a", conj_a);
    conj_cmd->add_option("--b", conj_b);
    conj_cmd->add_option("--n-max", conj_nmax);
    conj_cmd->add_option("--digits", conj_digits, "working precision for the scan");
    add_output_flags(conj_cmd, conj_out);

    // taylor-compare
    auto* taylor_cmd = app.add_subcommand("taylor-compare",
                                          "Taylor-intersection means and the matching probe");
    std::string taylor_f;
    int taylor_r = 1;
    double taylor_a = 1.0, taylor_b = 2.0;
    bool taylor_nonrep = false;
    OutputOptions taylor_out;
    auto* f_opt = taylor_cmd->add_option("--f", taylor_f, "model literal");
    taylor_cmd->add_option("--r", taylor_r, "odd Taylor order");
    taylor_cmd->add_option("--a", taylor_a);
    taylor_cmd->add_option("--b", taylor_b);
    taylor_cmd->add_flag("--nonrep", taylor_nonrep,
                         "run the non-representability probe (default without --f)");
    add_output_flags(taylor_cmd, taylor_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (mean_cmd->parsed())
            return run_mean(mean_f, mean_m1, mean_m2, mean_a, mean_b, mean_out);
        if (sweep_cmd->parsed())
            return run_sweep(sweep_m1, sweep_m2, sweep_a, sweep_b, sweep_grid, sweep_out);
        if (verify_cmd->parsed()) return run_verify(verify_suite, verify_serial, verify_out);
        if (id_cmd->parsed()) return run_identities(id_max_m, id_serial, id_verbose, id_out);
        if (conj_cmd->parsed()) {
            if (conj_which == 1)
                return run_conjecture1(conj_p, conj_a, conj_b, conj_nmax, conj_digits, conj_out);
            return run_conjecture2(conj_out);
        }
        if (taylor_cmd->parsed()) {
            bool nonrep = taylor_nonrep || f_opt->count() == 0;
            return run_taylor(taylor_f, taylor_r, taylor_a, taylor_b, nonrep, taylor_out);
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
