// Command-line front end: single-point friction queries, accuracy scans
// against the reference solver, the overflow demonstration table, the
// accuracy/cost comparison table, wall-clock benchmarks, and the static
// cost model.
//
// Exit codes: 0 success, 2 usage or numeric-input error, 3 I/O error.
// stdout carries data (machine-parseable), stderr carries warnings/errors.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frictionlab/analysis.hpp"
#include "frictionlab/oracle.hpp"

namespace {

using namespace frictionlab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string method_list_footer() {
    std::string out = "Methods:\n";
    for (const MethodId id : kAllMethods) {
        out += "  ";
        out += method_name(id);
        out.append(24 - std::min<std::size_t>(23, std::string(method_name(id)).size()), ' ');
        out += method_description(id);
        out += '\n';
    }
    return out;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return kExitUsage;
}

bool parse_method(const std::string& token, MethodId& id) {
    return method_from_name(token, id);
}

SignConvention parse_convention(const std::string& token) {
    return token == "as-printed" ? SignConvention::AsPrinted : SignConvention::Classical;
}

Eq4Variant parse_variant(const std::string& token) {
    if (token == "eq5") return Eq4Variant::Eq5Shape;
    if (token == "eq6") return Eq4Variant::Eq6Shape;
    return Eq4Variant::Eq3Shape;
}

/// Writes through `emit` into `path`; maps any stream failure to exit 3.
int write_file(const std::string& path, const std::function<void(std::ostream&)>& emit) {
    std::ofstream os(path);
    if (!os) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    emit(os);
    os.flush();
    if (!os) {
        std::cerr << "error: write to '" << path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

void emit_domain_warnings(const DomainStatus& status) {
    for (const BoundViolation& violation : status.violations) {
        std::cerr << "warning: outside validated domain (" << violation.bound
                  << "): value=" << format_double(violation.value)
                  << " limit=" << format_double(violation.limit) << '\n';
    }
}

// ---------------------------------------------------------------------------

struct FrictionArgs {
    double reynolds = 0.0;
    double roughness = 0.0;
    std::string method = "oracle";
    std::string format = "plain";
    std::string convention = "classical";
    double power_a = 1e6;
    std::string variant = "eq3";
};

int cmd_friction(const FrictionArgs& args) {
    MethodId id;
    if (!parse_method(args.method, id)) {
        return usage_error("unknown method '" + args.method + "' (see --help for the list)");
    }

    const FlowConditions cond{args.reynolds, args.roughness};
    DomainStatus status;
    try {
        status = validate_domain(cond);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    emit_domain_warnings(status);

    batch::Options opts;
    opts.power_a = args.power_a;
    opts.variant = parse_variant(args.variant);
    opts.convention = parse_convention(args.convention);

    FrictionResult result;
    try {
        result = batch::eval_one(id, cond, opts);
    } catch (const FormulaStageError& e) {
        std::cerr << "error: formula fault at " << e.stage << " (method "
                  << method_name(e.method) << ")\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }

    if (args.format == "json") {
        nlohmann::ordered_json doc;
        doc["method"] = method_name(id);
        doc["reynolds"] = cond.reynolds;
        doc["relative_roughness"] = cond.relative_roughness;
        doc["f"] = result.friction_factor;
        doc["u"] = result.inverse_sqrt;
        doc["inside_domain"] = status.inside_colebrook_domain;
        doc["warnings"] = nlohmann::ordered_json::array();
        for (const BoundViolation& violation : status.violations) {
            doc["warnings"].push_back({{"bound", violation.bound},
                                       {"value", violation.value},
                                       {"limit", violation.limit}});
        }
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "method=" << method_name(id) << '\n'
                  << "reynolds=" << format_double(cond.reynolds) << '\n'
                  << "relative_roughness=" << format_double(cond.relative_roughness) << '\n'
                  << "f=" << format_double(result.friction_factor) << '\n'
                  << "u=" << format_double(result.inverse_sqrt) << '\n'
                  << "inside_domain=" << (status.inside_colebrook_domain ? 1 : 0) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct ScanArgs {
    std::string method = "all";
    int n_reynolds = 512;
    int n_roughness = 512;
    std::string metric = "auto";
    std::string convention = "classical";
    double power_a = 1e6;
    std::string variant = "eq3";
    std::string out_csv;
    std::string out_json;
};

int cmd_scan(const ScanArgs& args) {
    std::vector<MethodId> methods;
    if (args.method == "all") {
        methods.assign(std::begin(kScanMethods), std::end(kScanMethods));
    } else {
        MethodId id;
        if (!parse_method(args.method, id)) {
            return usage_error("unknown method '" + args.method + "'");
        }
        if (id == MethodId::OracleFixedPoint) {
            return usage_error("cannot score the reference against itself; "
                               "use --method lambert-oracle for the dual-oracle self-test");
        }
        methods.push_back(id);
    }
    if (!args.out_csv.empty() && methods.size() != 1) {
        return usage_error("--out-csv needs a single --method (the row schema has no method column)");
    }

    ScanGrid grid;
    try {
        grid = make_scan_grid(args.n_reynolds, args.n_roughness);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    const OracleField field = compute_oracle_field(grid);

    ErrorMetric metric = ErrorMetric::ErrorOnF;
    std::string chosen_by = "flag";
    if (args.metric == "f") {
        metric = ErrorMetric::ErrorOnF;
    } else if (args.metric == "u") {
        metric = ErrorMetric::ErrorOnU;
    } else {
        const CalibrationResult calibration = calibrate_metric(grid, &field);
        metric = calibration.chosen;
        chosen_by = calibration.calibrated ? "calibration" : "calibration-failed-default";
    }
    std::cout << "metric=" << metric_name(metric) << " chosen_by=" << chosen_by << '\n';

    batch::Options opts;
    opts.power_a = args.power_a;
    opts.variant = parse_variant(args.variant);
    opts.convention = parse_convention(args.convention);

    const bool keep_rows = !args.out_csv.empty();
    std::vector<ErrorReport> reports;
    reports.reserve(methods.size());
    for (const MethodId id : methods) {
        reports.push_back(scan_errors(id, grid, metric, opts, keep_rows, &field));
        const ErrorReport& r = reports.back();
        std::cout << "method=" << method_name(id)
                  << " convention=" << (r.convention == SignConvention::Classical ? "classical" : "as-printed")
                  << " max_error_percent=" << format_double(r.max_error_percent)
                  << " p50=" << format_double(r.percentiles[0])
                  << " p90=" << format_double(r.percentiles[1])
                  << " p99=" << format_double(r.percentiles[2])
                  << " faults=" << r.fault_count << " points=" << r.point_count
                  << " argmax_reynolds=" << format_double(r.argmax.reynolds)
                  << " argmax_roughness=" << format_double(r.argmax.relative_roughness)
                  << '\n';
    }

    if (!args.out_csv.empty()) {
        const int rc = write_file(args.out_csv, [&reports](std::ostream& os) {
            write_error_csv(os, reports.front());
        });
        if (rc != kExitOk) return rc;
    }
    if (!args.out_json.empty()) {
        const int rc = write_file(args.out_json, [&](std::ostream& os) {
            write_scan_json(os, metric, grid, reports);
        });
        if (rc != kExitOk) return rc;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_table1(const std::string& out_csv) {
    const std::vector<Table1Cell> cells = reproduce_table1();
    std::printf("%-12s %-12s %-16s %-18s %-18s %-18s\n", "reynolds", "roughness", "x",
                "naive_w", "omega", "y");
    for (const Table1Cell& cell : cells) {
        char naive[32];
        if (cell.overflow) {
            std::snprintf(naive, sizeof(naive), "OVERFLOW");
        } else {
            std::snprintf(naive, sizeof(naive), "%.10g", cell.naive_w);
        }
        std::printf("%-12.6g %-12.6g %-16.10g %-18s %-18.10g %-18.10g\n", cell.reynolds,
                    cell.relative_roughness, cell.x, naive, cell.omega, cell.y);
    }
    if (!out_csv.empty()) {
        return write_file(out_csv, [&cells](std::ostream& os) { write_table1_csv(os, cells); });
    }
    return kExitOk;
}

struct Table2Args {
    int n_reynolds = 512;
    int n_roughness = 512;
    std::string out_csv;
};

int cmd_table2(const Table2Args& args) {
    ScanGrid grid;
    try {
        grid = make_scan_grid(args.n_reynolds, args.n_roughness);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    const OracleField field = compute_oracle_field(grid);
    const CalibrationResult calibration = calibrate_metric(grid, &field);
    std::cout << "metric=" << metric_name(calibration.chosen)
              << " calibrated=" << (calibration.calibrated ? 1 : 0) << '\n';

    const std::vector<Table2Row> rows = reproduce_table2(grid, &field);
    std::printf("%-24s %-24s %-10s %-5s %-6s %-6s %-8s %-5s %-11s %s\n", "method",
                "measured_max_percent", "quoted", "logs", "pows", "total", "clamond",
                "pass", "convention", "fault_fraction");
    for (const Table2Row& row : rows) {
        std::printf("%-24s %-24s %-10.4g %-5d %-6d %-6d %-8d %-5s %-11s %s\n",
                    std::string(method_name(row.method)).c_str(),
                    format_double(row.measured_max_percent).c_str(),
                    row.quoted_max_percent, row.log_count, row.power_count, row.total,
                    row.total_clamond, row.pass ? "yes" : "NO",
                    row.convention == SignConvention::Classical ? "classical" : "as-printed",
                    format_double(row.fault_fraction).c_str());
    }
    if (!args.out_csv.empty()) {
        return write_file(args.out_csv, [&rows](std::ostream& os) { write_table2_csv(os, rows); });
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
    std::string method = "all";
    int n_reynolds = 512;
    int n_roughness = 512;
    std::size_t repetitions = 10;
    std::string out_csv;
};

int cmd_bench(const BenchArgs& args) {
    std::vector<MethodId> methods;
    if (args.method == "all") {
        methods.assign(std::begin(kAllMethods), std::end(kAllMethods));
    } else {
        MethodId id;
        if (!parse_method(args.method, id)) {
            return usage_error("unknown method '" + args.method + "'");
        }
        methods.push_back(id);
    }
    ScanGrid grid;
    try {
        grid = make_scan_grid(args.n_reynolds, args.n_roughness);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    std::vector<BenchReport> reports;
    reports.reserve(methods.size());
    std::printf("%-24s %-8s %-10s %-6s %-14s %-14s %-14s\n", "method", "kernel", "calls",
                "reps", "p10_ns", "median_ns", "p90_ns");
    for (const MethodId id : methods) {
        const BenchReport report = benchmark(id, grid, args.repetitions);
        reports.push_back(report);
        std::printf("%-24s %-8s %-10zu %-6zu %-14.2f %-14.2f %-14.2f\n",
                    std::string(method_name(id)).c_str(),
                    std::string(batch::kernel_name(id)).c_str(), report.calls,
                    report.repetitions, report.p10_ns_per_call, report.median_ns_per_call,
                    report.p90_ns_per_call);
    }
    if (!args.out_csv.empty()) {
        return write_file(args.out_csv, [&](std::ostream& os) {
            os << "method,kernel,calls,repetitions,p10_ns_per_call,median_ns_per_call,"
                  "p90_ns_per_call\n";
            for (const BenchReport& r : reports) {
                os << method_name(r.method) << ',' << batch::kernel_name(r.method) << ','
                   << r.calls << ',' << r.repetitions << ','
                   << format_double(r.p10_ns_per_call) << ','
                   << format_double(r.median_ns_per_call) << ','
                   << format_double(r.p90_ns_per_call) << '\n';
            }
        });
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_cost(const std::string& method_token, const std::string& out_csv) {
    std::vector<MethodId> methods;
    if (method_token == "all") {
        methods.assign(std::begin(kScanMethods), std::end(kScanMethods));
    } else {
        MethodId id;
        if (!parse_method(method_token, id)) {
            return usage_error("unknown method '" + method_token + "'");
        }
        methods.push_back(id);
    }

    std::vector<CostProfile> profiles;
    profiles.reserve(methods.size());
    for (const MethodId id : methods) {
        try {
            profiles.push_back(cost_profile(id));
        } catch (const std::invalid_argument& e) {
            return usage_error(e.what());
        }
    }

    std::printf("%-24s %4s %4s %4s %4s %4s %5s %5s %5s %4s %6s %4s %6s %6s %10s\n",
                "method", "add", "sub", "mul", "div", "sq", "sqrt", "cube", "cbrt", "ln",
                "log10", "pow", "logs", "pows", "weighted");
    for (const CostProfile& p : profiles) {
        std::printf("%-24s %4d %4d %4d %4d %4d %5d %5d %5d %4d %6d %4d %6d %6d %10.2f\n",
                    std::string(method_name(p.method)).c_str(), p.additions,
                    p.subtractions, p.multiplications, p.divisions, p.squares,
                    p.square_roots, p.cubes, p.cube_roots, p.natural_logs, p.log10s,
                    p.fractional_powers, p.log_count(), p.power_count(), p.weighted_cost);
    }
    if (!out_csv.empty()) {
        return write_file(out_csv, [&profiles](std::ostream& os) {
            os << "method,additions,subtractions,multiplications,divisions,squares,"
                  "square_roots,cubes,cube_roots,natural_logs,log10s,fractional_powers,"
                  "log_count,power_count,weighted_cost\n";
            for (const CostProfile& p : profiles) {
                os << method_name(p.method) << ',' << p.additions << ',' << p.subtractions
                   << ',' << p.multiplications << ',' << p.divisions << ',' << p.squares
                   << ',' << p.square_roots << ',' << p.cubes << ',' << p.cube_roots << ','
                   << p.natural_logs << ',' << p.log10s << ',' << p.fractional_powers << ','
                   << p.log_count() << ',' << p.power_count() << ','
                   << format_double(p.weighted_cost) << '\n';
            }
        });
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Friction-factor laboratory for rough-pipe turbulent flow: reference "
                 "solvers, explicit approximations, accuracy scans, and cost reports."};
    app.require_subcommand(1);
    app.footer(method_list_footer());

    FrictionArgs friction_args;
    auto* friction = app.add_subcommand("friction", "Friction factor at one flow condition");
    friction->add_option("--re", friction_args.reynolds, "Reynolds number")->required();
    friction->add_option("--eps", friction_args.roughness, "relative roughness [default 0]");
    friction->add_option("--method", friction_args.method, "method token [oracle]");
    friction->add_option("--format", friction_args.format, "output format [plain]")
        ->check(CLI::IsMember({"plain", "json"}));
    friction->add_option("--convention", friction_args.convention,
                         "literature transcription toggle [classical]")
        ->check(CLI::IsMember({"classical", "as-printed"}));
    friction->add_option("--a", friction_args.power_a, "power-form parameter, >= 1e5 [1e6]");
    friction->add_option("--variant", friction_args.variant, "power-form shape [eq3]")
        ->check(CLI::IsMember({"eq3", "eq5", "eq6"}));
    friction->footer(method_list_footer());

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Grid accuracy scan against the reference");
    scan->add_option("--method", scan_args.method, "method token or 'all' [all]");
    scan->add_option("--n-r", scan_args.n_reynolds, "Reynolds grid points [512]");
    scan->add_option("--n-eps", scan_args.n_roughness, "roughness grid points [512]");
    scan->add_option("--metric", scan_args.metric, "error metric [auto]")
        ->check(CLI::IsMember({"auto", "f", "u"}));
    scan->add_option("--convention", scan_args.convention,
                     "literature transcription toggle [classical]")
        ->check(CLI::IsMember({"classical", "as-printed"}));
    scan->add_option("--a", scan_args.power_a, "power-form parameter [1e6]");
    scan->add_option("--variant", scan_args.variant, "power-form shape [eq3]")
        ->check(CLI::IsMember({"eq3", "eq5", "eq6"}));
    scan->add_option("--out-csv", scan_args.out_csv, "per-point rows (single method only)");
    scan->add_option("--out-json", scan_args.out_json, "summary report path");
    scan->footer(method_list_footer());

    std::string table1_csv;
    auto* table1 = app.add_subcommand("table1", "Overflow demonstration matrix");
    table1->add_option("--out-csv", table1_csv, "CSV output path");

    Table2Args table2_args;
    auto* table2 = app.add_subcommand("table2", "Accuracy/cost comparison of all methods");
    table2->add_option("--n-r", table2_args.n_reynolds, "Reynolds grid points [512]");
    table2->add_option("--n-eps", table2_args.n_roughness, "roughness grid points [512]");
    table2->add_option("--out-csv", table2_args.out_csv, "CSV output path");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Wall-clock batch microbenchmark");
    bench->add_option("--method", bench_args.method, "method token or 'all' [all]");
    bench->add_option("--n-r", bench_args.n_reynolds, "Reynolds grid points [512]");
    bench->add_option("--n-eps", bench_args.n_roughness, "roughness grid points [512]");
    bench->add_option("--reps", bench_args.repetitions, "repetitions, minimum 10 [10]");
    bench->add_option("--out-csv", bench_args.out_csv, "CSV output path");
    bench->footer(method_list_footer());

    std::string cost_method = "all";
    std::string cost_csv;
    auto* cost = app.add_subcommand("cost", "Static operation-count cost model");
    cost->add_option("--method", cost_method, "method token or 'all' [all]");
    cost->add_option("--out-csv", cost_csv, "CSV output path");
    cost->footer(method_list_footer());

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (friction->parsed()) return cmd_friction(friction_args);
        if (scan->parsed()) return cmd_scan(scan_args);
        if (table1->parsed()) return cmd_table1(table1_csv);
        if (table2->parsed()) return cmd_table2(table2_args);
        if (bench->parsed()) return cmd_bench(bench_args);
        if (cost->parsed()) return cmd_cost(cost_method, cost_csv);
    } catch (const FormulaStageError& e) {
        std::cerr << "error: formula fault at " << e.stage << " (method "
                  << method_name(e.method) << ")\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
