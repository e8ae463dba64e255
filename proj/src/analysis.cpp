#include "frictionlab/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "frictionlab/oracle.hpp"

namespace frictionlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Nearest-rank percentile of an ascending-sorted sample.
double nearest_rank(const std::vector<double>& sorted, double pct) {
    if (sorted.empty()) {
        return kNaN;
    }
    const double rank = std::ceil(pct / 100.0 * static_cast<double>(sorted.size()));
    std::size_t idx = rank <= 1.0 ? 0 : static_cast<std::size_t>(rank) - 1;
    idx = std::min(idx, sorted.size() - 1);
    return sorted[idx];
}

}  // namespace

// ---------------------------------------------------------------------------
// Grid construction

ScanGrid make_scan_grid(int n_reynolds, int n_roughness) {
    if (n_reynolds < 1 || n_roughness < 1) {
        throw std::invalid_argument("grid extents must be >= 1");
    }
    ScanGrid grid;
    grid.n_reynolds = n_reynolds;
    grid.n_roughness = n_roughness;
    grid.reynolds_points.reserve(static_cast<std::size_t>(n_reynolds));
    grid.roughness_points.reserve(static_cast<std::size_t>(n_roughness));

    // Cell centers of n_R equal-width cells in log space over (4000, 1e8):
    // every point is strictly inside the open interval.
    const double ln_r_low = std::log(4000.0);
    const double ln_r_span = std::log(1e8 / 4000.0);
    const double h_r = ln_r_span / static_cast<double>(n_reynolds);
    for (int i = 0; i < n_reynolds; ++i) {
        grid.reynolds_points.push_back(std::exp(ln_r_low + h_r * (static_cast<double>(i) + 0.5)));
    }

    // Roughness: the smooth-pipe limit 0, then log-spaced points covering
    // [1e-7, 0.05) with a half-step inward offset at the top so the strict
    // upper bound holds.
    grid.roughness_points.push_back(0.0);
    if (n_roughness > 1) {
        const double ln_e_low = std::log(1e-7);
        const double ln_e_span = std::log(0.05 / 1e-7);
        const double h_e = ln_e_span / static_cast<double>(n_roughness - 1);
        for (int j = 1; j < n_roughness; ++j) {
            grid.roughness_points.push_back(
                std::exp(ln_e_low + h_e * (static_cast<double>(j) - 0.5)));
        }
    }
    return grid;
}

std::string_view metric_name(ErrorMetric metric) {
    return metric == ErrorMetric::ErrorOnF ? "error_on_f" : "error_on_u";
}

// ---------------------------------------------------------------------------
// Deterministic parallelism

unsigned resolve_thread_count() {
    if (const char* env = std::getenv("FRICTIONLAB_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) {
            return static_cast<unsigned>(parsed);
        }
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return std::max(1u, std::min(hw == 0 ? 1u : hw, 8u));
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    if (count == 0) {
        return;
    }
    const unsigned workers = resolve_thread_count();
    std::size_t chunk = (count + workers - 1) / workers;
    // Chunks start at multiples of 64 so each index lands in the same SIMD
    // block no matter how many workers run; results stay bit-identical
    // across thread counts.
    chunk = ((chunk + 63) / 64) * 64;
    if (workers <= 1 || chunk >= count) {
        fn(0, count);
        return;
    }

    std::vector<std::thread> pool;
    std::mutex error_mutex;
    std::exception_ptr first_error;
    for (std::size_t begin = 0; begin < count; begin += chunk) {
        const std::size_t end = std::min(begin + chunk, count);
        pool.emplace_back([&, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& worker : pool) {
        worker.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

// ---------------------------------------------------------------------------
// Reference field and scans

OracleField compute_oracle_field(const ScanGrid& grid) {
    OracleField field;
    const std::size_t n = grid.point_count();
    field.u_ref.resize(n);
    field.reynolds.resize(n);
    field.roughness.resize(n);
    for (int j = 0; j < grid.n_roughness; ++j) {
        for (int i = 0; i < grid.n_reynolds; ++i) {
            const std::size_t k =
                static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.n_reynolds) +
                static_cast<std::size_t>(i);
            field.reynolds[k] = grid.reynolds_points[static_cast<std::size_t>(i)];
            field.roughness[k] = grid.roughness_points[static_cast<std::size_t>(j)];
        }
    }
    parallel_for(n, [&field](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            field.u_ref[k] =
                friction_reference({field.reynolds[k], field.roughness[k]}).inverse_sqrt;
        }
    });
    return field;
}

ErrorReport scan_errors(MethodId method, const ScanGrid& grid, ErrorMetric metric,
                        const batch::Options& opts, bool keep_rows,
                        const OracleField* shared_field) {
    if (method == MethodId::OracleFixedPoint) {
        throw std::invalid_argument("cannot score the reference against itself");
    }

    OracleField local_field;
    if (shared_field == nullptr) {
        local_field = compute_oracle_field(grid);
        shared_field = &local_field;
    }
    const OracleField& field = *shared_field;
    const std::size_t n = field.u_ref.size();

    std::vector<double> u_method(n);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        const std::size_t len = end - begin;
        batch::eval_u(method, std::span(field.reynolds).subspan(begin, len),
                      std::span(field.roughness).subspan(begin, len),
                      std::span(u_method).subspan(begin, len), opts);
    });

    ErrorReport report;
    report.method = method;
    report.metric = metric;
    report.convention = opts.convention;
    report.point_count = n;
    report.max_error_percent = kNaN;
    if (keep_rows) {
        report.rows.reserve(n);
    }

    std::vector<double> errors;
    errors.reserve(n);
    double max_err = -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double u_ref = field.u_ref[k];
        const double f_ref = 1.0 / (u_ref * u_ref);
        const double u = u_method[k];
        const bool fault = !std::isfinite(u) || u <= 0.0;
        double err = kNaN;
        double f_method = kNaN;
        if (!fault) {
            f_method = 1.0 / (u * u);
            err = metric == ErrorMetric::ErrorOnF
                      ? relative_error_percent(f_method, f_ref)
                      : relative_error_percent(u, u_ref);
            errors.push_back(err);
            if (err > max_err) {
                max_err = err;
                report.argmax = {field.reynolds[k], field.roughness[k]};
            }
        } else {
            ++report.fault_count;
        }
        if (keep_rows) {
            report.rows.push_back({field.reynolds[k], field.roughness[k], f_ref,
                                   f_method, err, fault});
        }
    }

    std::sort(errors.begin(), errors.end());
    report.percentiles = {nearest_rank(errors, 50.0), nearest_rank(errors, 90.0),
                          nearest_rank(errors, 99.0), nearest_rank(errors, 100.0)};
    if (!errors.empty()) {
        report.max_error_percent = errors.back();
    }
    return report;
}

CalibrationResult calibrate_metric(const ScanGrid& grid, const OracleField* shared_field) {
    OracleField local_field;
    if (shared_field == nullptr) {
        local_field = compute_oracle_field(grid);
        shared_field = &local_field;
    }
    CalibrationResult result;
    result.eq6_max_on_f =
        scan_errors(MethodId::Eq6, grid, ErrorMetric::ErrorOnF, {}, false, shared_field)
            .max_error_percent;
    result.eq6_max_on_u =
        scan_errors(MethodId::Eq6, grid, ErrorMetric::ErrorOnU, {}, false, shared_field)
            .max_error_percent;
    const bool f_inside =
        result.eq6_max_on_f > result.band_low && result.eq6_max_on_f < result.band_high;
    const bool u_inside =
        result.eq6_max_on_u > result.band_low && result.eq6_max_on_u < result.band_high;
    result.calibrated = f_inside != u_inside;
    result.chosen = f_inside ? ErrorMetric::ErrorOnF : ErrorMetric::ErrorOnU;
    if (!result.calibrated) {
        result.chosen = ErrorMetric::ErrorOnF;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Demonstration tables

std::vector<Table1Cell> reproduce_table1() {
    constexpr double kReynoldsLadder[] = {4e3, 1e4, 1e5, 1e6, 1e7, 1e8};
    constexpr double kRoughnessLadder[] = {1e-6, 1e-5, 1e-4, 1e-3, 1e-2};
    std::vector<Table1Cell> cells;
    cells.reserve(30);
    for (const double eps : kRoughnessLadder) {
        for (const double reynolds : kReynoldsLadder) {
            Table1Cell cell;
            cell.reynolds = reynolds;
            cell.relative_roughness = eps;
            cell.x = compute_x({reynolds, eps});
            const NaiveWResult naive = naive_w_exp(cell.x);
            cell.overflow = naive.overflow;
            cell.naive_w = naive.overflow ? kNaN : naive.value;
            cell.omega = wright_omega(cell.x);
            cell.y = series_y(cell.x);
            cells.push_back(cell);
        }
    }
    return cells;
}

namespace {

/// Lower scores win: a variant with an acceptable fault rate always beats one
/// without, then the smaller worst-case error wins.
std::pair<int, double> convention_score(const ErrorReport& report) {
    const double measured = std::isnan(report.max_error_percent)
                                ? std::numeric_limits<double>::infinity()
                                : report.max_error_percent;
    return {report.fault_fraction() > 0.001 ? 1 : 0, measured};
}

}  // namespace

std::vector<Table2Row> reproduce_table2(const ScanGrid& grid,
                                        const OracleField* shared_field) {
    OracleField local_field;
    if (shared_field == nullptr) {
        local_field = compute_oracle_field(grid);
        shared_field = &local_field;
    }

    const CalibrationResult calibration = calibrate_metric(grid, shared_field);
    const ErrorMetric metric = calibration.chosen;

    // Rows ordered by quoted accuracy, best first.
    constexpr MethodId kRowOrder[] = {
        MethodId::Vatankhah, MethodId::Eq6, MethodId::Eq5, MethodId::Eq3,
        MethodId::Eq4, MethodId::Buzzelli, MethodId::ZigrangSylvester,
        MethodId::Serghides, MethodId::Romeo, MethodId::VatankhahKouchakzadeh,
        MethodId::Barr, MethodId::SerghidesSimple, MethodId::Chen,
        MethodId::Eq3OneLog, MethodId::Fang, MethodId::Papaevangelou,
    };

    std::vector<Table2Row> rows;
    rows.reserve(std::size(kRowOrder));
    for (const MethodId id : kRowOrder) {
        batch::Options opts;
        opts.convention = SignConvention::Classical;
        ErrorReport best = scan_errors(id, grid, metric, opts, false, shared_field);
        if (has_sign_toggle(id)) {
            opts.convention = SignConvention::AsPrinted;
            ErrorReport printed = scan_errors(id, grid, metric, opts, false, shared_field);
            if (convention_score(printed) < convention_score(best)) {
                best = std::move(printed);
            }
        }

        const FormulaMetadata meta = formula_metadata(id);
        Table2Row row;
        row.method = id;
        row.measured_max_percent = best.max_error_percent;
        row.quoted_max_percent = meta.quoted_max_error_percent;
        row.log_count = meta.log_count;
        row.power_count = meta.power_count;
        row.total = meta.total();
        row.total_clamond = meta.total_clamond();
        row.convention = best.convention;
        row.fault_fraction = best.fault_fraction();
        row.pass = std::isfinite(best.max_error_percent) &&
                   best.max_error_percent <= meta.quoted_max_error_percent * 1.2 &&
                   row.fault_fraction <= 0.001;
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Static cost model

namespace {

double weighted(const CostProfile& p) {
    const CostWeights& w = kCostWeights;
    return p.additions * w.addition + p.subtractions * w.subtraction +
           p.multiplications * w.multiplication + p.divisions * w.division +
           p.squares * w.squared + p.square_roots * w.square_root +
           p.cubes * w.cubed + p.cube_roots * w.cube_root +
           p.natural_logs * w.natural_log + p.log10s * w.log10 +
           p.fractional_powers * w.fractional_power;
}

}  // namespace

CostProfile cost_profile(MethodId method) {
    CostProfile p;
    p.method = method;
    // Tallies follow the implemented classical-path expressions, operation by
    // operation, including constant folds a compiler could not remove.
    switch (method) {
        case MethodId::Eq3:
            p.additions = 2; p.subtractions = 2; p.multiplications = 3;
            p.divisions = 2; p.natural_logs = 2;
            break;
        case MethodId::Eq4:
            p.additions = 2; p.subtractions = 4; p.multiplications = 5;
            p.divisions = 3; p.fractional_powers = 2;
            break;
        case MethodId::Eq5:
            p.additions = 3; p.subtractions = 2; p.multiplications = 3;
            p.divisions = 2; p.natural_logs = 2;
            break;
        case MethodId::Eq6:
            p.additions = 3; p.subtractions = 3; p.multiplications = 3;
            p.divisions = 3; p.squares = 1; p.natural_logs = 2;
            break;
        case MethodId::Eq3OneLog:
            p.additions = 8; p.subtractions = 6; p.multiplications = 15;
            p.divisions = 5; p.squares = 1; p.natural_logs = 1;
            break;
        case MethodId::Buzzelli:
            p.additions = 4; p.subtractions = 2; p.multiplications = 5;
            p.divisions = 5; p.square_roots = 1; p.natural_logs = 1; p.log10s = 1;
            break;
        case MethodId::ZigrangSylvester:
            p.additions = 1; p.subtractions = 2; p.multiplications = 3;
            p.divisions = 4; p.log10s = 3;
            break;
        case MethodId::Serghides:
            p.additions = 4; p.subtractions = 3; p.multiplications = 6;
            p.divisions = 5; p.squares = 1; p.log10s = 3;
            break;
        case MethodId::SerghidesSimple:
            p.additions = 3; p.subtractions = 3; p.multiplications = 4;
            p.divisions = 4; p.squares = 1; p.log10s = 2;
            break;
        case MethodId::Romeo:
            p.additions = 1; p.subtractions = 2; p.multiplications = 3;
            p.divisions = 6; p.fractional_powers = 2; p.log10s = 3;
            break;
        case MethodId::VatankhahKouchakzadeh:
            p.additions = 2; p.subtractions = 1; p.multiplications = 4;
            p.divisions = 2; p.fractional_powers = 1; p.natural_logs = 2;
            break;
        case MethodId::Barr:
            p.additions = 2; p.multiplications = 4; p.divisions = 4;
            p.fractional_powers = 2; p.log10s = 2;
            break;
        case MethodId::Chen:
            p.additions = 1; p.subtractions = 1; p.multiplications = 2;
            p.divisions = 4; p.fractional_powers = 2; p.log10s = 2;
            break;
        case MethodId::Fang:
            p.additions = 1; p.subtractions = 1; p.multiplications = 1;
            p.divisions = 4; p.squares = 1; p.square_roots = 1;
            p.fractional_powers = 3; p.natural_logs = 1;
            break;
        case MethodId::Papaevangelou:
            p.additions = 1; p.subtractions = 2; p.multiplications = 1;
            p.divisions = 4; p.squares = 3; p.square_roots = 1;
            p.fractional_powers = 1; p.log10s = 2;
            break;
        case MethodId::Vatankhah:
            p.additions = 5; p.subtractions = 1; p.multiplications = 8;
            p.divisions = 5; p.fractional_powers = 1; p.natural_logs = 3;
            break;
        default:
            throw std::invalid_argument("iterative reference methods have no static cost tally");
    }
    p.weighted_cost = weighted(p);
    return p;
}

// ---------------------------------------------------------------------------
// Microbenchmark

namespace {

void consume(const double* data) {
    asm volatile("" : : "g"(data) : "memory");
}

}  // namespace

BenchReport benchmark(MethodId method, const ScanGrid& grid, std::size_t repetitions,
                      const batch::Options& opts) {
    const OracleField field = [&grid, method] {
        // Benchmarks need only the flattened coordinates; the reference
        // solutions are irrelevant unless we are timing the oracle itself.
        OracleField f;
        const std::size_t n = grid.point_count();
        f.reynolds.resize(n);
        f.roughness.resize(n);
        f.u_ref.assign(n, 0.0);
        for (int j = 0; j < grid.n_roughness; ++j) {
            for (int i = 0; i < grid.n_reynolds; ++i) {
                const std::size_t k = static_cast<std::size_t>(j) *
                                          static_cast<std::size_t>(grid.n_reynolds) +
                                      static_cast<std::size_t>(i);
                f.reynolds[k] = grid.reynolds_points[static_cast<std::size_t>(i)];
                f.roughness[k] = grid.roughness_points[static_cast<std::size_t>(j)];
            }
        }
        (void)method;
        return f;
    }();

    const std::size_t n = field.reynolds.size();
    std::vector<double> out(n);
    const std::size_t reps = std::max<std::size_t>(repetitions, 10);

    // One untimed warm-up pass to fault in pages and settle the caches.
    batch::eval_u(method, field.reynolds, field.roughness, out, opts);
    consume(out.data());

    std::vector<double> ns_per_call(reps);
    for (std::size_t rep = 0; rep < reps; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        batch::eval_u(method, field.reynolds, field.roughness, out, opts);
        consume(out.data());
        const auto stop = std::chrono::steady_clock::now();
        const double ns =
            static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        ns_per_call[rep] = ns / static_cast<double>(n);
    }
    std::sort(ns_per_call.begin(), ns_per_call.end());

    BenchReport report;
    report.method = method;
    report.calls = n;
    report.repetitions = reps;
    report.p10_ns_per_call = nearest_rank(ns_per_call, 10.0);
    report.median_ns_per_call = nearest_rank(ns_per_call, 50.0);
    report.p90_ns_per_call = nearest_rank(ns_per_call, 90.0);
    return report;
}

// ---------------------------------------------------------------------------
// Serialization

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

void write_error_csv(std::ostream& os, const ErrorReport& report) {
    os << "reynolds,relative_roughness,f_ref,f_method,error_percent,fault\n";
    for (const ErrorRow& row : report.rows) {
        os << format_double(row.reynolds) << ',' << format_double(row.relative_roughness)
           << ',' << format_double(row.f_ref) << ',' << format_double(row.f_method) << ','
           << format_double(row.error_percent) << ',' << (row.fault ? 1 : 0) << '\n';
    }
}

void write_table1_csv(std::ostream& os, const std::vector<Table1Cell>& cells) {
    os << "reynolds,relative_roughness,x,naive_w,omega,y,overflow\n";
    for (const Table1Cell& cell : cells) {
        os << format_double(cell.reynolds) << ',' << format_double(cell.relative_roughness)
           << ',' << format_double(cell.x) << ',' << format_double(cell.naive_w) << ','
           << format_double(cell.omega) << ',' << format_double(cell.y) << ','
           << (cell.overflow ? 1 : 0) << '\n';
    }
}

void write_table2_csv(std::ostream& os, const std::vector<Table2Row>& rows) {
    os << "method,measured_max_percent,quoted_max_percent,log_count,power_count,"
          "total,total_clamond,pass\n";
    for (const Table2Row& row : rows) {
        os << method_name(row.method) << ',' << format_double(row.measured_max_percent)
           << ',' << format_double(row.quoted_max_percent) << ',' << row.log_count << ','
           << row.power_count << ',' << row.total << ',' << row.total_clamond << ','
           << (row.pass ? 1 : 0) << '\n';
    }
}

void write_scan_json(std::ostream& os, ErrorMetric metric, const ScanGrid& grid,
                     const std::vector<ErrorReport>& reports) {
    nlohmann::ordered_json doc;
    doc["metric"] = metric_name(metric);
    doc["grid"] = {{"n_R", grid.n_reynolds}, {"n_eps", grid.n_roughness}};
    doc["methods"] = nlohmann::ordered_json::array();
    for (const ErrorReport& report : reports) {
        nlohmann::ordered_json entry;
        entry["method"] = method_name(report.method);
        entry["convention"] =
            report.convention == SignConvention::Classical ? "classical" : "as-printed";
        entry["max_error_percent"] = report.max_error_percent;
        entry["argmax"] = {{"reynolds", report.argmax.reynolds},
                           {"relative_roughness", report.argmax.relative_roughness}};
        entry["percentiles"] = {{"p50", report.percentiles[0]},
                                {"p90", report.percentiles[1]},
                                {"p99", report.percentiles[2]},
                                {"p100", report.percentiles[3]}};
        entry["fault_count"] = report.fault_count;
        entry["point_count"] = report.point_count;
        doc["methods"].push_back(std::move(entry));
    }
    os << doc.dump(2) << '\n';
}

}  // namespace frictionlab
