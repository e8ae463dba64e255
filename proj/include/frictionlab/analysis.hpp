#pragma once

// Analysis engine: deterministic grid scans of every method against the
// reference solver, error-metric calibration, reproduction of the overflow
// demonstration table and the accuracy/cost comparison table, a static
// floating-point cost model, and a wall-clock microbenchmark.

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frictionlab/batch.hpp"
#include "frictionlab/core.hpp"
#include "frictionlab/literature.hpp"

namespace frictionlab {

/// Deterministic log-spaced sampling of the validated domain. Reynolds
/// points are cell centers of n_R equal log-width cells spanning (4000, 1e8);
/// the roughness axis is {0} followed by n_eps-1 log-spaced points covering
/// [1e-7, 0.05) with half-step offsets, so all strict bounds hold. Two grids
/// built with the same counts are bit-identical.
struct ScanGrid {
    std::vector<double> reynolds_points;
    std::vector<double> roughness_points;
    int n_reynolds = 0;
    int n_roughness = 0;
    std::size_t point_count() const { return reynolds_points.size() * roughness_points.size(); }
};

ScanGrid make_scan_grid(int n_reynolds = 512, int n_roughness = 512);

/// Which quantity the relative error is measured on.
enum class ErrorMetric : std::uint8_t {
    ErrorOnF,  ///< friction factor f = u^-2 (errors ~2x those on u)
    ErrorOnU,  ///< u = 1/sqrt(f), the quantity the formulas produce
};

std::string_view metric_name(ErrorMetric metric);

/// One scanned grid point (row of the error CSV).
struct ErrorRow {
    double reynolds = 0.0;
    double relative_roughness = 0.0;
    double f_ref = 0.0;
    double f_method = 0.0;     ///< NaN when the point faulted
    double error_percent = 0.0;///< NaN when the point faulted
    bool fault = false;
};

/// Scan outcome for one method on one grid.
struct ErrorReport {
    MethodId method = MethodId::Eq3;
    ErrorMetric metric = ErrorMetric::ErrorOnF;
    SignConvention convention = SignConvention::Classical;
    double max_error_percent = 0.0;
    FlowConditions argmax;
    /// Nearest-rank percentiles over non-faulting points: p50, p90, p99, p100.
    std::array<double, 4> percentiles{};
    std::size_t fault_count = 0;
    std::size_t point_count = 0;
    std::vector<ErrorRow> rows;  ///< filled only when keep_rows was requested
    double fault_fraction() const {
        return point_count == 0 ? 0.0 : static_cast<double>(fault_count) / static_cast<double>(point_count);
    }
};

/// Reference values for a grid, computed once and shared across methods.
struct OracleField {
    std::vector<double> u_ref;   ///< row-major: [i_roughness * n_R + i_reynolds]
    std::vector<double> reynolds;          ///< flattened coordinates, same layout
    std::vector<double> roughness;
};

OracleField compute_oracle_field(const ScanGrid& grid);

/// Scans one method against the reference over the grid. Oracle ids are
/// rejected (std::invalid_argument) except OracleLambert, which runs the
/// dual-oracle self-test (scored against the fixed-point reference).
/// Formula faults are recorded per point, never thrown.
ErrorReport scan_errors(MethodId method, const ScanGrid& grid, ErrorMetric metric,
                        const batch::Options& opts = {}, bool keep_rows = false,
                        const OracleField* shared_field = nullptr);

/// Outcome of the error-metric calibration step.
struct CalibrationResult {
    bool calibrated = false;
    ErrorMetric chosen = ErrorMetric::ErrorOnF;
    double eq6_max_on_f = 0.0;   ///< eq6 max error under ErrorOnF, percent
    double eq6_max_on_u = 0.0;   ///< eq6 max error under ErrorOnU, percent
    double band_low = 0.0072;    ///< calibration acceptance band, percent
    double band_high = 0.0120;
};

/// Computes eq6's max error under both metrics and selects the one landing
/// inside the calibration band. Exactly one metric must land inside; when
/// neither (or both) do, calibrated=false and both values are reported.
CalibrationResult calibrate_metric(const ScanGrid& grid,
                                   const OracleField* shared_field = nullptr);

/// One cell of the overflow demonstration table.
struct Table1Cell {
    double reynolds = 0.0;
    double relative_roughness = 0.0;
    double x = 0.0;
    bool overflow = false;  ///< naive exp-first evaluation overflowed
    double naive_w = 0.0;   ///< valid when !overflow
    double omega = 0.0;
    double y = 0.0;         ///< truncated-series approximant
};

/// The 6x5 demonstration matrix: R in {4e3,1e4,...,1e8} crossed with
/// roughness in {1e-6,1e-5,1e-4,1e-3,1e-2}. Cells appear roughness-major,
/// matching the printed layout the CSV mirrors.
std::vector<Table1Cell> reproduce_table1();

/// One row of the accuracy/cost comparison table.
struct Table2Row {
    MethodId method;
    double measured_max_percent = 0.0;
    double quoted_max_percent = 0.0;
    int log_count = 0;
    int power_count = 0;
    int total = 0;
    int total_clamond = 0;
    bool pass = false;                 ///< measured <= quoted*1.2 and faults <= 0.1%
    SignConvention convention = SignConvention::Classical;  ///< convention of the reported figure
    double fault_fraction = 0.0;
};

/// Scans every non-oracle catalog method on the grid (both conventions where
/// they differ, reporting the better one) and tabulates measured vs quoted
/// accuracy plus the published expensive-function counts.
std::vector<Table2Row> reproduce_table2(const ScanGrid& grid,
                                        const OracleField* shared_field = nullptr);

/// Static operation-class counts for one closed-form method, tallied from
/// the implemented expression, plus the published-weight cost score.
struct CostProfile {
    MethodId method;
    int additions = 0;
    int subtractions = 0;
    int multiplications = 0;
    int divisions = 0;
    int squares = 0;        ///< x*x written as a square
    int square_roots = 0;
    int cubes = 0;
    int cube_roots = 0;
    int natural_logs = 0;
    int log10s = 0;
    int fractional_powers = 0;
    double weighted_cost = 0.0;
    int log_count() const { return natural_logs + log10s; }
    int power_count() const { return fractional_powers; }
};

/// Published relative-effort weights per operation class.
struct CostWeights {
    double addition = 1.0;
    double subtraction = 1.18;
    double division = 1.35;
    double multiplication = 1.55;
    double squared = 2.18;
    double square_root = 2.29;
    double cubed = 2.38;
    double cube_root = 2.71;
    double natural_log = 2.69;
    double fractional_power = 3.32;
    double log10 = 3.37;
};

inline constexpr CostWeights kCostWeights{};

/// Static cost profile for any closed-form catalog method. The oracle ids
/// are iterative and have no static tally; they are rejected with
/// std::invalid_argument.
CostProfile cost_profile(MethodId method);

/// Wall-clock microbenchmark result. Purely informational: no cross-method
/// ordering is asserted anywhere (hardware-dependent).
struct BenchReport {
    MethodId method;
    std::size_t calls = 0;          ///< grid points evaluated per repetition
    std::size_t repetitions = 0;
    double median_ns_per_call = 0.0;
    double p10_ns_per_call = 0.0;
    double p90_ns_per_call = 0.0;
};

/// Times full-grid batch evaluation of one method, `repetitions` times
/// (minimum 10), with an optimization-proof result sink. Reports per-call
/// nanosecond percentiles across repetitions.
BenchReport benchmark(MethodId method, const ScanGrid& grid, std::size_t repetitions,
                      const batch::Options& opts = {});

// ---------------------------------------------------------------------------
// Serialization. All numbers are written with up to 17 significant digits,
// which round-trips binary64 exactly. Headers are mandatory.

/// error rows CSV: reynolds,relative_roughness,f_ref,f_method,error_percent,fault
void write_error_csv(std::ostream& os, const ErrorReport& report);

/// table1 CSV: reynolds,relative_roughness,x,naive_w,omega,y,overflow
void write_table1_csv(std::ostream& os, const std::vector<Table1Cell>& cells);

/// table2 CSV: method,measured_max_percent,quoted_max_percent,log_count,
///             power_count,total,total_clamond,pass
void write_table2_csv(std::ostream& os, const std::vector<Table2Row>& rows);

/// JSON report: {"metric": ..., "grid": {"n_R":..,"n_eps":..}, "methods":[...]}
void write_scan_json(std::ostream& os, ErrorMetric metric, const ScanGrid& grid,
                     const std::vector<ErrorReport>& reports);

/// Formats one double with %.17g (shared by all writers and the CLI).
std::string format_double(double v);

// ---------------------------------------------------------------------------
// Deterministic parallelism.

/// Number of worker threads: FRICTIONLAB_THREADS when set (clamped to >= 1),
/// otherwise min(hardware_concurrency, 8).
unsigned resolve_thread_count();

/// Runs fn(begin, end) over disjoint index sub-ranges, possibly from several
/// threads. Workers write only to disjoint outputs chosen by index, so any
/// result assembled from per-index slots is identical regardless of the
/// thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace frictionlab
