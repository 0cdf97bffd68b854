#pragma once

// Sweeps and single-point evaluations driven by a RunConfig, plus CSV/JSON
// emission. Rows are produced in abscissa order.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "casimir/config.hpp"

namespace casimir {

struct SweepRow {
  std::vector<double> values;  // abscissa first, then component columns
  std::string status = "ok";   // error class name when the point failed
};

struct SweepResult {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;  // includes the trailing "status"
  std::vector<SweepRow> rows;
  std::vector<std::string> diagnostics;  // one per failed row
  int failures() const noexcept { return static_cast<int>(diagnostics.size()); }
};

/// Grid of `points` abscissae from min to max inclusive.
std::vector<double> sweep_abscissae(double min, double max, int points,
                                    SweepScale scale);

/// Validates the whole config (throws ConfigError / DomainError before any
/// computation), then evaluates every point. Per-point computation errors
/// are recorded in the row's status column and in `diagnostics`.
SweepResult run_sweep(const RunConfig& config);

struct PointReport {
  GeometryKind geometry;
  std::string axis;
  double abscissa;
  std::vector<std::pair<std::string, double>> components;
};

/// Evaluates one abscissa; computation errors propagate as exceptions.
PointReport eval_point(const RunConfig& config, double abscissa);

/// "pair R=1 non_resonant=... resonant=... total=..."
std::string format_point_report(const PointReport& report);

void write_csv(std::ostream& out, const SweepResult& result);
void write_json(std::ostream& out, const SweepResult& result);
void write_result(std::ostream& out, const SweepResult& result,
                  OutputFormat format);

/// Class name of a library error ("DomainError", "PoleError", ...).
std::string error_kind(const std::exception& error);

}  // namespace casimir
