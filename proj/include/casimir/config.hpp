#pragma once

// Run configuration: a flat `key = value` text file, `#` starts a comment.
// Unknown keys, duplicate keys and malformed values are errors. See README
// for the full key list.

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/geometry.hpp"

namespace casimir {

/// Malformed configuration text; the message names the line and key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class GeometryKind { pair, surface, slab };
enum class SweepAxis { distance, temperature };
enum class SweepScale { linear, log };
enum class OutputFormat { csv, json };
enum class PairAbsorption { none, medium };

std::string_view to_string(GeometryKind kind) noexcept;
std::string_view to_string(SweepScale scale) noexcept;
std::string_view to_string(OutputFormat format) noexcept;
std::string_view to_string(PairAbsorption absorption) noexcept;

/// Name of the distance abscissa for a geometry: R, z0 or L.
std::string_view distance_axis_name(GeometryKind kind) noexcept;

struct SpeciesParams {
  double omega = 1.0;
  double d2 = 0.01;
  double gamma = 0.01;
  double density = 1e-3;
};

struct SweepRange {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  std::optional<SweepScale> scale;  // log for distances, linear for T
};

struct RunConfig {
  std::optional<GeometryKind> geometry;
  PairState state = PairState::a_excited;
  double temperature = 0.4;
  SpeciesParams a{1.1, 0.01, 0.01, 1e-3};
  SpeciesParams b{1.0, 0.01, 0.01, 1e-3};
  PairAbsorption absorption = PairAbsorption::none;
  std::optional<double> l_ph_a;
  std::optional<double> l_ph_b;
  std::optional<double> separation;  // fixed distance for temperature sweeps
  SweepAxis axis = SweepAxis::distance;
  std::optional<SweepRange> range;
  LifshitzVariant lifshitz_variant = LifshitzVariant::as_printed_tan;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output;
  std::int64_t n_max = ThermalContext::kDefaultMaxModes;
  double tail_tol = ThermalContext::kDefaultTailTol;
};

/// Parses config text; `source` is used in error messages.
RunConfig parse_config(std::istream& in, std::string_view source = "config");
RunConfig parse_config_text(std::string_view text,
                            std::string_view source = "config");
RunConfig load_config(const std::string& path);

/// Effective settings as ordered key/value pairs, using the same keys the
/// parser accepts; feeding them back through parse_config reproduces the run.
std::vector<std::pair<std::string, std::string>> config_entries(
    const RunConfig& config);

/// Sweep spacing after defaults: log for distance axes, linear for T.
SweepScale effective_scale(const RunConfig& config) noexcept;

/// "%.17g" rendering used for every number in output files.
std::string format_number(double value);

}  // namespace casimir
