#include "casimir/sweep.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "casimir/geometry.hpp"
#include "casimir/pair_thermal.hpp"
#include "casimir/pair_zero_t.hpp"
#include "casimir/version.hpp"

namespace casimir {

std::vector<double> sweep_abscissae(double min, double max, int points,
                                    SweepScale scale) {
  if (points < 2 || !(min < max)) {
    throw DomainError("sweep needs min < max and at least 2 points");
  }
  if (scale == SweepScale::log && !(min > 0.0)) {
    throw DomainError("log-spaced sweep needs min > 0");
  }
  std::vector<double> xs(static_cast<std::size_t>(points));
  const double n = points - 1;
  for (int i = 0; i < points; ++i) {
    const double f = i / n;
    if (scale == SweepScale::log) {
      xs[i] = std::exp(std::log(min) + f * (std::log(max) - std::log(min)));
    } else {
      xs[i] = min + f * (max - min);
    }
  }
  // Exact endpoints regardless of rounding in exp/log.
  xs.front() = min;
  xs.back() = max;
  return xs;
}

std::string error_kind(const std::exception& error) {
  if (dynamic_cast<const ConfigError*>(&error)) return "ConfigError";
  if (dynamic_cast<const DomainError*>(&error)) return "DomainError";
  if (dynamic_cast<const ConvergenceError*>(&error)) return "ConvergenceError";
  if (dynamic_cast<const DegeneracyError*>(&error)) return "DegeneracyError";
  if (dynamic_cast<const PoleError*>(&error)) return "PoleError";
  return "Error";
}

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Validated physical setup for one config; evaluates component columns at
// an abscissa (a distance or a temperature).
class Model {
 public:
  explicit Model(const RunConfig& config)
      : config_(config),
        kind_(require_geometry(config)),
        a_(AtomSpecies::make(config.a.omega, config.a.d2, config.a.gamma)),
        b_(AtomSpecies::make(config.b.omega, config.b.d2, config.b.gamma)) {
    ThermalContext::make(config.temperature, config.n_max, config.tail_tol);
    if (config.axis == SweepAxis::temperature) {
      if (!config.separation) {
        throw ConfigError("separation: required when sweep.axis = T");
      }
      detail::require_positive(*config.separation, "separation");
    }
    switch (kind_) {
      case GeometryKind::pair:
        if (config.absorption == PairAbsorption::medium) {
          absorption_ =
              photon_lifetime(Medium::make(b_, config.b.density));
        }
        break;
      case GeometryKind::surface:
        absorption_ = photon_lifetime(Medium::make(b_, config.b.density));
        break;
      case GeometryKind::slab: {
        // Probe construction once so l_ph problems surface before the sweep.
        slab_ = SlabPairGeometry::make(1.0, Medium::make(a_, config.a.density),
                                       Medium::make(b_, config.b.density),
                                       config.l_ph_a, config.l_ph_b);
        if (config.axis == SweepAxis::distance) {
          detail::require_positive(config.temperature, "temperature");
        }
        break;
      }
    }
  }

  GeometryKind kind() const { return kind_; }

  std::string axis_name() const {
    return config_.axis == SweepAxis::temperature
               ? "T"
               : std::string(distance_axis_name(kind_));
  }

  std::vector<std::string> component_names() const {
    switch (kind_) {
      case GeometryKind::pair:
        return {"U_nonresonant", "U_resonant", "U_total"};
      case GeometryKind::surface:
        return {"U_resonant"};
      case GeometryKind::slab:
        return {"F_total", "F_lifshitz", "F_resonant", "F_normalized"};
    }
    return {};
  }

  void validate_abscissa(double x) const {
    if (config_.axis == SweepAxis::temperature) {
      if (kind_ == GeometryKind::slab) {
        detail::require_positive(x, "temperature T");
      } else {
        detail::require_nonnegative(x, "temperature T");
      }
    } else {
      detail::require_positive(x, axis_name());
    }
  }

  std::vector<double> evaluate(double x) const {
    const bool t_axis = config_.axis == SweepAxis::temperature;
    const double distance = t_axis ? *config_.separation : x;
    const double temperature = t_axis ? x : config_.temperature;
    const ThermalContext ctx =
        ThermalContext::make(temperature, config_.n_max, config_.tail_tol);
    switch (kind_) {
      case GeometryKind::pair: {
        PairPotentialBreakdown p;
        if (zero_temperature_pair(temperature)) {
          p = pair_potential(a_, b_, distance, config_.state);
        } else {
          p = pair_potential_thermal(
              a_, b_, distance, ctx,
              absorption_.value_or(AbsorptionModel::transparent()),
              config_.state);
        }
        return {p.non_resonant, p.resonant, p.total};
      }
      case GeometryKind::surface: {
        const auto geom = HalfSpaceGeometry::make(
            distance, Medium::make(b_, config_.b.density), absorption_);
        return {u_atom_halfspace_regularized(geom, a_, ctx, config_.state)};
      }
      case GeometryKind::slab: {
        const auto f = slab_force(slab_->with_gap(distance), ctx,
                                  config_.state, config_.lifshitz_variant);
        return {f.total, f.lifshitz, f.resonant_correction,
                f.total / std::abs(f.lifshitz)};
      }
    }
    return {};
  }

  std::vector<std::pair<std::string, std::string>> metadata() const {
    std::vector<std::pair<std::string, std::string>> m;
    m.emplace_back("casimir_version", kVersion);
    m.emplace_back("units", std::string(UnitSystem::kDescription));
    switch (kind_) {
      case GeometryKind::pair:
        m.emplace_back("sign_convention",
                       "energies in hbar*omega_ref; negative = attractive");
        m.emplace_back(
            "derived.pair_model",
            config_.axis == SweepAxis::distance &&
                    zero_temperature_pair(config_.temperature)
                ? "zero_temperature (full integral + undamped resonant term)"
                : "thermal (Matsubara sum + damped resonant term; undamped "
                  "zero-temperature form used at T=0 without absorption)");
        break;
      case GeometryKind::surface:
        m.emplace_back("sign_convention",
                       "energies in hbar*omega_ref; negative = attractive");
        m.emplace_back("derived.surface_model",
                       "n * volume integral of the damped resonant pair "
                       "potential over the half-space z >= z0");
        break;
      case GeometryKind::slab:
        m.emplace_back("sign_convention",
                       "force per unit area; positive = attraction");
        m.emplace_back("derived.normalization", "F_normalized = F_total/|F_lifshitz|");
        m.emplace_back("derived.damping",
                       "slab correction uses (gamma_B*omega_A)^2; pair "
                       "resonant term uses (gamma_B/2)^2");
        break;
    }
    m.emplace_back("derived.linewidth_binding",
                   "resonant damping uses b.gamma; photon lifetime uses the "
                   "medium species' own omega, d2, gamma, density");
    for (auto& entry : config_entries(config_)) m.push_back(std::move(entry));
    if (absorption_) {
      m.emplace_back("derived.gamma_ph", format_number(absorption_->gamma_ph()));
      m.emplace_back("derived.l_ph", format_number(absorption_->l_ph()));
    }
    if (slab_) {
      m.emplace_back("derived.l_ph_a", format_number(slab_->l_ph_a()));
      m.emplace_back("derived.l_ph_b", format_number(slab_->l_ph_b()));
      m.emplace_back("derived.l_ph_source",
                     slab_->l_ph_overridden() ? "override" : "photon_lifetime");
    }
    return m;
  }

 private:
  static GeometryKind require_geometry(const RunConfig& config) {
    if (!config.geometry) throw ConfigError("geometry: not set");
    return *config.geometry;
  }

  bool zero_temperature_pair(double temperature) const {
    return temperature == 0.0 && !absorption_;
  }

  const RunConfig& config_;
  GeometryKind kind_;
  AtomSpecies a_;
  AtomSpecies b_;
  std::optional<AbsorptionModel> absorption_;
  std::optional<SlabPairGeometry> slab_;
};

}  // namespace

SweepResult run_sweep(const RunConfig& config) {
  const Model model(config);
  if (!config.range) throw ConfigError("sweep.min/max/points: not set");
  const SweepRange& range = *config.range;
  const auto xs =
      sweep_abscissae(range.min, range.max, range.points, effective_scale(config));
  for (double x : xs) model.validate_abscissa(x);

  SweepResult result;
  result.metadata = model.metadata();
  result.columns.push_back(model.axis_name());
  for (auto& name : model.component_names()) result.columns.push_back(name);
  result.columns.emplace_back("status");

  const std::size_t width = result.columns.size() - 1;
  result.rows.reserve(xs.size());
  for (double x : xs) {
    SweepRow row;
    row.values.reserve(width);
    row.values.push_back(x);
    try {
      for (double v : model.evaluate(x)) row.values.push_back(v);
    } catch (const Error& e) {
      row.values.resize(1);
      row.values.resize(width, kNan);
      row.status = error_kind(e);
      result.diagnostics.push_back(model.axis_name() + "=" + format_number(x) +
                                   ": " + row.status + ": " + e.what());
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

PointReport eval_point(const RunConfig& config, double abscissa) {
  const Model model(config);
  model.validate_abscissa(abscissa);
  PointReport report{model.kind(), model.axis_name(), abscissa, {}};
  const auto names = model.component_names();
  const auto values = model.evaluate(abscissa);
  for (std::size_t i = 0; i < names.size(); ++i) {
    report.components.emplace_back(names[i], values[i]);
  }
  return report;
}

std::string format_point_report(const PointReport& report) {
  std::ostringstream os;
  os << to_string(report.geometry) << " " << report.axis << "="
     << format_number(report.abscissa);
  for (const auto& [name, value] : report.components) {
    os << " " << name << "=" << format_number(value);
  }
  return os.str();
}

}  // namespace casimir
