#include "casimir/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

HalfSpaceGeometry HalfSpaceGeometry::make(
    double z0, const Medium& medium, std::optional<AbsorptionModel> absorption) {
  detail::require_positive(z0, "z0");
  return HalfSpaceGeometry(z0, medium, absorption);
}

AbsorptionModel HalfSpaceGeometry::absorption() const {
  if (absorption_) return *absorption_;
  return photon_lifetime(medium_);
}

SlabPairGeometry SlabPairGeometry::make(double gap, const Medium& medium_a,
                                        const Medium& medium_b,
                                        std::optional<double> l_ph_a,
                                        std::optional<double> l_ph_b) {
  detail::require_positive(gap, "gap L");
  const bool overridden = l_ph_a.has_value() || l_ph_b.has_value();
  const double la = l_ph_a ? detail::require_positive(*l_ph_a, "l_ph_a")
                           : photon_lifetime(medium_a).l_ph();
  const double lb = l_ph_b ? detail::require_positive(*l_ph_b, "l_ph_b")
                           : photon_lifetime(medium_b).l_ph();
  return SlabPairGeometry(gap, medium_a, medium_b, la, lb, overridden);
}

SlabPairGeometry SlabPairGeometry::with_gap(double gap) const {
  detail::require_positive(gap, "gap L");
  SlabPairGeometry copy = *this;
  copy.gap_ = gap;
  return copy;
}

std::string_view to_string(LifshitzVariant variant) noexcept {
  return variant == LifshitzVariant::tanh_variant ? "tanh" : "tan";
}

LifshitzVariant parse_lifshitz_variant(std::string_view text) {
  if (text == "tan") return LifshitzVariant::as_printed_tan;
  if (text == "tanh") return LifshitzVariant::tanh_variant;
  throw DomainError("lifshitz variant must be 'tan' or 'tanh', got '" +
                    std::string(text) + "'");
}

double divergence_probe(const HalfSpaceGeometry& geom, const AtomSpecies& a,
                        double cutoff) {
  const double z0 = geom.z0();
  if (!std::isfinite(cutoff) || !(cutoff > z0)) {
    std::ostringstream os;
    os.precision(17);
    os << "cutoff must be finite and exceed z0=" << z0 << ", got " << cutoff;
    throw DomainError(os.str());
  }
  const AtomSpecies& b = geom.medium().species();
  if (a.d2() == 0.0 || b.d2() == 0.0) return 0.0;
  const double detuning = b.omega() * b.omega() - a.omega() * a.omega();
  if (detuning == 0.0) {
    throw DegeneracyError("divergence probe is singular at omega_A == omega_B");
  }
  const double prefactor = -8.0 * std::numbers::pi * geom.medium().density() *
                           a.d2() * b.d2() * std::pow(a.omega(), 4) /
                           (9.0 * detuning);
  // Int_0^cutoff rho drho / (rho^2 + z^2) = ln(1 + cutoff^2 / z^2) / 2.
  auto per_layer = [cutoff](double z) {
    const double ratio = cutoff / z;
    return 0.5 * std::log1p(ratio * ratio);
  };
  quad::Options opt;
  opt.rel_tol = 1e-12;
  return prefactor * quad::integrate(per_layer, z0, cutoff, opt).value;
}

double u_atom_halfspace_regularized(const HalfSpaceGeometry& geom,
                                    const AtomSpecies& a,
                                    const ThermalContext& ctx, PairState state,
                                    double r_max) {
  const double z0 = geom.z0();
  if (!(r_max > z0)) throw DomainError("r_max must exceed z0");
  if (!resonant_active(state)) return 0.0;
  const AbsorptionModel absorption = geom.absorption();
  if (!(absorption.gamma_ph() > 0.0)) {
    throw DomainError(
        "regularized half-space integral needs a finite photon mean free path");
  }
  const AtomSpecies& b = geom.medium().species();
  auto shell = [&](double r) {
    return r * (r - z0) * u_thermal_resonant(a, b, r, ctx, absorption, state);
  };
  quad::Options opt;
  opt.rel_tol = 1e-11;
  const double integral =
      std::isinf(r_max)
          ? quad::integrate_to_infinity(shell, z0, 2.0 / absorption.gamma_ph(),
                                        opt)
                .value
          : quad::integrate(shell, z0, r_max, opt).value;
  return 2.0 * std::numbers::pi * geom.medium().density() * integral;
}

double geometry_factor(double gap, double l_ph_a, double l_ph_b) {
  const double l = detail::require_positive(gap, "gap L");
  const double pa = detail::require_positive(l_ph_a, "l_ph_a");
  const double pb = detail::require_positive(l_ph_b, "l_ph_b");
  // Rearranged from (L+pa+pb)ln(L+pa+pb) - (L+pa)ln(L+pa) - (L+pb)ln(L+pb)
  // + L ln L so that large L does not cancel catastrophically.
  return (l + pa + pb) * std::log1p(pa / (l + pb)) - l * std::log1p(pa / l) +
         pa * std::log((l + pb) / (l + pa));
}

namespace {

double lifshitz_factor(double x, LifshitzVariant variant) {
  if (variant == LifshitzVariant::tanh_variant) return std::tanh(x);
  const double k = std::round((x - 0.5 * std::numbers::pi) / std::numbers::pi);
  const double pole = 0.5 * std::numbers::pi + k * std::numbers::pi;
  if (std::abs(x - pole) < 1e-6) {
    std::ostringstream os;
    os.precision(17);
    os << "tan(omega/2T) argument " << x << " is within 1e-6 of the pole "
       << pole;
    throw PoleError(os.str());
  }
  return std::tan(x);
}

// x^3 e^{-x/T} coth(x/2T)
double thermal_weight(double omega, double t) {
  const double boltzmann = std::exp(-omega / t);
  return omega * omega * omega * boltzmann / std::tanh(omega / (2.0 * t));
}

}  // namespace

double lifshitz_force(const SlabPairGeometry& geom, const ThermalContext& ctx,
                      LifshitzVariant variant) {
  const double t = detail::require_positive(ctx.temperature(), "temperature T");
  const AtomSpecies& a = geom.medium_a().species();
  const AtomSpecies& b = geom.medium_b().species();
  const double l = geom.gap();
  const double fa = lifshitz_factor(a.omega() / (2.0 * t), variant);
  const double fb = lifshitz_factor(b.omega() / (2.0 * t), variant);
  return 2.0 * std::numbers::pi * t * a.d2() * b.d2() /
         (9.0 * l * l * l * a.omega() * b.omega()) * fa * fb *
         geom.medium_a().density() * geom.medium_b().density();
}

ForceBreakdown slab_force(const SlabPairGeometry& geom,
                          const ThermalContext& ctx, PairState state,
                          LifshitzVariant variant) {
  const double t = detail::require_positive(ctx.temperature(), "temperature T");
  ForceBreakdown out;
  out.variant = variant;
  out.lifshitz = lifshitz_force(geom, ctx, variant);
  if (resonant_active(state)) {
    const AtomSpecies& a = geom.medium_a().species();
    const AtomSpecies& b = geom.medium_b().species();
    const double wa = a.omega();
    const double wb = b.omega();
    const double split = wb * wb - wa * wa;
    const double damping = b.gamma() * wa;
    if (split == 0.0 && damping == 0.0) {
      throw DegeneracyError(
          "slab resonant correction needs omega_A != omega_B or gamma_B > 0");
    }
    const double occupancy =
        (1.0 + std::exp(-wa / t)) * (1.0 + std::exp(-wb / t));
    const double amplitude = 8.0 * std::numbers::pi * a.d2() * b.d2() * wa *
                             wb * split * geom.medium_a().density() *
                             geom.medium_b().density() /
                             (9.0 * (split * split + damping * damping) *
                              occupancy);
    const double bracket = thermal_weight(wa, t) - thermal_weight(wb, t);
    out.resonant_correction =
        amplitude * bracket *
        geometry_factor(geom.gap(), geom.l_ph_a(), geom.l_ph_b());
  }
  out.total = out.lifshitz + out.resonant_correction;
  return out;
}

std::vector<double> slab_force_sign_changes(const SlabPairGeometry& geom,
                                            const ThermalContext& ctx,
                                            PairState state,
                                            LifshitzVariant variant,
                                            double gap_min, double gap_max,
                                            int points) {
  detail::require_positive(gap_min, "gap_min");
  if (!(gap_max > gap_min) || points < 2) {
    throw DomainError("sign-change scan needs gap_max > gap_min, points >= 2");
  }
  auto total_at = [&](double gap) {
    return slab_force(geom.with_gap(gap), ctx, state, variant).total;
  };
  std::vector<double> roots;
  const double log_min = std::log(gap_min);
  const double step = (std::log(gap_max) - log_min) / (points - 1);
  double prev_gap = gap_min;
  double prev = total_at(prev_gap);
  for (int i = 1; i < points; ++i) {
    const double gap = i == points - 1 ? gap_max : std::exp(log_min + i * step);
    const double value = total_at(gap);
    if ((prev < 0.0) != (value < 0.0)) {
      double lo = prev_gap;
      double hi = gap;
      const bool lo_negative = prev < 0.0;
      for (int iter = 0; iter < 200 && (hi - lo) > 1e-15 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if ((total_at(mid) < 0.0) == lo_negative) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_gap = gap;
    prev = value;
  }
  return roots;
}

}  // namespace casimir
