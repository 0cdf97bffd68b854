#include "casimir/pair_thermal.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/response.hpp"

namespace casimir {

ThermalContext ThermalContext::make(double temperature, std::int64_t n_max,
                                    double tail_tol) {
  detail::require_nonnegative(temperature, "temperature T");
  if (n_max < 1) {
    throw DomainError("n_max must be a positive integer, got " +
                      std::to_string(n_max));
  }
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw DomainError("tail_tol must lie in (0, 1)");
  }
  return ThermalContext(temperature, n_max, tail_tol);
}

double ThermalContext::matsubara_frequency(std::int64_t n) const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(n) * temperature_;
}

AbsorptionModel AbsorptionModel::from_rate(double gamma_ph) {
  detail::require_nonnegative(gamma_ph, "gamma_ph");
  return AbsorptionModel(gamma_ph);
}

AbsorptionModel photon_lifetime(const Medium& medium) {
  const AtomSpecies& s = medium.species();
  if (s.d2() == 0.0) {
    throw DomainError("photon lifetime needs d2 > 0 (transparent medium)");
  }
  if (s.gamma() == 0.0) {
    throw DomainError("photon lifetime needs a linewidth gamma > 0");
  }
  const double rate = 8.0 * std::numbers::pi * s.omega() * s.d2() *
                      medium.density() / (3.0 * s.gamma());
  return AbsorptionModel::from_rate(rate);
}

MatsubaraSum matsubara_nonresonant_sum(const AtomSpecies& a,
                                       const AtomSpecies& b, double separation,
                                       const ThermalContext& ctx,
                                       double zero_mode_weight) {
  const double r = detail::require_positive(separation, "separation R");
  const double t = detail::require_positive(ctx.temperature(), "temperature T");
  MatsubaraSum out;
  if (a.d2() == 0.0 || b.d2() == 0.0) return out;

  const double r2 = r * r;
  const double r3 = r2 * r;
  const double r4 = r2 * r2;
  const double r5 = r4 * r;
  const double r6 = r3 * r3;

  double sum = zero_mode_weight * alpha_static(a) * alpha_static(b) * 3.0 / r6;

  const double envelope =
      (4.0 / 9.0) * a.d2() * b.d2() * a.omega() * b.omega();
  const double geometric = -std::expm1(-4.0 * std::numbers::pi * t * r);
  auto tail_from = [&](double zeta) {
    const double z = zeta * r;
    const double p = (1.0 + (2.0 + (5.0 + (6.0 + 3.0 / z) / z) / z) / z) / r2;
    return envelope * p * std::exp(-2.0 * zeta * r) / geometric;
  };

  for (std::int64_t n = 1; n <= ctx.n_max(); ++n) {
    const double zeta = ctx.matsubara_frequency(n);
    const double poly =
        (((zeta / r2 + 2.0 / r3) * zeta + 5.0 / r4) * zeta + 6.0 / r5) * zeta +
        3.0 / r6;
    sum += alpha_iu(a, zeta) * alpha_iu(b, zeta) * poly *
           std::exp(-2.0 * zeta * r);
    const double tail = tail_from(ctx.matsubara_frequency(n + 1));
    if (tail <= ctx.tail_tol() * std::abs(sum)) {
      out.value = -2.0 * t * sum;
      out.last_mode = n;
      out.tail_bound = 2.0 * t * tail;
      return out;
    }
  }
  std::ostringstream os;
  os.precision(6);
  os << "Matsubara sum at T=" << t << ", R=" << r << " not converged after "
     << ctx.n_max() << " modes";
  throw ConvergenceError(os.str());
}

double u_thermal_nonresonant(const AtomSpecies& a, const AtomSpecies& b,
                             double separation, const ThermalContext& ctx) {
  detail::require_positive(separation, "separation R");
  if (ctx.temperature() == 0.0) {
    return u_nonresonant_integral(a, b, separation);
  }
  return matsubara_nonresonant_sum(a, b, separation, ctx, 0.5).value;
}

double u_thermal_resonant(const AtomSpecies& a, const AtomSpecies& b,
                          double separation, const ThermalContext& ctx,
                          const AbsorptionModel& absorption, PairState state) {
  const double r = detail::require_positive(separation, "separation R");
  if (!resonant_active(state)) return 0.0;

  const double detuning = b.omega() - a.omega();
  const double half_width = 0.5 * b.gamma();
  if (detuning == 0.0 && half_width == 0.0) {
    throw DegeneracyError(
        "damped resonant term needs omega_A != omega_B or gamma_B > 0");
  }
  const double t = ctx.temperature();
  const double coth = t == 0.0 ? 1.0 : 1.0 / std::tanh(a.omega() / (2.0 * t));
  const double lorentz =
      detuning / (detuning * detuning + half_width * half_width);
  const double x2 = 1.0 / (a.omega() * r * a.omega() * r);
  const double bracket = x2 + x2 * x2 + 3.0 * x2 * x2 * x2;
  const double undamped = -(2.0 / 9.0) * coth * a.d2() * b.d2() *
                          std::pow(a.omega(), 6) * lorentz * bracket;
  return undamped * std::exp(-0.5 * absorption.gamma_ph() * r);
}

PairPotentialBreakdown pair_potential_thermal(const AtomSpecies& a,
                                              const AtomSpecies& b,
                                              double separation,
                                              const ThermalContext& ctx,
                                              const AbsorptionModel& absorption,
                                              PairState state) {
  PairPotentialBreakdown out;
  out.separation = separation;
  out.non_resonant = u_thermal_nonresonant(a, b, separation, ctx);
  out.resonant = u_thermal_resonant(a, b, separation, ctx, absorption, state);
  out.total = out.non_resonant + out.resonant;
  return out;
}

}  // namespace casimir
