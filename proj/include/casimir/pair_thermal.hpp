#pragma once

// Finite-temperature pair potential inside an absorbing gas: the Matsubara
// sum over zeta_n = 2 pi n T, the damped resonant term, and the photon
// lifetime / mean free path of a dilute medium.

#include <cstdint>
#include <limits>

#include "casimir/core.hpp"
#include "casimir/pair_zero_t.hpp"

namespace casimir {

/// Temperature and Matsubara truncation controls.
class ThermalContext {
 public:
  static constexpr std::int64_t kDefaultMaxModes = 2'000'000;
  static constexpr double kDefaultTailTol = 1e-12;

  /// Throws DomainError for T < 0, n_max < 1 or tail_tol outside (0, 1).
  static ThermalContext make(double temperature,
                             std::int64_t n_max = kDefaultMaxModes,
                             double tail_tol = kDefaultTailTol);

  double temperature() const noexcept { return temperature_; }
  std::int64_t n_max() const noexcept { return n_max_; }
  double tail_tol() const noexcept { return tail_tol_; }

  /// zeta_n = 2 pi n T.
  double matsubara_frequency(std::int64_t n) const noexcept;

 private:
  ThermalContext(double t, std::int64_t n_max, double tail_tol) noexcept
      : temperature_(t), n_max_(n_max), tail_tol_(tail_tol) {}

  double temperature_;
  std::int64_t n_max_;
  double tail_tol_;
};

/// Photon decay rate gamma_ph and mean free path l_ph = 1 / gamma_ph (c = 1).
class AbsorptionModel {
 public:
  /// gamma_ph >= 0; gamma_ph == 0 gives an infinite mean free path.
  static AbsorptionModel from_rate(double gamma_ph);
  static AbsorptionModel transparent() noexcept { return AbsorptionModel(0.0); }

  double gamma_ph() const noexcept { return gamma_ph_; }
  double l_ph() const noexcept {
    return gamma_ph_ > 0.0 ? 1.0 / gamma_ph_
                           : std::numeric_limits<double>::infinity();
  }

 private:
  explicit AbsorptionModel(double rate) noexcept : gamma_ph_(rate) {}
  double gamma_ph_;
};

/// gamma_ph = 8 pi omega |d|^2 n / (3 gamma) for a dilute gas, reading
/// omega, |d|^2 and gamma from the medium's own species. Throws DomainError
/// if d2 == 0 or gamma == 0; use AbsorptionModel::transparent() for a
/// non-absorbing background.
AbsorptionModel photon_lifetime(const Medium& medium);

struct MatsubaraSum {
  double value = 0.0;        // energy, -2T * sum
  std::int64_t last_mode = 0;
  double tail_bound = 0.0;   // certified bound on |neglected part| (energy)
};

/// -2T Sum_n w_n alpha_A(i zeta_n) alpha_B(i zeta_n) zeta_n^6 e^{-2 zeta_n R}
/// [1/(zeta R)^2 + 2/(zeta R)^3 + 5/(zeta R)^4 + 6/(zeta R)^5 + 3/(zeta R)^6]
/// with w_0 = zero_mode_weight and w_n = 1 otherwise. The n = 0 term uses
/// its analytic limit alpha_A(0) alpha_B(0) 3 / R^6.
///
/// Summation stops once the bound
///   (4/9) d_A^2 d_B^2 omega_A omega_B P(zeta_{n+1}) e^{-2 zeta_{n+1} R}
///       / (1 - e^{-4 pi T R}),
/// P(z) = 1/R^2 + 2/(z R^3) + 5/(z^2 R^4) + 6/(z^3 R^5) + 3/(z^4 R^6),
/// on everything not yet added drops below tail_tol * |sum|. It follows from
/// alpha(i zeta) <= (2/3) d^2 omega / zeta^2 and P decreasing. Throws
/// ConvergenceError when n_max is reached first. Requires T > 0.
MatsubaraSum matsubara_nonresonant_sum(const AtomSpecies& a,
                                       const AtomSpecies& b, double separation,
                                       const ThermalContext& ctx,
                                       double zero_mode_weight = 0.5);

/// Non-resonant thermal potential (primed sum, half weight on n = 0).
/// T == 0 falls back to u_nonresonant_integral.
double u_thermal_nonresonant(const AtomSpecies& a, const AtomSpecies& b,
                             double separation, const ThermalContext& ctx);

/// Damped resonant term with A excited:
///   -(2/9) coth(omega_A / 2T) d_A^2 d_B^2 omega_A^6 (omega_B - omega_A)
///     / ((omega_B - omega_A)^2 + (gamma_B / 2)^2)
///     * [1/(omega_A R)^2 + 1/(omega_A R)^4 + 3/(omega_A R)^6]
///     * exp(-gamma_ph R / 2)
/// where gamma_B is b.gamma(). coth is replaced by its T -> 0 limit 1 at
/// T == 0. Throws DegeneracyError only if omega_A == omega_B and
/// gamma_B == 0.
double u_thermal_resonant(const AtomSpecies& a, const AtomSpecies& b,
                          double separation, const ThermalContext& ctx,
                          const AbsorptionModel& absorption, PairState state);

PairPotentialBreakdown pair_potential_thermal(const AtomSpecies& a,
                                              const AtomSpecies& b,
                                              double separation,
                                              const ThermalContext& ctx,
                                              const AbsorptionModel& absorption,
                                              PairState state);

}  // namespace casimir
