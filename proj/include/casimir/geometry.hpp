#pragma once

// Volume integrals of pair potentials: the atom/half-space integral in its
// divergent perturbative form and its absorption-regularized form, the
// closed-form slab/slab force, and the high-temperature Lifshitz force.
//
// Forces are per unit area, positive = attraction.

#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "casimir/core.hpp"
#include "casimir/pair_thermal.hpp"

namespace casimir {

/// Atom A at distance z0 from the surface of a half-space filled with gas.
class HalfSpaceGeometry {
 public:
  static HalfSpaceGeometry make(
      double z0, const Medium& medium,
      std::optional<AbsorptionModel> absorption = std::nullopt);

  double z0() const noexcept { return z0_; }
  const Medium& medium() const noexcept { return medium_; }
  /// The override if one was given, otherwise photon_lifetime(medium()).
  AbsorptionModel absorption() const;

 private:
  HalfSpaceGeometry(double z0, const Medium& medium,
                    std::optional<AbsorptionModel> absorption)
      : z0_(z0), medium_(medium), absorption_(absorption) {}

  double z0_;
  Medium medium_;
  std::optional<AbsorptionModel> absorption_;
};

/// Two gas slabs facing each other across a gap L. Each slab only interacts
/// through a layer as thick as its photon mean free path.
class SlabPairGeometry {
 public:
  static SlabPairGeometry make(double gap, const Medium& medium_a,
                               const Medium& medium_b,
                               std::optional<double> l_ph_a = std::nullopt,
                               std::optional<double> l_ph_b = std::nullopt);

  double gap() const noexcept { return gap_; }
  const Medium& medium_a() const noexcept { return medium_a_; }
  const Medium& medium_b() const noexcept { return medium_b_; }
  double l_ph_a() const noexcept { return l_ph_a_; }
  double l_ph_b() const noexcept { return l_ph_b_; }
  bool l_ph_overridden() const noexcept { return overridden_; }

  SlabPairGeometry with_gap(double gap) const;

 private:
  SlabPairGeometry(double gap, const Medium& a, const Medium& b, double la,
                   double lb, bool overridden)
      : gap_(gap), medium_a_(a), medium_b_(b), l_ph_a_(la), l_ph_b_(lb),
        overridden_(overridden) {}

  double gap_;
  Medium medium_a_;
  Medium medium_b_;
  double l_ph_a_;
  double l_ph_b_;
  bool overridden_;
};

enum class LifshitzVariant { as_printed_tan, tanh_variant };

std::string_view to_string(LifshitzVariant variant) noexcept;
/// Accepts "tan" and "tanh"; throws DomainError otherwise.
LifshitzVariant parse_lifshitz_variant(std::string_view text);

struct ForceBreakdown {
  double lifshitz = 0.0;
  double resonant_correction = 0.0;
  double total = 0.0;
  LifshitzVariant variant = LifshitzVariant::as_printed_tan;
};

/// Pairwise far-zone resonant potential integrated over the half-space with
/// the bare R^-2 law and no absorption:
///   -(8 pi n d_A^2 d_B^2 omega_A^4 / (9 (omega_B^2 - omega_A^2)))
///     Int_{z0}^{cutoff} dz Int_0^{cutoff} rho drho / (rho^2 + z^2).
/// The rho integral is done in closed form, the z integral numerically. The
/// result grows linearly with the cutoff; it never converges.
double divergence_probe(const HalfSpaceGeometry& geom, const AtomSpecies& a,
                        double cutoff);

/// n Int_{z >= z0} U_r(R) dV with the damped resonant potential (all three
/// distance terms and exp(-gamma_ph R / 2)). Planar symmetry reduces the
/// volume integral to 2 pi n Int_{z0}^{r_max} R (R - z0) U_r(R) dR, done
/// adaptively. Zero for PairState::ground. Requires gamma_ph > 0.
double u_atom_halfspace_regularized(
    const HalfSpaceGeometry& geom, const AtomSpecies& a,
    const ThermalContext& ctx, PairState state,
    double r_max = std::numeric_limits<double>::infinity());

/// Int_0^{p_a} Int_0^{p_b} dz_a dz_b / (L + z_a + z_b).
double geometry_factor(double gap, double l_ph_a, double l_ph_b);

/// G(L, L_ph) = (2 L_ph + L) ln((2 L_ph + L)/(L_ph + L)) - L ln((L_ph + L)/L).
inline double geometry_factor(double gap, double l_ph) {
  return geometry_factor(gap, l_ph, l_ph);
}

/// (2 pi T d_A^2 d_B^2 / (9 L^3 omega_A omega_B)) f(omega_A/2T) f(omega_B/2T)
/// n_A n_B with f = tan (as printed) or tanh. Throws PoleError if a tan
/// argument is within 1e-6 of pi/2 + k pi.
double lifshitz_force(const SlabPairGeometry& geom, const ThermalContext& ctx,
                      LifshitzVariant variant = LifshitzVariant::as_printed_tan);

/// Lifshitz force plus the thermal resonant correction
///   8 pi d_A^2 d_B^2 omega_A omega_B (omega_B^2 - omega_A^2) n_A n_B
///   / (9 ((omega_B^2 - omega_A^2)^2 + (gamma_B omega_A)^2)
///        (1 + e^{-omega_A/T})(1 + e^{-omega_B/T}))
///   * [omega_A^3 e^{-omega_A/T} coth(omega_A/2T)
///      - omega_B^3 e^{-omega_B/T} coth(omega_B/2T)]
///   * G(L, l_ph_a, l_ph_b).
/// Note the damping enters as (gamma_B omega_A)^2 here, not (gamma_B/2)^2 as
/// in u_thermal_resonant. PairState::ground switches the correction off.
ForceBreakdown slab_force(
    const SlabPairGeometry& geom, const ThermalContext& ctx, PairState state,
    LifshitzVariant variant = LifshitzVariant::as_printed_tan);

/// Gaps in [gap_min, gap_max] where slab_force().total changes sign, located
/// on a log grid of `points` and refined by bisection.
std::vector<double> slab_force_sign_changes(
    const SlabPairGeometry& geom, const ThermalContext& ctx, PairState state,
    LifshitzVariant variant, double gap_min, double gap_max, int points);

}  // namespace casimir
