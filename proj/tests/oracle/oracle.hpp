#pragma once

// Reference implementations used only by the tests. Everything here is a
// fixed-grid midpoint rule or a plain loop over terms, written out
// independently of the library's quadrature and series code so that
// agreement between the two is evidence rather than tautology. The only
// things taken from the library are the validated value types.

#include <cstdint>

#include "casimir/geometry.hpp"

namespace casimir::oracle {

struct OracleConfig {
  std::int64_t grid_points = 200'000;
  // Upper limit of u-integrals is cap_factor / (2R): the exponential drops
  // to e^{-cap_factor} there.
  double cap_factor = 60.0;
  int richardson_levels = 3;
};

/// Composite midpoint rule with `points` cells for the zero-temperature
/// non-resonant integrand on [0, cap], no extrapolation.
double midpoint_nonresonant(const AtomSpecies& a, const AtomSpecies& b,
                            double separation, std::int64_t points, double cap);

/// Midpoint on grid_points, 2x, 4x, ... cells, Richardson-extrapolated in h^2.
double oracle_nonresonant_integral(const AtomSpecies& a, const AtomSpecies& b,
                                   double separation,
                                   const OracleConfig& cfg = {});

/// Plain sum over n = 0..n_cap with half weight on n = 0.
double oracle_matsubara_sum(const AtomSpecies& a, const AtomSpecies& b,
                            double separation, double temperature,
                            std::int64_t n_cap);

/// Perturbative half-space integral by a 2D midpoint rule on an N x N grid
/// over (z, rho) in [z0, cutoff] x [0, cutoff], Richardson-extrapolated over
/// `levels` doublings.
double oracle_divergence_probe(const HalfSpaceGeometry& geom,
                               const AtomSpecies& a, double cutoff,
                               std::int64_t points, int levels = 3);

/// Slab-by-slab (width h in z) and shell-by-shell (width h in R) sum of
/// n U_r(R) over the half-space, truncated at R = 40 / gamma_ph.
double oracle_halfspace_sum(const HalfSpaceGeometry& geom, const AtomSpecies& a,
                            const ThermalContext& ctx, PairState state,
                            double shell_width);

/// Resonant part of the slab/slab force from a direct volume integral.
///
/// Measure: per unit area, energy E(L) = n_A n_B Int_0^{l_a} dz_a
/// Int_0^{l_b} dz_b P(L + z_a + z_b) with the plane/plane kernel
/// P(Z) = 2 pi Int_Z^{sqrt(Lambda^2 + Z^2)} R U(R) dR, Lambda = 1e4 (L + l_a
/// + l_b). U(R) is the thermally weighted resonant pair potential
///   p_A^e p_B^g U_r(A*, B) + p_B^e p_A^g U_r(B*, A),
/// each U_r the damped resonant term without its absorption exponential,
/// with p^e = e^{-w/T} / (1 + e^{-w/T}) and p^g = 1 - p^e. The force is
/// dE/dL by central difference with step L/1000; positive = attraction.
double oracle_slab_numeric(const SlabPairGeometry& geom,
                           const ThermalContext& ctx, PairState state,
                           int z_points = 64, int r_points = 4000);

}  // namespace casimir::oracle
