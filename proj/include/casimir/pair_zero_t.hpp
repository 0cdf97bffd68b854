#pragma once

// Zero-temperature interaction of two two-level atoms A and B at distance R:
// the non-resonant imaginary-frequency integral, the resonant term present
// only when A is excited, and the closed-form London, Casimir-Polder and
// resonant near/far limits.

#include "casimir/core.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

struct PairPotentialBreakdown {
  double non_resonant = 0.0;
  double resonant = 0.0;
  double total = 0.0;
  double separation = 0.0;
};

/// -(4/9 pi) Int_0^inf omega_A omega_B d_A^2 d_B^2 / ((omega_A^2+u^2)
/// (omega_B^2+u^2)) u^6 e^{-2uR} [1/(uR)^2 + 2/(uR)^3 + 5/(uR)^4 + 6/(uR)^5
/// + 3/(uR)^6] du, by adaptive quadrature (relative tolerance 1e-9).
///
/// The u^6 prefactor is folded into the bracket, so the integrand is a
/// polynomial in u with no 0 * inf at the lower end.
double u_nonresonant_integral(const AtomSpecies& a, const AtomSpecies& b,
                              double separation,
                              const quad::Options& options = {});

/// Resonant term with A excited:
///   -(4/9) d_A^2 d_B^2 omega_A^6 / (omega_B^2 - omega_A^2)
///     * [1/(omega_A R)^2 + 1/(omega_A R)^4 + 3/(omega_A R)^6].
/// Zero for PairState::ground. Repulsive when omega_A > omega_B. Throws
/// DegeneracyError when omega_A == omega_B; the damped thermal form handles
/// that case.
double u_resonant(const AtomSpecies& a, const AtomSpecies& b, double separation,
                  PairState state);

/// London: -(2/3) d_A^2 d_B^2 / ((omega_A + omega_B) R^6).
double u_london(const AtomSpecies& a, const AtomSpecies& b, double separation);

/// Casimir-Polder: -23 / (4 pi R^7) alpha_A(0) alpha_B(0).
double u_casimir_polder(const AtomSpecies& a, const AtomSpecies& b,
                        double separation);

/// R^-6 part of u_resonant, -(4/3) d_A^2 d_B^2 / ((omega_B^2 - omega_A^2) R^6).
///
/// The commonly printed version of this limit keeps an extra omega_A^6 in
/// the numerator; that factor cancels exactly against 1/(omega_A R)^6 in
/// the full resonant term, so it is not carried here.
double u_resonant_near_limit(const AtomSpecies& a, const AtomSpecies& b,
                             double separation);

/// R^-2 part of u_resonant, -(4/9) d_A^2 d_B^2 omega_A^4 /
/// ((omega_B^2 - omega_A^2) R^2).
double u_resonant_far_limit(const AtomSpecies& a, const AtomSpecies& b,
                            double separation);

/// non_resonant + resonant at one separation.
PairPotentialBreakdown pair_potential(const AtomSpecies& a,
                                      const AtomSpecies& b, double separation,
                                      PairState state);

}  // namespace casimir
