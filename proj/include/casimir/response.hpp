#pragma once

// Imaginary-frequency polarizability of an isotropic two-level atom,
//
//   alpha(iu) = (2/3) |d|^2 omega / (omega^2 + u^2).
//
// The factor 2/3 is fixed by the zero-temperature pair integral, whose
// kernel carries the coefficient 4/(9 pi):
//
//   (1/pi) alpha_A(iu) alpha_B(iu)
//       = (4 / 9 pi) omega_A omega_B |d_A|^2 |d_B|^2
//         / ((omega_A^2 + u^2)(omega_B^2 + u^2)).
//
// The same scalar form is used for both the ground-state and the excited
// partner in the Matsubara sum; no separate excited-state response (sign or
// population factor) is modelled.

#include "casimir/core.hpp"

namespace casimir {

/// alpha(iu) for u >= 0. Throws DomainError on negative or non-finite u.
double alpha_iu(const AtomSpecies& species, double u);

/// alpha(0) = (2/3) d^2 / omega; bitwise equal to alpha_iu(species, 0).
double alpha_static(const AtomSpecies& species) noexcept;

class Polarizability {
 public:
  explicit Polarizability(const AtomSpecies& species) noexcept
      : species_(species) {}

  double at(double u) const { return alpha_iu(species_, u); }
  double static_value() const noexcept { return alpha_static(species_); }
  const AtomSpecies& species() const noexcept { return species_; }

 private:
  AtomSpecies species_;
};

}  // namespace casimir
