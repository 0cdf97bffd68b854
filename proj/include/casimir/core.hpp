#pragma once

// Shared value types and unit conventions.
//
// Units: hbar = c = k_B = 1. Every frequency, energy and temperature is
// measured in a caller-chosen reference frequency omega_ref; lengths are in
// c/omega_ref; squared dipole moments |d|^2 are in hbar*c*(c/omega_ref)^2 so
// that a pair potential comes out in hbar*omega_ref; number densities are in
// (omega_ref/c)^3. Changing omega_ref by a factor s multiplies the
// non-resonant energies by s and every length by 1/s. The resonant term
// keeps its published omega_A^6 numerator, one power of frequency short of
// that law, so it is invariant under the same change.

#include <string_view>

namespace casimir {

struct UnitSystem {
  static constexpr std::string_view kDescription =
      "natural units hbar=c=k_B=1; frequency, energy, temperature in omega_ref; "
      "length in c/omega_ref; d^2 in hbar*c*(c/omega_ref)^2; density in "
      "(omega_ref/c)^3";
};

/// One two-level species: transition frequency, |d_eg|^2 and linewidth.
class AtomSpecies {
 public:
  /// Throws DomainError unless omega > 0, d2 >= 0, gamma >= 0, all finite.
  static AtomSpecies make(double omega, double d2, double gamma = 0.0);

  double omega() const noexcept { return omega_; }
  double d2() const noexcept { return d2_; }
  double gamma() const noexcept { return gamma_; }

  bool operator==(const AtomSpecies&) const = default;

 private:
  AtomSpecies(double omega, double d2, double gamma) noexcept
      : omega_(omega), d2_(d2), gamma_(gamma) {}

  double omega_;
  double d2_;
  double gamma_;
};

inline AtomSpecies make_species(double omega, double d2, double gamma = 0.0) {
  return AtomSpecies::make(omega, d2, gamma);
}

/// Static polarizability (2/3) d^2 / omega of a two-level atom.
double static_polarizability(const AtomSpecies& species) noexcept;

/// A dilute gas of one species.
class Medium {
 public:
  /// Throws DomainError unless density > 0 and finite.
  static Medium make(const AtomSpecies& species, double density);

  const AtomSpecies& species() const noexcept { return species_; }
  double density() const noexcept { return density_; }

  bool operator==(const Medium&) const = default;

 private:
  Medium(const AtomSpecies& species, double density) noexcept
      : species_(species), density_(density) {}

  AtomSpecies species_;
  double density_;
};

inline Medium make_medium(const AtomSpecies& species, double density) {
  return Medium::make(species, density);
}

/// Whether atom A is excited. Every resonant term is exactly zero for
/// `ground`.
enum class PairState { ground, a_excited };

inline bool resonant_active(PairState state) noexcept {
  return state == PairState::a_excited;
}

std::string_view to_string(PairState state) noexcept;

namespace detail {

// Throws DomainError naming `what` unless value is finite and > 0.
double require_positive(double value, std::string_view what);
// Throws DomainError naming `what` unless value is finite and >= 0.
double require_nonnegative(double value, std::string_view what);

}  // namespace detail

}  // namespace casimir
