#include "casimir/core.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

namespace detail {

double require_positive(double value, std::string_view what) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << what << " must be finite and > 0, got " << value;
    throw DomainError(os.str());
  }
  return value;
}

double require_nonnegative(double value, std::string_view what) {
  if (!std::isfinite(value) || value < 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << what << " must be finite and >= 0, got " << value;
    throw DomainError(os.str());
  }
  return value;
}

}  // namespace detail

AtomSpecies AtomSpecies::make(double omega, double d2, double gamma) {
  detail::require_positive(omega, "omega");
  detail::require_nonnegative(d2, "d2");
  detail::require_nonnegative(gamma, "gamma");
  return AtomSpecies(omega, d2, gamma);
}

double static_polarizability(const AtomSpecies& species) noexcept {
  return (2.0 / 3.0) * species.d2() / species.omega();
}

Medium Medium::make(const AtomSpecies& species, double density) {
  detail::require_positive(density, "density");
  return Medium(species, density);
}

std::string_view to_string(PairState state) noexcept {
  switch (state) {
    case PairState::ground:
      return "ground";
    case PairState::a_excited:
      return "a_excited";
  }
  return "unknown";
}

}  // namespace casimir
