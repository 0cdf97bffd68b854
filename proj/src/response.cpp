#include "casimir/response.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir {

double alpha_static(const AtomSpecies& species) noexcept {
  return static_polarizability(species);
}

double alpha_iu(const AtomSpecies& species, double u) {
  detail::require_nonnegative(u, "imaginary frequency u");
  const double w2 = species.omega() * species.omega();
  // Written as alpha(0) * w2 / (w2 + u^2) so that u == 0 reproduces alpha(0)
  // bit for bit.
  return static_polarizability(species) * (w2 / (w2 + u * u));
}

}  // namespace casimir
