#include "casimir/pair_zero_t.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/response.hpp"

namespace casimir {

namespace {

// omega_A^2 - omega_B^2 must be nonzero for the undamped resonant formulas.
double detuning_sq(const AtomSpecies& a, const AtomSpecies& b) {
  const double d = b.omega() * b.omega() - a.omega() * a.omega();
  if (d == 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "undamped resonant term is singular at omega_A == omega_B == "
       << a.omega() << "; use the damped thermal form";
    throw DegeneracyError(os.str());
  }
  return d;
}

}  // namespace

double u_nonresonant_integral(const AtomSpecies& a, const AtomSpecies& b,
                              double separation,
                              const quad::Options& options) {
  const double r = detail::require_positive(separation, "separation R");
  if (a.d2() == 0.0 || b.d2() == 0.0) return 0.0;

  const double wa2 = a.omega() * a.omega();
  const double wb2 = b.omega() * b.omega();
  const double r2 = r * r;
  const double r3 = r2 * r;
  const double r4 = r2 * r2;
  const double r5 = r4 * r;
  const double r6 = r3 * r3;

  // u^6 * bracket = u^4/R^2 + 2u^3/R^3 + 5u^2/R^4 + 6u/R^5 + 3/R^6.
  auto integrand = [=](double u) {
    const double decay = std::exp(-2.0 * u * r);
    if (decay == 0.0) return 0.0;
    const double poly =
        (((u / r2 + 2.0 / r3) * u + 5.0 / r4) * u + 6.0 / r5) * u + 3.0 / r6;
    return poly * decay / ((wa2 + u * u) * (wb2 + u * u));
  };
  const double scale = std::max({a.omega(), b.omega(), 1.0 / r});
  const double integral =
      quad::integrate_to_infinity(integrand, 0.0, scale, options).value;
  const double prefactor = 4.0 / (9.0 * std::numbers::pi) * a.omega() *
                           b.omega() * a.d2() * b.d2();
  return -prefactor * integral;
}

double u_resonant(const AtomSpecies& a, const AtomSpecies& b, double separation,
                  PairState state) {
  const double r = detail::require_positive(separation, "separation R");
  if (!resonant_active(state)) return 0.0;
  const double denom = detuning_sq(a, b);
  const double x2 = 1.0 / (a.omega() * r * a.omega() * r);
  const double bracket = x2 + x2 * x2 + 3.0 * x2 * x2 * x2;
  const double w6 = std::pow(a.omega(), 6);
  return -(4.0 / 9.0) * a.d2() * b.d2() * w6 / denom * bracket;
}

double u_london(const AtomSpecies& a, const AtomSpecies& b, double separation) {
  const double r = detail::require_positive(separation, "separation R");
  return -(2.0 / 3.0) * a.d2() * b.d2() /
         ((a.omega() + b.omega()) * std::pow(r, 6));
}

double u_casimir_polder(const AtomSpecies& a, const AtomSpecies& b,
                        double separation) {
  const double r = detail::require_positive(separation, "separation R");
  return -23.0 / (4.0 * std::numbers::pi * std::pow(r, 7)) * alpha_static(a) *
         alpha_static(b);
}

double u_resonant_near_limit(const AtomSpecies& a, const AtomSpecies& b,
                             double separation) {
  const double r = detail::require_positive(separation, "separation R");
  const double denom = detuning_sq(a, b);
  return -(4.0 / 3.0) * a.d2() * b.d2() / (denom * std::pow(r, 6));
}

double u_resonant_far_limit(const AtomSpecies& a, const AtomSpecies& b,
                            double separation) {
  const double r = detail::require_positive(separation, "separation R");
  const double denom = detuning_sq(a, b);
  return -(4.0 / 9.0) * a.d2() * b.d2() * std::pow(a.omega(), 4) /
         (denom * r * r);
}

PairPotentialBreakdown pair_potential(const AtomSpecies& a,
                                      const AtomSpecies& b, double separation,
                                      PairState state) {
  PairPotentialBreakdown out;
  out.separation = separation;
  out.non_resonant = u_nonresonant_integral(a, b, separation);
  out.resonant = u_resonant(a, b, separation, state);
  out.total = out.non_resonant + out.resonant;
  return out;
}

}  // namespace casimir
