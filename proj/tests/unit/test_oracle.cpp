#include <cmath>
#include <numbers>
#include <random>

#include "casimir/geometry.hpp"
#include "casimir/pair_thermal.hpp"
#include "casimir/pair_zero_t.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace casimir;

TEST_CASE("oracle integral: trivial and agreement with adaptive quadrature") {
  const auto zero = make_species(1.0, 0.0);
  const auto one = make_species(1.0, 1.0);
  CHECK(oracle::oracle_nonresonant_integral(zero, one, 1.0) == 0.0);
  const double adaptive = u_nonresonant_integral(one, one, 1.0);
  const double ref = oracle::oracle_nonresonant_integral(one, one, 1.0);
  CHECK(std::abs(ref / adaptive - 1.0) < 1e-6);
}

TEST_CASE("oracle midpoint converges at second order") {
  const auto a = make_species(1.0, 1.0);
  const auto b = make_species(1.7, 0.6);
  const double r = 1.3;
  const double adaptive = u_nonresonant_integral(a, b, r);
  const double cap = 60.0 / (2.0 * r);
  const double e1 = std::abs(oracle::midpoint_nonresonant(a, b, r, 2000, cap) - adaptive);
  const double e2 = std::abs(oracle::midpoint_nonresonant(a, b, r, 4000, cap) - adaptive);
  const double ratio = e1 / e2;
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("oracle Matsubara sum") {
  const auto zero = make_species(1.0, 0.0);
  const auto one = make_species(1.0, 1.0);
  CHECK(oracle::oracle_matsubara_sum(zero, one, 1.0, 0.3, 100) == 0.0);

  const double s1 = oracle::oracle_matsubara_sum(one, one, 1.0, 10.0, 1);
  const double s100 = oracle::oracle_matsubara_sum(one, one, 1.0, 10.0, 100);
  CHECK(std::abs(s100 / s1 - 1.0) < 1e-50);

  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> dist_r(0.5, 5.0);
  std::uniform_real_distribution<double> dist_t(0.05, 5.0);
  const auto b = make_species(1.3, 0.8);
  for (int i = 0; i < 20; ++i) {
    const double r = dist_r(rng);
    const double t = dist_t(rng);
    const auto ctx = ThermalContext::make(t);
    const auto prod = matsubara_nonresonant_sum(one, b, r, ctx);
    // Twice as many modes as production used, plus a margin.
    const double ref = oracle::oracle_matsubara_sum(one, b, r, t, 2 * prod.last_mode + 10);
    CAPTURE(r);
    CAPTURE(t);
    CHECK(std::abs(prod.value - ref) <= 10.0 * ctx.tail_tol() * std::abs(ref));
  }
}

TEST_CASE("oracle half-space sum") {
  const auto a = make_species(1.0, 1.0);
  const auto ctx = ThermalContext::make(0.2);
  // gamma_ph = 8 pi w d2 n / (3 gamma) = 0.1
  const auto b = make_species(1.5, 1.0, 0.1);
  const auto geom = HalfSpaceGeometry::make(
      1.0, make_medium(b, 0.1 * 3.0 * 0.1 / (8.0 * std::numbers::pi * 1.5)));
  CHECK(oracle::oracle_halfspace_sum(geom, a, ctx, PairState::ground, 0.01) == 0.0);

  const double prod = u_atom_halfspace_regularized(geom, a, ctx, PairState::a_excited);
  const double coarse = oracle::oracle_halfspace_sum(geom, a, ctx, PairState::a_excited, 1.0 / 100);
  const double fine = oracle::oracle_halfspace_sum(geom, a, ctx, PairState::a_excited, 1.0 / 200);
  CHECK(std::abs(fine / prod - 1.0) < 1e-3);
  const double improvement = std::abs(coarse - prod) / std::abs(fine - prod);
  CHECK(improvement > 1.8);
  CHECK(improvement < 4.5);
}

namespace {

SlabPairGeometry detuned_slabs(double gap) {
  const auto a = make_species(1.1, 0.01, 0.01);
  const auto b = make_species(1.0, 0.01, 0.01);
  return SlabPairGeometry::make(gap, make_medium(a, 1e-3), make_medium(b, 1e-3),
                                100.0, 100.0);
}

}  // namespace

TEST_CASE("oracle slab integral: ground state") {
  const auto ctx = ThermalContext::make(0.4);
  CHECK(oracle::oracle_slab_numeric(detuned_slabs(200.0), ctx, PairState::ground) == 0.0);
}

TEST_CASE("oracle slab integral against the closed-form correction") {
  const auto ctx = ThermalContext::make(0.4);
  for (double gap : {200.0, 600.0, 2000.0}) {
    const auto geom = detuned_slabs(gap);
    const double closed = slab_force(geom, ctx, PairState::a_excited).resonant_correction;
    const double numeric = oracle::oracle_slab_numeric(geom, ctx, PairState::a_excited, 24, 2000);
    CAPTURE(gap);
    CAPTURE(closed);
    CAPTURE(numeric);
    CHECK(std::signbit(closed) == std::signbit(numeric));
    CHECK(std::abs(numeric / closed) < 3.0);
    CHECK(std::abs(numeric / closed) > 1.0 / 3.0);
  }
}
