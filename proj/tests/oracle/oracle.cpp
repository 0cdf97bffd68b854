#include "oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace casimir::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

double nonresonant_integrand(const AtomSpecies& a, const AtomSpecies& b,
                             double r, double u) {
  const double wa = a.omega();
  const double wb = b.omega();
  const double x = u * r;
  const double bracket = 1.0 / (x * x) + 2.0 / (x * x * x) +
                         5.0 / (x * x * x * x) + 6.0 / std::pow(x, 5) +
                         3.0 / std::pow(x, 6);
  return -(4.0 / (9.0 * kPi)) * wa * wb * a.d2() * b.d2() /
         ((wa * wa + u * u) * (wb * wb + u * u)) * std::pow(u, 6) *
         std::exp(-2.0 * u * r) * bracket;
}

double alpha(const AtomSpecies& s, double u) {
  return 2.0 * s.d2() * s.omega() / (3.0 * (s.omega() * s.omega() + u * u));
}

// Damped resonant potential, excited atom `e`, ground partner `g`, without
// the absorption exponential.
double resonant(const AtomSpecies& e, const AtomSpecies& g, double t,
                double r) {
  const double coth = t > 0.0 ? std::cosh(e.omega() / (2.0 * t)) /
                                    std::sinh(e.omega() / (2.0 * t))
                              : 1.0;
  const double det = g.omega() - e.omega();
  const double w = e.omega();
  return -(2.0 / 9.0) * coth * e.d2() * g.d2() * std::pow(w, 6) * det /
         (det * det + g.gamma() * g.gamma() / 4.0) *
         (1.0 / std::pow(w * r, 2) + 1.0 / std::pow(w * r, 4) +
          3.0 / std::pow(w * r, 6));
}

}  // namespace

double midpoint_nonresonant(const AtomSpecies& a, const AtomSpecies& b,
                            double separation, std::int64_t points,
                            double cap) {
  const double h = cap / static_cast<double>(points);
  double sum = 0.0;
  for (std::int64_t i = 0; i < points; ++i) {
    sum += nonresonant_integrand(a, b, separation, (i + 0.5) * h);
  }
  return sum * h;
}

double oracle_nonresonant_integral(const AtomSpecies& a, const AtomSpecies& b,
                                   double separation, const OracleConfig& cfg) {
  if (a.d2() == 0.0 || b.d2() == 0.0) return 0.0;
  const double cap = cfg.cap_factor / (2.0 * separation);
  const int levels = cfg.richardson_levels;
  std::vector<std::vector<double>> table(levels);
  for (int k = 0; k < levels; ++k) {
    table[k].resize(k + 1);
    table[k][0] = midpoint_nonresonant(a, b, separation,
                                       cfg.grid_points << k, cap);
    for (int j = 1; j <= k; ++j) {
      const double factor = std::pow(4.0, j) - 1.0;
      table[k][j] =
          table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / factor;
    }
  }
  return table[levels - 1][levels - 1];
}

double oracle_matsubara_sum(const AtomSpecies& a, const AtomSpecies& b,
                            double separation, double temperature,
                            std::int64_t n_cap) {
  const double r = separation;
  double sum = 0.5 * alpha(a, 0.0) * alpha(b, 0.0) * 3.0 / std::pow(r, 6);
  for (std::int64_t n = 1; n <= n_cap; ++n) {
    const double z = 2.0 * kPi * n * temperature;
    const double x = z * r;
    sum += alpha(a, z) * alpha(b, z) * std::pow(z, 6) * std::exp(-2.0 * z * r) *
           (1.0 / (x * x) + 2.0 / std::pow(x, 3) + 5.0 / std::pow(x, 4) +
            6.0 / std::pow(x, 5) + 3.0 / std::pow(x, 6));
  }
  return -2.0 * temperature * sum;
}

double oracle_divergence_probe(const HalfSpaceGeometry& geom,
                               const AtomSpecies& a, double cutoff,
                               std::int64_t points, int levels) {
  const AtomSpecies& b = geom.medium().species();
  const double z0 = geom.z0();
  const double prefactor =
      -8.0 * kPi * geom.medium().density() * a.d2() * b.d2() *
      std::pow(a.omega(), 4) /
      (9.0 * (b.omega() * b.omega() - a.omega() * a.omega()));
  std::vector<std::vector<double>> table(levels);
  for (int k = 0; k < levels; ++k) {
    const std::int64_t n = points << k;
    const double hz = (cutoff - z0) / n;
    const double hr = cutoff / n;
    double sum = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      const double z = z0 + (i + 0.5) * hz;
      for (std::int64_t j = 0; j < n; ++j) {
        const double rho = (j + 0.5) * hr;
        sum += rho / (rho * rho + z * z);
      }
    }
    table[k].resize(k + 1);
    table[k][0] = sum * hz * hr;
    for (int j = 1; j <= k; ++j) {
      const double factor = std::pow(4.0, j) - 1.0;
      table[k][j] =
          table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / factor;
    }
  }
  return prefactor * table[levels - 1][levels - 1];
}

double oracle_halfspace_sum(const HalfSpaceGeometry& geom, const AtomSpecies& a,
                            const ThermalContext& ctx, PairState state,
                            double shell_width) {
  if (state == PairState::ground) return 0.0;
  const AtomSpecies& b = geom.medium().species();
  const double gamma_ph = geom.absorption().gamma_ph();
  const double z0 = geom.z0();
  const double h = shell_width;
  const double r_max = 40.0 / gamma_ph;
  const auto shells = static_cast<std::int64_t>((r_max - z0) / h);

  // g[m] = 2 pi R U(R) h at R = z0 + m h; the layer centred at
  // z0 + (i + 1/2) h sees shells m = i + 1 .. shells.
  std::vector<double> suffix(shells + 2, 0.0);
  for (std::int64_t m = shells; m >= 1; --m) {
    const double r = z0 + m * h;
    const double u = resonant(a, b, ctx.temperature(), r) *
                     std::exp(-gamma_ph * r / 2.0);
    suffix[m] = suffix[m + 1] + 2.0 * kPi * r * u * h;
  }
  double total = 0.0;
  for (std::int64_t i = 0; i + 1 <= shells; ++i) total += suffix[i + 1] * h;
  return geom.medium().density() * total;
}

double oracle_slab_numeric(const SlabPairGeometry& geom,
                           const ThermalContext& ctx, PairState state,
                           int z_points, int r_points) {
  if (state == PairState::ground) return 0.0;
  const AtomSpecies& a = geom.medium_a().species();
  const AtomSpecies& b = geom.medium_b().species();
  const double t = ctx.temperature();
  auto excited = [t](const AtomSpecies& s) {
    const double x = std::exp(-s.omega() / t);
    return x / (1.0 + x);
  };
  const double pa = excited(a);
  const double pb = excited(b);
  auto pair = [&](double r) {
    return pa * (1.0 - pb) * resonant(a, b, t, r) +
           pb * (1.0 - pa) * resonant(b, a, t, r);
  };
  const double la = geom.l_ph_a();
  const double lb = geom.l_ph_b();
  const double lambda = 1e4 * (geom.gap() + la + lb);

  // P(Z) by midpoint in s = ln R: dR R U = R^2 U ds.
  auto plane_kernel = [&](double z) {
    const double s0 = std::log(z);
    const double s1 = 0.5 * std::log(lambda * lambda + z * z);
    const double hs = (s1 - s0) / r_points;
    double sum = 0.0;
    for (int k = 0; k < r_points; ++k) {
      const double r = std::exp(s0 + (k + 0.5) * hs);
      sum += r * r * pair(r);
    }
    return 2.0 * kPi * sum * hs;
  };
  auto energy = [&](double gap) {
    const double ha = la / z_points;
    const double hb = lb / z_points;
    double sum = 0.0;
    for (int i = 0; i < z_points; ++i) {
      for (int j = 0; j < z_points; ++j) {
        sum += plane_kernel(gap + (i + 0.5) * ha + (j + 0.5) * hb);
      }
    }
    return geom.medium_a().density() * geom.medium_b().density() * sum * ha *
           hb;
  };
  const double step = geom.gap() / 1000.0;
  return (energy(geom.gap() + step) - energy(geom.gap() - step)) /
         (2.0 * step);
}

}  // namespace casimir::oracle
