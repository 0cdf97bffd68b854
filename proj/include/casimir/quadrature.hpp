#pragma once

// Globally adaptive 15-point Gauss-Kronrod quadrature (QUADPACK QAG style)
// plus the semi-infinite mapping u = a + scale * t / (1 - t), t in [0, 1).

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::quad {

struct Options {
  double rel_tol = 1e-9;
  double abs_tol = 1e-300;
  int max_intervals = 20000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

namespace detail {

// Kronrod abscissae on [-1, 1] (positive half, descending) and weights; the
// embedded 7-point Gauss rule uses the odd-indexed abscissae.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double pair = f1[j] + f2[j];
    kronrod += kWgk[j] * pair;
    abs_sum += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  const double value = kronrod * half;
  asc *= std::abs(half);
  abs_sum *= std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && error != 0.0) {
    error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps)) {
    error = std::max(50.0 * eps * abs_sum, error);
  }
  return {a, b, value, error};
}

}  // namespace detail

/// Integrates f over the finite interval [a, b]; throws ConvergenceError if
/// `max_intervals` subdivisions do not reach max(rel_tol*|I|, abs_tol).
template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {}) {
  std::priority_queue<detail::Segment> work;
  work.push(detail::gk15(f, a, b));
  double total = work.top().value;
  double error = work.top().error;
  int intervals = 1;
  while (error > std::max(opt.rel_tol * std::abs(total), opt.abs_tol)) {
    if (intervals >= opt.max_intervals) {
      std::ostringstream os;
      os.precision(6);
      os << "adaptive quadrature on [" << a << ", " << b << "] stalled at "
         << intervals << " intervals (estimate " << total << ", error "
         << error << ")";
      throw ConvergenceError(os.str());
    }
    const detail::Segment worst = work.top();
    work.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const detail::Segment left = detail::gk15(f, worst.a, mid);
    const detail::Segment right = detail::gk15(f, mid, worst.b);
    work.push(left);
    work.push(right);
    ++intervals;
    // Re-sum from scratch periodically to keep rounding from accumulating.
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    if (intervals % 64 == 0) {
      auto copy = work;
      total = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  // Final sum in a fixed order so results do not depend on heap layout.
  std::vector<detail::Segment> segments;
  segments.reserve(work.size());
  while (!work.empty()) {
    segments.push_back(work.top());
    work.pop();
  }
  std::sort(segments.begin(), segments.end(),
            [](const auto& x, const auto& y) { return x.a < y.a; });
  Result result;
  for (const auto& s : segments) {
    result.value += s.value;
    result.error += s.error;
  }
  result.intervals = intervals;
  return result;
}

/// Integrates f over [a, inf) through u = a + scale * t / (1 - t). `scale`
/// should be of the order of the width over which f lives.
template <class F>
Result integrate_to_infinity(F&& f, double a, double scale,
                             const Options& opt = {}) {
  auto mapped = [&f, a, scale](double t) {
    if (t >= 1.0) return 0.0;
    const double one_minus = 1.0 - t;
    const double u = a + scale * t / one_minus;
    if (!std::isfinite(u)) return 0.0;
    const double value = f(u);
    if (value == 0.0) return 0.0;
    return value * scale / (one_minus * one_minus);
  };
  return integrate(mapped, 0.0, 1.0, opt);
}

}  // namespace casimir::quad
