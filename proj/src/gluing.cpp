// Floating-point check that the framing twist commutes with the radial
// reflection used to glue the two collars. Everything else in the library is
// exact.

#include "circact/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace circact {

namespace {

double fiber_norm(const CollarPoint& p) {
  return std::sqrt(std::norm(p.z2) + std::norm(p.z3) + p.t * p.t);
}

double deviation(const CollarPoint& got, const CollarPoint& want) {
  const double scale = std::max(
      {1.0, std::abs(want.z1), std::abs(want.z2), std::abs(want.z3), std::abs(want.t)});
  const double d = std::max({std::abs(got.z1 - want.z1), std::abs(got.z2 - want.z2),
                             std::abs(got.z3 - want.z3), std::abs(got.t - want.t)});
  return d / scale;
}

}  // namespace

FramingTwist standard_framing_twist() {
  return {
      [](const CollarPoint& p) { return CollarPoint{p.z1, p.z1 * p.z2, p.z3, p.t}; },
      [](const CollarPoint& p) { return CollarPoint{p.z1, p.z2 / p.z1, p.z3, p.t}; },
  };
}

CollarPoint radial_reflection(const CollarPoint& p, const std::function<double(double)>& alpha) {
  const double r = fiber_norm(p);
  const double s = alpha(r) / r;
  return {p.z1, s * p.z2, s * p.z3, s * p.t};
}

GluingCheck verify_framing_reversal_identity(const GluingCheckOptions& options,
                                             const FramingTwist& twist) {
  if (!(options.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> gauss(0.0, 1.0);

  GluingCheck out;
  out.samples = options.samples;
  for (std::size_t i = 0; i < options.samples; ++i) {
    CollarPoint p;
    do {
      p.z1 = std::polar(1.0, angle(rng));
      p.z2 = {gauss(rng), gauss(rng)};
      p.z3 = {gauss(rng), gauss(rng)};
      p.t = gauss(rng);
    } while (fiber_norm(p) < 1e-6);

    const CollarPoint lhs = twist.forward(radial_reflection(twist.inverse(p), options.alpha));
    const CollarPoint rhs = radial_reflection(p, options.alpha);
    double d = deviation(lhs, rhs);
    if (!std::isfinite(d)) d = std::numeric_limits<double>::infinity();
    out.worst_deviation = std::max(out.worst_deviation, d);
  }
  out.passed = out.worst_deviation <= options.tolerance;
  return out;
}

}  // namespace circact
