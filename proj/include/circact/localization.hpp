#pragma once

#include "circact/core.hpp"
#include "circact/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace circact {

/// Localized Chern numbers of a 6-dimensional dataset.
struct ChernReport {
  Rational c1_cubed;
  std::int64_t todd = 0;
  std::int64_t c1c2 = 0;
  std::int64_t euler = 0;
  std::vector<std::int64_t> chi_y;  // N_0 ... N_n

  friend bool operator==(const ChernReport&, const ChernReport&) = default;
};

/// Sum over fixed points of (sum of weights)^3 / (product of weights).
///
/// This is the lenient entry point: a non-integral value is returned as is.
/// Throws InvalidData or WrongDimension (n != 3).
Rational c1_cubed(const FixedPointData& data);

/// N_p = number of fixed points with exactly p negative weights, p = 0..n.
std::vector<std::int64_t> chi_y_profile(const FixedPointData& data);

/// chi_y = sum_p N_p (-y)^p, so chi_{-1} is the Euler characteristic.
BigInt evaluate_chi_y(std::span<const std::int64_t> coefficients, std::int64_t y);

/// N_0, which equals Td(M) = c1 c2 / 24.
std::int64_t todd_genus(const FixedPointData& data);

/// Throws NonIntegralChernNumber if c1^3 is not an integer.
ChernReport chern_report(const FixedPointData& data);

}  // namespace circact
