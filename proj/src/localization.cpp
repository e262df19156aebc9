#include "circact/localization.hpp"

namespace circact {

namespace {

void require_six_dimensional(const FixedPointData& data) {
  if (data.n != 3) {
    throw Error(ErrorKind::WrongDimension,
                "Chern numbers are localized for n = 3 only, got n = " + std::to_string(data.n));
  }
}

}  // namespace

Rational c1_cubed(const FixedPointData& data) {
  require_valid(data);
  require_six_dimensional(data);
  Rational total = 0;
  for (const auto& p : data.points) {
    BigInt sum = 0;
    BigInt product = 1;
    for (Weight w : p.weights) {
      sum += w;
      product *= w;
    }
    BigInt cube = sum * sum * sum;
    if (product < 0) {
      cube = -cube;
      product = -product;
    }
    total += Rational(cube, product);
  }
  return total;
}

std::vector<std::int64_t> chi_y_profile(const FixedPointData& data) {
  require_valid(data);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(data.n) + 1, 0);
  for (const auto& p : data.points) ++counts[p.weights.negative_count()];
  return counts;
}

BigInt evaluate_chi_y(std::span<const std::int64_t> coefficients, std::int64_t y) {
  BigInt total = 0;
  BigInt power = 1;
  for (std::int64_t c : coefficients) {
    total += c * power;
    power *= -y;
  }
  return total;
}

std::int64_t todd_genus(const FixedPointData& data) { return chi_y_profile(data).front(); }

ChernReport chern_report(const FixedPointData& data) {
  ChernReport report;
  report.c1_cubed = c1_cubed(data);
  if (!is_integer(report.c1_cubed)) {
    throw Error(ErrorKind::NonIntegralChernNumber,
                "c1^3 = " + to_string(report.c1_cubed) +
                    " is not an integer; the data cannot come from a closed manifold");
  }
  report.chi_y = chi_y_profile(data);
  report.todd = report.chi_y.front();
  report.c1c2 = 24 * report.todd;
  report.euler = static_cast<std::int64_t>(data.size());
  return report;
}

}  // namespace circact
