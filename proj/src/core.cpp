#include "circact/core.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <tuple>

namespace circact {

std::vector<Weight> WeightVector::canonical() const {
  std::vector<Weight> sorted = weights_;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return sorted;
}

std::size_t WeightVector::negative_count() const {
  return static_cast<std::size_t>(
      std::count_if(weights_.begin(), weights_.end(), [](Weight w) { return w < 0; }));
}

WeightVector WeightVector::negated() const {
  std::vector<Weight> out;
  out.reserve(weights_.size());
  for (Weight w : weights_) out.push_back(-w);
  return WeightVector(std::move(out));
}

bool WeightVector::same_multiset(const WeightVector& other) const {
  return canonical() == other.canonical();
}

FixedPointData FixedPointData::negated() const {
  FixedPointData out{n, {}};
  out.points.reserve(points.size());
  for (const auto& p : points) out.points.push_back({p.name, p.weights.negated()});
  return out;
}

bool FixedPointData::same_weights(const FixedPointData& other) const {
  if (n != other.n || points.size() != other.points.size()) return false;
  auto key = [](const FixedPointData& d) {
    std::vector<std::vector<Weight>> k;
    k.reserve(d.points.size());
    for (const auto& p : d.points) k.push_back(p.weights.canonical());
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(*this) == key(other);
}

FixedPointData make_data(std::vector<std::vector<Weight>> weights, int n) {
  FixedPointData out{n, {}};
  out.points.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out.points.push_back({"p" + std::to_string(i + 1), WeightVector(std::move(weights[i]))});
  }
  return out;
}

std::int64_t HomologyProfile::euler() const {
  return 2 + 2 * static_cast<std::int64_t>(b2) - static_cast<std::int64_t>(b3);
}

bool is_homology_sphere(const HomologyProfile& profile) {
  return profile.simply_connected && profile.torsion_free && profile.b2 == 0 && profile.b3 == 0;
}

namespace {

void sort_violations(std::vector<Violation>& violations) {
  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.point, a.rule, a.detail) < std::tie(b.point, b.rule, b.detail);
  });
}

}  // namespace

std::vector<Violation> validate(const FixedPointData& data) {
  std::vector<Violation> out;
  if (data.n <= 0) {
    out.push_back({"", Rule::NonPositiveDimension, "n must be positive"});
  }
  std::set<std::string> seen;
  for (const auto& p : data.points) {
    if (p.name.empty()) {
      out.push_back({"", Rule::EmptyName, "fixed point with empty name"});
    } else if (!seen.insert(p.name).second) {
      out.push_back({p.name, Rule::DuplicateName, "name used more than once"});
    }
    if (data.n > 0 && p.weights.size() != static_cast<std::size_t>(data.n)) {
      out.push_back({p.name, Rule::WrongArity,
                     "expected " + std::to_string(data.n) + " weights, found " +
                         std::to_string(p.weights.size())});
    }
    if (std::find(p.weights.begin(), p.weights.end(), 0) != p.weights.end()) {
      out.push_back({p.name, Rule::ZeroWeight, "weights must be nonzero"});
    }
    if (std::find(p.weights.begin(), p.weights.end(), std::numeric_limits<Weight>::min()) !=
        p.weights.end()) {
      out.push_back({p.name, Rule::WeightOutOfRange, "weight has no 64-bit negation"});
    }
  }
  sort_violations(out);
  return out;
}

std::vector<Violation> validate(const FixedPointData& data, const HomologyProfile& profile) {
  auto out = validate(data);
  if (profile.b3 % 2 != 0) {
    out.push_back({"", Rule::OddThirdBetti, "b3 of a closed almost complex 6-manifold is even"});
  }
  if (data.n == 3 && profile.simply_connected && profile.torsion_free &&
      profile.euler() != static_cast<std::int64_t>(data.size())) {
    out.push_back({"", Rule::EulerMismatch,
                   "2 + 2 b2 - b3 = " + std::to_string(profile.euler()) + " but there are " +
                       std::to_string(data.size()) + " fixed points"});
  }
  sort_violations(out);
  return out;
}

std::vector<Violation> validate(const Dataset& dataset) {
  return dataset.homology ? validate(dataset.data, *dataset.homology) : validate(dataset.data);
}

void require_valid(const FixedPointData& data) {
  auto violations = validate(data);
  if (!violations.empty()) {
    throw Error(ErrorKind::InvalidData, "invalid fixed-point data", std::move(violations));
  }
}

}  // namespace circact
