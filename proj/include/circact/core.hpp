#pragma once

#include "circact/error.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace circact {

using Weight = std::int64_t;

/// Weights at one fixed point. Stored in input order; compared as a multiset.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Weight> weights) : weights_(std::move(weights)) {}
  WeightVector(std::initializer_list<Weight> weights) : weights_(weights) {}

  std::span<const Weight> values() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  Weight operator[](std::size_t i) const { return weights_[i]; }
  auto begin() const noexcept { return weights_.begin(); }
  auto end() const noexcept { return weights_.end(); }

  /// Descending order; the display and comparison form.
  std::vector<Weight> canonical() const;
  std::size_t negative_count() const;
  WeightVector negated() const;
  bool same_multiset(const WeightVector& other) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Weight> weights_;
};

struct FixedPoint {
  std::string name;
  WeightVector weights;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

struct FixedPointData {
  int n = 3;
  std::vector<FixedPoint> points;

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }

  /// Reverses the circle action: every weight changes sign.
  FixedPointData negated() const;

  /// Multiset-of-multisets equality, ignoring names and orderings.
  bool same_weights(const FixedPointData& other) const;

  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;
};

/// Convenience: points named p1, p2, ... in order.
FixedPointData make_data(std::vector<std::vector<Weight>> weights, int n = 3);

struct HomologyProfile {
  bool simply_connected = true;
  std::uint64_t b2 = 0;
  std::uint64_t b3 = 0;
  bool torsion_free = true;

  /// 2 + 2 b2 - b3, valid for simply connected closed 6-manifolds. The
  /// EulerMismatch rule is only applied to n = 3 data.
  std::int64_t euler() const;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Homology of S^6: simply connected, torsion free, b2 = b3 = 0.
bool is_homology_sphere(const HomologyProfile& profile);

using Labels = std::map<std::string, std::string>;

/// A document: weight data plus the optional homology profile and labels.
struct Dataset {
  FixedPointData data;
  std::optional<HomologyProfile> homology;
  Labels labels;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Violations sorted by (point, rule); empty iff every invariant holds.
std::vector<Violation> validate(const FixedPointData& data);
std::vector<Violation> validate(const FixedPointData& data, const HomologyProfile& profile);
std::vector<Violation> validate(const Dataset& dataset);

/// Throws Error(InvalidData) carrying the violations when validate() is nonempty.
void require_valid(const FixedPointData& data);

}  // namespace circact
