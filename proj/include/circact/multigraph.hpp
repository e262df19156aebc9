#pragma once

#include "circact/core.hpp"
#include "circact/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circact {

struct Edge {
  std::size_t u = 0;  // u <= v; u == v is a loop
  std::size_t v = 0;
  std::uint64_t label = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Multigraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;  // sorted
  std::vector<std::vector<std::size_t>> components;

  bool connected() const noexcept { return components.size() <= 1; }
  /// Loops count twice.
  std::size_t degree(std::size_t vertex) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

/// Builds the sorted edge list and the connected components.
Multigraph make_multigraph(std::vector<std::string> vertices, std::vector<Edge> edges);

inline constexpr std::size_t kDefaultPairingCap = 10000;

struct PairingOptions {
  /// Enumeration throws CapExceeded once more matchings than this exist.
  std::size_t cap = kDefaultPairingCap;
  /// Optional block id per point; when nonempty, weights pair only inside a
  /// block. Composed datasets use this to keep each summand's isotropy
  /// spheres, which the gluing along a free orbit leaves untouched.
  std::vector<std::string> blocks;
};

/// One multigraph per distinct perfect matching of each weight w with an
/// occurrence of -w. Throws InvalidData, UnpairableWeights, CapExceeded.
std::vector<Multigraph> build_multigraphs(const FixedPointData& data,
                                          const PairingOptions& options = {});

/// Raw matching count before deduplication; throws UnpairableWeights.
BigInt count_raw_matchings(const FixedPointData& data);

enum class Connectivity { AlwaysConnected, NeverConnected, DependsOnPairing };

std::string_view to_string(Connectivity verdict);

/// Throws std::invalid_argument on an empty list.
Connectivity connectivity_verdict(std::span<const Multigraph> graphs);

/// Isotropy spheres of the linear action on S^4 x S^2 with weights
/// (w1, w2) on C^2 and w3 on C. Vertices are the pole pairs
/// "S4+S2+", "S4+S2-", "S4-S2+", "S4-S2-".
/// Throws BadWeights unless every weight exceeds 1 and they are pairwise coprime.
Multigraph linear_action_isotropy(std::int64_t w1, std::int64_t w2, std::int64_t w3);

/// True when no pairing of the composed data is connected while every
/// linear model matching the local weights has a connected isotropy graph.
bool exoticness_obstruction(std::span<const Multigraph> sum_graphs);

/// Undirected DOT; vertices by name, edges lexicographic, label="<weight>".
std::string to_dot(const Multigraph& graph, std::string_view name = "G");

}  // namespace circact
