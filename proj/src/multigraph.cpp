#include "circact/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace circact {

namespace {

std::uint64_t magnitude(Weight w) {
  return w < 0 ? static_cast<std::uint64_t>(-w) : static_cast<std::uint64_t>(w);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Occurrences of one magnitude inside one block: how many +m and -m each
// point carries.
struct PairingGroup {
  std::uint64_t label = 0;
  std::vector<std::pair<std::size_t, std::size_t>> positive;  // (point, count)
  std::vector<std::pair<std::size_t, std::size_t>> negative;
};

// All nonnegative integer matrices with the given row and column sums. Each
// one is a distinct way to pair the +m occurrences with the -m occurrences.
void enumerate_transport(const PairingGroup& g, std::size_t cell, std::vector<std::size_t>& row_left,
                         std::vector<std::size_t>& col_left, std::vector<Edge>& partial,
                         std::vector<std::vector<Edge>>& out, std::size_t cap) {
  const std::size_t cols = g.negative.size();
  if (cell == g.positive.size() * cols) {
    out.push_back(partial);
    if (out.size() > cap) {
      throw Error(ErrorKind::CapExceeded,
                  "more than " + std::to_string(cap) + " weight pairings; raise the cap");
    }
    return;
  }
  const std::size_t r = cell / cols;
  const std::size_t c = cell % cols;
  const bool last_col = c + 1 == cols;
  const std::size_t hi = std::min(row_left[r], col_left[c]);
  const std::size_t lo = last_col ? row_left[r] : 0;
  if (lo > hi) return;
  for (std::size_t k = lo; k <= hi; ++k) {
    row_left[r] -= k;
    col_left[c] -= k;
    const std::size_t p = g.positive[r].first;
    const std::size_t q = g.negative[c].first;
    for (std::size_t i = 0; i < k; ++i) partial.push_back({std::min(p, q), std::max(p, q), g.label});
    enumerate_transport(g, cell + 1, row_left, col_left, partial, out, cap);
    partial.resize(partial.size() - k);
    row_left[r] += k;
    col_left[c] += k;
  }
}

std::vector<PairingGroup> group_occurrences(const FixedPointData& data,
                                            const std::vector<std::string>& blocks) {
  std::map<std::pair<std::string, std::uint64_t>, std::pair<std::map<std::size_t, std::size_t>,
                                                             std::map<std::size_t, std::size_t>>>
      table;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::string block = blocks.empty() ? std::string() : blocks[i];
    for (Weight w : data.points[i].weights) {
      auto& [pos, neg] = table[{block, magnitude(w)}];
      ++(w > 0 ? pos : neg)[i];
    }
  }
  std::vector<PairingGroup> groups;
  for (const auto& [key, sides] : table) {
    const auto& [pos, neg] = sides;
    auto total = [](const std::map<std::size_t, std::size_t>& m) {
      std::size_t t = 0;
      for (const auto& [point, count] : m) t += count;
      return t;
    };
    if (total(pos) != total(neg)) {
      std::string where = key.first.empty() ? "" : " in block " + key.first;
      throw Error(ErrorKind::UnpairableWeights,
                  "weight " + std::to_string(key.second) + " occurs " + std::to_string(total(pos)) +
                      " times with sign + and " + std::to_string(total(neg)) + " times with sign -" +
                      where);
    }
    groups.push_back({key.second, {pos.begin(), pos.end()}, {neg.begin(), neg.end()}});
  }
  return groups;
}

Multigraph isotropy_graph(std::uint64_t w1, std::uint64_t w2, std::uint64_t w3) {
  // 0 = S4+S2+, 1 = S4+S2-, 2 = S4-S2+, 3 = S4-S2-
  std::vector<Edge> edges = {
      {0, 2, w1}, {0, 2, w2}, {1, 3, w1}, {1, 3, w2},  // S^4 meridians at each S^2 pole
      {0, 1, w3}, {2, 3, w3},                          // S^2 at each S^4 pole
  };
  return make_multigraph({"S4+S2+", "S4+S2-", "S4-S2+", "S4-S2-"}, std::move(edges));
}

std::string quoted(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::size_t Multigraph::degree(std::size_t vertex) const {
  std::size_t d = 0;
  for (const auto& e : edges) d += (e.u == vertex) + (e.v == vertex);
  return d;
}

Multigraph make_multigraph(std::vector<std::string> vertices, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= vertices.size()) throw std::out_of_range("edge endpoint outside the vertex list");
  }
  std::sort(edges.begin(), edges.end());
  DisjointSets sets(vertices.size());
  for (const auto& e : edges) sets.unite(e.u, e.v);
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < vertices.size(); ++i) by_root[sets.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> components;
  for (auto& [root, members] : by_root) components.push_back(std::move(members));
  std::sort(components.begin(), components.end());
  return {std::move(vertices), std::move(edges), std::move(components)};
}

std::vector<Multigraph> build_multigraphs(const FixedPointData& data, const PairingOptions& options) {
  require_valid(data);
  if (!options.blocks.empty() && options.blocks.size() != data.size()) {
    throw std::invalid_argument("one block id per fixed point is required");
  }
  const auto groups = group_occurrences(data, options.blocks);

  std::vector<std::vector<std::vector<Edge>>> choices;
  std::size_t product = 1;
  for (const auto& g : groups) {
    std::vector<std::size_t> row_left, col_left;
    for (const auto& [p, count] : g.positive) row_left.push_back(count);
    for (const auto& [q, count] : g.negative) col_left.push_back(count);
    std::vector<Edge> partial;
    std::vector<std::vector<Edge>> options_for_group;
    enumerate_transport(g, 0, row_left, col_left, partial, options_for_group, options.cap);
    product *= options_for_group.size();
    if (product > options.cap) {
      throw Error(ErrorKind::CapExceeded,
                  "more than " + std::to_string(options.cap) + " weight pairings; raise the cap");
    }
    choices.push_back(std::move(options_for_group));
  }

  std::vector<std::string> names;
  for (const auto& p : data.points) names.push_back(p.name);

  std::set<std::vector<Edge>> seen;
  std::vector<Multigraph> out;
  std::vector<std::size_t> index(choices.size(), 0);
  while (true) {
    std::vector<Edge> edges;
    for (std::size_t g = 0; g < choices.size(); ++g) {
      const auto& pick = choices[g][index[g]];
      edges.insert(edges.end(), pick.begin(), pick.end());
    }
    auto graph = make_multigraph(names, std::move(edges));
    if (seen.insert(graph.edges).second) out.push_back(std::move(graph));

    std::size_t g = 0;
    while (g < choices.size() && ++index[g] == choices[g].size()) index[g++] = 0;
    if (g == choices.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Multigraph& a, const Multigraph& b) { return a.edges < b.edges; });
  return out;
}

BigInt count_raw_matchings(const FixedPointData& data) {
  require_valid(data);
  BigInt total = 1;
  for (const auto& g : group_occurrences(data, {})) {
    std::size_t k = 0;
    for (const auto& [p, count] : g.positive) k += count;
    for (std::size_t i = 2; i <= k; ++i) total *= i;
  }
  return total;
}

std::string_view to_string(Connectivity verdict) {
  switch (verdict) {
    case Connectivity::AlwaysConnected: return "AlwaysConnected";
    case Connectivity::NeverConnected: return "NeverConnected";
    case Connectivity::DependsOnPairing: return "DependsOnPairing";
  }
  return "?";
}

Connectivity connectivity_verdict(std::span<const Multigraph> graphs) {
  if (graphs.empty()) throw std::invalid_argument("connectivity verdict of an empty graph list");
  const auto connected = static_cast<std::size_t>(
      std::count_if(graphs.begin(), graphs.end(), [](const Multigraph& g) { return g.connected(); }));
  if (connected == graphs.size()) return Connectivity::AlwaysConnected;
  if (connected == 0) return Connectivity::NeverConnected;
  return Connectivity::DependsOnPairing;
}

Multigraph linear_action_isotropy(std::int64_t w1, std::int64_t w2, std::int64_t w3) {
  if (w1 <= 1 || w2 <= 1 || w3 <= 1) {
    throw Error(ErrorKind::BadWeights, "linear model weights must all exceed 1");
  }
  if (std::gcd(w1, w2) != 1 || std::gcd(w1, w3) != 1 || std::gcd(w2, w3) != 1) {
    throw Error(ErrorKind::BadWeights, "linear model weights must be pairwise coprime");
  }
  return isotropy_graph(static_cast<std::uint64_t>(w1), static_cast<std::uint64_t>(w2),
                        static_cast<std::uint64_t>(w3));
}

bool exoticness_obstruction(std::span<const Multigraph> sum_graphs) {
  if (sum_graphs.empty() || connectivity_verdict(sum_graphs) != Connectivity::NeverConnected) {
    return false;
  }
  // An equivariant diffeomorphism to a linear model matches the weights at
  // each fixed point; with every weight above 1 the model's isotropy spheres
  // connect all four fixed points.
  for (const auto& graph : sum_graphs) {
    std::vector<std::vector<std::uint64_t>> local(graph.vertices.size());
    for (const auto& e : graph.edges) {
      local[e.u].push_back(e.label);
      local[e.v].push_back(e.label);
    }
    for (const auto& weights : local) {
      if (weights.size() != 3) return false;
      if (std::any_of(weights.begin(), weights.end(), [](std::uint64_t w) { return w <= 1; })) {
        return false;
      }
      if (!isotropy_graph(weights[0], weights[1], weights[2]).connected()) return false;
    }
  }
  return true;
}

std::string to_dot(const Multigraph& graph, std::string_view name) {
  std::vector<std::string> vertices = graph.vertices;
  std::sort(vertices.begin(), vertices.end());
  std::vector<std::tuple<std::string, std::string, std::uint64_t>> edges;
  for (const auto& e : graph.edges) {
    auto a = graph.vertices[e.u];
    auto b = graph.vertices[e.v];
    if (b < a) std::swap(a, b);
    edges.emplace_back(std::move(a), std::move(b), e.label);
  }
  std::sort(edges.begin(), edges.end());

  std::string out = "graph " + quoted(std::string(name)) + " {\n";
  for (const auto& v : vertices) out += "  " + quoted(v) + ";\n";
  for (const auto& [a, b, label] : edges) {
    out += "  " + quoted(a) + " -- " + quoted(b) + " [label=\"" + std::to_string(label) + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace circact
