#pragma once

// Test-only reference computations. Nothing here calls into the library's
// localization, classifier or pairing code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using Int = __int128;
using Point = std::array<long long, 3>;
using Family = std::vector<Point>;

struct Fraction {
  Int num = 0;
  Int den = 1;
};

inline Int gcd128(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Fraction reduce(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = gcd128(num, den);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

/// sum_p (w1 + w2 + w3)^3 / (w1 w2 w3) over one common denominator.
inline Fraction c1_cubed(const Family& points) {
  Int num = 0;
  Int den = 1;
  for (const auto& p : points) {
    const Int s = static_cast<Int>(p[0]) + p[1] + p[2];
    const Int e = static_cast<Int>(p[0]) * p[1] * p[2];
    num = num * e + s * s * s * den;
    den = den * e;
    const auto r = reduce(num, den);
    num = r.num;
    den = r.den;
  }
  return reduce(num, den);
}

/// Weight lists written out directly from the six-case list.
inline Family family(char tag, long long a, long long b = 0, long long c = 0, long long d = 0) {
  switch (tag) {
    case 'A': return {{a, b, c}, {-a, b - a, c - a}, {-b, a - b, c - b}, {-c, a - c, b - c}};
    case 'B': return {{a, a + b, a + 2 * b}, {-a, b, a + 2 * b}, {-a - 2 * b, -b, a}, {-a - 2 * b, -a - b, -a}};
    case 'C': return {{1, 2, 3}, {-1, 1, a}, {-1, 1, -a}, {-1, -2, -3}};
    case 'D': return {{a, b, -a - b}, {-a, -b, a + b}, {c, d, -c - d}, {-c, -d, c + d}};
    case 'E': return {{-3 * a - b, a, b}, {-2 * a - b, 3 * a + b, 3 * a + 2 * b}, {-a, -a - b, 2 * a + b}, {-b, -3 * a - 2 * b, a + b}};
    case 'F': return {{-a - b, 2 * a + b, b}, {-2 * a - b, a, b}, {-b, -2 * a - b, a + b}, {-a, -b, 2 * a + b}};
  }
  return {};
}

/// c1^3 values established by symbolic evaluation of the localization sum
/// over each template; C depends on its parameter.
inline Int frozen_c1_cubed(char tag, long long a) {
  switch (tag) {
    case 'A': return 64;
    case 'B': return 54;
    case 'C': return 72 - 2 * static_cast<Int>(a) * a;
    case 'D': return 0;
    case 'E': return -8;
    case 'F': return -2;
  }
  return 0;
}

// Brute-force pairing of each +m occurrence with each -m occurrence.
struct Occurrence {
  std::size_t point;
  long long weight;
};

using EdgeKey = std::tuple<std::size_t, std::size_t, unsigned long long>;
using EdgeList = std::vector<EdgeKey>;

struct BruteForcePairings {
  std::set<EdgeList> graphs;
  unsigned long long raw_bijections = 0;
};

inline BruteForcePairings brute_force_pairings(const std::vector<std::vector<long long>>& points) {
  std::map<unsigned long long, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> by_mag;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (long long w : points[i]) {
      auto& [pos, neg] = by_mag[static_cast<unsigned long long>(w < 0 ? -w : w)];
      (w > 0 ? pos : neg).push_back(i);
    }
  }
  std::vector<std::vector<EdgeList>> per_mag;
  BruteForcePairings out;
  out.raw_bijections = 1;
  for (auto& [m, sides] : by_mag) {
    auto& [pos, neg] = sides;
    if (pos.size() != neg.size()) return {};
    std::vector<std::size_t> perm(neg.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<EdgeList> choices;
    unsigned long long count = 0;
    do {
      ++count;
      EdgeList edges;
      for (std::size_t i = 0; i < pos.size(); ++i) {
        const auto p = pos[i];
        const auto q = neg[perm[i]];
        edges.emplace_back(std::min(p, q), std::max(p, q), m);
      }
      choices.push_back(std::move(edges));
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.raw_bijections *= count;
    per_mag.push_back(std::move(choices));
  }
  std::vector<std::size_t> idx(per_mag.size(), 0);
  while (true) {
    EdgeList all;
    for (std::size_t g = 0; g < per_mag.size(); ++g) {
      all.insert(all.end(), per_mag[g][idx[g]].begin(), per_mag[g][idx[g]].end());
    }
    std::sort(all.begin(), all.end());
    out.graphs.insert(std::move(all));
    std::size_t g = 0;
    while (g < per_mag.size() && ++idx[g] == per_mag[g].size()) idx[g++] = 0;
    if (g == per_mag.size()) break;
  }
  return out;
}

/// Connectivity of an edge list on n vertices by repeated relaxation.
inline bool connected(std::size_t n, const EdgeList& edges) {
  if (n <= 1) return true;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [u, v, m] : edges) {
      if (reached[u] != reached[v]) {
        reached[u] = reached[v] = true;
        changed = true;
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
}

}  // namespace oracle
