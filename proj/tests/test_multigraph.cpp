#include "circact/classifier.hpp"
#include "circact/multigraph.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace circact;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no circact::Error thrown";
  return ErrorKind::ParseError;
}

oracle::EdgeList as_oracle(const Multigraph& g) {
  oracle::EdgeList out;
  for (const auto& e : g.edges) out.emplace_back(e.u, e.v, e.label);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<long long>> raw(const FixedPointData& d) {
  std::vector<std::vector<long long>> out;
  for (const auto& p : d.points) out.emplace_back(p.weights.begin(), p.weights.end());
  return out;
}

// Random pairable data: matched +w / -w pairs dealt into shuffled slots.
FixedPointData random_pairable(std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 3);
  std::size_t points = 2 + rng() % 3;
  if ((points * n) % 2 != 0) ++points;
  std::vector<Weight> slots;
  while (slots.size() < points * n) {
    const Weight w = 1 + static_cast<Weight>(rng() % 3);
    slots.push_back(w);
    slots.push_back(-w);
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::vector<Weight>> pts(points);
  for (std::size_t i = 0; i < slots.size(); ++i) pts[i / n].push_back(slots[i]);
  return make_data(std::move(pts), n);
}

}  // namespace

TEST(Multigraph, SphereHasOneConnectedGraph) {
  auto graphs = build_multigraphs(make_data({{1, 2, -3}, {-1, -2, 3}}));
  ASSERT_EQ(graphs.size(), 1u);
  EXPECT_TRUE(graphs[0].connected());
  ASSERT_EQ(graphs[0].edges.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(graphs[0].edges[i], (Edge{0, 1, i + 1}));
  }
  EXPECT_EQ(connectivity_verdict(graphs), Connectivity::AlwaysConnected);
}

TEST(Multigraph, UnionOfSpheresSplitsInTwo) {
  auto graphs = build_multigraphs(gen_family({CaseTag::D_S6_union, {1, 2, 4, 5}}));
  for (const auto& g : graphs) {
    ASSERT_EQ(g.components.size(), 2u);
  }
  EXPECT_EQ(connectivity_verdict(graphs), Connectivity::NeverConnected);
}

TEST(Multigraph, SharedMagnitudeAllowsCrossPairing) {
  // With (1,2,3,4), magnitude 3 occurs in both halves.
  auto graphs = build_multigraphs(gen_family({CaseTag::D_S6_union, {1, 2, 3, 4}}));
  EXPECT_EQ(connectivity_verdict(graphs), Connectivity::DependsOnPairing);
}

TEST(Multigraph, EmptyDataGivesEmptyGraph) {
  auto graphs = build_multigraphs(FixedPointData{3, {}});
  ASSERT_EQ(graphs.size(), 1u);
  EXPECT_TRUE(graphs[0].vertices.empty());
  EXPECT_TRUE(graphs[0].connected());
}

TEST(Multigraph, LoopsAndBruteForceExample) {
  auto data = make_data({{1, -1, 2}, {-1, 1, -2}});
  auto graphs = build_multigraphs(data);
  auto brute = oracle::brute_force_pairings(raw(data));
  EXPECT_EQ(graphs.size(), brute.graphs.size());
  bool any_connected = false;
  for (const auto& g : graphs) any_connected |= g.connected();
  EXPECT_TRUE(any_connected);
  const auto v = connectivity_verdict(graphs);
  EXPECT_TRUE(v == Connectivity::AlwaysConnected || v == Connectivity::DependsOnPairing);
}

TEST(Multigraph, MatchesBruteForceEnumeration) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    auto data = random_pairable(rng);
    auto graphs = build_multigraphs(data);
    auto brute = oracle::brute_force_pairings(raw(data));
    std::set<oracle::EdgeList> ours;
    for (const auto& g : graphs) {
      ours.insert(as_oracle(g));
      EXPECT_EQ(g.connected(), oracle::connected(data.size(), as_oracle(g)));
    }
    EXPECT_EQ(ours.size(), graphs.size()) << "duplicates in output";
    EXPECT_EQ(ours, brute.graphs);
    EXPECT_EQ(count_raw_matchings(data), BigInt(brute.raw_bijections));
  }
}

TEST(Multigraph, DegreeEqualsArity) {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    auto data = random_pairable(rng);
    for (const auto& g : build_multigraphs(data)) {
      for (std::size_t v = 0; v < data.size(); ++v) {
        EXPECT_EQ(g.degree(v), static_cast<std::size_t>(data.n));
      }
    }
  }
}

TEST(Multigraph, Errors) {
  EXPECT_EQ(kind_of([] { build_multigraphs(make_data({{1, 2, 3}, {-1, -2, -4}})); }),
            ErrorKind::UnpairableWeights);
  EXPECT_EQ(kind_of([] { build_multigraphs(make_data({{1, 0, 3}})); }), ErrorKind::InvalidData);
  // Eight +1 and eight -1 give 8! raw bijections and well over four graphs.
  std::vector<std::vector<Weight>> pts;
  for (int i = 0; i < 8; ++i) pts.push_back({i % 2 ? -1 : 1, i % 2 ? 1 : -1});
  auto many = make_data(pts, 2);
  PairingOptions tight;
  tight.cap = 4;
  EXPECT_EQ(kind_of([&] { build_multigraphs(many, tight); }), ErrorKind::CapExceeded);
  EXPECT_THROW(connectivity_verdict({}), std::invalid_argument);
}

TEST(Multigraph, BlocksRestrictPairing) {
  auto data = gen_family({CaseTag::D_S6_union, {1, 2, 1, 2}});
  EXPECT_EQ(connectivity_verdict(build_multigraphs(data)), Connectivity::DependsOnPairing);
  PairingOptions opts;
  opts.blocks = {"1", "1", "2", "2"};
  EXPECT_EQ(connectivity_verdict(build_multigraphs(data, opts)), Connectivity::NeverConnected);
}

TEST(Isotropy, LinearModelIsConnectedWithSixEdges) {
  auto g = linear_action_isotropy(2, 3, 5);
  EXPECT_TRUE(g.connected());
  EXPECT_EQ(g.vertices.size(), 4u);
  EXPECT_EQ(g.edges.size(), 6u);
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 3u);
}

TEST(Isotropy, BadWeights) {
  EXPECT_EQ(kind_of([] { linear_action_isotropy(1, 2, 3); }), ErrorKind::BadWeights);
  EXPECT_EQ(kind_of([] { linear_action_isotropy(2, 4, 5); }), ErrorKind::BadWeights);
}

TEST(Exoticness, SingleSphereAndProjectiveSpaceAreNotObstructed) {
  EXPECT_FALSE(exoticness_obstruction(build_multigraphs(make_data({{2, 3, -5}, {-2, -3, 5}}))));
  EXPECT_FALSE(exoticness_obstruction(build_multigraphs(gen_family({CaseTag::A_CP3, {1, 2, 3}}))));
}

TEST(Exoticness, DisjointSpheresAreObstructed) {
  EXPECT_TRUE(exoticness_obstruction(build_multigraphs(gen_family({CaseTag::D_S6_union, {2, 3, 7, 9}}))));
  // A weight of 1 has no linear model.
  EXPECT_FALSE(exoticness_obstruction(build_multigraphs(gen_family({CaseTag::D_S6_union, {1, 2, 4, 5}}))));
}

TEST(Dot, Format) {
  auto g = build_multigraphs(make_data({{1, 2, -3}, {-1, -2, 3}}))[0];
  EXPECT_EQ(to_dot(g, "S6"),
            "graph \"S6\" {\n"
            "  \"p1\";\n"
            "  \"p2\";\n"
            "  \"p1\" -- \"p2\" [label=\"1\"];\n"
            "  \"p1\" -- \"p2\" [label=\"2\"];\n"
            "  \"p1\" -- \"p2\" [label=\"3\"];\n"
            "}\n");
}
