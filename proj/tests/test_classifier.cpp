#include "circact/classifier.hpp"
#include "circact/io.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

using namespace circact;

namespace {

FixedPointData as_data(const oracle::Family& fam) {
  std::vector<std::vector<Weight>> pts;
  for (const auto& p : fam) pts.push_back({p[0], p[1], p[2]});
  return make_data(std::move(pts));
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no circact::Error thrown";
  return ErrorKind::ParseError;
}

JangCase random_case(std::mt19937_64& rng, CaseTag tag) {
  std::uniform_int_distribution<std::int64_t> p(1, 12);
  JangCase k{tag, {}};
  for (std::size_t i = 0; i < param_count(tag); ++i) k.params.push_back(p(rng));
  if (tag == CaseTag::A_CP3) {
    while (k.params[1] == k.params[0]) k.params[1] = p(rng);
    while (k.params[2] == k.params[0] || k.params[2] == k.params[1]) k.params[2] = p(rng);
  }
  return k;
}

}  // namespace

TEST(CaseTag, NamesAndParsing) {
  for (CaseTag tag : kAllCases) {
    EXPECT_EQ(parse_case_tag(to_string(tag)), tag);
    EXPECT_EQ(parse_case_tag(to_string(tag).substr(0, 1)), tag);
    EXPECT_EQ(param_names(tag).size(), param_count(tag));
  }
  EXPECT_EQ(parse_case_tag("f"), CaseTag::F_BlC_S6);
  EXPECT_FALSE(parse_case_tag("G"));
}

TEST(GenFamily, ListedExamples) {
  EXPECT_TRUE(gen_family({CaseTag::A_CP3, {1, 2, 3}})
                  .same_weights(make_data({{1, 2, 3}, {-1, 1, 2}, {-2, -1, 1}, {-3, -2, -1}})));
  EXPECT_TRUE(gen_family({CaseTag::D_S6_union, {1, 2, 3, 4}})
                  .same_weights(make_data({{1, 2, -3}, {-1, -2, 3}, {3, 4, -7}, {-3, -4, 7}})));
  EXPECT_TRUE(gen_family({CaseTag::F_BlC_S6, {1, 1}})
                  .same_weights(make_data({{-2, 3, 1}, {-3, 1, 1}, {-1, -3, 2}, {-1, -1, 3}})));
}

TEST(GenFamily, AgreesWithIndependentTranscription) {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 200; ++iter) {
    for (CaseTag tag : kAllCases) {
      auto k = random_case(rng, tag);
      auto& q = k.params;
      auto fam = oracle::family(to_string(tag).front(), q[0], q.size() > 1 ? q[1] : 0,
                                q.size() > 2 ? q[2] : 0, q.size() > 3 ? q[3] : 0);
      EXPECT_TRUE(gen_family(k).same_weights(as_data(fam))) << to_string(tag);
    }
  }
}

TEST(GenFamily, BadParams) {
  EXPECT_EQ(kind_of([] { gen_family({CaseTag::A_CP3, {1, 1, 2}}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { gen_family({CaseTag::A_CP3, {1, 2}}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { gen_family({CaseTag::B_Q3, {0, 2}}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { gen_family({CaseTag::C_Fano, {0}}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { gen_family({CaseTag::F_BlC_S6, {-1, 2}}); }), ErrorKind::BadParams);
}

TEST(Classify, ProjectiveSpace) {
  auto r = classify(gen_family({CaseTag::A_CP3, {1, 2, 3}}));
  EXPECT_TRUE(r.contains({CaseTag::A_CP3, {1, 2, 3}}, false));
}

TEST(Classify, UnionOfSpheresExample) {
  auto r = classify(make_data({{1, 2, -3}, {-1, -2, 3}, {1, 1, -2}, {-1, -1, 2}}));
  EXPECT_TRUE(r.contains({CaseTag::D_S6_union, {1, 2, 1, 1}}, false));
  for (const auto& m : r.matches) {
    EXPECT_TRUE(gen_family(m.kase).same_weights(
        m.reversed ? make_data({{1, 2, -3}, {-1, -2, 3}, {1, 1, -2}, {-1, -1, 2}}).negated()
                   : make_data({{1, 2, -3}, {-1, -2, 3}, {1, 1, -2}, {-1, -1, 2}})));
  }
}

TEST(Classify, AllPositiveHasNoMatch) {
  EXPECT_TRUE(classify(make_data({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4}})).empty());
}

TEST(Classify, Errors) {
  auto three = load(std::filesystem::path(CIRCACT_EXAMPLES_DIR) / "three_points.json");
  EXPECT_EQ(kind_of([&] { classify(three.data); }), ErrorKind::WrongPointCount);
  EXPECT_EQ(kind_of([] { classify(make_data({{1, 0, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}})); }),
            ErrorKind::InvalidData);
  EXPECT_EQ(kind_of([] { classify(make_data({{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}}, 4)); }),
            ErrorKind::WrongDimension);
}

TEST(Classify, ReversedCaseE) {
  auto data = gen_family({CaseTag::E_BlP_S6, {2, 3}}).negated();
  auto r = classify(data);
  EXPECT_TRUE(r.contains({CaseTag::E_BlP_S6, {2, 3}}, true));
}

TEST(Classify, SlotAssignmentIsConsistent) {
  auto data = gen_family({CaseTag::B_Q3, {2, 5}});
  std::swap(data.points[0], data.points[3]);
  auto r = classify(data);
  ASSERT_FALSE(r.empty());
  for (const auto& m : r.matches) {
    auto tmpl = gen_family(m.kase);
    if (m.reversed) tmpl = tmpl.negated();
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_TRUE(data.points[i].weights.same_multiset(tmpl.points[m.slot_of_point[i]].weights));
    }
  }
}

TEST(Classify, RoundTripOverParameterGrid) {
  for (CaseTag tag : kAllCases) {
    std::mt19937_64 rng(100 + static_cast<int>(tag));
    for (int iter = 0; iter < 40; ++iter) {
      auto k = random_case(rng, tag);
      const bool rev = iter % 2 == 1;
      auto data = gen_family(k);
      if (rev) data = data.negated();
      std::shuffle(data.points.begin(), data.points.end(), rng);
      auto r = classify(data);
      EXPECT_TRUE(r.contains(k, rev)) << to_string(tag);
      // Every reported match regenerates the input.
      for (const auto& m : r.matches) {
        auto g = gen_family(m.kase);
        EXPECT_TRUE((m.reversed ? g.negated() : g).same_weights(data));
      }
    }
  }
}

TEST(Classify, PermutationInvariance) {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 60; ++iter) {
    auto data = gen_family(random_case(rng, kAllCases[iter % 6]));
    auto shuffled = data;
    std::shuffle(shuffled.points.begin(), shuffled.points.end(), rng);
    auto strip = [](const ClassificationResult& r) {
      std::vector<std::pair<JangCase, bool>> out;
      for (const auto& m : r.matches) out.emplace_back(m.kase, m.reversed);
      return out;
    };
    EXPECT_EQ(strip(classify(data)), strip(classify(shuffled)));
  }
}

TEST(Recognize, QuadricFromCaseF) {
  auto ds = load(std::filesystem::path(CIRCACT_EXAMPLES_DIR) / "case_f.json");
  EXPECT_EQ(recognize_diffeotype(ds.data, ds.homology), std::string(kQuadricThreefold));
}

TEST(Recognize, NothingForProjectiveSpace) {
  auto ds = load(std::filesystem::path(CIRCACT_EXAMPLES_DIR) / "cp3.json");
  EXPECT_FALSE(recognize_diffeotype(ds.data, ds.homology).has_value());
}

TEST(Recognize, NeedsProfileAndFormality) {
  auto f = gen_family({CaseTag::F_BlC_S6, {1, 1}});
  EXPECT_EQ(kind_of([&] { recognize_diffeotype(f, std::nullopt); }), ErrorKind::MissingProfile);
  EXPECT_FALSE(recognize_diffeotype(f, HomologyProfile{true, 1, 0, false}).has_value());
  EXPECT_FALSE(recognize_diffeotype(f, HomologyProfile{true, 1, 2, true}).has_value());
}

TEST(Recognize, SphereProductNeedsProvenance) {
  auto d = gen_family({CaseTag::D_S6_union, {1, 2, 4, 5}});
  HomologyProfile p{true, 1, 0, true};
  EXPECT_FALSE(recognize_diffeotype(d, p).has_value());
  RecognitionContext ctx = RecognitionContext::from_labels(
      {{"construction", "kustarev_sum"}, {"summands", "S^6+S^6"}});
  EXPECT_TRUE(ctx.kustarev_sum_of_two_spheres);
  EXPECT_EQ(recognize_diffeotype(d, p, ctx), std::string(kSphereProduct));
}

TEST(Classify, LargeParameters) {
  const std::int64_t big = 100000000000000000;  // 1e17
  for (JangCase k : {JangCase{CaseTag::F_BlC_S6, {big, 3 * big + 1}},
                     JangCase{CaseTag::D_S6_union, {big, big + 1, 2 * big, 7}},
                     JangCase{CaseTag::A_CP3, {big, 2 * big, 3 * big - 1}}}) {
    EXPECT_TRUE(classify(gen_family(k)).contains(k, false)) << to_string(k.tag);
  }
  EXPECT_EQ(kind_of([] { gen_family({CaseTag::E_BlP_S6, {INT64_MAX / 2, 1}}); }), ErrorKind::BadParams);
}
