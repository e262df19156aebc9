#pragma once

#include "circact/core.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circact {

/// The six weight families of 4-fixed-point almost complex circle actions on
/// 6-manifolds.
enum class CaseTag { A_CP3, B_Q3, C_Fano, D_S6_union, E_BlP_S6, F_BlC_S6 };

inline constexpr std::array<CaseTag, 6> kAllCases = {
    CaseTag::A_CP3,      CaseTag::B_Q3,     CaseTag::C_Fano,
    CaseTag::D_S6_union, CaseTag::E_BlP_S6, CaseTag::F_BlC_S6};

std::string_view to_string(CaseTag tag);

/// Accepts the full tag ("F_BlC_S6") or its letter ("F", "f").
std::optional<CaseTag> parse_case_tag(std::string_view text);

std::size_t param_count(CaseTag tag);

/// Names of the case's parameters in order, e.g. {"a", "b"}.
std::vector<std::string> param_names(CaseTag tag);

/// Todd genus shared by every member of the family.
std::int64_t family_todd(CaseTag tag);

struct JangCase {
  CaseTag tag;
  std::vector<std::int64_t> params;

  friend auto operator<=>(const JangCase&, const JangCase&) = default;
  friend bool operator==(const JangCase&, const JangCase&) = default;
};

/// Throws BadParams when the parameters break the case's constraints.
void check_params(const JangCase& kase);

/// Points p1..p4 carrying the family's weights in template order.
FixedPointData gen_family(const JangCase& kase);

struct Match {
  JangCase kase;
  /// slot_of_point[i] is the template slot (0..3) matched by data point i.
  std::array<std::size_t, 4> slot_of_point{};
  bool reversed = false;

  friend auto operator<=>(const Match&, const Match&) = default;
  friend bool operator==(const Match&, const Match&) = default;
};

struct ClassificationResult {
  /// Sorted by (case, params, reversed); one entry per distinct triple.
  std::vector<Match> matches;

  bool empty() const noexcept { return matches.empty(); }
  bool contains(const JangCase& kase, bool reversed) const;
  bool contains(CaseTag tag) const;
};

/// Exhaustive inverse problem: every (case, params, reversed) whose family
/// equals the data as a multiset of weight multisets.
/// Throws InvalidData, WrongDimension (n != 3), WrongPointCount (!= 4 points).
ClassificationResult classify(const FixedPointData& data);

/// Provenance that weight data alone cannot carry.
struct RecognitionContext {
  bool kustarev_sum_of_two_spheres = false;

  /// Reads the labels written on composed datasets by kustarev_sum().
  static RecognitionContext from_labels(const Labels& labels);
};

inline constexpr std::string_view kQuadricThreefold = "quadric Q^3";
inline constexpr std::string_view kSphereProduct = "S^4 x S^2";

/// Throws MissingProfile when no profile is attached.
std::optional<std::string> recognize_diffeotype(const FixedPointData& data,
                                                const std::optional<HomologyProfile>& profile,
                                                const RecognitionContext& context = {});

}  // namespace circact
