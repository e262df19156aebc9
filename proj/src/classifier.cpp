#include "circact/classifier.hpp"

#include "circact/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <optional>
#include <map>
#include <utility>

namespace circact {

namespace {

// One template entry: coeff . params + constant.
struct LinearForm {
  std::array<int, 4> coeff{};
  int constant = 0;
};

using Slot = std::array<LinearForm, 3>;
using Template = std::array<Slot, 4>;

constexpr LinearForm form(int a, int b = 0, int c = 0, int d = 0) { return {{a, b, c, d}, 0}; }
constexpr LinearForm constant(int k) { return {{0, 0, 0, 0}, k}; }

const Template& template_for(CaseTag tag) {
  static const Template kA = {{
      {form(1), form(0, 1), form(0, 0, 1)},
      {form(-1), form(-1, 1), form(-1, 0, 1)},
      {form(0, -1), form(1, -1), form(0, -1, 1)},
      {form(0, 0, -1), form(1, 0, -1), form(0, 1, -1)},
  }};
  static const Template kB = {{
      {form(1), form(1, 1), form(1, 2)},
      {form(-1), form(0, 1), form(1, 2)},
      {form(-1, -2), form(0, -1), form(1)},
      {form(-1, -2), form(-1, -1), form(-1)},
  }};
  static const Template kC = {{
      {constant(1), constant(2), constant(3)},
      {constant(-1), constant(1), form(1)},
      {constant(-1), constant(1), form(-1)},
      {constant(-1), constant(-2), constant(-3)},
  }};
  static const Template kD = {{
      {form(1), form(0, 1), form(-1, -1)},
      {form(-1), form(0, -1), form(1, 1)},
      {form(0, 0, 1), form(0, 0, 0, 1), form(0, 0, -1, -1)},
      {form(0, 0, -1), form(0, 0, 0, -1), form(0, 0, 1, 1)},
  }};
  static const Template kE = {{
      {form(-3, -1), form(1), form(0, 1)},
      {form(-2, -1), form(3, 1), form(3, 2)},
      {form(-1), form(-1, -1), form(2, 1)},
      {form(0, -1), form(-3, -2), form(1, 1)},
  }};
  static const Template kF = {{
      {form(-1, -1), form(2, 1), form(0, 1)},
      {form(-2, -1), form(1), form(0, 1)},
      {form(0, -1), form(-2, -1), form(1, 1)},
      {form(-1), form(0, -1), form(2, 1)},
  }};
  switch (tag) {
    case CaseTag::A_CP3: return kA;
    case CaseTag::B_Q3: return kB;
    case CaseTag::C_Fano: return kC;
    case CaseTag::D_S6_union: return kD;
    case CaseTag::E_BlP_S6: return kE;
    case CaseTag::F_BlC_S6: return kF;
  }
  return kA;
}

// Linear equations kept in reduced row echelon form with integer rows.
// Template coefficients are tiny, so they stay in int64; right-hand sides
// carry the weights and are arbitrary precision.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  // False when the equation contradicts the ones already present.
  bool add(const std::array<int, 4>& coeff, const BigInt& rhs) {
    Row row;
    for (std::size_t j = 0; j < unknowns_; ++j) row.a[j] = coeff[j];
    row.b = rhs;
    for (const auto& r : rows_) eliminate(row, r);
    std::size_t p = 0;
    while (p < unknowns_ && row.a[p] == 0) ++p;
    if (p == unknowns_) return row.b == 0;
    if (row.a[p] < 0) {
      for (auto& x : row.a) x = -x;
      row.b = -row.b;
    }
    row.pivot = p;
    for (auto& r : rows_) eliminate(r, row);
    rows_.push_back(std::move(row));
    return true;
  }

  bool determined() const { return rows_.size() == unknowns_; }

  // Integral solution of a determined system, or nullopt when some unknown
  // is fractional or outside int64.
  std::optional<std::vector<std::int64_t>> integral_solution() const {
    std::vector<std::int64_t> x(unknowns_);
    for (const auto& r : rows_) {
      const BigInt d = r.a[r.pivot];
      if (r.b % d != 0) return std::nullopt;
      auto v = to_int64(r.b / d);
      if (!v) return std::nullopt;
      x[r.pivot] = *v;
    }
    return x;
  }

 private:
  struct Row {
    std::array<std::int64_t, 4> a{};
    BigInt b;
    std::size_t pivot = 0;
  };

  // Clears column `by.pivot` of `row`, then divides out the row's content.
  void eliminate(Row& row, const Row& by) const {
    const std::int64_t f = row.a[by.pivot];
    if (f == 0) return;
    const std::int64_t m = by.a[by.pivot];
    std::int64_t g = 0;
    for (std::size_t j = 0; j < unknowns_; ++j) {
      row.a[j] = m * row.a[j] - f * by.a[j];
      g = std::gcd(g, row.a[j]);
    }
    row.b = m * row.b - f * by.b;
    if (g > 1) {
      const BigInt rem = abs(row.b % g);
      g = std::gcd(g, rem.convert_to<std::int64_t>());
    }
    if (g > 1) {
      for (std::size_t j = 0; j < unknowns_; ++j) row.a[j] /= g;
      row.b /= g;
    }
  }

  std::size_t unknowns_;
  std::vector<Row> rows_;
};

using Key = std::pair<JangCase, bool>;

struct Search {
  CaseTag tag;
  const Template& tmpl;
  const FixedPointData& data;  // possibly negated
  bool reversed;
  std::map<Key, Match>& found;
  std::array<std::array<Weight, 3>, 4> weights{};

  void run() {
    for (std::size_t i = 0; i < 4; ++i) {
      auto sorted = data.points[i].weights.canonical();
      std::sort(sorted.begin(), sorted.end());
      std::copy(sorted.begin(), sorted.end(), weights[i].begin());
    }
    descend(0, 0, LinearSystem(param_count(tag)));
  }

  void descend(std::size_t point, unsigned used, const LinearSystem& system) {
    // Once the parameters are pinned down the remaining points carry no
    // freedom; the candidate family is regenerated and compared instead.
    if (system.determined()) {
      accept(system);
      return;
    }
    if (point == 4) return;
    for (std::size_t slot = 0; slot < 4; ++slot) {
      if (used & (1u << slot)) continue;
      auto perm = weights[point];
      do {
        LinearSystem next = system;
        bool consistent = true;
        for (std::size_t j = 0; j < 3 && consistent; ++j) {
          const auto& f = tmpl[slot][j];
          consistent = next.add(f.coeff, BigInt(perm[j]) - f.constant);
        }
        if (consistent) descend(point + 1, used | (1u << slot), next);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  void accept(const LinearSystem& system) {
    auto params = system.integral_solution();
    if (!params) return;
    JangCase kase{tag, std::move(*params)};
    try {
      check_params(kase);
    } catch (const Error&) {
      return;
    }
    Key key{kase, reversed};
    if (found.count(key)) return;
    const auto family = gen_family(kase);
    if (!family.same_weights(data)) return;
    // Points with equal weight multisets are interchangeable, so a greedy
    // assignment always succeeds once the multisets agree.
    std::array<std::size_t, 4> slot_of_point{};
    unsigned taken = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t s = 0; s < 4; ++s) {
        if (!(taken & (1u << s)) && data.points[i].weights.same_multiset(family.points[s].weights)) {
          slot_of_point[i] = s;
          taken |= 1u << s;
          break;
        }
      }
    }
    found.emplace(key, Match{std::move(kase), slot_of_point, reversed});
  }
};

}  // namespace

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::A_CP3: return "A_CP3";
    case CaseTag::B_Q3: return "B_Q3";
    case CaseTag::C_Fano: return "C_Fano";
    case CaseTag::D_S6_union: return "D_S6_union";
    case CaseTag::E_BlP_S6: return "E_BlP_S6";
    case CaseTag::F_BlC_S6: return "F_BlC_S6";
  }
  return "?";
}

std::optional<CaseTag> parse_case_tag(std::string_view text) {
  for (CaseTag tag : kAllCases) {
    const auto full = to_string(tag);
    if (text == full) return tag;
    if (text.size() == 1 && std::toupper(static_cast<unsigned char>(text[0])) == full[0]) return tag;
  }
  return std::nullopt;
}

std::size_t param_count(CaseTag tag) {
  switch (tag) {
    case CaseTag::A_CP3: return 3;
    case CaseTag::C_Fano: return 1;
    case CaseTag::D_S6_union: return 4;
    default: return 2;
  }
}

std::vector<std::string> param_names(CaseTag tag) {
  static const std::vector<std::string> names = {"a", "b", "c", "d"};
  return {names.begin(), names.begin() + static_cast<std::ptrdiff_t>(param_count(tag))};
}

std::int64_t family_todd(CaseTag tag) {
  switch (tag) {
    case CaseTag::A_CP3:
    case CaseTag::B_Q3:
    case CaseTag::C_Fano: return 1;
    default: return 0;
  }
}

void check_params(const JangCase& kase) {
  const auto& p = kase.params;
  const std::string name(to_string(kase.tag));
  if (p.size() != param_count(kase.tag)) {
    throw Error(ErrorKind::BadParams, name + " takes " + std::to_string(param_count(kase.tag)) +
                                          " parameters, got " + std::to_string(p.size()));
  }
  if (kase.tag == CaseTag::C_Fano) {
    // Any integer is allowed except 0, which would put a zero weight at a fixed point.
    if (p[0] == 0) throw Error(ErrorKind::BadParams, name + ": a = 0 gives a zero weight");
    return;
  }
  for (auto v : p) {
    if (v <= 0) throw Error(ErrorKind::BadParams, name + ": parameters must be positive");
  }
  if (kase.tag == CaseTag::A_CP3 && (p[0] == p[1] || p[0] == p[2] || p[1] == p[2])) {
    throw Error(ErrorKind::BadParams, name + ": a, b, c must be mutually distinct");
  }
}

FixedPointData gen_family(const JangCase& kase) {
  check_params(kase);
  const auto& tmpl = template_for(kase.tag);
  std::vector<std::vector<Weight>> weights;
  for (const auto& slot : tmpl) {
    std::vector<Weight> point;
    for (const auto& f : slot) {
      BigInt v = f.constant;
      for (std::size_t j = 0; j < kase.params.size(); ++j) v += BigInt(f.coeff[j]) * kase.params[j];
      auto w = to_int64(v);
      if (!w || *w == std::numeric_limits<Weight>::min()) {
        throw Error(ErrorKind::BadParams, "parameters too large for 64-bit weights");
      }
      point.push_back(*w);
    }
    weights.push_back(std::move(point));
  }
  return make_data(std::move(weights));
}

bool ClassificationResult::contains(const JangCase& kase, bool reversed) const {
  return std::any_of(matches.begin(), matches.end(),
                     [&](const Match& m) { return m.kase == kase && m.reversed == reversed; });
}

bool ClassificationResult::contains(CaseTag tag) const {
  return std::any_of(matches.begin(), matches.end(),
                     [&](const Match& m) { return m.kase.tag == tag; });
}

ClassificationResult classify(const FixedPointData& data) {
  require_valid(data);
  if (data.n != 3) {
    throw Error(ErrorKind::WrongDimension, "classification needs n = 3, got " + std::to_string(data.n));
  }
  if (data.size() != 4) {
    throw Error(ErrorKind::WrongPointCount,
                "classification needs exactly 4 fixed points, got " + std::to_string(data.size()));
  }
  std::map<Key, Match> found;
  const FixedPointData reversed_data = data.negated();
  for (bool reversed : {false, true}) {
    for (CaseTag tag : kAllCases) {
      Search search{tag, template_for(tag), reversed ? reversed_data : data, reversed, found};
      search.run();
    }
  }
  ClassificationResult result;
  for (auto& [key, match] : found) result.matches.push_back(std::move(match));
  return result;
}

RecognitionContext RecognitionContext::from_labels(const Labels& labels) {
  auto get = [&](const char* key) {
    auto it = labels.find(key);
    return it == labels.end() ? std::string() : it->second;
  };
  return {get("construction") == "kustarev_sum" && get("summands") == "S^6+S^6"};
}

std::optional<std::string> recognize_diffeotype(const FixedPointData& data,
                                                const std::optional<HomologyProfile>& profile,
                                                const RecognitionContext& context) {
  if (!profile) throw Error(ErrorKind::MissingProfile, "diffeotype recognition needs a homology profile");
  require_valid(data);
  const auto& h = *profile;
  const bool formal_rank_one = h.simply_connected && h.torsion_free && h.b2 == 1 && h.b3 == 0;

  // Fibred sum of two S^6 along free orbits: surgery on S^6 along a circle.
  if (context.kustarev_sum_of_two_spheres) {
    return formal_rank_one ? std::optional<std::string>(kSphereProduct) : std::nullopt;
  }
  // Case F, simply connected and Z-equivariantly formal: Wall-Jupp-Zubr
  // invariants agree with the quadric threefold.
  if (formal_rank_one && data.n == 3 && data.size() == 4 && classify(data).contains(CaseTag::F_BlC_S6)) {
    return std::string(kQuadricThreefold);
  }
  return std::nullopt;
}

}  // namespace circact
