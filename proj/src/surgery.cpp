#include "circact/surgery.hpp"

#include "circact/classifier.hpp"

#include <sstream>

namespace circact {

std::string_view to_string(HomotopyGroup group) {
  switch (group) {
    case HomotopyGroup::Zero: return "0";
    case HomotopyGroup::Z: return "Z";
    case HomotopyGroup::Z2: return "Z2";
  }
  return "?";
}

HomotopyGroup stable_pi_so_mod_u(std::uint64_t q) {
  // pi_q(SO/U) = pi_{q+1}(O) by Bott periodicity.
  switch (q % 8) {
    case 0: return HomotopyGroup::Z2;
    case 2: return HomotopyGroup::Z;
    case 6: return HomotopyGroup::Z;
    case 7: return HomotopyGroup::Z2;
    default: return HomotopyGroup::Zero;  // 1, 3, 4, 5
  }
}

Admissibility kustarev_admissible(const DimensionPair& dims) {
  if (dims.n <= 0 || dims.k <= 0 || dims.k >= 2 * dims.n) {
    throw Error(ErrorKind::BadDimensions, "need 0 < k < 2n, got n = " + std::to_string(dims.n) +
                                              ", k = " + std::to_string(dims.k));
  }
  // Lifting over the collar S^{2n-k-1} x [0,1] rel boundary: existence is
  // obstructed in pi_{2n-k-1}(F), uniqueness in pi_{2n-k}(F), F = SO(2n)/U(n).
  const auto r = static_cast<std::uint64_t>(dims.slice_dimension());
  Admissibility out;
  out.exists = stable_pi_so_mod_u(r - 1) == HomotopyGroup::Zero;
  out.unique = out.exists && stable_pi_so_mod_u(r) == HomotopyGroup::Zero;
  return out;
}

Z2Class rotation_loop_class(std::span<const std::int64_t> speeds) {
  int parity = 0;
  for (auto s : speeds) parity ^= static_cast<int>(s & 1);
  return {parity};
}

Z2Class psi_flip(Z2Class normal_class) { return {1 - normal_class.value}; }

Z2Class equivariant_normal_framing_class(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::BadParams, "framing class needs a, b >= 1");
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a, b, &sum)) throw Error(ErrorKind::BadParams, "a + b overflows");
  // The linear action on R^7 rotates the three complex planes at speeds
  // -a, b, a+b; that tangent loop is the image of the normal framing.
  const std::int64_t speeds[] = {-a, b, sum};
  return psi_flip(rotation_loop_class(speeds));
}

bool equivariantly_formal(const std::optional<HomologyProfile>& profile, Coefficients coefficients) {
  if (!profile) throw Error(ErrorKind::MissingProfile, "formality needs a homology profile");
  // b1 = b5 = 0 is only known for simply connected manifolds.
  const bool odd_vanish = profile->simply_connected && profile->b3 == 0;
  return coefficients == Coefficients::Rational ? odd_vanish : odd_vanish && profile->torsion_free;
}

std::vector<std::string> summand_blocks(const Dataset& dataset) {
  auto construction = dataset.labels.find(std::string(kConstructionLabel));
  auto blocks = dataset.labels.find(std::string(kBlocksLabel));
  if (construction == dataset.labels.end() || construction->second != kKustarevSum ||
      blocks == dataset.labels.end()) {
    return {};
  }
  std::vector<std::string> out;
  std::stringstream in(blocks->second);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  if (out.size() != dataset.data.size()) return {};
  return out;
}

SumResult kustarev_sum(const Dataset& first, const Dataset& second) {
  if (!first.homology || !second.homology) {
    throw Error(ErrorKind::MissingProfile, "both summands need a homology profile");
  }
  for (const Dataset* d : {&first, &second}) {
    auto violations = validate(*d);
    if (!violations.empty()) throw Error(ErrorKind::InvalidData, "invalid summand", std::move(violations));
  }
  if (first.data.n != second.data.n) {
    throw Error(ErrorKind::WrongDimension, "summands differ in dimension");
  }

  SumResult result;
  auto& report = result.report;
  report.dims = {first.data.n, 1};
  try {
    report.admissibility = kustarev_admissible(report.dims);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAdmissible, e.what());
  }
  if (!report.admissibility.exists) {
    throw Error(ErrorKind::NotAdmissible,
                "no invariant almost complex structure is known on the sum: 2n - k = " +
                    std::to_string(report.dims.slice_dimension()) + " is not 2, 4, 5, 6 mod 8");
  }
  if (!first.homology->simply_connected || !second.homology->simply_connected) {
    throw Error(ErrorKind::NotSimplyConnected,
                "homology of the sum is only tracked for simply connected summands");
  }
  if (first.data.empty() || second.data.empty()) {
    throw Error(ErrorKind::InvalidData, "summands need a nonempty isolated fixed-point set");
  }

  auto& out = result.dataset;
  out.data.n = first.data.n;
  std::string blocks;
  int index = 0;
  for (const Dataset* d : {&first, &second}) {
    ++index;
    const std::string prefix = "m" + std::to_string(index) + ".";
    const auto inner = summand_blocks(*d);
    for (std::size_t i = 0; i < d->data.size(); ++i) {
      const auto& p = d->data.points[i];
      out.data.points.push_back({prefix + p.name, p.weights});
      if (!blocks.empty()) blocks += ',';
      blocks += std::to_string(index);
      if (!inner.empty()) blocks += "." + inner[i];
    }
  }

  const auto& h1 = *first.homology;
  const auto& h2 = *second.homology;
  out.homology = HomologyProfile{true, h1.b2 + h2.b2 + 1, h1.b3 + h2.b3,
                                 h1.torsion_free && h2.torsion_free};

  auto kind = [](const HomologyProfile& h) { return is_homology_sphere(h) ? "S^6" : "M"; };
  out.labels[std::string(kConstructionLabel)] = std::string(kKustarevSum);
  out.labels[std::string(kSummandsLabel)] = std::string(kind(h1)) + "+" + kind(h2);
  out.labels[std::string(kBlocksLabel)] = blocks;
  out.labels["structure_unique"] = report.admissibility.unique ? "true" : "false";

  report.diffeotype =
      recognize_diffeotype(out.data, out.homology, RecognitionContext::from_labels(out.labels));
  if (report.diffeotype) out.labels["diffeotype"] = *report.diffeotype;
  return result;
}

}  // namespace circact
