#pragma once

#include "circact/core.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace circact {

/// Manifold of dimension 2n acted on by a torus of dimension k.
struct DimensionPair {
  std::int64_t n = 3;
  std::int64_t k = 1;

  std::int64_t slice_dimension() const noexcept { return 2 * n - k; }
};

/// Element of pi_1(SO(m)) = Z/2 for m >= 3.
struct Z2Class {
  int value = 0;

  bool trivial() const noexcept { return value == 0; }
  friend bool operator==(const Z2Class&, const Z2Class&) = default;
};

enum class HomotopyGroup { Zero, Z, Z2 };

std::string_view to_string(HomotopyGroup group);

/// pi_q(SO(2n)/U(n)) in the stable range q < 2n - 1, by q mod 8.
HomotopyGroup stable_pi_so_mod_u(std::uint64_t q);

struct Admissibility {
  bool exists = false;  // invariant almost complex structure on the sum
  bool unique = false;  // unique up to homotopy

  friend bool operator==(const Admissibility&, const Admissibility&) = default;
};

/// Existence iff (2n - k) mod 8 in {2,4,5,6}; uniqueness iff in {4,5}.
/// Throws BadDimensions unless 0 < k < 2n.
Admissibility kustarev_admissible(const DimensionPair& dims);

/// Class of the block-diagonal loop of 2x2 rotations at the given speeds:
/// the parity of the total speed.
Z2Class rotation_loop_class(std::span<const std::int64_t> speeds);

/// The map from normal framings of a circle in S^6 to tangent framings of
/// R^7 along it swaps the two classes.
Z2Class psi_flip(Z2Class normal_class);

/// Framing class of a free orbit of t.(z1,z2,z3,x) = (t^-a z1, t^b z2, t^(a+b) z3, x).
/// Throws BadParams unless a, b >= 1.
Z2Class equivariant_normal_framing_class(std::int64_t a, std::int64_t b);

/// Throws MissingProfile. Integral formality also needs torsion_free.
enum class Coefficients { Rational, Integral };
bool equivariantly_formal(const std::optional<HomologyProfile>& profile,
                          Coefficients coefficients = Coefficients::Rational);

struct SumReport {
  DimensionPair dims;
  Admissibility admissibility;
  std::optional<std::string> diffeotype;
};

struct SumResult {
  Dataset dataset;
  SumReport report;
};

/// Label keys written on composed datasets.
inline constexpr std::string_view kConstructionLabel = "construction";
inline constexpr std::string_view kKustarevSum = "kustarev_sum";
inline constexpr std::string_view kSummandsLabel = "summands";
inline constexpr std::string_view kBlocksLabel = "summand_blocks";

/// Per-point block ids recorded by kustarev_sum(); empty without provenance.
std::vector<std::string> summand_blocks(const Dataset& dataset);

/// Fibred connected sum along free orbits of circle actions, on fixed-point
/// data and homology. Points are renamed "m1.<name>" and "m2.<name>".
/// Throws MissingProfile, InvalidData, WrongDimension, NotAdmissible,
/// NotSimplyConnected.
SumResult kustarev_sum(const Dataset& first, const Dataset& second);

// Gluing-map check on S^1 x (R^5 \ 0), coordinates (z1, z2, z3, t), |z1| = 1.

struct CollarPoint {
  std::complex<double> z1;
  std::complex<double> z2;
  std::complex<double> z3;
  double t = 0.0;
};

using CollarMap = std::function<CollarPoint(const CollarPoint&)>;

/// A self-map of the collar together with its inverse.
struct FramingTwist {
  CollarMap forward;
  CollarMap inverse;
};

/// h(z1, z2, z3, t) = (z1, z1 z2, z3, t), which changes the framing class.
FramingTwist standard_framing_twist();

/// alpha_E(z1, v) = (z1, alpha(|v|) v / |v|) for v = (z2, z3, t).
CollarPoint radial_reflection(const CollarPoint& p,
                              const std::function<double(double)>& alpha);

struct GluingCheckOptions {
  std::size_t samples = 1000;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  /// Any orientation-reversing diffeomorphism of (0, inf).
  std::function<double(double)> alpha = [](double r) { return 1.0 / r; };
};

struct GluingCheck {
  bool passed = false;
  double worst_deviation = 0.0;  // relative, max over coordinates
  std::size_t samples = 0;
};

/// Samples points and checks h o alpha_E o h^-1 == alpha_E to the tolerance.
/// Throws std::invalid_argument when tolerance <= 0.
GluingCheck verify_framing_reversal_identity(const GluingCheckOptions& options,
                                             const FramingTwist& twist = standard_framing_twist());

}  // namespace circact
