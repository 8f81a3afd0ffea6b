#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mfdim/error.hpp"
#include "mfdim/mass_function.hpp"

namespace mfdim {

// ---------------------------------------------------------------------------
// Multifractal spectrum
//
// For a mass function on an n-element frame every focal element A gets the
// rescaled exponent
//
//     y(A) = -log2 m(A) / log2(2^n - 1),
//
// and focal elements sharing one mass value form a group of size N whose
// spectrum value is
//
//     f(y) = log2 N / log2(2^n - 1).
//
// Both coordinates are normalized by the size of the non-empty power set, so
// 0 <= f <= 1 and y = 0 exactly when a single subset carries all the mass.
// ---------------------------------------------------------------------------

inline constexpr double kDefaultGroupingTolerance = 1e-9;

struct SpectrumPoint {
  double y;
  double f;
  double mass_value;
  std::uint64_t multiplicity;
  /// Set when every focal element in the group has the same cardinality.
  std::optional<unsigned> representative_cardinality;

  bool operator==(const SpectrumPoint&) const = default;
};

/// Points sorted by strictly increasing y.
struct Spectrum {
  std::size_t frame_size;
  std::vector<SpectrumPoint> points;

  bool operator==(const Spectrum&) const = default;
};

/// Throws DegenerateFrame for n = 1 and NotAFocalElement when m(A) = 0.
double y_coordinate(const MassFunction& m, FocalElement element);

/// Groups focal elements whose masses differ by at most grouping_tolerance
/// relative to the larger one. Throws DegenerateFrame for n = 1.
Spectrum spectrum(const MassFunction& m, double grouping_tolerance = kDefaultGroupingTolerance);

/// Same spectrum computed from cardinality classes, without enumerating
/// subsets. Equal to spectrum() on the materialized mass function.
Spectrum spectrum_from_profile(const CardinalityProfile& profile,
                               double grouping_tolerance = kDefaultGroupingTolerance);

// ---------------------------------------------------------------------------
// Multifractal dimension
//
//               1/(1-a) * log2 sum_A (m(A) / (2^|A|-1))^a (2^|A|-1)
//     D_a  =  -----------------------------------------------------
//                    log2 sum_A ((2^|A|-1)^m(A))^a
//
// At a = 1 the numerator becomes Deng entropy and the denominator
// log2 sum_A (2^|A|-1)^m(A). On Bayesian inputs every (2^|A|-1) is 1 and D_a
// reduces to the Renyi information dimension.
//
// Both sums are accumulated in the log domain: the numerator terms underflow
// for large a*n and the denominator terms overflow for large a*|A|.
// ---------------------------------------------------------------------------

enum class DimensionBranch { General, LimitOne };

std::string_view to_string(DimensionBranch branch) noexcept;

struct DimensionResult {
  double value;
  double alpha;
  double numerator_bits;
  double denominator_bits;
  DimensionBranch branch;
};

/// Any finite alpha is accepted. Throws DegenerateFrame for n = 1 and
/// ZeroDenominator when the denominator sum is exactly 1 (a single singleton
/// focal element, or a single focal element at alpha = 0).
DimensionResult multifractal_dimension(const MassFunction& m, double alpha,
                                       EvaluationPath path = EvaluationPath::Automatic);
DimensionResult multifractal_dimension(const CardinalityProfile& profile, double alpha);
DimensionResult multifractal_dimension(std::span<const MassClass> classes, std::size_t frame_size, double alpha);

struct SweepEntry {
  double alpha;
  std::optional<DimensionResult> result;
  std::optional<ErrorCode> error;
  std::string message;

  bool ok() const noexcept { return result.has_value(); }
};

/// One entry per alpha, in input order. A failing alpha is reported in its
/// entry and does not stop the sweep.
std::vector<SweepEntry> dimension_sweep(const MassFunction& m, std::span<const double> alphas);
std::vector<SweepEntry> dimension_sweep(const CardinalityProfile& profile, std::span<const double> alphas);

// ---------------------------------------------------------------------------
// Large-n envelope of the max-Deng spectrum
// ---------------------------------------------------------------------------

inline constexpr double kEnvelopeRootLow = 0.585;
inline constexpr double kEnvelopeRootHigh = 1.585;
inline constexpr double kEnvelopeApexY = 1.085;

/// F(x) = -a (x - 0.585)(x - 1.585) with a = 4 log2 C(n, floor(n/2)) / n.
class QuadraticEnvelope {
 public:
  explicit QuadraticEnvelope(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  double a() const noexcept { return a_; }
  double root_low() const noexcept { return kEnvelopeRootLow; }
  double root_high() const noexcept { return kEnvelopeRootHigh; }
  double operator()(double x) const noexcept;

 private:
  std::size_t n_;
  double a_;
};

/// Throws InvalidArgument for n < 2.
QuadraticEnvelope quadratic_envelope(std::size_t n);

struct AnchorPoint {
  double y;
  double f;
};

/// (0.585, 0), (1.085, log2 C(n, floor(n/2)) / n), (1.585, 0).
std::array<AnchorPoint, 3> asymptotic_anchor_points(std::size_t n);

}  // namespace mfdim
