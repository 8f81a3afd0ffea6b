#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mfdim/frame.hpp"

namespace mfdim {

inline constexpr double kDefaultSumTolerance = 1e-9;
inline constexpr double kProfileTolerance = 1e-12;

/// One unvalidated (subset, mass) pair as read from a file or built by hand.
struct RawAssignment {
  std::vector<std::size_t> members;
  double mass;
};

struct Assignment {
  FocalElement element;
  double mass;
};

class MassFunction;

/// Checks the mass-function axioms and returns the canonical form. Zero
/// masses are dropped before anything else is checked; the result does not
/// depend on input order.
MassFunction validate_mass_function(const FrameOfDiscernment& frame, std::span<const RawAssignment> raw,
                                    double sum_tolerance = kDefaultSumTolerance);

namespace detail {
// For generators that already produce canonical, normalized assignments.
MassFunction make_trusted_mass_function(FrameOfDiscernment frame, std::vector<Assignment> assignments);
}  // namespace detail

/// A basic probability assignment over a frame. Immutable; only obtainable
/// through validate_mass_function or the family generators. Assignments are
/// held in canonical focal-element order and every mass is in (0, 1].
class MassFunction {
 public:
  const FrameOfDiscernment& frame() const noexcept { return frame_; }
  std::span<const Assignment> assignments() const noexcept { return assignments_; }
  std::size_t focal_count() const noexcept { return assignments_.size(); }
  std::optional<double> mass_of(FocalElement element) const noexcept;

 private:
  MassFunction(FrameOfDiscernment frame, std::vector<Assignment> assignments)
      : frame_(std::move(frame)), assignments_(std::move(assignments)) {}

  friend MassFunction validate_mass_function(const FrameOfDiscernment&, std::span<const RawAssignment>, double);
  friend MassFunction detail::make_trusted_mass_function(FrameOfDiscernment, std::vector<Assignment>);

  FrameOfDiscernment frame_;
  std::vector<Assignment> assignments_;
};

/// True iff every focal element is a singleton.
bool is_bayesian(const MassFunction& m) noexcept;

/// A group of focal elements sharing one cardinality and one mass.
struct MassClass {
  unsigned cardinality;
  double mass;
  std::uint64_t multiplicity;
};

/// Compressed form of a mass function whose mass depends only on |A|:
/// one class per cardinality present, ascending.
struct CardinalityProfile {
  std::size_t frame_size;
  std::vector<MassClass> classes;
};

/// Throws NotCardinalitySymmetric when two focal elements of equal
/// cardinality differ in mass by more than kProfileTolerance.
CardinalityProfile cardinality_profile(const MassFunction& m);
std::optional<CardinalityProfile> try_cardinality_profile(const MassFunction& m);

/// Checks cardinalities lie in [1, n] without repeats, multiplicities do not
/// exceed C(n, k), masses lie in (0, 1] and sum (weighted) to 1.
void validate_profile(const CardinalityProfile& profile, double sum_tolerance = kDefaultSumTolerance);

/// One multiplicity-1 class per focal element, in canonical order.
std::vector<MassClass> element_classes(const MassFunction& m);

/// How evaluators walk a mass function: one term per focal element
/// (Enumerate), one term per cardinality class (Profile, which requires a
/// cardinality-symmetric input), or Profile whenever it applies (Automatic).
enum class EvaluationPath { Automatic, Enumerate, Profile };

std::vector<MassClass> evaluation_classes(const MassFunction& m, EvaluationPath path);

}  // namespace mfdim
