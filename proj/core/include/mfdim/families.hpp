#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "mfdim/mass_function.hpp"

namespace mfdim {

/// Upper bound on materialized subsets for power-set families.
inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 26;

enum class Family { MaxDeng, UniformPowerset, Vacuous, UniformSingleton };

std::string_view to_string(Family family) noexcept;
/// Accepts "max-deng", "uniform-powerset", "vacuous", "uniform-singleton".
std::optional<Family> parse_family(std::string_view name) noexcept;

/// m(A) = (2^|A| - 1) / (3^n - 2^n) on every non-empty A: the assignment that
/// maximizes Deng entropy.
MassFunction max_deng_mass(const FrameOfDiscernment& frame, std::size_t subset_cap = kDefaultSubsetCap);

/// m(A) = 1 / (2^n - 1) on every non-empty A.
MassFunction uniform_powerset_mass(const FrameOfDiscernment& frame, std::size_t subset_cap = kDefaultSubsetCap);

/// m(frame) = 1.
MassFunction vacuous_mass(const FrameOfDiscernment& frame);

/// m({theta_i}) = 1/n.
MassFunction uniform_singleton_mass(const FrameOfDiscernment& frame);

MassFunction family_mass(Family family, const FrameOfDiscernment& frame, std::size_t subset_cap = kDefaultSubsetCap);

// Profile forms. These never enumerate subsets; multiplicities are C(n, k),
// so n is limited to 64 by the 64-bit multiplicity.
CardinalityProfile max_deng_profile(std::size_t n);
CardinalityProfile uniform_powerset_profile(std::size_t n);
CardinalityProfile vacuous_profile(std::size_t n);
CardinalityProfile uniform_singleton_profile(std::size_t n);

CardinalityProfile family_profile(Family family, std::size_t n);

}  // namespace mfdim
