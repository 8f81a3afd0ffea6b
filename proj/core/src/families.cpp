#include "mfdim/families.hpp"

#include <cmath>
#include <string>

#include "mfdim/error.hpp"
#include "mfdim/numeric.hpp"

namespace mfdim {

namespace {

// Shared by the explicit and profile generators so both carry bitwise
// identical masses per cardinality class.
double max_deng_class_mass(unsigned n, unsigned k) {
  const auto z = deng_normalizer(n);
  if (z.exact) return (std::ldexp(1.0, static_cast<int>(k)) - 1.0) / static_cast<double>(*z.exact);
  return std::exp2(log2_mersenne(k) - z.log2_value);
}

double uniform_powerset_class_mass(unsigned n) {
  if (n <= 53) return 1.0 / (std::ldexp(1.0, static_cast<int>(n)) - 1.0);
  return std::exp2(-log2_mersenne(n));
}

void check_subset_cap(std::size_t n, std::size_t subset_cap) {
  if (n >= kMaxFocalWidth || ((std::size_t{1} << n) - 1) > subset_cap) {
    throw Error(ErrorCode::FrameTooLarge, "power set of a " + std::to_string(n) +
                                              "-element frame exceeds the subset cap of " + std::to_string(subset_cap) +
                                              "; use the profile form");
  }
}

template <typename MassOf>
MassFunction enumerate_power_set(const FrameOfDiscernment& frame, MassOf mass_of) {
  const auto n = static_cast<unsigned>(frame.size());
  std::vector<Assignment> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (unsigned k = 1; k <= n; ++k) {
    const double mass = mass_of(k);
    for_each_subset_of_size(n, k, [&](FocalElement e) { out.push_back({e, mass}); });
  }
  return detail::make_trusted_mass_function(frame, std::move(out));
}

std::uint64_t checked_binomial(unsigned n, unsigned k) {
  auto c = binomial_u64(n, k);
  if (!c) throw Error(ErrorCode::FrameTooLarge, "C(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows 64 bits");
  return *c;
}

void require_nonempty(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidFrame, "frame must contain at least one hypothesis");
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::MaxDeng: return "max-deng";
    case Family::UniformPowerset: return "uniform-powerset";
    case Family::Vacuous: return "vacuous";
    case Family::UniformSingleton: return "uniform-singleton";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (auto f : {Family::MaxDeng, Family::UniformPowerset, Family::Vacuous, Family::UniformSingleton}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

MassFunction max_deng_mass(const FrameOfDiscernment& frame, std::size_t subset_cap) {
  check_subset_cap(frame.size(), subset_cap);
  const auto n = static_cast<unsigned>(frame.size());
  return enumerate_power_set(frame, [n](unsigned k) { return max_deng_class_mass(n, k); });
}

MassFunction uniform_powerset_mass(const FrameOfDiscernment& frame, std::size_t subset_cap) {
  check_subset_cap(frame.size(), subset_cap);
  const double mass = uniform_powerset_class_mass(static_cast<unsigned>(frame.size()));
  return enumerate_power_set(frame, [mass](unsigned) { return mass; });
}

MassFunction vacuous_mass(const FrameOfDiscernment& frame) {
  return detail::make_trusted_mass_function(frame, {{FocalElement::whole(frame.size()), 1.0}});
}

MassFunction uniform_singleton_mass(const FrameOfDiscernment& frame) {
  if (frame.size() > kMaxFocalWidth) {
    throw Error(ErrorCode::FrameTooLarge, "explicit subsets support frames of at most 64 hypotheses");
  }
  const double mass = 1.0 / static_cast<double>(frame.size());
  std::vector<Assignment> out;
  out.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) out.push_back({FocalElement::singleton(i), mass});
  return detail::make_trusted_mass_function(frame, std::move(out));
}

MassFunction family_mass(Family family, const FrameOfDiscernment& frame, std::size_t subset_cap) {
  switch (family) {
    case Family::MaxDeng: return max_deng_mass(frame, subset_cap);
    case Family::UniformPowerset: return uniform_powerset_mass(frame, subset_cap);
    case Family::Vacuous: return vacuous_mass(frame);
    case Family::UniformSingleton: return uniform_singleton_mass(frame);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

CardinalityProfile max_deng_profile(std::size_t n) {
  require_nonempty(n);
  const auto nn = static_cast<unsigned>(n);
  CardinalityProfile p{n, {}};
  p.classes.reserve(n);
  for (unsigned k = 1; k <= nn; ++k) p.classes.push_back({k, max_deng_class_mass(nn, k), checked_binomial(nn, k)});
  return p;
}

CardinalityProfile uniform_powerset_profile(std::size_t n) {
  require_nonempty(n);
  const auto nn = static_cast<unsigned>(n);
  const double mass = uniform_powerset_class_mass(nn);
  CardinalityProfile p{n, {}};
  p.classes.reserve(n);
  for (unsigned k = 1; k <= nn; ++k) p.classes.push_back({k, mass, checked_binomial(nn, k)});
  return p;
}

CardinalityProfile vacuous_profile(std::size_t n) {
  require_nonempty(n);
  return {n, {{static_cast<unsigned>(n), 1.0, 1}}};
}

CardinalityProfile uniform_singleton_profile(std::size_t n) {
  require_nonempty(n);
  return {n, {{1, 1.0 / static_cast<double>(n), static_cast<std::uint64_t>(n)}}};
}

CardinalityProfile family_profile(Family family, std::size_t n) {
  switch (family) {
    case Family::MaxDeng: return max_deng_profile(n);
    case Family::UniformPowerset: return uniform_powerset_profile(n);
    case Family::Vacuous: return vacuous_profile(n);
    case Family::UniformSingleton: return uniform_singleton_profile(n);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

}  // namespace mfdim
