#pragma once

// Seeded generators for property tests. Every random mass function is built
// from positive integer weights w_i, so the same draw is available both as a
// double-valued MassFunction and as exact rationals w_i / sum(w) for the
// oracle.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "mfdim/mass_function.hpp"
#include "mfdim/oracle.hpp"

namespace mfdim::testing {

inline constexpr std::uint64_t kPropertySeed = 0x5eed'2022'0d5bULL;

struct RandomMass {
  MassFunction mass;
  oracle::ExactProfile exact;  // one multiplicity-1 class per focal element
};

inline RandomMass make_weighted_mass(std::size_t n, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& mask_weights) {
  std::uint64_t total = 0;
  for (const auto& [mask, w] : mask_weights) total += w;
  std::vector<RawAssignment> raw;
  oracle::ExactProfile exact;
  for (const auto& [mask, w] : mask_weights) {
    auto e = FocalElement::from_mask(mask);
    raw.push_back({e.members(), static_cast<double>(w) / static_cast<double>(total)});
    exact.push_back({e.cardinality(), oracle::ExactMass(w, total), 1});
  }
  return {validate_mass_function(FrameOfDiscernment(n), raw), std::move(exact)};
}

/// Between 1 and min(2^n - 1, max_focal) distinct focal elements.
inline RandomMass random_mass(std::mt19937_64& rng, std::size_t n, std::size_t max_focal = 12) {
  const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
  std::uniform_int_distribution<std::uint64_t> pick_mask(1, subsets);
  std::uniform_int_distribution<std::uint64_t> pick_weight(1, 1000);
  const auto cap = static_cast<std::uint64_t>(std::min<std::uint64_t>(subsets, max_focal));
  std::uniform_int_distribution<std::uint64_t> pick_count(1, cap);
  const auto count = pick_count(rng);
  std::set<std::uint64_t> masks;
  while (masks.size() < count) masks.insert(pick_mask(rng));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> mw;
  for (auto m : masks) mw.emplace_back(m, pick_weight(rng));
  return make_weighted_mass(n, mw);
}

/// Every singleton carries a positive random weight.
inline RandomMass random_bayesian_mass(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint64_t> pick_weight(1, 1000);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> mw;
  for (std::size_t i = 0; i < n; ++i) mw.emplace_back(std::uint64_t{1} << i, pick_weight(rng));
  return make_weighted_mass(n, mw);
}

inline std::vector<double> random_distribution(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.01, 1.0);
  std::vector<double> p(n);
  double s = 0.0;
  for (auto& x : p) s += (x = u(rng));
  for (auto& x : p) x /= s;
  return p;
}

}  // namespace mfdim::testing
