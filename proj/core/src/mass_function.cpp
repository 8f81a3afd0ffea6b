#include "mfdim/mass_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfdim/error.hpp"
#include "mfdim/numeric.hpp"

namespace mfdim {

namespace detail {
MassFunction make_trusted_mass_function(FrameOfDiscernment frame, std::vector<Assignment> assignments) {
  return MassFunction(std::move(frame), std::move(assignments));
}
}  // namespace detail

std::optional<double> MassFunction::mass_of(FocalElement element) const noexcept {
  auto it = std::lower_bound(assignments_.begin(), assignments_.end(), element,
                             [](const Assignment& a, FocalElement e) { return a.element < e; });
  if (it == assignments_.end() || it->element != element) return std::nullopt;
  return it->mass;
}

MassFunction validate_mass_function(const FrameOfDiscernment& frame, std::span<const RawAssignment> raw,
                                    double sum_tolerance) {
  std::vector<Assignment> kept;
  kept.reserve(raw.size());
  for (const auto& r : raw) {
    if (!(r.mass >= 0.0 && r.mass <= 1.0)) {
      throw Error(ErrorCode::MassOutOfRange, "mass " + std::to_string(r.mass) + " outside [0, 1]");
    }
    if (r.mass == 0.0) continue;
    kept.push_back({FocalElement::from_members(r.members, frame.size()), r.mass});
  }

  std::sort(kept.begin(), kept.end(), [](const Assignment& a, const Assignment& b) { return a.element < b.element; });
  auto dup = std::adjacent_find(kept.begin(), kept.end(),
                                [](const Assignment& a, const Assignment& b) { return a.element == b.element; });
  if (dup != kept.end()) {
    throw Error(ErrorCode::DuplicateFocalElement, "subset listed more than once");
  }

  double sum = 0.0;
  for (const auto& a : kept) sum += a.mass;
  if (!(std::abs(sum - 1.0) <= sum_tolerance)) {
    throw Error(ErrorCode::SumNotOne, "masses sum to " + std::to_string(sum));
  }
  return MassFunction(frame, std::move(kept));
}

bool is_bayesian(const MassFunction& m) noexcept {
  return std::all_of(m.assignments().begin(), m.assignments().end(),
                     [](const Assignment& a) { return a.element.cardinality() == 1; });
}

std::optional<CardinalityProfile> try_cardinality_profile(const MassFunction& m) {
  CardinalityProfile profile{m.frame().size(), {}};
  for (const auto& a : m.assignments()) {
    const unsigned k = a.element.cardinality();
    if (profile.classes.empty() || profile.classes.back().cardinality != k) {
      profile.classes.push_back({k, a.mass, 1});
      continue;
    }
    auto& cls = profile.classes.back();
    if (std::abs(a.mass - cls.mass) > kProfileTolerance) return std::nullopt;
    ++cls.multiplicity;
  }
  return profile;
}

CardinalityProfile cardinality_profile(const MassFunction& m) {
  auto profile = try_cardinality_profile(m);
  if (!profile) {
    throw Error(ErrorCode::NotCardinalitySymmetric, "focal elements of equal cardinality carry different masses");
  }
  return *std::move(profile);
}

void validate_profile(const CardinalityProfile& profile, double sum_tolerance) {
  if (profile.frame_size == 0) throw Error(ErrorCode::InvalidFrame, "frame must contain at least one hypothesis");
  if (profile.classes.empty()) throw Error(ErrorCode::SumNotOne, "profile has no classes");
  const auto n = static_cast<unsigned>(profile.frame_size);
  std::vector<bool> seen(n + 1, false);
  double sum = 0.0;
  for (const auto& c : profile.classes) {
    if (c.cardinality == 0) throw Error(ErrorCode::EmptyFocalElement, "cardinality 0 in profile");
    if (c.cardinality > n) throw Error(ErrorCode::IndexOutOfFrame, "cardinality exceeds frame size");
    if (seen[c.cardinality]) throw Error(ErrorCode::DuplicateFocalElement, "cardinality repeated in profile");
    seen[c.cardinality] = true;
    if (!(c.mass > 0.0 && c.mass <= 1.0)) throw Error(ErrorCode::MassOutOfRange, "profile mass outside (0, 1]");
    if (c.multiplicity == 0) throw Error(ErrorCode::InvalidArgument, "profile multiplicity must be positive");
    if (auto cap = binomial_u64(n, c.cardinality); cap && c.multiplicity > *cap) {
      throw Error(ErrorCode::InvalidArgument, "multiplicity exceeds the number of subsets of that cardinality");
    }
    sum += c.mass * static_cast<double>(c.multiplicity);
  }
  if (!(std::abs(sum - 1.0) <= sum_tolerance)) {
    throw Error(ErrorCode::SumNotOne, "profile masses sum to " + std::to_string(sum));
  }
}

std::vector<MassClass> element_classes(const MassFunction& m) {
  std::vector<MassClass> out;
  out.reserve(m.focal_count());
  for (const auto& a : m.assignments()) out.push_back({a.element.cardinality(), a.mass, 1});
  return out;
}

std::vector<MassClass> evaluation_classes(const MassFunction& m, EvaluationPath path) {
  switch (path) {
    case EvaluationPath::Enumerate: return element_classes(m);
    case EvaluationPath::Profile: return cardinality_profile(m).classes;
    case EvaluationPath::Automatic:
      if (auto p = try_cardinality_profile(m)) return std::move(p->classes);
      return element_classes(m);
  }
  return element_classes(m);
}

}  // namespace mfdim
