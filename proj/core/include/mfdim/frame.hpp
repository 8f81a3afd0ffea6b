#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mfdim {

/// The finite hypothesis set {theta_1, ..., theta_n}. Labels are optional;
/// unlabelled frames render hypotheses as "theta1", "theta2", ...
class FrameOfDiscernment {
 public:
  explicit FrameOfDiscernment(std::size_t size);
  explicit FrameOfDiscernment(std::vector<std::string> labels);

  std::size_t size() const noexcept { return size_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(std::size_t index) const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const FrameOfDiscernment&) const = default;

 private:
  std::size_t size_;
  std::vector<std::string> labels_;
};

/// Subsets are stored as 64-bit membership masks, so explicit focal elements
/// exist only for hypotheses with index < 64. Larger frames are reachable
/// through cardinality profiles.
inline constexpr std::size_t kMaxFocalWidth = 64;

/// A non-empty subset of the frame. Ordering is canonical: by cardinality,
/// then by membership mask.
class FocalElement {
 public:
  /// Duplicated indices collapse (set semantics).
  static FocalElement from_members(std::span<const std::size_t> members, std::size_t frame_size);
  static FocalElement from_mask(std::uint64_t mask);
  static FocalElement singleton(std::size_t index);
  /// The whole frame of size n.
  static FocalElement whole(std::size_t n);

  std::uint64_t mask() const noexcept { return mask_; }
  unsigned cardinality() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }
  bool contains(std::size_t index) const noexcept {
    return index < kMaxFocalWidth && ((mask_ >> index) & 1u) != 0;
  }
  /// Member indices in ascending order.
  std::vector<std::size_t> members() const;

  friend bool operator==(FocalElement a, FocalElement b) noexcept { return a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(FocalElement a, FocalElement b) noexcept {
    if (auto c = a.cardinality() <=> b.cardinality(); c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  explicit FocalElement(std::uint64_t mask) noexcept : mask_(mask) {}
  std::uint64_t mask_;
};

/// Visits every k-element subset of an n-element frame in ascending mask order.
template <typename Fn>
void for_each_subset_of_size(unsigned n, unsigned k, Fn&& fn) {
  if (k == 0 || k > n || n > kMaxFocalWidth) return;
  const std::uint64_t last = (k == 64) ? ~std::uint64_t{0} : (((std::uint64_t{1} << k) - 1) << (n - k));
  std::uint64_t v = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  while (true) {
    fn(FocalElement::from_mask(v));
    if (v == last) break;
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

}  // namespace mfdim

template <>
struct std::hash<mfdim::FocalElement> {
  std::size_t operator()(mfdim::FocalElement e) const noexcept { return std::hash<std::uint64_t>{}(e.mask()); }
};
