#include "mfdim/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "mfdim/error.hpp"

namespace mfdim {

FrameOfDiscernment::FrameOfDiscernment(std::size_t size) : size_(size) {
  if (size == 0) throw Error(ErrorCode::InvalidFrame, "frame must contain at least one hypothesis");
}

FrameOfDiscernment::FrameOfDiscernment(std::vector<std::string> labels)
    : size_(labels.size()), labels_(std::move(labels)) {
  if (size_ == 0) throw Error(ErrorCode::InvalidFrame, "frame must contain at least one hypothesis");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorCode::InvalidFrame, "frame labels must be non-empty");
    if (!seen.insert(l).second) throw Error(ErrorCode::InvalidFrame, "duplicate frame label '" + l + "'");
  }
}

std::string FrameOfDiscernment::label(std::size_t index) const {
  if (index >= size_) throw Error(ErrorCode::IndexOutOfFrame, "hypothesis index " + std::to_string(index));
  if (has_labels()) return labels_[index];
  return "theta" + std::to_string(index + 1);
}

std::optional<std::size_t> FrameOfDiscernment::index_of(std::string_view label) const {
  if (has_labels()) {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (this->label(i) == label) return i;
  }
  return std::nullopt;
}

FocalElement FocalElement::from_members(std::span<const std::size_t> members, std::size_t frame_size) {
  std::uint64_t mask = 0;
  for (auto i : members) {
    if (i >= frame_size) {
      throw Error(ErrorCode::IndexOutOfFrame,
                  "index " + std::to_string(i) + " outside frame of size " + std::to_string(frame_size));
    }
    if (i >= kMaxFocalWidth) {
      throw Error(ErrorCode::FrameTooLarge, "explicit subsets support hypothesis indices below 64");
    }
    mask |= std::uint64_t{1} << i;
  }
  if (mask == 0) throw Error(ErrorCode::EmptyFocalElement, "the empty set cannot be a focal element");
  return FocalElement(mask);
}

FocalElement FocalElement::from_mask(std::uint64_t mask) {
  if (mask == 0) throw Error(ErrorCode::EmptyFocalElement, "the empty set cannot be a focal element");
  return FocalElement(mask);
}

FocalElement FocalElement::singleton(std::size_t index) {
  if (index >= kMaxFocalWidth) throw Error(ErrorCode::FrameTooLarge, "explicit subsets support hypothesis indices below 64");
  return FocalElement(std::uint64_t{1} << index);
}

FocalElement FocalElement::whole(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyFocalElement, "the empty set cannot be a focal element");
  if (n > kMaxFocalWidth) throw Error(ErrorCode::FrameTooLarge, "explicit subsets support frames of at most 64 hypotheses");
  return FocalElement(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

std::vector<std::size_t> FocalElement::members() const {
  std::vector<std::size_t> out;
  out.reserve(cardinality());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

}  // namespace mfdim
