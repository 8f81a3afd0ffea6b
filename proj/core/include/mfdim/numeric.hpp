#pragma once

#include <cstdint>
#include <optional>

namespace mfdim {

/// Streaming log2(sum 2^x_i). Keeps a running maximum and rescales the
/// partial sum when it moves, so neither huge nor tiny terms lose the result.
class Log2SumExp2 {
 public:
  void add(double log2_term) noexcept;
  /// log2 of the accumulated sum; -inf when nothing was added.
  double value() const noexcept;
  bool empty() const noexcept { return count_ == 0; }

 private:
  double max_ = 0.0;
  double scaled_sum_ = 0.0;  // sum of 2^(x_i - max_)
  std::uint64_t count_ = 0;
};

/// log2(2^k - 1) for k >= 1; exactly 0 at k = 1.
double log2_mersenne(unsigned k) noexcept;

/// C(n, k) when it fits in 64 bits.
std::optional<std::uint64_t> binomial_u64(unsigned n, unsigned k) noexcept;

/// log2 C(n, k); exact integer route while C(n, k) fits, lgamma beyond.
double log2_binomial(unsigned n, unsigned k) noexcept;

/// 3^n - 2^n, the sum of (2^|A| - 1) over all non-empty subsets of an
/// n-element frame. The exact value is present for n <= 40.
struct DengNormalizer {
  std::optional<std::uint64_t> exact;
  double log2_value;
};
DengNormalizer deng_normalizer(unsigned n) noexcept;

}  // namespace mfdim
