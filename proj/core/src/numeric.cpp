#include "mfdim/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace mfdim {

void Log2SumExp2::add(double log2_term) noexcept {
  if (log2_term == -std::numeric_limits<double>::infinity()) return;
  if (count_ == 0) {
    max_ = log2_term;
    scaled_sum_ = 1.0;
  } else if (log2_term <= max_) {
    scaled_sum_ += std::exp2(log2_term - max_);
  } else {
    scaled_sum_ = scaled_sum_ * std::exp2(max_ - log2_term) + 1.0;
    max_ = log2_term;
  }
  ++count_;
}

double Log2SumExp2::value() const noexcept {
  if (count_ == 0) return -std::numeric_limits<double>::infinity();
  return max_ + std::log2(scaled_sum_);
}

double log2_mersenne(unsigned k) noexcept {
  // 2^k - 1 is exact in a double up to k = 53.
  if (k <= 53) return std::log2(std::ldexp(1.0, static_cast<int>(k)) - 1.0);
  return static_cast<double>(k) + std::log1p(-std::ldexp(1.0, -static_cast<int>(k))) / std::numbers::ln2;
}

std::optional<std::uint64_t> binomial_u64(unsigned n, unsigned k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i; cancel the common factor first
    // so the only overflow is a genuine one.
    const std::uint64_t g = std::gcd(result, std::uint64_t{i});
    const std::uint64_t factor = (n - k + i) / (i / g);
    if (result / g > std::numeric_limits<std::uint64_t>::max() / factor) return std::nullopt;
    result = (result / g) * factor;
  }
  return result;
}

double log2_binomial(unsigned n, unsigned k) noexcept {
  if (k > n) return -std::numeric_limits<double>::infinity();
  if (auto exact = binomial_u64(n, k)) return std::log2(static_cast<double>(*exact));
  const double ln = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  return ln / std::numbers::ln2;
}

DengNormalizer deng_normalizer(unsigned n) noexcept {
  if (n <= 40) {
    std::uint64_t p3 = 1, p2 = 1;
    for (unsigned i = 0; i < n; ++i) {
      p3 *= 3;
      p2 *= 2;
    }
    const std::uint64_t z = p3 - p2;
    return {z, std::log2(static_cast<double>(z))};
  }
  // 3^n (1 - (2/3)^n)
  const double nd = static_cast<double>(n);
  return {std::nullopt, nd * std::log2(3.0) + std::log1p(-std::pow(2.0 / 3.0, nd)) / std::numbers::ln2};
}

}  // namespace mfdim
