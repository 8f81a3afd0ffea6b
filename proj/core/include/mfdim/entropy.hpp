#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mfdim/mass_function.hpp"

namespace mfdim {

/// Discrete distribution; entries are non-negative and sum to 1 within the
/// given tolerance. Zero entries are kept but lie outside the support.
class ProbabilityDistribution {
 public:
  explicit ProbabilityDistribution(std::vector<double> probs, double sum_tolerance = kDefaultSumTolerance);

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  /// Number of strictly positive entries.
  std::size_t support_size() const noexcept;

 private:
  std::vector<double> probs_;
};

inline constexpr double kLimitOneTolerance = 1e-12;

/// Renyi order. Orders within kLimitOneTolerance of 1 take the exact
/// Shannon-limit branch.
struct EntropyOrder {
  double alpha;
  bool is_limit_one;

  static EntropyOrder of(double alpha) noexcept;
};

/// Entropies are in bits throughout.
double shannon_entropy(const ProbabilityDistribution& p) noexcept;

/// Throws NegativeOrderUnsupported for alpha < 0.
double renyi_entropy(const ProbabilityDistribution& p, EntropyOrder order);

/// H_alpha(P) / log2(support size). Throws DegenerateSupport when the support
/// has a single point.
double renyi_information_dimension(const ProbabilityDistribution& p, EntropyOrder order);

/// -sum m(A) log2(m(A) / (2^|A| - 1)).
double deng_entropy(const MassFunction& m, EvaluationPath path = EvaluationPath::Automatic);
double deng_entropy(std::span<const MassClass> classes) noexcept;

/// log2(3^n - 2^n), the largest Deng entropy an n-element frame admits.
double max_deng_entropy_value(std::size_t n);

/// The distribution a Bayesian mass function induces on the frame, indexed
/// by hypothesis. Throws InvalidArgument for non-Bayesian input.
ProbabilityDistribution induced_distribution(const MassFunction& m);

}  // namespace mfdim
