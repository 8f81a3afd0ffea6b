#include "mfdim/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfdim/error.hpp"
#include "mfdim/numeric.hpp"

namespace mfdim {

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probs, double sum_tolerance)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw Error(ErrorCode::InvalidDistribution, "empty distribution");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidDistribution, "probability " + std::to_string(p));
    sum += p;
  }
  if (!(std::abs(sum - 1.0) <= sum_tolerance)) {
    throw Error(ErrorCode::InvalidDistribution, "probabilities sum to " + std::to_string(sum));
  }
}

std::size_t ProbabilityDistribution::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; }));
}

EntropyOrder EntropyOrder::of(double alpha) noexcept { return {alpha, std::abs(alpha - 1.0) < kLimitOneTolerance}; }

double shannon_entropy(const ProbabilityDistribution& p) noexcept {
  double h = 0.0;
  for (double x : p.probs()) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double renyi_entropy(const ProbabilityDistribution& p, EntropyOrder order) {
  if (order.alpha < 0.0) {
    throw Error(ErrorCode::NegativeOrderUnsupported, "Renyi entropy requires alpha >= 0");
  }
  if (order.is_limit_one) return shannon_entropy(p);
  Log2SumExp2 acc;
  for (double x : p.probs()) {
    if (x > 0.0) acc.add(order.alpha * std::log2(x));
  }
  return acc.value() / (1.0 - order.alpha);
}

double renyi_information_dimension(const ProbabilityDistribution& p, EntropyOrder order) {
  const auto support = p.support_size();
  if (support < 2) throw Error(ErrorCode::DegenerateSupport, "dimension needs at least two support points");
  return renyi_entropy(p, order) / std::log2(static_cast<double>(support));
}

double deng_entropy(std::span<const MassClass> classes) noexcept {
  double h = 0.0;
  for (const auto& c : classes) {
    h += static_cast<double>(c.multiplicity) * c.mass * (log2_mersenne(c.cardinality) - std::log2(c.mass));
  }
  return h;
}

double deng_entropy(const MassFunction& m, EvaluationPath path) { return deng_entropy(evaluation_classes(m, path)); }

double max_deng_entropy_value(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidFrame, "frame must contain at least one hypothesis");
  return deng_normalizer(static_cast<unsigned>(n)).log2_value;
}

ProbabilityDistribution induced_distribution(const MassFunction& m) {
  if (!is_bayesian(m)) throw Error(ErrorCode::InvalidArgument, "mass function has non-singleton focal elements");
  std::vector<double> probs(m.frame().size(), 0.0);
  for (const auto& a : m.assignments()) probs[a.element.members().front()] = a.mass;
  return ProbabilityDistribution(std::move(probs));
}

}  // namespace mfdim
