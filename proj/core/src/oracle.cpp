#include "mfdim/oracle.hpp"

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "mfdim/error.hpp"

namespace mfdim::oracle {

namespace {

Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

Real real_log2(const Real& x) { return boost::multiprecision::log(x) / boost::math::constants::ln_two<Real>(); }

BigInt mersenne(unsigned k) { return (BigInt(1) << k) - 1; }

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_normalized(std::span<const ExactClass> classes) {
  Rational total = 0;
  for (const auto& c : classes) total += Rational(c.multiplicity) * c.mass.value();
  if (total != 1) throw Error(ErrorCode::MassesNotNormalized, "exact masses do not sum to 1");
}

}  // namespace

ExactMass::ExactMass(const BigInt& numerator, const BigInt& denominator) {
  if (denominator <= 0) throw Error(ErrorCode::MassOutOfRange, "denominator must be positive");
  value_ = Rational(numerator, denominator);
  if (value_ <= 0 || value_ > 1) throw Error(ErrorCode::MassOutOfRange, "exact mass outside (0, 1]");
}

ExactMass::ExactMass(Rational value) : value_(std::move(value)) {
  if (value_ <= 0 || value_ > 1) throw Error(ErrorCode::MassOutOfRange, "exact mass outside (0, 1]");
}

double ExactMass::to_double() const { return static_cast<double>(to_real(value_)); }

double oracle_deng_entropy(std::span<const ExactClass> classes) {
  require_normalized(classes);
  Real h = 0;
  for (const auto& c : classes) {
    const Real m = to_real(c.mass.value());
    h -= Real(c.multiplicity) * m * real_log2(m / Real(mersenne(c.cardinality)));
  }
  return static_cast<double>(h);
}

double oracle_dimension(std::span<const ExactClass> classes, const Rational& alpha) {
  require_normalized(classes);
  using boost::multiprecision::pow;

  Real numerator_bits;
  Real den_sum = 0;
  if (alpha == 1) {
    numerator_bits = 0;
    for (const auto& c : classes) {
      const Real m = to_real(c.mass.value());
      const Real w = Real(mersenne(c.cardinality));
      numerator_bits -= Real(c.multiplicity) * m * real_log2(m / w);
      den_sum += Real(c.multiplicity) * pow(w, m);
    }
  } else {
    const Real a = to_real(alpha);
    Real num_sum = 0;
    for (const auto& c : classes) {
      const Real m = to_real(c.mass.value());
      const Real w = Real(mersenne(c.cardinality));
      num_sum += Real(c.multiplicity) * pow(m / w, a) * w;
      den_sum += Real(c.multiplicity) * pow(pow(w, m), a);
    }
    numerator_bits = real_log2(num_sum) / (1 - a);
  }
  if (den_sum == 1) throw Error(ErrorCode::ZeroDenominator, "denominator sum equals 1");
  return static_cast<double>(numerator_bits / real_log2(den_sum));
}

ExactProfile exact_max_deng_profile(unsigned n) {
  BigInt z = 0;
  for (unsigned k = 1; k <= n; ++k) z += binomial(n, k) * mersenne(k);
  ExactProfile p;
  for (unsigned k = 1; k <= n; ++k) p.push_back({k, ExactMass(mersenne(k), z), binomial(n, k)});
  return p;
}

ExactProfile exact_uniform_powerset_profile(unsigned n) {
  ExactProfile p;
  for (unsigned k = 1; k <= n; ++k) p.push_back({k, ExactMass(1, mersenne(n)), binomial(n, k)});
  return p;
}

ExactProfile exact_vacuous_profile(unsigned n) { return {{n, ExactMass(1, 1), 1}}; }

ExactProfile exact_uniform_singleton_profile(unsigned n) { return {{1, ExactMass(1, n), n}}; }

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value has no exact rational");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an integer for every finite double.
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational q(scaled);
  const int shift = exp - 53;
  if (shift >= 0) q *= Rational(BigInt(1) << shift);
  else q /= Rational(BigInt(1) << -shift);
  return q;
}

}  // namespace mfdim::oracle
