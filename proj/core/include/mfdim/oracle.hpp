#pragma once

// Reference evaluator for Deng entropy and the multifractal dimension.
//
// Masses are exact rationals and every sum is carried out in a 50-decimal-
// digit binary float (about 166 bits of mantissa), directly from the defining
// formulas and without the log-domain rearrangements the main library uses.
// Results are rounded to double at the very end. This is slow and meant for
// tests and for minting expected values.

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace mfdim::oracle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

/// A mass in (0, 1] held as a reduced fraction.
class ExactMass {
 public:
  ExactMass(const BigInt& numerator, const BigInt& denominator);
  explicit ExactMass(Rational value);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  const Rational& value() const noexcept { return value_; }
  double to_double() const;

 private:
  Rational value_;
};

struct ExactClass {
  unsigned cardinality;
  ExactMass mass;
  BigInt multiplicity;
};

using ExactProfile = std::vector<ExactClass>;

/// Throws MassesNotNormalized unless sum multiplicity * mass == 1 exactly.
double oracle_deng_entropy(std::span<const ExactClass> classes);

/// alpha == 1 exactly selects the Deng-entropy limit form. Throws
/// ZeroDenominator when the denominator sum is exactly 1.
double oracle_dimension(std::span<const ExactClass> classes, const Rational& alpha);

ExactProfile exact_max_deng_profile(unsigned n);
ExactProfile exact_uniform_powerset_profile(unsigned n);
ExactProfile exact_vacuous_profile(unsigned n);
ExactProfile exact_uniform_singleton_profile(unsigned n);

/// The exact binary value of a finite double.
Rational exact_rational(double x);

}  // namespace mfdim::oracle
