#include <doctest.h>

#include <cmath>
#include <random>

#include "mfdim/error.hpp"
#include "mfdim/families.hpp"
#include "mfdim/multifractal.hpp"
#include "mfdim/oracle.hpp"
#include "support/random_mass.hpp"

using namespace mfdim;
using oracle::ExactMass;
using oracle::Rational;

namespace {

std::vector<MassClass> to_classes(const oracle::ExactProfile& p) {
  std::vector<MassClass> out;
  for (const auto& c : p) out.push_back({c.cardinality, c.mass.to_double(), static_cast<std::uint64_t>(c.multiplicity)});
  return out;
}

}  // namespace

TEST_CASE("ExactMass") {
  ExactMass half(2, 4);
  CHECK(half.numerator() == 1);
  CHECK(half.denominator() == 2);
  CHECK(half.to_double() == 0.5);
  CHECK_THROWS_AS(ExactMass(0, 3), Error);
  CHECK_THROWS_AS(ExactMass(4, 3), Error);
  CHECK(oracle::exact_rational(0.1) != Rational(1, 10));
  CHECK(oracle::exact_rational(0.375) == Rational(3, 8));
}

TEST_CASE("oracle Deng entropy of the max-Deng profile is log2(3^n - 2^n)") {
  for (unsigned n = 1; n <= 12; ++n) {
    const double expected = std::log2(std::pow(3.0, n) - std::pow(2.0, n));
    CHECK(std::abs(oracle::oracle_deng_entropy(oracle::exact_max_deng_profile(n)) - expected) <= 1e-13);
  }
}

TEST_CASE("oracle rejects unnormalized masses") {
  oracle::ExactProfile p{{1, ExactMass(1, 3), 1}, {2, ExactMass(1, 3), 1}};
  try {
    oracle::oracle_deng_entropy(p);
    FAIL("expected MassesNotNormalized");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MassesNotNormalized);
  }
  CHECK_THROWS_AS(oracle::oracle_dimension(p, 2), Error);
}

TEST_CASE("oracle dimension reference values") {
  oracle::ExactProfile ex{{1, ExactMass(1, 5), 1}, {2, ExactMass(4, 5), 1}};
  CHECK(std::abs(oracle::oracle_dimension(ex, 2) - 0.7163) < 5e-5);
  CHECK(oracle::oracle_dimension(ex, 2) == doctest::Approx(0.71630275358166863403).epsilon(1e-14));
  CHECK(oracle::oracle_dimension(ex, 1) == doctest::Approx(1.1248587308406691477).epsilon(1e-14));
  CHECK(oracle::oracle_dimension(oracle::exact_vacuous_profile(7), 13) == doctest::Approx(1.0 / 13).epsilon(1e-14));
  CHECK(std::abs(oracle::oracle_dimension(oracle::exact_uniform_powerset_profile(6), 9) - 1.0023) < 5e-4);
  CHECK(oracle::oracle_dimension(oracle::exact_uniform_singleton_profile(9), Rational(7, 2)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  oracle::ExactProfile point{{1, ExactMass(1, 1), 1}};
  CHECK_THROWS_AS(oracle::oracle_dimension(point, 2), Error);
}

TEST_CASE("exact family profiles match the double-valued ones") {
  for (unsigned n = 1; n <= 20; ++n) {
    const auto pairs = {std::pair{oracle::exact_max_deng_profile(n), max_deng_profile(n)},
                        std::pair{oracle::exact_uniform_powerset_profile(n), uniform_powerset_profile(n)},
                        std::pair{oracle::exact_vacuous_profile(n), vacuous_profile(n)},
                        std::pair{oracle::exact_uniform_singleton_profile(n), uniform_singleton_profile(n)}};
    for (const auto& [exact, approx] : pairs) {
      auto classes = to_classes(exact);
      REQUIRE(classes.size() == approx.classes.size());
      for (std::size_t i = 0; i < classes.size(); ++i) {
        CHECK(classes[i].cardinality == approx.classes[i].cardinality);
        CHECK(classes[i].multiplicity == approx.classes[i].multiplicity);
        CHECK(classes[i].mass == doctest::Approx(approx.classes[i].mass).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("library agrees with the oracle on random mass functions") {
  std::mt19937_64 rng(testing::kPropertySeed + 40);
  const Rational alphas[] = {Rational(1, 2), 1, 2, 3, Rational(15, 2), 19};
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto [m, exact] = testing::random_mass(rng, 2 + trial % 8, 30);
    for (const auto& a : alphas) {
      const double ad = static_cast<double>(a);
      double expected;
      try {
        expected = oracle::oracle_dimension(exact, a);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroDenominator);
        CHECK_THROWS_AS(multifractal_dimension(m, ad), Error);
        continue;
      }
      const double got = multifractal_dimension(m, ad).value;
      CHECK(std::abs(got - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
      ++compared;
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("profile path agrees with the oracle up to n = 40") {
  for (unsigned n : {11u, 16u, 25u, 33u, 40u}) {
    for (int a : {1, 4, 19}) {
      CHECK(std::abs(multifractal_dimension(max_deng_profile(n), a).value -
                     oracle::oracle_dimension(oracle::exact_max_deng_profile(n), a)) <= 1e-10);
      CHECK(std::abs(multifractal_dimension(uniform_powerset_profile(n), a).value -
                     oracle::oracle_dimension(oracle::exact_uniform_powerset_profile(n), a)) <= 1e-10);
    }
  }
}
