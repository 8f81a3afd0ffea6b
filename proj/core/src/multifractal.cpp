#include "mfdim/multifractal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mfdim/entropy.hpp"
#include "mfdim/numeric.hpp"

namespace mfdim {

namespace {

void require_nondegenerate(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::DegenerateFrame, "log2(2^n - 1) vanishes for a one-element frame");
}

// log2 N, exact at N = 2^n - 1 so the full power set lands on f = 1.
double log2_count(std::uint64_t count, std::size_t n, double log2_power_set) {
  const bool full = n < 64 ? count == (std::uint64_t{1} << n) - 1
                           : (n == 64 && count == std::numeric_limits<std::uint64_t>::max());
  if (full) return log2_power_set;
  return std::log2(static_cast<double>(count));
}

struct MassGroupItem {
  double mass;
  unsigned cardinality;
  std::uint64_t count;
};

Spectrum group_into_spectrum(std::vector<MassGroupItem> items, std::size_t n, double tolerance) {
  require_nondegenerate(n);
  if (!(tolerance >= 0.0)) throw Error(ErrorCode::InvalidArgument, "grouping tolerance must be non-negative");

  std::sort(items.begin(), items.end(), [](const MassGroupItem& a, const MassGroupItem& b) {
    if (a.mass != b.mass) return a.mass > b.mass;
    return a.cardinality < b.cardinality;
  });

  struct Group {
    double mass;
    std::uint64_t count;
    unsigned cardinality;
    bool mixed;
  };
  std::vector<Group> groups;
  for (const auto& it : items) {
    if (groups.empty() || groups.back().mass - it.mass > tolerance * groups.back().mass) {
      groups.push_back({it.mass, it.count, it.cardinality, false});
      continue;
    }
    auto& g = groups.back();
    g.count += it.count;
    g.mixed = g.mixed || g.cardinality != it.cardinality;
  }

  const double log2_power_set = log2_mersenne(static_cast<unsigned>(n));
  Spectrum s{n, {}};
  s.points.reserve(groups.size());
  for (const auto& g : groups) {
    SpectrumPoint p{};
    p.y = (0.0 - std::log2(g.mass)) / log2_power_set;
    p.f = log2_count(g.count, n, log2_power_set) / log2_power_set;
    p.mass_value = g.mass;
    p.multiplicity = g.count;
    if (!g.mixed) p.representative_cardinality = g.cardinality;
    s.points.push_back(p);
  }
  return s;
}

}  // namespace

double y_coordinate(const MassFunction& m, FocalElement element) {
  require_nondegenerate(m.frame().size());
  const auto mass = m.mass_of(element);
  if (!mass) throw Error(ErrorCode::NotAFocalElement, "subset carries no mass");
  return (0.0 - std::log2(*mass)) / log2_mersenne(static_cast<unsigned>(m.frame().size()));
}

Spectrum spectrum(const MassFunction& m, double grouping_tolerance) {
  require_nondegenerate(m.frame().size());
  std::vector<MassGroupItem> items;
  items.reserve(m.focal_count());
  for (const auto& a : m.assignments()) items.push_back({a.mass, a.element.cardinality(), 1});
  return group_into_spectrum(std::move(items), m.frame().size(), grouping_tolerance);
}

Spectrum spectrum_from_profile(const CardinalityProfile& profile, double grouping_tolerance) {
  require_nondegenerate(profile.frame_size);
  validate_profile(profile);
  std::vector<MassGroupItem> items;
  items.reserve(profile.classes.size());
  for (const auto& c : profile.classes) items.push_back({c.mass, c.cardinality, c.multiplicity});
  return group_into_spectrum(std::move(items), profile.frame_size, grouping_tolerance);
}

std::string_view to_string(DimensionBranch branch) noexcept {
  return branch == DimensionBranch::LimitOne ? "limit_one" : "general";
}

DimensionResult multifractal_dimension(std::span<const MassClass> classes, std::size_t frame_size, double alpha) {
  require_nondegenerate(frame_size);
  if (!std::isfinite(alpha)) throw Error(ErrorCode::InvalidArgument, "alpha must be finite");
  if (classes.empty()) throw Error(ErrorCode::InvalidArgument, "no focal elements");

  const auto order = EntropyOrder::of(alpha);
  DimensionResult r{};
  r.alpha = alpha;

  Log2SumExp2 den;
  if (order.is_limit_one) {
    r.branch = DimensionBranch::LimitOne;
    r.numerator_bits = deng_entropy(classes);
    for (const auto& c : classes) {
      den.add(std::log2(static_cast<double>(c.multiplicity)) + c.mass * log2_mersenne(c.cardinality));
    }
  } else {
    r.branch = DimensionBranch::General;
    Log2SumExp2 num;
    for (const auto& c : classes) {
      const double log2_mult = std::log2(static_cast<double>(c.multiplicity));
      const double lk = log2_mersenne(c.cardinality);
      num.add(log2_mult + alpha * (std::log2(c.mass) - lk) + lk);
      den.add(log2_mult + alpha * c.mass * lk);
    }
    r.numerator_bits = num.value() / (1.0 - alpha);
  }
  r.denominator_bits = den.value();
  if (r.denominator_bits == 0.0) {
    throw Error(ErrorCode::ZeroDenominator, "denominator sum equals 1 at alpha = " + std::to_string(alpha));
  }
  r.value = r.numerator_bits / r.denominator_bits;
  return r;
}

DimensionResult multifractal_dimension(const MassFunction& m, double alpha, EvaluationPath path) {
  require_nondegenerate(m.frame().size());
  const auto classes = evaluation_classes(m, path);
  return multifractal_dimension(classes, m.frame().size(), alpha);
}

DimensionResult multifractal_dimension(const CardinalityProfile& profile, double alpha) {
  require_nondegenerate(profile.frame_size);
  validate_profile(profile);
  return multifractal_dimension(profile.classes, profile.frame_size, alpha);
}

namespace {

template <typename Eval>
std::vector<SweepEntry> sweep(std::span<const double> alphas, Eval eval) {
  std::vector<SweepEntry> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    SweepEntry e{alpha, std::nullopt, std::nullopt, {}};
    try {
      e.result = eval(alpha);
    } catch (const Error& err) {
      e.error = err.code();
      e.message = err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<SweepEntry> dimension_sweep(const MassFunction& m, std::span<const double> alphas) {
  const auto classes = evaluation_classes(m, EvaluationPath::Automatic);
  const auto n = m.frame().size();
  return sweep(alphas, [&](double a) { return multifractal_dimension(classes, n, a); });
}

std::vector<SweepEntry> dimension_sweep(const CardinalityProfile& profile, std::span<const double> alphas) {
  return sweep(alphas, [&](double a) { return multifractal_dimension(profile, a); });
}

QuadraticEnvelope::QuadraticEnvelope(std::size_t n) : n_(n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "envelope needs n >= 2");
  const auto nn = static_cast<unsigned>(n);
  a_ = 4.0 * log2_binomial(nn, nn / 2) / static_cast<double>(n);
}

double QuadraticEnvelope::operator()(double x) const noexcept {
  return -a_ * (x - kEnvelopeRootLow) * (x - kEnvelopeRootHigh) + 0.0;
}

QuadraticEnvelope quadratic_envelope(std::size_t n) { return QuadraticEnvelope(n); }

std::array<AnchorPoint, 3> asymptotic_anchor_points(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "anchor points need n >= 2");
  const auto nn = static_cast<unsigned>(n);
  const double apex = log2_binomial(nn, nn / 2) / static_cast<double>(n);
  return {{{kEnvelopeRootLow, 0.0}, {kEnvelopeApexY, apex}, {kEnvelopeRootHigh, 0.0}}};
}

}  // namespace mfdim
