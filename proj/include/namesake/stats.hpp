#pragma once
// Sampling and estimation utilities: seeded random streams, discrete
// distributions with inverse-CDF sampling, bounded discrete power laws,
// logarithmically binned histograms with a least-squares slope fit, and the
// middle-initial rate estimators.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "namesake/model.hpp"

namespace namesake {

// Deterministic random stream. Only the engine's raw 64-bit output is used,
// so identical seeds yield identical draws on every platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool next_bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 engine_;
};

// Finite distribution over distinct support values. Weights must already be
// normalized; use normalized() to build one from raw counts.
template <typename T>
class DiscreteDistribution {
 public:
  DiscreteDistribution() = default;

  DiscreteDistribution(std::vector<T> support, std::vector<double> weights)
      : support_(std::move(support)), weights_(std::move(weights)) {
    if (support_.empty() || support_.size() != weights_.size())
      throw std::invalid_argument("discrete distribution: support/weight size mismatch");
    double sum = 0.0;
    for (double w : weights_) {
      if (w < 0.0) throw std::invalid_argument("discrete distribution: negative weight");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("discrete distribution: weights sum to " +
                                  std::to_string(sum) + ", expected 1");
    std::vector<T> sorted = support_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("discrete distribution: duplicate support value");
    cdf_.reserve(weights_.size());
    double acc = 0.0;
    for (double w : weights_) {
      acc += w;
      cdf_.push_back(acc);
    }
    cdf_.back() = 1.0;
  }

  static DiscreteDistribution normalized(std::vector<T> support, std::vector<double> raw) {
    double sum = 0.0;
    for (double w : raw) sum += w;
    if (sum <= 0.0) throw std::invalid_argument("discrete distribution: zero total weight");
    for (double& w : raw) w /= sum;
    return DiscreteDistribution(std::move(support), std::move(raw));
  }

  bool valid() const { return !support_.empty(); }
  const std::vector<T>& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }

  double weight_of(const T& value) const {
    for (std::size_t i = 0; i < support_.size(); ++i)
      if (support_[i] == value) return weights_[i];
    return 0.0;
  }

  const T& sample(RandomStream& rng) const {
    if (!valid()) throw std::logic_error("sampling from an empty distribution");
    const double u = rng.next_double();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const std::size_t idx = std::min<std::size_t>(it - cdf_.begin(), support_.size() - 1);
    return support_[idx];
  }

  double mean() const
    requires std::is_arithmetic_v<T>
  {
    double m = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i) m += support_[i] * weights_[i];
    return m;
  }

  double second_moment() const
    requires std::is_arithmetic_v<T>
  {
    double m = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i)
      m += static_cast<double>(support_[i]) * support_[i] * weights_[i];
    return m;
  }

 private:
  std::vector<T> support_;
  std::vector<double> weights_;
  std::vector<double> cdf_;
};

template <typename T>
const T& sample_discrete(const DiscreteDistribution<T>& dist, RandomStream& rng) {
  return dist.sample(rng);
}

// Bounded discrete power law: P(f) proportional to f^-alpha on [x_min, x_max].
struct PowerLawSpec {
  double alpha = 0.0;  // magnitude of the log-log slope
  int x_min = 1;
  int x_max = 1;

  void validate() const {
    if (!(alpha > 1.0)) throw std::invalid_argument("power law: alpha must exceed 1");
    if (x_min < 1 || x_min > x_max)
      throw std::invalid_argument("power law: need 1 <= x_min <= x_max");
  }
};

// Exact normalized mass function of the bounded power law, as a table.
inline DiscreteDistribution<int> power_law_distribution(const PowerLawSpec& spec) {
  spec.validate();
  std::vector<int> support;
  std::vector<double> raw;
  support.reserve(spec.x_max - spec.x_min + 1);
  raw.reserve(spec.x_max - spec.x_min + 1);
  for (int f = spec.x_min; f <= spec.x_max; ++f) {
    support.push_back(f);
    raw.push_back(std::pow(static_cast<double>(f), -spec.alpha));
  }
  return DiscreteDistribution<int>::normalized(std::move(support), std::move(raw));
}

inline int sample_power_law_count(const PowerLawSpec& spec, RandomStream& rng) {
  return power_law_distribution(spec).sample(rng);
}

// Histogram over exponentially growing bins. Bin edges sit at powers of
// 10^(1/bins_per_decade) starting at 1; centers are geometric midpoints and
// densities are per-unit-width. Empty bins are omitted.
struct BinnedHistogram {
  struct Point {
    double center = 0.0;
    double density = 0.0;
  };
  std::vector<Point> points;
  int bins_per_decade = 0;
};

inline constexpr int kDefaultBinsPerDecade = 4;

// Log-bins weighted positive values. The unweighted overload below is the
// common case; weights let an averaged relative histogram be binned directly.
inline BinnedHistogram log_bin_histogram(const std::vector<int>& values,
                                         const std::vector<double>& weights,
                                         int bins_per_decade = kDefaultBinsPerDecade) {
  if (values.empty()) throw std::invalid_argument("log binning: no values");
  if (values.size() != weights.size())
    throw std::invalid_argument("log binning: value/weight size mismatch");
  if (bins_per_decade < 1) throw std::invalid_argument("log binning: bins_per_decade < 1");
  int max_value = 0;
  for (int v : values) {
    if (v <= 0)
      throw std::invalid_argument("log binning: non-positive value " + std::to_string(v));
    max_value = std::max(max_value, v);
  }

  std::vector<double> edges{1.0};
  for (int k = 1; edges.back() <= static_cast<double>(max_value); ++k)
    edges.push_back(std::pow(10.0, static_cast<double>(k) / bins_per_decade));

  std::vector<double> mass(edges.size() - 1, 0.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto it = std::upper_bound(edges.begin(), edges.end(), static_cast<double>(values[i]));
    const std::size_t bin = static_cast<std::size_t>(it - edges.begin()) - 1;
    mass[std::min(bin, mass.size() - 1)] += weights[i];
  }

  BinnedHistogram hist;
  hist.bins_per_decade = bins_per_decade;
  for (std::size_t b = 0; b < mass.size(); ++b) {
    if (mass[b] <= 0.0) continue;
    const double width = edges[b + 1] - edges[b];
    hist.points.push_back({std::sqrt(edges[b] * edges[b + 1]), mass[b] / width});
  }
  return hist;
}

inline BinnedHistogram log_bin_histogram(const std::vector<int>& values,
                                         int bins_per_decade = kDefaultBinsPerDecade) {
  return log_bin_histogram(values, std::vector<double>(values.size(), 1.0), bins_per_decade);
}

struct PowerLawFit {
  double alpha = 0.0;  // magnitude of the fitted decline
  double intercept = 0.0;
  int n_points = 0;
};

// Unweighted ordinary least squares on (log10 center, log10 density).
inline PowerLawFit fit_power_law_slope(const BinnedHistogram& hist) {
  std::vector<double> xs, ys;
  for (const auto& p : hist.points) {
    if (p.density <= 0.0) continue;
    xs.push_back(std::log10(p.center));
    ys.push_back(std::log10(p.density));
  }
  if (xs.size() < 2)
    throw InsufficientDataError("power-law fit needs at least 2 bins with positive density, got " +
                                std::to_string(xs.size()));
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw InsufficientDataError("power-law fit: degenerate bin centers");
  const double slope = sxy / sxx;
  return {-slope, my - slope * mx, static_cast<int>(xs.size())};
}

// --- Middle-initial rate estimators ---------------------------------------

// Fraction of occurrences on single-author papers that carry a middle token.
// Single-author papers are assumed to always report the middle initial, which
// makes this the intrinsic rate of middle-initial use.
inline double estimate_intrinsic_middle_rate(const Dataset& ds) {
  std::unordered_map<std::int64_t, int> per_paper;
  for (const NameOccurrence& occ : ds.occurrences) ++per_paper[occ.paper_id];
  std::int64_t single = 0, with_middle = 0;
  for (const NameOccurrence& occ : ds.occurrences) {
    if (per_paper.at(occ.paper_id) != 1) continue;
    ++single;
    if (occ.has_middle()) ++with_middle;
  }
  if (single == 0)
    throw InsufficientDataError("intrinsic middle-initial rate needs single-author papers");
  return static_cast<double>(with_middle) / static_cast<double>(single);
}

// Fraction of all occurrences that carry a middle token.
inline double overall_middle_rate(const Dataset& ds) {
  if (ds.empty()) throw InsufficientDataError("overall middle-initial rate: empty dataset");
  std::int64_t with_middle = 0;
  for (const NameOccurrence& occ : ds.occurrences)
    if (occ.has_middle()) ++with_middle;
  return static_cast<double>(with_middle) / static_cast<double>(ds.size());
}

// Reporting rate = overall rate / intrinsic rate, clamped to [0, 1]. A value
// above 1 can only arise from sampling noise, never from the model.
inline double estimate_reporting_rate(const Dataset& ds, double intrinsic_rate) {
  if (intrinsic_rate <= 0.0)
    throw std::domain_error("reporting rate undefined: intrinsic rate is zero");
  return std::min(1.0, overall_middle_rate(ds) / intrinsic_rate);
}

inline double estimate_reporting_rate(const Dataset& ds) {
  return estimate_reporting_rate(ds, estimate_intrinsic_middle_rate(ds));
}

// --- Name frequencies of first-listed authors ------------------------------

// Distribution of last-name occurrence counts among first-listed authors,
// built per year and averaged across years as relative histograms. Counting
// only first authors within one year keeps productivity from inflating the
// counts of common names.
inline DiscreteDistribution<int> first_author_name_frequencies(
    const Dataset& ds, const std::function<int(std::int64_t)>& year_of_paper) {
  if (ds.empty()) throw InsufficientDataError("name frequencies: empty dataset");

  // First-listed occurrence per paper = earliest in dataset order.
  std::map<int, std::map<std::string, int>> name_counts_by_year;
  std::set<std::int64_t> seen_papers;
  for (const NameOccurrence& occ : ds.occurrences) {
    if (!seen_papers.insert(occ.paper_id).second) continue;
    ++name_counts_by_year[year_of_paper(occ.paper_id)][occ.last_name];
  }

  std::map<int, double> averaged;  // frequency -> mean relative share
  for (const auto& [year, counts] : name_counts_by_year) {
    std::map<int, int> freq_hist;  // frequency -> number of names
    for (const auto& [name, count] : counts) ++freq_hist[count];
    const double n_names = static_cast<double>(counts.size());
    for (const auto& [freq, names] : freq_hist) averaged[freq] += names / n_names;
  }
  const double n_years = static_cast<double>(name_counts_by_year.size());
  std::vector<int> support;
  std::vector<double> weights;
  for (const auto& [freq, share] : averaged) {
    support.push_back(freq);
    weights.push_back(share / n_years);
  }
  return DiscreteDistribution<int>::normalized(std::move(support), std::move(weights));
}

}  // namespace namesake
