#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "deltainfer/empirical.hpp"
#include "deltainfer/errors.hpp"
#include "deltainfer/estimands.hpp"
#include "deltainfer/parallel.hpp"
#include "deltainfer/rng.hpp"
#include "deltainfer/sample.hpp"

namespace deltainfer {

struct BootstrapResult {
  double se = 0.0;
  ConfidenceInterval percentile_ci;
  std::size_t replicates = 0;
  std::string estimand_tag;
  std::uint64_t seed = 0;
  std::size_t failures = 0;
};

/// Nonparametric bootstrap of an arbitrary statistic. Resampling is row-wise
/// (paired data stay paired) and replicate r draws from stream (seed, r+1),
/// so the result is identical for any thread count. Replicates where the
/// statistic throws are dropped; more than 1% of them is an error.
inline BootstrapResult bootstrap_statistic(
    const Sample& sample, const std::function<double(const Sample&)>& statistic,
    double level, const std::string& tag, std::size_t replicates,
    std::uint64_t seed, unsigned threads = 1) {
  if (replicates < 200) throw InvalidArgument("bootstrap needs B >= 200");
  if (!(level > 0.0 && level < 1.0))
    throw InvalidArgument("confidence level must be in (0, 1)");
  if (sample.n() < 1) throw InsufficientSample("bootstrap needs a nonempty sample");

  const std::size_t n = sample.n();
  std::vector<double> estimates(replicates);
  std::vector<char> failed(replicates, 0);

  detail::run_indexed(replicates, threads, [&](std::size_t r) {
    Rng rng(seed, r + 1);
    std::vector<std::size_t> rows(n);
    for (auto& idx : rows) idx = rng.uniform_index(n);
    try {
      estimates[r] = statistic(sample.take_rows(rows));
    } catch (const Error&) {
      failed[r] = 1;
    }
  });

  std::vector<double> kept;
  kept.reserve(replicates);
  for (std::size_t r = 0; r < replicates; ++r)
    if (!failed[r]) kept.push_back(estimates[r]);

  BootstrapResult result;
  result.replicates = replicates;
  result.estimand_tag = tag;
  result.seed = seed;
  result.failures = replicates - kept.size();
  if (result.failures * 100 > replicates)
    throw ResampleInstability("estimand failed on " + std::to_string(result.failures) +
                              " of " + std::to_string(replicates) + " resamples");

  result.se = std::sqrt(sample_variance(kept));
  std::sort(kept.begin(), kept.end());
  const double alpha = 1.0 - level;
  result.percentile_ci =
      ConfidenceInterval{quantile_from_sorted(kept, 0.5 * alpha),
                         quantile_from_sorted(kept, 1.0 - 0.5 * alpha), level,
                         CiScale::Natural};
  return result;
}

inline BootstrapResult bootstrap(const Sample& sample, const EstimandSpec& spec,
                                 std::size_t replicates, std::uint64_t seed,
                                 unsigned threads = 1) {
  return bootstrap_statistic(
      sample, [&spec](const Sample& s) { return point_estimate(spec, s); },
      spec.level, to_string(spec.kind), replicates, seed, threads);
}

}  // namespace deltainfer
