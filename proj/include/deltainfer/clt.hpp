#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "deltainfer/errors.hpp"
#include "deltainfer/normal.hpp"
#include "deltainfer/parallel.hpp"
#include "deltainfer/rng.hpp"

namespace deltainfer {

/// Source law for the convergence experiment. Mean and variance are known,
/// so Z_n = sqrt(n) (mean_n - mu) / sigma can be standardized exactly.
struct CltDistribution {
  enum class Tag { Poisson, Uniform, Bernoulli };
  Tag tag = Tag::Poisson;
  double param = 1.0;  // lambda for Poisson, p for Bernoulli; unused for Uniform

  static CltDistribution parse(const std::string& name, double param) {
    CltDistribution d;
    d.param = param;
    if (name == "poisson") {
      d.tag = Tag::Poisson;
      if (!(param > 0.0)) throw InvalidArgument("poisson rate must be > 0");
    } else if (name == "uniform") {
      d.tag = Tag::Uniform;
    } else if (name == "bernoulli") {
      d.tag = Tag::Bernoulli;
      if (!(param > 0.0 && param < 1.0))
        throw InvalidArgument("bernoulli p must be in (0, 1)");
    } else {
      throw InvalidArgument("unsupported distribution: " + name);
    }
    return d;
  }

  double mean() const {
    switch (tag) {
      case Tag::Poisson: return param;
      case Tag::Uniform: return 0.5;
      case Tag::Bernoulli: return param;
    }
    return 0.0;
  }

  double sd() const {
    switch (tag) {
      case Tag::Poisson: return std::sqrt(param);
      case Tag::Uniform: return std::sqrt(1.0 / 12.0);
      case Tag::Bernoulli: return std::sqrt(param * (1.0 - param));
    }
    return 0.0;
  }

  double draw(Rng& rng) const {
    switch (tag) {
      case Tag::Poisson: return static_cast<double>(rng.poisson(param));
      case Tag::Uniform: return rng.uniform();
      case Tag::Bernoulli: return rng.bernoulli(param) ? 1.0 : 0.0;
    }
    return 0.0;
  }

  std::string name() const {
    char buf[48];
    switch (tag) {
      case Tag::Poisson:
        std::snprintf(buf, sizeof(buf), "poisson(%g)", param);
        return buf;
      case Tag::Uniform:
        return "uniform(0,1)";
      case Tag::Bernoulli:
        std::snprintf(buf, sizeof(buf), "bernoulli(%g)", param);
        return buf;
    }
    return "unknown";
  }
};

/// Kolmogorov-Smirnov distance between the empirical distribution of `draws`
/// and the standard normal CDF.
inline double ks_distance_to_normal(std::vector<double> draws) {
  if (draws.empty()) throw InvalidArgument("KS distance of an empty set");
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double d = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double cdf = normal_cdf(draws[i]);
    d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - cdf,
                             cdf - static_cast<double>(i) / n));
  }
  return d;
}

struct CltEntry {
  std::size_t n = 0;
  double ks = 0.0;
  std::vector<double> z;  // one standardized mean per replicate
};

struct CltReport {
  std::string distribution;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  std::vector<CltEntry> entries;
};

/// For each sample size, simulate `replicates` standardized means and
/// measure how far their empirical distribution sits from the normal limit.
/// Deterministic given the seed, for any thread count.
inline CltReport clt_experiment(const CltDistribution& dist,
                                const std::vector<std::size_t>& n_values,
                                std::size_t replicates, std::uint64_t seed,
                                unsigned threads = 1) {
  if (replicates < 100) throw InvalidArgument("clt_experiment needs replicates >= 100");
  if (n_values.empty()) throw InvalidArgument("clt_experiment needs sample sizes");
  for (std::size_t n : n_values)
    if (n < 1) throw InvalidArgument("sample sizes must be >= 1");

  const double mu = dist.mean();
  const double sigma = dist.sd();

  CltReport report;
  report.distribution = dist.name();
  report.replicates = replicates;
  report.seed = seed;

  for (std::size_t j = 0; j < n_values.size(); ++j) {
    const std::size_t n = n_values[j];
    CltEntry entry;
    entry.n = n;
    entry.z.resize(replicates);
    detail::run_indexed(replicates, threads, [&](std::size_t r) {
      Rng rng(seed, j * replicates + r + 1);
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += dist.draw(rng);
      const double mean = sum / static_cast<double>(n);
      entry.z[r] = std::sqrt(static_cast<double>(n)) * (mean - mu) / sigma;
    });
    entry.ks = ks_distance_to_normal(entry.z);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace deltainfer
