#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "deltainfer/errors.hpp"
#include "deltainfer/matrix.hpp"
#include "deltainfer/rng.hpp"
#include "deltainfer/sample.hpp"

namespace deltainfer {

inline double expit(double s) { return 1.0 / (1.0 + std::exp(-s)); }

/// Logistic-regression fit: coefficients plus the model-based covariance
/// (X^T W X)^{-1} from Fisher's information.
struct FittedLogit {
  std::vector<double> coefficients;  // intercept first
  Matrix covariance;
  std::size_t n = 0;
  bool converged = false;
  std::size_t iterations = 0;
  double deviance = 0.0;
};

namespace detail {

// log(expit(eta)) and log(1 - expit(eta)) without overflow.
inline double log_expit(double eta) {
  return eta >= 0.0 ? -std::log1p(std::exp(-eta)) : eta - std::log1p(std::exp(eta));
}

inline double bernoulli_deviance(const std::vector<double>& eta,
                                 const std::vector<double>& y) {
  double dev = 0.0;
  for (std::size_t i = 0; i < eta.size(); ++i)
    dev -= 2.0 * (y[i] * log_expit(eta[i]) + (1.0 - y[i]) * log_expit(-eta[i]));
  return dev;
}

}  // namespace detail

/// IRLS fit of a Bernoulli GLM with logit link. `design` is n x k with an
/// explicit intercept column; `y` must be 0/1. Step-halving guards against
/// deviance increases; |beta| > 30 is treated as separation.
inline FittedLogit fit_logistic(const Sample& design, const std::vector<double>& y,
                                std::size_t max_iterations = 50,
                                double tolerance = 1e-10) {
  const std::size_t n = design.n();
  const std::size_t k = design.width();
  if (y.size() != n) throw DimensionError("design rows and outcome length differ");
  if (n <= k) throw InsufficientSample("fit_logistic needs n > k");
  for (double v : y)
    if (v != 0.0 && v != 1.0) throw InvalidArgument("outcome must be binary 0/1");

  std::vector<double> beta(k, 0.0);
  std::vector<double> eta(n, 0.0);
  double deviance = detail::bernoulli_deviance(eta, y);

  auto linear_predictor = [&](const std::vector<double>& b, std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < k; ++j) s += design(i, j) * b[j];
      out[i] = s;
    }
  };

  auto information = [&](const std::vector<double>& lin) {
    Matrix h(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      const double p = expit(lin[i]);
      const double w = p * (1.0 - p);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b2 = a; b2 < k; ++b2)
          h(a, b2) += w * design(i, a) * design(i, b2);
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b2 = 0; b2 < a; ++b2) h(a, b2) = h(b2, a);
    return h;
  };

  bool converged = false;
  std::size_t iter = 0;
  std::vector<double> trial_eta(n);
  for (; iter < max_iterations; ++iter) {
    std::vector<double> score(k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - expit(eta[i]);
      for (std::size_t j = 0; j < k; ++j) score[j] += design(i, j) * r;
    }
    std::vector<double> step = solve_spd(information(eta), score);

    // Step-halving until the deviance stops increasing.
    std::vector<double> trial(k);
    double trial_dev = 0.0;
    double scale = 1.0;
    for (int half = 0; half < 30; ++half, scale *= 0.5) {
      for (std::size_t j = 0; j < k; ++j) trial[j] = beta[j] + scale * step[j];
      linear_predictor(trial, trial_eta);
      trial_dev = detail::bernoulli_deviance(trial_eta, y);
      if (trial_dev <= deviance + 1e-10) break;
    }

    double max_delta = 0.0;
    for (std::size_t j = 0; j < k; ++j)
      max_delta = std::max(max_delta, std::fabs(trial[j] - beta[j]));
    beta = trial;
    eta = trial_eta;
    deviance = trial_dev;

    for (double b : beta)
      if (std::fabs(b) > 30.0)
        throw Separation("fitted probabilities pinned at 0/1 (|beta| > 30)");

    if (max_delta < tolerance) {
      converged = true;
      ++iter;
      break;
    }
  }

  FittedLogit fit;
  fit.coefficients = beta;
  fit.covariance = inverse_spd(information(eta));
  fit.n = n;
  fit.converged = converged;
  fit.iterations = iter;
  fit.deviance = deviance;
  return fit;
}

inline double predict_prob(const FittedLogit& fit, const std::vector<double>& profile) {
  if (profile.size() != fit.coefficients.size())
    throw DimensionError("profile length does not match coefficient dimension");
  double s = 0.0;
  for (std::size_t j = 0; j < profile.size(); ++j) s += profile[j] * fit.coefficients[j];
  return expit(s);
}

/// Simulated cancer-treatment cohort: age, treatment and the two
/// counterfactual death indicators the observed outcome is assembled from.
struct CohortDraws {
  std::vector<double> age, treat, death, death_treated, death_untreated;

  /// Observed columns only (age, treat, death).
  Sample observed() const {
    return Sample::from_columns({age, treat, death});
  }

  /// Column order expected by the regression-RR estimand: outcome first.
  Sample regression_sample() const {
    return Sample::from_columns({death, age, treat});
  }
};

/// Deterministic generator for the simulated cohort:
///   age   ~ Bernoulli(0.6)
///   treat ~ Bernoulli(expit(0.35 - 0.15 age))
///   death_a ~ Bernoulli(expit(2 - a + 0.65 age)),  death = death_treat.
inline CohortDraws generate_cohort(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("cohort size must be >= 1");
  CohortDraws d;
  d.age.reserve(n);
  d.treat.reserve(n);
  d.death.reserve(n);
  d.death_treated.reserve(n);
  d.death_untreated.reserve(n);
  Rng rng(seed, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const double age = rng.bernoulli(0.6) ? 1.0 : 0.0;
    const double treat = rng.bernoulli(expit(0.35 - 0.15 * age)) ? 1.0 : 0.0;
    const double d1 = rng.bernoulli(expit(2.0 - 1.0 + 0.65 * age)) ? 1.0 : 0.0;
    const double d0 = rng.bernoulli(expit(2.0 - 0.0 + 0.65 * age)) ? 1.0 : 0.0;
    d.age.push_back(age);
    d.treat.push_back(treat);
    d.death_treated.push_back(d1);
    d.death_untreated.push_back(d0);
    d.death.push_back(treat == 1.0 ? d1 : d0);
  }
  return d;
}

/// Width-3 sample (age, treat, death), deterministic given the seed.
inline Sample data_generator_cohort(std::size_t n, std::uint64_t seed) {
  return generate_cohort(n, seed).observed();
}

}  // namespace deltainfer
