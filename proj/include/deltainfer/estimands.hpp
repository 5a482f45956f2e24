#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltainfer/autodiff.hpp"
#include "deltainfer/empirical.hpp"
#include "deltainfer/errors.hpp"
#include "deltainfer/kde.hpp"
#include "deltainfer/logit.hpp"
#include "deltainfer/rng.hpp"
#include "deltainfer/sample.hpp"

namespace deltainfer {

enum class EstimandKind {
  Mean,
  RatioOfMeans,
  RiskRatio,
  Quantile,
  Correlation,
  RegressionRr,
  AttributableFraction,
};

inline const char* to_string(EstimandKind k) {
  switch (k) {
    case EstimandKind::Mean: return "mean";
    case EstimandKind::RatioOfMeans: return "ratio_of_means";
    case EstimandKind::RiskRatio: return "risk_ratio";
    case EstimandKind::Quantile: return "quantile";
    case EstimandKind::Correlation: return "correlation";
    case EstimandKind::RegressionRr: return "regression_rr";
    case EstimandKind::AttributableFraction: return "attributable_fraction";
  }
  return "unknown";
}

/// Declarative description of which functional to apply and its options.
/// Fields are interpreted per kind; unrelated ones are ignored.
struct EstimandSpec {
  EstimandKind kind = EstimandKind::Mean;
  double level = 0.95;
  VarianceConvention convention = VarianceConvention::Unbiased;

  // ratio of means: reject when |mean(Y)| < guard * sd(Y)/sqrt(n). The
  // default matches a 5-sigma separation of the denominator mean from 0;
  // 0 disables everything except the exact-zero check.
  double denominator_guard = 5.0;

  // quantile
  double quantile_p = 0.5;
  double bandwidth = 0.0;                          // 0 selects the rule default
  std::function<double(double)> density_override;  // bypasses the KDE (testing)

  // regression RR (profiles include the intercept term)
  std::vector<double> profile_a, profile_b;

  // attributable-fraction diagnostic
  std::size_t af_draws = 10000;
  std::uint64_t af_seed = 0;
  double af_divergence_floor = 1e-12;
  double af_warn_ratio = 2.0;
};

/// Point estimate, standard error (on the working scale recorded in
/// ci.scale), Wald interval and per-observation influence values.
struct InferenceResult {
  std::string method;
  double estimate = 0.0;
  double se = 0.0;
  ConfidenceInterval ci;
  std::vector<std::size_t> n;
  std::optional<InfluenceCurve> influence;
  std::vector<std::string> warnings;
  std::map<std::string, double> diagnostics;
};

namespace detail {

inline void check_level(const EstimandSpec& spec) {
  if (!(spec.level > 0.0 && spec.level < 1.0))
    throw InvalidArgument("confidence level must be in (0, 1)");
}

inline double rel_gradient_gap(const std::vector<double>& a,
                               const std::vector<double>& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    gap = std::max(gap, std::fabs(a[i] - b[i]) / std::max(1.0, std::fabs(b[i])));
  return gap;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Estimand functionals, generic over the scalar type so the same expression
// is evaluated with plain doubles and differentiated with duals.
// ---------------------------------------------------------------------------

struct RatioOfMeansFunctional {
  template <class T>
  T operator()(const std::vector<T>& m) const {
    return m[0] / m[1];
  }
};

/// Correlation in terms of the five raw moments {mxy, mx, my, mx2, my2}.
struct CorrelationFunctional {
  template <class T>
  T operator()(const std::vector<T>& m) const {
    using std::sqrt;
    const T vx = m[3] - m[1] * m[1];
    const T vy = m[4] - m[2] * m[2];
    return (m[0] - m[1] * m[2]) / (sqrt(vx) * sqrt(vy));
  }
};

/// expit(a . beta) / expit(b . beta) as a function of the coefficients.
struct RegressionRrFunctional {
  std::vector<double> a, b;

  template <class T>
  T operator()(const std::vector<T>& beta) const {
    using std::exp;
    T sa = T(0.0), sb = T(0.0);
    for (std::size_t j = 0; j < beta.size(); ++j) {
      sa += beta[j] * T(a[j]);
      sb += beta[j] * T(b[j]);
    }
    return (T(1.0) + exp(-sb)) / (T(1.0) + exp(-sa));
  }
};

/// Attributable fraction among the exposed, 1 - exp(-x/theta), on the
/// smooth branch theta > 0.
struct AttributableFractionFunctional {
  double exposure = 1.0;

  template <class T>
  T operator()(const std::vector<T>& theta) const {
    using std::exp;
    return T(1.0) - exp(-(T(exposure) / theta[0]));
  }
};

// ---------------------------------------------------------------------------
// Inference operations
// ---------------------------------------------------------------------------

inline InferenceResult mean_inference(const Sample& sample, const EstimandSpec& spec) {
  detail::check_level(spec);
  if (sample.width() != 1) throw DimensionError("mean_inference needs a width-1 sample");
  if (sample.n() < 2) throw InsufficientSample("mean_inference needs n >= 2");

  const std::vector<double> xs = sample.col(0);
  const double m = mean_of(xs);

  InfluenceCurve curve;
  curve.estimand_tag = "mean";
  curve.convention = spec.convention;
  curve.values.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) curve.values[i] = xs[i] - m;

  InferenceResult r;
  r.method = "mean";
  r.estimate = m;
  r.se = std::sqrt(if_variance(curve));
  r.ci = wald_ci(m, r.se, spec.level);
  r.n = {sample.n()};
  r.influence = std::move(curve);
  return r;
}

inline InferenceResult ratio_of_means_inference(const Sample& pairs,
                                                const EstimandSpec& spec) {
  detail::check_level(spec);
  if (pairs.width() != 2)
    throw DimensionError("ratio_of_means_inference needs a width-2 sample");
  const std::size_t n = pairs.n();
  if (n < 2) throw InsufficientSample("ratio_of_means_inference needs n >= 2");

  const PairMoments mom = sample_moments(pairs);
  const double var_y = mom.var_y(spec.convention);
  const double sd_y = std::sqrt(std::max(0.0, var_y));
  // The delta method assumes the denominator mean is bounded away from 0.
  if (mom.my == 0.0 ||
      std::fabs(mom.my) <
          spec.denominator_guard * sd_y / std::sqrt(static_cast<double>(n)))
    throw DenominatorNearZero("mean of the denominator variable is statistically indistinguishable from 0");

  const double estimate = mom.mx / mom.my;
  const double var_x = mom.var_x(spec.convention);
  const double cov = mom.cov_xy(spec.convention);
  const double my2 = mom.my * mom.my;
  const double variance =
      (var_x / my2 + mom.mx * mom.mx * var_y / (my2 * my2) -
       2.0 * (mom.mx / (my2 * mom.my)) * cov) /
      static_cast<double>(n);

  const std::vector<double> grad =
      gradient(RatioOfMeansFunctional{}, {mom.mx, mom.my});
  const std::vector<double> closed{1.0 / mom.my, -mom.mx / my2};

  InfluenceCurve curve;
  curve.estimand_tag = "ratio_of_means";
  curve.convention = spec.convention;
  curve.values.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    curve.values[i] =
        grad[0] * (pairs(i, 0) - mom.mx) + grad[1] * (pairs(i, 1) - mom.my);

  InferenceResult r;
  r.method = "ratio_of_means";
  r.estimate = estimate;
  r.se = std::sqrt(std::max(0.0, variance));
  r.ci = wald_ci(estimate, r.se, spec.level);
  r.n = {n};
  r.influence = std::move(curve);
  r.diagnostics["gradient_closed_form_rel_diff"] =
      detail::rel_gradient_gap(grad, closed);
  return r;
}

inline InferenceResult risk_ratio_inference(double p1, std::size_t n1, double p2,
                                            std::size_t n2, const EstimandSpec& spec) {
  detail::check_level(spec);
  if (n1 < 1 || n2 < 1) throw InvalidArgument("arm sizes must be >= 1");
  for (double p : {p1, p2}) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("proportions must lie in [0, 1]");
    if (p == 0.0 || p == 1.0)
      throw BoundaryProportion("log risk-ratio variance is undefined at proportion 0 or 1");
  }

  const double rr = p1 / p2;
  const double var_log =
      (1.0 - p1) / (p1 * static_cast<double>(n1)) +
      (1.0 - p2) / (p2 * static_cast<double>(n2));
  const double se_log = std::sqrt(var_log);

  InferenceResult r;
  r.method = "risk_ratio";
  r.estimate = rr;
  r.se = se_log;  // working scale is the log
  const ConfidenceInterval log_ci = wald_ci(std::log(rr), se_log, spec.level);
  r.ci = ConfidenceInterval{std::exp(log_ci.lower), std::exp(log_ci.upper),
                            spec.level, CiScale::LogExponentiated};
  r.n = {n1, n2};
  // Normal approximation of a proportion is trusted when n p (1-p) >= 9.
  if (static_cast<double>(n1) * p1 * (1.0 - p1) < 9.0)
    r.warnings.push_back("normal approximation questionable in arm 1: n*p*(1-p) < 9");
  if (static_cast<double>(n2) * p2 * (1.0 - p2) < 9.0)
    r.warnings.push_back("normal approximation questionable in arm 2: n*p*(1-p) < 9");
  return r;
}

inline InferenceResult quantile_inference(const Sample& sample, double p,
                                          const EstimandSpec& spec) {
  detail::check_level(spec);
  if (sample.width() != 1)
    throw DimensionError("quantile_inference needs a width-1 sample");
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("quantile p must be in (0, 1)");
  const std::size_t n = sample.n();
  if (n < 20) throw InsufficientSample("quantile_inference needs n >= 20");

  std::vector<double> sorted = sample.col(0);
  std::sort(sorted.begin(), sorted.end());
  const double q = quantile_from_sorted(sorted, p);

  InferenceResult r;
  r.method = "quantile";
  double fq = 0.0;
  if (spec.density_override) {
    fq = spec.density_override(q);
  } else {
    const DensityEstimate kde = fit_kde(sample, spec.bandwidth);
    fq = kde(q);
    r.diagnostics["bandwidth"] = kde.bandwidth();
  }
  if (!(fq >= 1e-8))
    throw DegenerateDensity("density estimate at the quantile is below 1e-8");
  r.diagnostics["density_at_quantile"] = fq;

  InfluenceCurve curve;
  curve.estimand_tag = "quantile";
  curve.convention = spec.convention;
  curve.values.resize(n);
  const std::vector<double> xs = sample.col(0);
  for (std::size_t i = 0; i < n; ++i)
    curve.values[i] = ((xs[i] <= q ? 1.0 : 0.0) - p) / fq;

  r.estimate = q;
  r.se = std::sqrt(p * (1.0 - p) / static_cast<double>(n)) / fq;
  r.ci = wald_ci(q, r.se, spec.level);
  r.n = {n};
  r.influence = std::move(curve);
  return r;
}

namespace detail {

/// Closed-form gradient of the correlation with respect to the five raw
/// moments {mxy, mx, my, mx2, my2}.
inline std::vector<double> correlation_gradient_closed_form(const PairMoments& m) {
  const double vx = m.mx2 - m.mx * m.mx;
  const double vy = m.my2 - m.my * m.my;
  const double sx = std::sqrt(vx), sy = std::sqrt(vy);
  const double c = m.mxy - m.mx * m.my;
  return {
      1.0 / (sx * sy),
      m.mx * c / (vx * sx * sy) - m.my / (sx * sy),
      m.my * c / (sx * vy * sy) - m.mx / (sx * sy),
      -c / (2.0 * vx * sx * sy),
      -c / (2.0 * sx * vy * sy),
  };
}

}  // namespace detail

inline InferenceResult correlation_inference(const Sample& pairs,
                                             const EstimandSpec& spec) {
  detail::check_level(spec);
  if (pairs.width() != 2)
    throw DimensionError("correlation_inference needs a width-2 sample");
  const std::size_t n = pairs.n();
  if (n < 3) throw InsufficientSample("correlation_inference needs n >= 3");

  const PairMoments mom = sample_moments(pairs);
  const double vx = mom.mx2 - mom.mx * mom.mx;
  const double vy = mom.my2 - mom.my * mom.my;
  if (!(vx > 1e-12 * (mom.mx2 + mom.mx * mom.mx + 1e-300)) ||
      !(vy > 1e-12 * (mom.my2 + mom.my * mom.my + 1e-300)))
    throw DegenerateVariance("a marginal variance is numerically zero");

  const double rho = (mom.mxy - mom.mx * mom.my) / (std::sqrt(vx) * std::sqrt(vy));
  if (std::fabs(rho) >= 1.0 - 1e-12)
    throw DegenerateCorrelation("|rho| = 1: influence variance collapses");

  const std::vector<double> point{mom.mxy, mom.mx, mom.my, mom.mx2, mom.my2};
  const std::vector<double> grad = gradient(CorrelationFunctional{}, point);
  const std::vector<double> closed = detail::correlation_gradient_closed_form(mom);

  InfluenceCurve curve;
  curve.estimand_tag = "correlation";
  curve.convention = spec.convention;
  curve.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = pairs(i, 0), y = pairs(i, 1);
    curve.values[i] = grad[0] * (x * y - mom.mxy) + grad[1] * (x - mom.mx) +
                      grad[2] * (y - mom.my) + grad[3] * (x * x - mom.mx2) +
                      grad[4] * (y * y - mom.my2);
  }

  InferenceResult r;
  r.method = "correlation";
  r.estimate = rho;
  r.se = std::sqrt(if_variance(curve));
  r.ci = wald_ci(rho, r.se, spec.level);
  r.n = {n};
  r.influence = std::move(curve);
  r.diagnostics["gradient_closed_form_rel_diff"] =
      detail::rel_gradient_gap(grad, closed);
  return r;
}

inline InferenceResult regression_rr_inference(const FittedLogit& fit,
                                               const std::vector<double>& profile_a,
                                               const std::vector<double>& profile_b,
                                               const EstimandSpec& spec) {
  detail::check_level(spec);
  const std::size_t k = fit.coefficients.size();
  if (profile_a.size() != k || profile_b.size() != k)
    throw DimensionError("profiles must match the coefficient dimension");

  const RegressionRrFunctional phi{profile_a, profile_b};
  const double estimate = eval_real(phi, fit.coefficients);
  const std::vector<double> grad = gradient(phi, fit.coefficients);

  // Closed form: phi * (a_j (1 - expit(a.beta)) - b_j (1 - expit(b.beta))).
  double sa = 0.0, sb = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    sa += profile_a[j] * fit.coefficients[j];
    sb += profile_b[j] * fit.coefficients[j];
  }
  const double pa = expit(sa), pb = expit(sb);
  std::vector<double> closed(k);
  for (std::size_t j = 0; j < k; ++j)
    closed[j] = estimate * (profile_a[j] * (1.0 - pa) - profile_b[j] * (1.0 - pb));

  InferenceResult r;
  r.method = "regression_rr";
  r.estimate = estimate;
  r.se = std::sqrt(std::max(0.0, quadratic_form(fit.covariance, grad)));
  r.ci = wald_ci(estimate, r.se, spec.level);
  r.n = {fit.n};
  r.diagnostics["gradient_closed_form_rel_diff"] =
      detail::rel_gradient_gap(grad, closed);
  r.diagnostics["prob_profile_a"] = pa;
  r.diagnostics["prob_profile_b"] = pb;
  return r;
}

/// Fit the logit on a sample whose first column is the binary outcome and
/// remaining columns are covariates (intercept added here), then run the
/// regression-RR inference. This is the entry point the CLI and the
/// bootstrap use.
inline InferenceResult regression_rr_from_sample(const Sample& sample,
                                                 const EstimandSpec& spec) {
  if (sample.width() < 2)
    throw DimensionError("regression RR needs an outcome column plus covariates");
  const std::size_t n = sample.n();
  std::vector<std::vector<double>> design_cols;
  design_cols.push_back(std::vector<double>(n, 1.0));
  for (std::size_t j = 1; j < sample.width(); ++j) design_cols.push_back(sample.col(j));
  const FittedLogit fit = fit_logistic(Sample::from_columns(design_cols), sample.col(0));
  return regression_rr_inference(fit, spec.profile_a, spec.profile_b, spec);
}

/// Side-by-side delta and Monte-Carlo standard errors for the attributable
/// fraction among the exposed; flags the regime where the linearization is
/// untrustworthy.
struct AfDiagnostic {
  double theta_hat = 0.0;
  double se_theta = 0.0;
  double exposure = 0.0;
  double delta_se = 0.0;
  double monte_carlo_se = 0.0;
  double divergence_ratio = 0.0;
  bool warning = false;
  std::size_t draws = 0;
  std::uint64_t seed = 0;
};

inline AfDiagnostic attributable_fraction_diagnostic(double theta_hat,
                                                     double se_theta,
                                                     double exposure,
                                                     const EstimandSpec& spec) {
  if (!(exposure > 0.0)) throw InvalidArgument("exposure level must be > 0");
  if (!(se_theta >= 0.0)) throw InvalidArgument("se_theta must be >= 0");
  if (spec.af_draws < 2) throw InvalidArgument("af_draws must be >= 2");

  AfDiagnostic d;
  d.theta_hat = theta_hat;
  d.se_theta = se_theta;
  d.exposure = exposure;
  d.draws = spec.af_draws;
  d.seed = spec.af_seed;

  // The derivative is taken on the smooth branch and is identically 0 for
  // theta <= 0; the value at the origin is exactly what makes the
  // linearized SE collapse there.
  if (theta_hat > 0.0) {
    const AttributableFractionFunctional af{exposure};
    d.delta_se = std::fabs(gradient(af, {theta_hat})[0]) * se_theta;
  } else {
    d.delta_se = 0.0;
  }

  auto af_value = [exposure](double theta) {
    return theta > 0.0 ? 1.0 - std::exp(-exposure / theta) : 1.0;
  };
  Rng rng(spec.af_seed, 0);
  std::vector<double> values(spec.af_draws);
  for (auto& v : values) v = af_value(theta_hat + se_theta * rng.normal());
  d.monte_carlo_se = std::sqrt(sample_variance(values));

  d.divergence_ratio =
      d.monte_carlo_se / std::max(d.delta_se, spec.af_divergence_floor);
  d.warning = d.divergence_ratio > spec.af_warn_ratio;
  return d;
}

// ---------------------------------------------------------------------------
// Sample-level dispatch shared by the CLI and the bootstrap.
// ---------------------------------------------------------------------------

inline double point_estimate(const EstimandSpec& spec, const Sample& sample) {
  switch (spec.kind) {
    case EstimandKind::Mean:
      return mean_of(sample.col(0));
    case EstimandKind::RatioOfMeans: {
      const PairMoments m = sample_moments(sample);
      if (m.my == 0.0) throw DenominatorNearZero("denominator mean is 0");
      return m.mx / m.my;
    }
    case EstimandKind::Quantile: {
      std::vector<double> sorted = sample.col(0);
      std::sort(sorted.begin(), sorted.end());
      return quantile_from_sorted(sorted, spec.quantile_p);
    }
    case EstimandKind::Correlation: {
      const PairMoments m = sample_moments(sample);
      const double vx = m.mx2 - m.mx * m.mx, vy = m.my2 - m.my * m.my;
      if (!(vx > 0.0) || !(vy > 0.0))
        throw DegenerateVariance("a marginal variance is numerically zero");
      return (m.mxy - m.mx * m.my) / (std::sqrt(vx) * std::sqrt(vy));
    }
    case EstimandKind::RegressionRr:
      return regression_rr_from_sample(sample, spec).estimate;
    default:
      throw InvalidArgument("estimand is not computable from row data");
  }
}

inline InferenceResult run_inference(const EstimandSpec& spec, const Sample& sample) {
  switch (spec.kind) {
    case EstimandKind::Mean:
      return mean_inference(sample, spec);
    case EstimandKind::RatioOfMeans:
      return ratio_of_means_inference(sample, spec);
    case EstimandKind::Quantile:
      return quantile_inference(sample, spec.quantile_p, spec);
    case EstimandKind::Correlation:
      return correlation_inference(sample, spec);
    case EstimandKind::RegressionRr:
      return regression_rr_from_sample(sample, spec);
    default:
      throw InvalidArgument("estimand is not computable from row data");
  }
}

}  // namespace deltainfer
