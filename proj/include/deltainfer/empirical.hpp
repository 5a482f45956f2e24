#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "deltainfer/errors.hpp"
#include "deltainfer/normal.hpp"
#include "deltainfer/sample.hpp"

namespace deltainfer {

/// Denominator convention for the influence-curve variance. `Unbiased`
/// (1/(n-1), centered) is the default and matches what the worked examples'
/// reference code computes with var()/sd(); `Population` is the raw
/// 1/n second moment for a mean-zero curve.
enum class VarianceConvention { Unbiased, Population };

inline const char* to_string(VarianceConvention c) {
  return c == VarianceConvention::Unbiased ? "unbiased" : "population";
}

/// Per-observation influence values of a fitted estimand.
struct InfluenceCurve {
  std::vector<double> values;
  std::string estimand_tag;
  VarianceConvention convention = VarianceConvention::Unbiased;
};

enum class CiScale { Natural, LogExponentiated };

inline const char* to_string(CiScale s) {
  return s == CiScale::Natural ? "natural" : "log-exponentiated";
}

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.95;
  CiScale scale = CiScale::Natural;
};

inline double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

/// Variance of the *estimator* (squared standard error) from an influence
/// curve: (1/n) times the second moment of the curve, either raw
/// (population) or centered with the n-1 denominator (unbiased).
inline double if_variance(const InfluenceCurve& curve) {
  const std::size_t n = curve.values.size();
  if (n == 0) throw InsufficientSample("if_variance needs n >= 1");
  if (curve.convention == VarianceConvention::Population) {
    double ss = 0.0;
    for (double v : curve.values) ss += v * v;
    return ss / static_cast<double>(n) / static_cast<double>(n);
  }
  if (n < 2) throw InsufficientSample("unbiased if_variance needs n >= 2");
  const double m = mean_of(curve.values);
  double ss = 0.0;
  for (double v : curve.values) ss += (v - m) * (v - m);
  return ss / static_cast<double>(n - 1) / static_cast<double>(n);
}

/// estimate +/- z_{(1+level)/2} * se on the current working scale.
inline ConfidenceInterval wald_ci(double estimate, double se, double level,
                                  CiScale scale = CiScale::Natural) {
  if (!(level > 0.0 && level < 1.0))
    throw InvalidArgument("confidence level must be in (0, 1)");
  if (!(se >= 0.0)) throw InvalidArgument("standard error must be >= 0");
  const double z = normal_quantile(0.5 * (1.0 + level));
  return ConfidenceInterval{estimate - z * se, estimate + z * se, level, scale};
}

/// Empirical CDF F_n(z) = #{x_i <= z} / n. Ties are counted with
/// multiplicity, matching F(x) = P(X <= x) literally.
class Ecdf {
 public:
  explicit Ecdf(std::vector<double> values) : sorted_(std::move(values)) {
    if (sorted_.empty()) throw InsufficientSample("ecdf needs n >= 1");
    std::sort(sorted_.begin(), sorted_.end());
  }

  Ecdf(const Sample& sample, std::size_t column) : Ecdf(sample.col(column)) {}

  double operator()(double z) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), z);
    return static_cast<double>(it - sorted_.begin()) /
           static_cast<double>(sorted_.size());
  }

  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

/// Order-statistic quantile under the min{x : F_n(x) >= p} definition.
inline double quantile_from_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw InsufficientSample("quantile of empty sample");
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("quantile p must be in (0, 1)");
  const double np = static_cast<double>(sorted.size()) * p;
  // Guard against n*p landing a hair above an integer it should equal.
  std::size_t k = static_cast<std::size_t>(std::ceil(np - 1e-9));
  if (k < 1) k = 1;
  if (k > sorted.size()) k = sorted.size();
  return sorted[k - 1];
}

/// Plug-in moments of a paired sample: plain averages of XY, X, Y, X^2, Y^2
/// plus variances/covariance derived from them.
struct PairMoments {
  double mxy = 0.0, mx = 0.0, my = 0.0, mx2 = 0.0, my2 = 0.0;
  std::size_t n = 0;

  double var_x(VarianceConvention c = VarianceConvention::Population) const {
    return scale(c) * (mx2 - mx * mx);
  }
  double var_y(VarianceConvention c = VarianceConvention::Population) const {
    return scale(c) * (my2 - my * my);
  }
  double cov_xy(VarianceConvention c = VarianceConvention::Population) const {
    return scale(c) * (mxy - mx * my);
  }

 private:
  double scale(VarianceConvention c) const {
    return c == VarianceConvention::Population
               ? 1.0
               : static_cast<double>(n) / static_cast<double>(n - 1);
  }
};

inline PairMoments sample_moments(const Sample& pairs) {
  if (pairs.width() != 2) throw DimensionError("sample_moments needs a width-2 sample");
  const std::size_t n = pairs.n();
  if (n < 2) throw InsufficientSample("sample_moments needs n >= 2");
  PairMoments m;
  m.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = pairs(i, 0), y = pairs(i, 1);
    m.mxy += x * y;
    m.mx += x;
    m.my += y;
    m.mx2 += x * x;
    m.my2 += y * y;
  }
  const double dn = static_cast<double>(n);
  m.mxy /= dn;
  m.mx /= dn;
  m.my /= dn;
  m.mx2 /= dn;
  m.my2 /= dn;
  return m;
}

/// Unbiased sample variance of a plain vector (two-pass).
inline double sample_variance(const std::vector<double>& v) {
  if (v.size() < 2) throw InsufficientSample("sample_variance needs n >= 2");
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return ss / static_cast<double>(v.size() - 1);
}

}  // namespace deltainfer
