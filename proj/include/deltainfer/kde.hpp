#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "deltainfer/empirical.hpp"
#include "deltainfer/errors.hpp"
#include "deltainfer/sample.hpp"

namespace deltainfer {

/// Epanechnikov kernel density estimate,
///   f_hat(x) = 1/(n h) * sum_i K((x - x_i)/h),  K(u) = 0.75 (1 - u^2) on |u|<=1.
class DensityEstimate {
 public:
  DensityEstimate(std::vector<double> sorted_data, double bandwidth)
      : data_(std::move(sorted_data)), h_(bandwidth) {}

  double operator()(double x) const {
    // Kernel support is [x-h, x+h]; only that window contributes.
    const auto lo = std::lower_bound(data_.begin(), data_.end(), x - h_);
    const auto hi = std::upper_bound(data_.begin(), data_.end(), x + h_);
    double sum = 0.0;
    for (auto it = lo; it != hi; ++it) {
      const double u = (x - *it) / h_;
      const double w = 1.0 - u * u;
      if (w > 0.0) sum += 0.75 * w;
    }
    return sum / (static_cast<double>(data_.size()) * h_);
  }

  double bandwidth() const { return h_; }
  std::size_t n() const { return data_.size(); }
  double support_min() const { return data_.front() - h_; }
  double support_max() const { return data_.back() + h_; }
  const char* kernel() const { return "epanechnikov"; }

 private:
  std::vector<double> data_;  // sorted
  double h_ = 0.0;
};

/// Default bandwidth: Silverman's 0.9 * min(sd, IQR/1.34) * n^{-1/5},
/// rescaled by the Epanechnikov canonical factor 2.214/1.059.
inline double epanechnikov_bandwidth(const std::vector<double>& sorted, double sd) {
  const double iqr =
      quantile_from_sorted(sorted, 0.75) - quantile_from_sorted(sorted, 0.25);
  const double spread = std::min(sd, iqr / 1.34);
  const double n = static_cast<double>(sorted.size());
  return 0.9 * spread * std::pow(n, -0.2) * (2.214 / 1.059);
}

inline DensityEstimate fit_kde(const Sample& sample, double bandwidth = 0.0,
                               std::size_t column = 0) {
  std::vector<double> data = sample.col(column);
  if (data.size() < 2) throw InsufficientSample("fit_kde needs n >= 2");
  std::sort(data.begin(), data.end());
  if (data.front() == data.back())
    throw DegenerateSample("zero-spread sample");
  double h = bandwidth;
  if (h == 0.0) {
    h = epanechnikov_bandwidth(data, std::sqrt(sample_variance(data)));
    if (!(h > 0.0))
      throw DegenerateSample("bandwidth rule degenerates (zero IQR)");
  } else if (!(h > 0.0)) {
    throw InvalidArgument("bandwidth must be > 0");
  }
  return DensityEstimate(std::move(data), h);
}

}  // namespace deltainfer
