#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "deltainfer/dual.hpp"
#include "deltainfer/errors.hpp"

namespace deltainfer {

/// Gradient of a scalar functional of k reals. One dual evaluation per
/// coordinate (k is small for every functional in this library).
///
/// `f` must be callable as f(const std::vector<Dual>&) -> Dual, typically a
/// generic lambda also usable with plain doubles.
template <class F>
std::vector<double> gradient(F&& f, const std::vector<double>& x) {
  if (x.empty()) throw DimensionError("gradient of a 0-dimensional point");
  std::vector<Dual> args(x.begin(), x.end());
  std::vector<double> partials(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    args[i] = Dual::variable(x[i]);
    partials[i] = static_cast<Dual>(f(args)).deriv;
    args[i] = Dual(x[i]);
  }
  return partials;
}

/// Projection of a gradient onto a direction: the directional derivative.
inline double directional_derivative(const std::vector<double>& grad,
                                     const std::vector<double>& direction) {
  if (grad.size() != direction.size())
    throw DimensionError("gradient and direction lengths differ");
  double dot = 0.0;
  for (std::size_t i = 0; i < grad.size(); ++i) dot += grad[i] * direction[i];
  return dot;
}

/// Evaluate a dual-generic functional at a plain real point.
template <class F>
double eval_real(F&& f, const std::vector<double>& x) {
  std::vector<Dual> args(x.begin(), x.end());
  return static_cast<Dual>(f(args)).value;
}

struct GradientCheck {
  std::vector<double> autodiff;
  std::vector<double> finite_difference;
  std::vector<double> abs_diff;
  double max_abs_diff = 0.0;
};

/// Compare the dual-number gradient against central differences
/// (f(x+h e_i) - f(x-h e_i)) / (2h) with h = step * max(1, |x_i|).
template <class F>
GradientCheck check_gradient(F&& f, const std::vector<double>& x,
                             double step = 1e-6) {
  if (!(step > 0.0)) throw InvalidArgument("check_gradient step must be > 0");
  GradientCheck report;
  report.autodiff = gradient(f, x);
  report.finite_difference.resize(x.size());
  report.abs_diff.resize(x.size());

  std::vector<double> probe(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = step * std::max(1.0, std::fabs(x[i]));
    probe[i] = x[i] + h;
    const double above = eval_real(f, probe);
    probe[i] = x[i] - h;
    const double below = eval_real(f, probe);
    probe[i] = x[i];
    report.finite_difference[i] = (above - below) / (2.0 * h);
    report.abs_diff[i] = std::fabs(report.autodiff[i] - report.finite_difference[i]);
    report.max_abs_diff = std::max(report.max_abs_diff, report.abs_diff[i]);
  }
  return report;
}

}  // namespace deltainfer
