#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "deltainfer/errors.hpp"

namespace deltainfer {

/// Immutable ordered collection of fixed-width rows; the empirical
/// distribution carrier. All entries must be finite.
class Sample {
 public:
  Sample() = default;

  /// Row-major data, rows.size() must be a multiple of width.
  Sample(std::vector<double> data, std::size_t width)
      : data_(std::move(data)), width_(width) {
    if (width_ == 0) throw InvalidArgument("Sample width must be >= 1");
    if (data_.size() % width_ != 0)
      throw InvalidArgument("Sample data length is not a multiple of width");
    for (double v : data_)
      if (!std::isfinite(v)) throw InvalidArgument("Sample contains non-finite entries");
  }

  static Sample from_column(std::vector<double> values) {
    return Sample(std::move(values), 1);
  }

  static Sample from_columns(const std::vector<std::vector<double>>& columns) {
    if (columns.empty()) throw InvalidArgument("Sample needs at least one column");
    const std::size_t n = columns.front().size();
    for (const auto& c : columns)
      if (c.size() != n) throw InvalidArgument("Sample columns have unequal lengths");
    std::vector<double> data;
    data.reserve(n * columns.size());
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& c : columns) data.push_back(c[i]);
    return Sample(std::move(data), columns.size());
  }

  std::size_t n() const { return width_ == 0 ? 0 : data_.size() / width_; }
  std::size_t width() const { return width_; }
  bool empty() const { return data_.empty(); }

  double operator()(std::size_t row, std::size_t col) const {
    return data_[row * width_ + col];
  }

  std::vector<double> col(std::size_t j) const {
    if (j >= width_) throw DimensionError("Sample column index out of range");
    std::vector<double> out(n());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(i, j);
    return out;
  }

  /// Row-wise resample (with repetition allowed); preserves pairing.
  Sample take_rows(const std::vector<std::size_t>& rows) const {
    std::vector<double> data;
    data.reserve(rows.size() * width_);
    for (std::size_t r : rows)
      for (std::size_t j = 0; j < width_; ++j) data.push_back((*this)(r, j));
    return Sample(std::move(data), width_);
  }

  const std::vector<double>& raw() const { return data_; }

 private:
  std::vector<double> data_;
  std::size_t width_ = 0;
};

}  // namespace deltainfer
