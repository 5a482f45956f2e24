#pragma once

#include <stdexcept>
#include <string>

namespace deltainfer {

// Error taxonomy. Every failure mode carries a stable category string and a
// distinct process exit code so callers (and the CLI) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(std::string category, int exit_code, const std::string& what)
      : std::runtime_error(what),
        category_(std::move(category)),
        exit_code_(exit_code) {}

  const std::string& category() const noexcept { return category_; }
  int exit_code() const noexcept { return exit_code_; }

 private:
  std::string category_;
  int exit_code_;
};

#define DELTAINFER_DEFINE_ERROR(NAME, CATEGORY, CODE) \
  class NAME : public Error {                         \
   public:                                            \
    explicit NAME(const std::string& what)            \
        : Error(CATEGORY, CODE, what) {}              \
  }

DELTAINFER_DEFINE_ERROR(IoError, "io_error", 3);
DELTAINFER_DEFINE_ERROR(InvalidArgument, "invalid_argument", 4);
DELTAINFER_DEFINE_ERROR(InsufficientSample, "insufficient_sample", 5);
DELTAINFER_DEFINE_ERROR(DomainError, "domain_error", 6);
DELTAINFER_DEFINE_ERROR(DimensionError, "dimension_mismatch", 7);
DELTAINFER_DEFINE_ERROR(DenominatorNearZero, "denominator_near_zero", 8);
DELTAINFER_DEFINE_ERROR(BoundaryProportion, "boundary_proportion", 9);
DELTAINFER_DEFINE_ERROR(DegenerateDensity, "degenerate_density", 10);
DELTAINFER_DEFINE_ERROR(DegenerateSample, "degenerate_sample", 11);
DELTAINFER_DEFINE_ERROR(DegenerateVariance, "degenerate_variance", 12);
DELTAINFER_DEFINE_ERROR(DegenerateCorrelation, "degenerate_correlation", 13);
DELTAINFER_DEFINE_ERROR(RankDeficient, "rank_deficient", 14);
DELTAINFER_DEFINE_ERROR(Separation, "separation", 15);
DELTAINFER_DEFINE_ERROR(ResampleInstability, "resample_instability", 16);

#undef DELTAINFER_DEFINE_ERROR

}  // namespace deltainfer
