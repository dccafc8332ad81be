#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "icx/analysis/sequences.hpp"

namespace icx {

struct FitResult {
  double slope = 0;
  double intercept = 0;
  std::vector<double> x;
  std::vector<double> residuals;  // y − (slope·x + intercept)
  double x_min = 0;
  double x_max = 0;
};

/// Ordinary least squares y ≈ slope·x + intercept. Needs two distinct x
/// values (CapabilityError otherwise).
FitResult fit_line(std::span<const double> x, std::span<const double> y);

/// Fits log₃e(n) against n over the given (n, e(n)) points; at least ten.
FitResult fit_e_asymptote(std::span<const std::pair<unsigned, std::uint64_t>> points);

/// Same over the reliable e(n) with n ≥ min_n.
FitResult fit_e_asymptote(const SequenceSet& seq, unsigned min_n = 1);

}  // namespace icx
