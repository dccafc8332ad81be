#include "icx/analysis/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "icx/errors.hpp"

namespace icx {

FitResult fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ContractViolation("fit_line: x and y differ in length");
  if (x.size() < 2) throw CapabilityError("fit_line: need at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw CapabilityError("fit_line: all x values coincide");

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.x.assign(x.begin(), x.end());
  fit.residuals.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) fit.residuals.push_back(y[i] - (fit.slope * x[i] + fit.intercept));
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  fit.x_min = *lo;
  fit.x_max = *hi;
  return fit;
}

FitResult fit_e_asymptote(std::span<const std::pair<unsigned, std::uint64_t>> points) {
  if (points.size() < 10) {
    throw CapabilityError("asymptote fit needs at least 10 points, got " + std::to_string(points.size()));
  }
  std::vector<double> x;
  std::vector<double> y;
  const double ln3 = std::log(3.0);
  for (const auto& [n, e] : points) {
    x.push_back(n);
    y.push_back(std::log(static_cast<double>(e)) / ln3);
  }
  return fit_line(x, y);
}

FitResult fit_e_asymptote(const SequenceSet& seq, unsigned min_n) {
  std::vector<std::pair<unsigned, std::uint64_t>> points;
  for (const auto& [n, entry] : seq.e) {
    if (entry.reliable && n >= min_n) points.emplace_back(n, entry.value);
  }
  return fit_e_asymptote(points);
}

}  // namespace icx
