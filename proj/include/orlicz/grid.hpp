#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace orlicz {

// n log-spaced points from lo to hi inclusive (lo, hi > 0). Endpoints are exact.
std::vector<double> geometric_grid(double lo, double hi, std::size_t n);

// n evenly spaced points from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, std::size_t n);

// Sorted union with duplicates removed.
std::vector<double> merge_sorted(std::vector<double> a, const std::vector<double>& b);

struct GridDescriptor {
  std::string spacing = "geometric";
  double lo = 0.0;
  double hi = 0.0;
  std::size_t points = 0;
};

}  // namespace orlicz
