#include "unruh/quadrature.hpp"

#include <cmath>
#include <vector>

namespace unruh::quad {

double averaged_limit(std::span<const double> partial_sums, double* spread) {
  std::vector<double> level(partial_sums.begin(), partial_sums.end());
  if (level.empty()) return 0.0;
  double last_spread = 0.0;
  while (level.size() > 1) {
    if (level.size() == 2) last_spread = std::abs(level[1] - level[0]);
    for (std::size_t i = 0; i + 1 < level.size(); ++i) level[i] = 0.5 * (level[i] + level[i + 1]);
    level.pop_back();
  }
  if (spread) *spread = last_spread;
  return level.front();
}

double richardson(double coarse, double fine, double ratio, int order) {
  const double factor = std::pow(ratio, order);
  return (factor * fine - coarse) / (factor - 1.0);
}

} // namespace unruh::quad
