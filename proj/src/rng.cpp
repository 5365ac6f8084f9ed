#include "crisisopt/rng.hpp"

#include <cmath>

namespace crisis {

void PathStream::brownian_increments(std::span<double> out, double variance) {
  const double scale = std::sqrt(variance);
  for (double& v : out) v = scale * normal_(engine_);
}

}  // namespace crisis
