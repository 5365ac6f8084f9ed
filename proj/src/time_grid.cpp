#include "crisisopt/time_grid.hpp"

#include <cmath>

#include "crisisopt/errors.hpp"

namespace crisis {

TimeGrid::TimeGrid(double t0, double t1, std::size_t n_steps) : t0_(t0), t1_(t1), n_steps_(n_steps) {
  if (n_steps == 0) throw DomainError("time grid needs at least one step");
  if (!(std::isfinite(t0) && std::isfinite(t1) && t1 > t0))
    throw DomainError("time grid needs finite t0 < t1");
  h_ = (t1 - t0) / static_cast<double>(n_steps);
  nodes_.resize(n_steps + 1);
  for (std::size_t k = 0; k < n_steps; ++k) nodes_[k] = t0 + static_cast<double>(k) * h_;
  nodes_[n_steps] = t1;
}

}  // namespace crisis
