#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace crisis {

/// Uniform partition t0 = nodes[0] < ... < nodes[n_steps] = t1.
class TimeGrid {
public:
  TimeGrid(double t0, double t1, std::size_t n_steps);

  double t0() const noexcept { return t0_; }
  double t1() const noexcept { return t1_; }
  std::size_t n_steps() const noexcept { return n_steps_; }
  std::size_t n_nodes() const noexcept { return n_steps_ + 1; }
  double step() const noexcept { return h_; }
  double operator[](std::size_t k) const noexcept { return nodes_[k]; }
  std::span<const double> nodes() const noexcept { return nodes_; }

  friend bool operator==(const TimeGrid& a, const TimeGrid& b) noexcept {
    return a.t0_ == b.t0_ && a.t1_ == b.t1_ && a.n_steps_ == b.n_steps_;
  }

private:
  double t0_;
  double t1_;
  std::size_t n_steps_;
  double h_;
  std::vector<double> nodes_;
};

}  // namespace crisis
