#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "crisisopt/gfunction.hpp"
#include "crisisopt/model.hpp"
#include "crisisopt/time_grid.hpp"

namespace crisis {

enum class Scheme { ExactSolution, EulerMaruyama };

std::string_view to_string(Scheme scheme) noexcept;

struct SimConfig {
  std::size_t n_paths;
  TimeGrid grid;
  std::uint64_t seed = 0;
  Scheme scheme = Scheme::ExactSolution;
  /// Only consulted by the exact scheme; Euler discretizes the SDE itself.
  SolutionMode solution_mode = SolutionMode::Corrected;
  /// Threads used for path generation; 0 = hardware concurrency. Never
  /// changes results.
  unsigned workers = 0;
};

/// Throws DomainError if n_paths is zero.
void validate_config(const SimConfig& config);

/// Row-major n_rows x n_cols matrix of doubles; one row per path.
class PathMatrix {
public:
  PathMatrix() = default;
  PathMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  friend bool operator==(const PathMatrix&, const PathMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Simulated trajectories on `grid`. `xi` is the geometric Brownian factor
/// relative to the grid start (xi[.][0] == 1); `s` is the asset level. Either
/// matrix may be empty depending on which operation produced the set.
struct PathSet {
  TimeGrid grid;
  PathMatrix xi;
  PathMatrix s;
  /// First node with S <= 0 per path (the issuer is treated as bankrupt from
  /// there on). Paths are never truncated; consumers decide what to do.
  std::vector<std::optional<std::size_t>> bankrupt_at;
  SimConfig provenance;

  std::size_t n_paths() const noexcept { return provenance.n_paths; }
};

// ---------------------------------------------------------------------------
// Per-path kernels. Every higher-level routine below is built from these.
// ---------------------------------------------------------------------------

/// Brownian increments of path `path_id` on `grid`: dW.size() == grid.n_steps().
/// Depends only on (seed, path_id, grid).
void draw_increments(std::uint64_t seed, std::size_t path_id, const TimeGrid& grid, std::span<double> dW);

/// log xi at every node from Brownian increments: cumulative sum of
/// (r - sigma^2/2) h + sigma dW, starting at 0.
void log_factor_from_increments(const ModelParams& params, const TimeGrid& grid, std::span<const double> dW,
                                std::span<double> log_xi);

/// Closed-form solution restarted at (grid.t0(), start_level).
///
/// Corrected:  S_u = s0 xi_u - (beta/sigma) (g(u) - g(t0) xi_u + xi_u Int_{t0}^u xi_s^{-1} (r g - g')(s) ds)
///             with g at absolute time, so S_{t0} = s0.
/// Paper:      S_u = s0 xi_u - (beta/sigma) (g(e) + xi_u Int_0^e xi_s^{-1} (r g - g')(s) ds), e = u - t0,
///             the Paper-mode formula applied to a fresh problem of horizon T - t0.
///
/// The integral uses the trapezoidal rule on the grid; xi_u xi_s^{-1} is formed
/// from differences of log xi.
void exact_asset_path(const ModelParams& params, const GFunction& g, const TimeGrid& grid, double start_level,
                      SolutionMode mode, std::span<const double> log_xi, std::span<double> s);

/// Euler-Maruyama: S_{k+1} = S_k + r S_k h + (sigma S_k + beta g(t_k)) dW_k, S_0 = start_level.
void euler_asset_path(const ModelParams& params, const GFunction& g, const TimeGrid& grid, double start_level,
                      std::span<const double> dW, std::span<double> s);

/// First index with s[k] <= 0, if any.
std::optional<std::size_t> first_nonpositive(std::span<const double> s) noexcept;

// ---------------------------------------------------------------------------
// Whole path sets.
// ---------------------------------------------------------------------------

/// Fills only `xi`. Exact in distribution (no discretization error in xi).
PathSet simulate_gbm_factor(const ModelParams& params, const SimConfig& config);

/// Fills `s` from an existing factor set using the closed-form solution in the
/// factor's provenance mode. Throws ConsistencyError if the factor is missing or
/// was not produced on its own grid by the exact scheme.
PathSet solve_asset_path_closed(const ModelParams& params, const GFunction& g, const PathSet& factor);

/// Fills `xi` and `s` by Euler-Maruyama. With the same seed and grid as an
/// exact run, both share Brownian increments path by path.
PathSet simulate_asset_euler(const ModelParams& params, const GFunction& g, const SimConfig& config);

/// Dispatches on config.scheme.
PathSet simulate_paths(const ModelParams& params, const GFunction& g, const SimConfig& config);

struct PathView {
  std::span<const double> xi;
  std::span<const double> s;
  std::optional<std::size_t> bankrupt_at;
};

/// Streams paths without materializing a PathSet. The simulation starts at
/// (config.grid.t0(), start_level). `visit(path_id, view)` is called from
/// worker threads; it must only touch state owned by `path_id`.
void for_each_path(const ModelParams& params, const GFunction& g, const SimConfig& config, double start_level,
                   const std::function<void(std::size_t, const PathView&)>& visit);

}  // namespace crisis
