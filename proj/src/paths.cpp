#include "crisisopt/paths.hpp"

#include <cmath>

#include "crisisopt/errors.hpp"
#include "crisisopt/parallel.hpp"
#include "crisisopt/rng.hpp"

namespace crisis {

std::string_view to_string(Scheme scheme) noexcept {
  return scheme == Scheme::ExactSolution ? "exact" : "euler";
}

void validate_config(const SimConfig& config) {
  if (config.n_paths == 0) throw DomainError("n_paths must be at least 1");
}

void draw_increments(std::uint64_t seed, std::size_t path_id, const TimeGrid& grid, std::span<double> dW) {
  if (dW.size() != grid.n_steps()) throw ConsistencyError("increment buffer does not match the grid");
  PathStream stream(seed, path_id);
  stream.brownian_increments(dW, grid.step());
}

void log_factor_from_increments(const ModelParams& params, const TimeGrid& grid, std::span<const double> dW,
                                std::span<double> log_xi) {
  if (dW.size() != grid.n_steps() || log_xi.size() != grid.n_nodes())
    throw ConsistencyError("factor buffers do not match the grid");
  const double drift = (params.r - 0.5 * params.sigma * params.sigma) * grid.step();
  log_xi[0] = 0.0;
  for (std::size_t k = 0; k < dW.size(); ++k) log_xi[k + 1] = log_xi[k] + drift + params.sigma * dW[k];
}

void exact_asset_path(const ModelParams& params, const GFunction& g, const TimeGrid& grid, double start_level,
                      SolutionMode mode, std::span<const double> log_xi, std::span<double> s) {
  const std::size_t n = grid.n_nodes();
  if (log_xi.size() != n || s.size() != n) throw ConsistencyError("path buffers do not match the grid");

  const double t0 = grid.t0();
  const bool corrected = mode == SolutionMode::Corrected;
  // Corrected mode follows absolute time; Paper mode treats the restart as a
  // fresh problem whose clock starts at zero.
  auto g_time = [&](std::size_t k) { return corrected ? grid[k] : grid[k] - t0; };
  const double coupling = params.beta / params.sigma;
  const double g_start = corrected ? g_eval(g, params, g_time(0)) : 0.0;
  const double half_h = 0.5 * grid.step();

  // carried = xi_u * Int_{t0}^{u} xi_s^{-1} (r g - g')(s) ds, advanced with
  // growth factors exp(log_xi[k+1] - log_xi[k]) so no large reciprocal is formed.
  double carried = 0.0;
  double gap_prev = g_drift_gap(g, params, g_time(0));
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      const double growth = std::exp(log_xi[k] - log_xi[k - 1]);
      const double gap = g_drift_gap(g, params, g_time(k));
      carried = growth * (carried + half_h * gap_prev) + half_h * gap;
      gap_prev = gap;
    }
    const double xi = std::exp(log_xi[k]);
    const double g_now = g_eval(g, params, g_time(k));
    s[k] = start_level * xi - coupling * (g_now - g_start * xi + carried);
  }
}

void euler_asset_path(const ModelParams& params, const GFunction& g, const TimeGrid& grid, double start_level,
                      std::span<const double> dW, std::span<double> s) {
  if (dW.size() != grid.n_steps() || s.size() != grid.n_nodes())
    throw ConsistencyError("path buffers do not match the grid");
  const double h = grid.step();
  s[0] = start_level;
  for (std::size_t k = 0; k < dW.size(); ++k) {
    const double level = s[k];
    const double diffusion = params.sigma * level + params.beta * g_eval(g, params, grid[k]);
    s[k + 1] = level + params.r * level * h + diffusion * dW[k];
  }
}

std::optional<std::size_t> first_nonpositive(std::span<const double> s) noexcept {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] <= 0.0) return k;
  return std::nullopt;
}

namespace {

struct Workspace {
  std::vector<double> dW;
  std::vector<double> log_xi;
  std::vector<double> xi;
  std::vector<double> s;

  explicit Workspace(const TimeGrid& grid)
      : dW(grid.n_steps()), log_xi(grid.n_nodes()), xi(grid.n_nodes()), s(grid.n_nodes()) {}
};

// One full path (factor and asset) into the workspace.
void generate_path(const ModelParams& params, const GFunction& g, const SimConfig& config, double start_level,
                   std::size_t path_id, Workspace& ws) {
  draw_increments(config.seed, path_id, config.grid, ws.dW);
  log_factor_from_increments(params, config.grid, ws.dW, ws.log_xi);
  for (std::size_t k = 0; k < ws.xi.size(); ++k) ws.xi[k] = std::exp(ws.log_xi[k]);
  if (config.scheme == Scheme::ExactSolution)
    exact_asset_path(params, g, config.grid, start_level, config.solution_mode, ws.log_xi, ws.s);
  else
    euler_asset_path(params, g, config.grid, start_level, ws.dW, ws.s);
}

void check_start(const ModelParams& params, const SimConfig& config) {
  validate_params(params);
  validate_config(config);
  if (config.grid.t0() < 0.0 || config.grid.t1() > params.T)
    throw DomainError("simulation grid must lie inside [0, T]");
}

}  // namespace

PathSet simulate_gbm_factor(const ModelParams& params, const SimConfig& config) {
  check_start(params, config);
  PathSet out{config.grid, PathMatrix(config.n_paths, config.grid.n_nodes()), {}, {}, config};
  out.provenance.scheme = Scheme::ExactSolution;
  parallel_for(config.n_paths, config.workers, [&](std::size_t p) {
    std::vector<double> dW(config.grid.n_steps());
    auto row = out.xi.row(p);
    draw_increments(config.seed, p, config.grid, dW);
    log_factor_from_increments(params, config.grid, dW, row);
    for (double& v : row) v = std::exp(v);
  });
  return out;
}

PathSet solve_asset_path_closed(const ModelParams& params, const GFunction& g, const PathSet& factor) {
  validate_params(params);
  const SimConfig& config = factor.provenance;
  if (config.scheme != Scheme::ExactSolution)
    throw ConsistencyError("closed-form solution requires an exact-scheme factor");
  if (!(factor.grid == config.grid) || factor.xi.rows() != config.n_paths ||
      factor.xi.cols() != factor.grid.n_nodes())
    throw ConsistencyError("factor matrix does not match its simulation grid");

  PathSet out = factor;
  out.s = PathMatrix(config.n_paths, factor.grid.n_nodes());
  out.bankrupt_at.assign(config.n_paths, std::nullopt);
  parallel_for(config.n_paths, config.workers, [&](std::size_t p) {
    const auto xi = factor.xi.row(p);
    std::vector<double> log_xi(xi.size());
    for (std::size_t k = 0; k < xi.size(); ++k) log_xi[k] = std::log(xi[k]);
    exact_asset_path(params, g, factor.grid, params.x, config.solution_mode, log_xi, out.s.row(p));
    out.bankrupt_at[p] = first_nonpositive(out.s.row(p));
  });
  return out;
}

PathSet simulate_asset_euler(const ModelParams& params, const GFunction& g, const SimConfig& config) {
  SimConfig euler = config;
  euler.scheme = Scheme::EulerMaruyama;
  return simulate_paths(params, g, euler);
}

PathSet simulate_paths(const ModelParams& params, const GFunction& g, const SimConfig& config) {
  check_start(params, config);
  const std::size_t n = config.n_paths;
  const std::size_t cols = config.grid.n_nodes();
  PathSet out{config.grid, PathMatrix(n, cols), PathMatrix(n, cols), std::vector<std::optional<std::size_t>>(n),
              config};
  parallel_for(n, config.workers, [&](std::size_t p) {
    Workspace ws(config.grid);
    generate_path(params, g, config, params.x, p, ws);
    std::copy(ws.xi.begin(), ws.xi.end(), out.xi.row(p).begin());
    std::copy(ws.s.begin(), ws.s.end(), out.s.row(p).begin());
    out.bankrupt_at[p] = first_nonpositive(ws.s);
  });
  return out;
}

void for_each_path(const ModelParams& params, const GFunction& g, const SimConfig& config, double start_level,
                   const std::function<void(std::size_t, const PathView&)>& visit) {
  check_start(params, config);
  const unsigned workers = resolve_workers(config.workers);
  // One workspace per contiguous block keeps allocations out of the path loop.
  const std::size_t blocks = std::min<std::size_t>(config.n_paths, static_cast<std::size_t>(workers) * 8);
  const std::size_t per_block = (config.n_paths + blocks - 1) / blocks;
  parallel_for(blocks, workers, [&](std::size_t b) {
    Workspace ws(config.grid);
    const std::size_t lo = b * per_block;
    const std::size_t hi = std::min(config.n_paths, lo + per_block);
    for (std::size_t p = lo; p < hi; ++p) {
      generate_path(params, g, config, start_level, p, ws);
      visit(p, PathView{ws.xi, ws.s, first_nonpositive(ws.s)});
    }
  });
}

}  // namespace crisis
