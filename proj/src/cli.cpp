#include "crisisopt/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <vector>

#include "crisisopt/bounds.hpp"
#include "crisisopt/errors.hpp"
#include "crisisopt/hedging.hpp"
#include "crisisopt/rng.hpp"

namespace crisis::cli {
namespace {

struct Flags {
  double x = 100.0;
  double r = 0.05;
  double sigma = 0.2;
  double beta = 0.0;
  double T = 1.0;
  double K = 100.0;
  double t = 0.0;
  double spot = 0.0;
  std::string kind = "call";
  std::string mode = "corrected";
  std::string g = "exp";
  double A = 1.0;
  double B = 0.5;
  double alpha = 0.1;
  double omega = 2.0 * std::numbers::pi;
  std::size_t paths = 10000;
  std::size_t steps = 256;
  std::uint64_t seed = 0;
  std::string scheme = "exact";
  std::string method = "closed";
  std::size_t inner_paths = 1000;
  unsigned workers = 0;
  std::string out;
  std::string trajectory;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_simulation(const RunConfig& rc) {
  return rc.command == "paths" || rc.command == "hedgesim" ||
         ((rc.command == "price" || rc.command == "delta") && rc.method == "mc");
}

// Writes to the --out file when given, otherwise to `fallback`.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw DomainError("cannot open output file " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }
  bool to_file() const { return file_ != nullptr; }
  void close() {
    if (file_) {
      file_->close();
      if (!*file_) throw DomainError("failed writing output file");
    }
  }

private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

int cmd_price(const RunConfig& rc, std::ostream& out) {
  const double spot = rc.spot.value_or(rc.model.x);
  const SolutionMode mode = rc.sim.solution_mode;
  PriceQuote q;
  if (rc.method == "mc") {
    q = mc_price_at(rc.model, rc.g, rc.option, spot, rc.sim, mode);
  } else if (rc.option.t == 0.0 && !rc.spot) {
    q = rc.option.kind == OptionKind::Call ? call_premium(rc.model, rc.option, mode, rc.g)
                                           : put_premium(rc.model, rc.option, mode, rc.g);
  } else {
    q = price_at_t(rc.model, rc.option, spot, mode, rc.g);
  }

  out << "value=" << format_number(q.value) << " std_error=" << format_number(q.std_error)
      << " d1=" << format_number(q.d1) << " d2=" << format_number(q.d2)
      << " effective_strike=" << format_number(q.effective_strike) << " kind=" << to_string(q.kind)
      << " mode=" << to_string(q.mode) << " method=" << to_string(q.method) << '\n';
  if (!rc.output_path.empty()) {
    Sink sink(rc.output_path, out);
    write_config_echo(sink.get(), echo_config(rc));
    write_quotes_csv(sink.get(), std::span<const PriceQuote>(&q, 1));
    sink.close();
  }
  return 0;
}

int cmd_delta(const RunConfig& rc, std::ostream& out) {
  const double spot = rc.spot.value_or(rc.model.x);
  const SolutionMode mode = rc.sim.solution_mode;
  validate_option(rc.option, rc.model);
  MonteCarloEstimate d;
  if (rc.method == "mc")
    d = delta_mc(rc.model, rc.g, rc.option, spot, rc.option.t, rc.sim, mode);
  else
    d.estimate = delta_closed(rc.model, rc.option, spot, rc.option.t, mode, rc.g);

  out << "delta=" << format_number(d.estimate) << " std_error=" << format_number(d.std_error) << '\n';
  if (!rc.output_path.empty()) {
    Sink sink(rc.output_path, out);
    write_config_echo(sink.get(), echo_config(rc));
    sink.get() << "kind,mode,method,t,S,delta,std_error\n"
               << to_string(rc.option.kind) << ',' << to_string(mode) << ',' << rc.method << ','
               << format_number(rc.option.t) << ',' << format_number(spot) << ',' << format_number(d.estimate)
               << ',' << format_number(d.std_error) << '\n';
    sink.close();
  }
  return 0;
}

int cmd_paths(const RunConfig& rc, std::ostream& out) {
  const PathSet set = simulate_paths(rc.model, rc.g, rc.sim);
  Sink sink(rc.output_path, out);
  write_config_echo(sink.get(), echo_config(rc));
  write_paths_csv(sink.get(), set);
  sink.close();
  if (sink.to_file()) {
    std::size_t bankrupt = 0;
    double terminal = 0.0;
    for (std::size_t p = 0; p < set.n_paths(); ++p) {
      bankrupt += set.bankrupt_at[p].has_value();
      terminal += set.s(p, set.grid.n_steps());
    }
    out << "paths=" << set.n_paths() << " steps=" << set.grid.n_steps() << " bankrupt=" << bankrupt
        << " mean_terminal=" << format_number(terminal / static_cast<double>(set.n_paths())) << '\n';
  }
  return 0;
}

int cmd_bounds(const RunConfig& rc, std::ostream& out) {
  const PriceBand band = price_bounds(rc.model, rc.option.t);
  out << "t=" << format_number(rc.option.t) << " lower=" << format_number(band.lower)
      << " upper=" << format_number(band.upper) << '\n';
  if (!rc.output_path.empty()) {
    Sink sink(rc.output_path, out);
    write_config_echo(sink.get(), echo_config(rc));
    sink.get() << "t,lower,upper\n"
               << format_number(rc.option.t) << ',' << format_number(band.lower) << ','
               << format_number(band.upper) << '\n';
    sink.close();
  }
  return 0;
}

int cmd_betamax(const RunConfig& rc, std::ostream& out) {
  const double bound = beta_max(rc.model);
  out << "beta_max=" << format_number(bound) << '\n';
  if (!rc.output_path.empty()) {
    Sink sink(rc.output_path, out);
    write_config_echo(sink.get(), echo_config(rc));
    sink.get() << "x,sigma,T,beta_max\n"
               << format_number(rc.model.x) << ',' << format_number(rc.model.sigma) << ','
               << format_number(rc.model.T) << ',' << format_number(bound) << '\n';
    sink.close();
  }
  return 0;
}

int cmd_hedgesim(const RunConfig& rc, std::ostream& out) {
  const SolutionMode mode = rc.sim.solution_mode;
  const OptionSpec contract{rc.option.kind, rc.option.strike, 0.0};
  validate_option(contract, rc.model);

  ReplicationOptions options;
  if (rc.method == "mc") {
    options.delta = DeltaMethod::MonteCarlo;
    // Inner simulations run serially inside each outer worker, on a seed
    // distinct from the outer paths.
    options.inner = SimConfig{rc.inner_paths, rc.sim.grid, mix64(rc.sim.seed) + 1, Scheme::ExactSolution, mode, 1};
  }

  SimConfig outer = rc.sim;
  outer.scheme = Scheme::ExactSolution;
  const bool keep_trajectories = !rc.trajectory_path.empty();
  std::vector<double> errors(outer.n_paths);
  std::vector<std::optional<std::size_t>> bankrupt(outer.n_paths);
  std::vector<HedgePortfolio> portfolios;
  if (keep_trajectories) portfolios.resize(outer.n_paths, HedgePortfolio{outer.grid, {}, {}, {}, {}});

  for_each_path(rc.model, rc.g, outer, rc.model.x, [&](std::size_t p, const PathView& path) {
    ReplicationResult res = replicate(rc.model, rc.g, contract, outer.grid, path.s, mode, options);
    errors[p] = res.terminal_error;
    bankrupt[p] = res.bankrupt_at;
    if (keep_trajectories) portfolios[p] = std::move(res.portfolio);
  });

  const ErrorStats stats = hedging_error_stats(errors);
  Sink sink(rc.output_path, out);
  write_config_echo(sink.get(), echo_config(rc));
  write_hedge_report(sink.get(), errors, bankrupt, stats);
  sink.close();

  if (keep_trajectories) {
    Sink traj(rc.trajectory_path, out);
    write_config_echo(traj.get(), echo_config(rc));
    write_trajectory_header(traj.get());
    for (std::size_t p = 0; p < portfolios.size(); ++p) write_trajectory_rows(traj.get(), p, portfolios[p]);
    traj.close();
  }
  if (sink.to_file()) {
    out << "paths=" << stats.count << " mean=" << format_number(stats.mean) << " std=" << format_number(stats.std)
        << " mean_abs=" << format_number(stats.mean_abs) << " q01=" << format_number(stats.q01)
        << " q99=" << format_number(stats.q99) << '\n';
  }
  return 0;
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

ConfigEcho echo_config(const RunConfig& rc) {
  ConfigEcho e;
  e.emplace_back("command", rc.command);
  e.emplace_back("x", format_number(rc.model.x));
  e.emplace_back("r", format_number(rc.model.r));
  e.emplace_back("sigma", format_number(rc.model.sigma));
  e.emplace_back("beta", format_number(rc.model.beta));
  e.emplace_back("T", format_number(rc.model.T));
  e.emplace_back("K", format_number(rc.option.strike));
  e.emplace_back("t", format_number(rc.option.t));
  if (rc.spot) e.emplace_back("spot", format_number(*rc.spot));
  e.emplace_back("kind", std::string(to_string(rc.option.kind)));
  e.emplace_back("mode", std::string(to_string(rc.sim.solution_mode)));
  if (rc.g.is_exponential()) {
    e.emplace_back("g", "exp");
  } else {
    e.emplace_back("g", "osc");
    e.emplace_back("A", format_number(rc.g.A));
    e.emplace_back("B", format_number(rc.g.B));
    e.emplace_back("alpha", format_number(rc.g.alpha));
    e.emplace_back("omega", format_number(rc.g.omega));
  }
  e.emplace_back("method", rc.method);
  e.emplace_back("scheme", std::string(to_string(rc.sim.scheme)));
  e.emplace_back("paths", std::to_string(rc.sim.n_paths));
  e.emplace_back("steps", std::to_string(rc.sim.grid.n_steps()));
  if (rc.seed) e.emplace_back("seed", std::to_string(*rc.seed));
  if (rc.command == "hedgesim" && rc.method == "mc") e.emplace_back("inner_paths", std::to_string(rc.inner_paths));
  return e;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pricing and hedging of European options when a crisis term beta*g(t) inflates volatility:\n"
               "  dS = r S dt + (sigma S + beta g(t)) dW"};
  app.name("crisisopt");
  app.option_defaults()->always_capture_default();
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "Flat `key = value` file (# comments) supplying defaults; flags override");

  Flags f;
  app.add_option("--x", f.x, "Initial price level x");
  app.add_option("--r", f.r, "Risk-free rate per year");
  app.add_option("--sigma", f.sigma, "Base volatility per sqrt(year)");
  app.add_option("--beta", f.beta, "Crisis coupling beta");
  app.add_option("--T", f.T, "Maturity in years");
  app.add_option("--K", f.K, "Strike");
  app.add_option("--t", f.t, "Valuation time in years (bounds: evaluation time)");
  auto* spot_opt = app.add_option("--spot", f.spot, "Observed level S_t at --t (default: x)");
  app.add_option("--kind", f.kind, "Option kind")->check(CLI::IsMember({"call", "put"}));
  app.add_option("--mode", f.mode, "Closed-form solution variant")->check(CLI::IsMember({"paper", "corrected"}));
  app.add_option("--g", f.g, "Crisis coupling g(t): exp = e^{rt}, osc = A + B e^{alpha t} sin(omega t)")
      ->check(CLI::IsMember({"exp", "osc"}));
  app.add_option("--A", f.A, "osc level A");
  app.add_option("--B", f.B, "osc amplitude B");
  app.add_option("--alpha", f.alpha, "osc growth rate alpha per year");
  app.add_option("--omega", f.omega, "osc angular frequency omega (radians per year)");
  app.add_option("--paths", f.paths, "Number of simulated paths");
  app.add_option("--steps", f.steps, "Time steps on [0, T] (hedgesim: rebalances)");
  auto* seed_opt = app.add_option("--seed", f.seed, "RNG seed; required by simulation commands");
  app.add_option("--scheme", f.scheme, "Path scheme for `paths`")->check(CLI::IsMember({"exact", "euler"}));
  app.add_option("--method", f.method, "closed form or Monte Carlo (price, delta, hedgesim deltas)")
      ->check(CLI::IsMember({"closed", "mc"}));
  app.add_option("--inner-paths", f.inner_paths, "hedgesim with --method mc: paths per Monte Carlo delta");
  app.add_option("--workers", f.workers, "Worker threads, 0 = all cores; never changes results");
  app.add_option("--out", f.out, "CSV output file (paths/hedgesim default to stdout)");
  app.add_option("--trajectory", f.trajectory, "hedgesim: also dump path_id,t,S,eta,zeta,V here");

  app.add_subcommand("price", "Option value (closed form or Monte Carlo)");
  app.add_subcommand("delta", "Hedge ratio at (--t, --spot)");
  app.add_subcommand("paths", "Simulate xi_t and S_t paths to CSV");
  app.add_subcommand("bounds", "Three-sigma price band at --t (g = e^{rt})");
  app.add_subcommand("betamax", "Largest beta keeping S_t > 0 with ~99.7% probability");
  app.add_subcommand("hedgesim", "Discrete delta-hedging backtest over simulated paths");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return static_cast<int>(ExitCode::Ok);
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return static_cast<int>(ExitCode::Ok);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << one_line(e.what()) << '\n';
    return static_cast<int>(ExitCode::Usage);
  }

  RunConfig rc;
  rc.command = app.get_subcommands().front()->get_name();
  rc.method = f.method;
  if (seed_opt->count() > 0) rc.seed = f.seed;
  if (spot_opt->count() > 0) rc.spot = f.spot;
  if (is_simulation(rc) && !rc.seed) {
    err << "error: usage: --seed is required for " << rc.command
        << (rc.command == "price" || rc.command == "delta" ? " --method mc" : "") << '\n';
    return static_cast<int>(ExitCode::Usage);
  }

  try {
    rc.model = {f.x, f.r, f.sigma, f.beta, f.T};
    validate_params(rc.model);
    rc.g = f.g == "exp" ? GFunction::exponential() : GFunction::damped_oscillator(f.A, f.B, f.alpha, f.omega);
    rc.option = {f.kind == "call" ? OptionKind::Call : OptionKind::Put, f.K, f.t};
    rc.sim = SimConfig{f.paths, TimeGrid(0.0, f.T, f.steps), rc.seed.value_or(0),
                       f.scheme == "exact" ? Scheme::ExactSolution : Scheme::EulerMaruyama,
                       f.mode == "paper" ? SolutionMode::Paper : SolutionMode::Corrected, f.workers};
    validate_config(rc.sim);
    rc.inner_paths = f.inner_paths;
    rc.output_path = f.out;
    rc.trajectory_path = f.trajectory;

    if (rc.command == "price") return cmd_price(rc, out);
    if (rc.command == "delta") return cmd_delta(rc, out);
    if (rc.command == "paths") return cmd_paths(rc, out);
    if (rc.command == "bounds") return cmd_bounds(rc, out);
    if (rc.command == "betamax") return cmd_betamax(rc, out);
    return cmd_hedgesim(rc, out);
  } catch (const std::exception& e) {
    err << "error: domain: " << one_line(e.what()) << '\n';
    return static_cast<int>(ExitCode::Domain);
  }
}

}  // namespace crisis::cli
