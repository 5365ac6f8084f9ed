#include "crisisopt/csv.hpp"

#include <cmath>
#include <cstdio>

namespace crisis {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_config_echo(std::ostream& out, const ConfigEcho& echo) {
  for (const auto& [key, value] : echo) out << "# " << key << " = " << value << '\n';
}

void write_paths_csv(std::ostream& out, const PathSet& paths) {
  out << "t,path_id,xi,s\n";
  const bool has_s = !paths.s.empty();
  for (std::size_t k = 0; k < paths.grid.n_nodes(); ++k) {
    const std::string t = format_number(paths.grid[k]);
    for (std::size_t p = 0; p < paths.n_paths(); ++p) {
      out << t << ',' << p << ',' << format_number(paths.xi(p, k)) << ','
          << (has_s ? format_number(paths.s(p, k)) : std::string("nan")) << '\n';
    }
  }
}

void write_quotes_csv(std::ostream& out, std::span<const PriceQuote> quotes) {
  out << "kind,mode,method,t,K,value,d1,d2,effective_strike,std_error\n";
  for (const auto& q : quotes) {
    out << to_string(q.kind) << ',' << to_string(q.mode) << ',' << to_string(q.method) << ','
        << format_number(q.t) << ',' << format_number(q.strike) << ',' << format_number(q.value) << ','
        << format_number(q.d1) << ',' << format_number(q.d2) << ',' << format_number(q.effective_strike) << ','
        << format_number(q.std_error) << '\n';
  }
}

void write_hedge_report(std::ostream& out, std::span<const double> terminal_errors,
                        std::span<const std::optional<std::size_t>> bankrupt_at, const ErrorStats& stats) {
  out << "path_id,terminal_error,bankrupt_at\n";
  std::size_t bankrupt = 0;
  for (std::size_t p = 0; p < terminal_errors.size(); ++p) {
    out << p << ',' << format_number(terminal_errors[p]) << ',';
    if (bankrupt_at[p]) {
      out << *bankrupt_at[p];
      ++bankrupt;
    } else {
      out << -1;
    }
    out << '\n';
  }
  out << "# summary count=" << stats.count << " mean=" << format_number(stats.mean)
      << " std=" << format_number(stats.std) << " mean_abs=" << format_number(stats.mean_abs)
      << " q01=" << format_number(stats.q01) << " q99=" << format_number(stats.q99) << " bankrupt=" << bankrupt
      << '\n';
}

void write_trajectory_header(std::ostream& out) { out << "path_id,t,S,eta,zeta,V\n"; }

void write_trajectory_rows(std::ostream& out, std::size_t path_id, const HedgePortfolio& pf) {
  for (std::size_t k = 0; k < pf.value.size(); ++k) {
    out << path_id << ',' << format_number(pf.rebalance_times[k]) << ',' << format_number(pf.spot[k]) << ','
        << format_number(pf.eta[k]) << ',' << format_number(pf.zeta[k]) << ',' << format_number(pf.value[k])
        << '\n';
  }
}

}  // namespace crisis
