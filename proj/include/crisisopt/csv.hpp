#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crisisopt/hedging.hpp"
#include "crisisopt/paths.hpp"
#include "crisisopt/pricing.hpp"

namespace crisis {

/// Ordered key/value pairs written as `# key = value` comment lines ahead of
/// every CSV header, so a file records the configuration that produced it.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/// Decimal with 17 significant digits (round-trips any double); "nan"/"inf" otherwise.
std::string format_number(double value);

void write_config_echo(std::ostream& out, const ConfigEcho& echo);

/// `t,path_id,xi,s`, node-major: all paths at t_0, then all paths at t_1, ...
void write_paths_csv(std::ostream& out, const PathSet& paths);

/// `kind,mode,method,t,K,value,d1,d2,effective_strike,std_error`
void write_quotes_csv(std::ostream& out, std::span<const PriceQuote> quotes);

/// `path_id,terminal_error,bankrupt_at` (bankrupt_at = -1 when the path never
/// hit S <= 0), followed by a `# summary ...` comment line.
void write_hedge_report(std::ostream& out, std::span<const double> terminal_errors,
                        std::span<const std::optional<std::size_t>> bankrupt_at, const ErrorStats& stats);

void write_trajectory_header(std::ostream& out);

/// Rows of `path_id,t,S,eta,zeta,V` for one replicated path.
void write_trajectory_rows(std::ostream& out, std::size_t path_id, const HedgePortfolio& portfolio);

}  // namespace crisis
