#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "crisisopt/csv.hpp"
#include "crisisopt/gfunction.hpp"
#include "crisisopt/model.hpp"
#include "crisisopt/paths.hpp"
#include "crisisopt/pricing.hpp"

namespace crisis::cli {

enum class ExitCode : int { Ok = 0, Domain = 1, Usage = 2 };

/// Everything a command needs after flags and the config file are merged.
struct RunConfig {
  std::string command;
  ModelParams model;
  GFunction g;
  OptionSpec option;
  SimConfig sim{1, TimeGrid(0.0, 1.0, 1)};
  std::optional<std::uint64_t> seed;
  std::string method = "closed";
  std::optional<double> spot;  // observed level at option.t; defaults to x
  std::size_t inner_paths = 1000;
  std::string output_path;
  std::string trajectory_path;
};

/// The echo written ahead of every CSV. Execution-only settings (worker
/// count, file names) are left out so outputs compare byte for byte.
ConfigEcho echo_config(const RunConfig& config);

/// Parses argv, runs the selected command and returns the process exit code.
/// Results go to `out`; a one-line `error: <kind>: <reason>` goes to `err` on
/// failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crisis::cli
