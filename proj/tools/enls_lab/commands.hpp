#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace enls::lab {

struct RunOptions {
  std::string command;
  std::filesystem::path config_path;  ///< empty: defaults and environment only
  std::filesystem::path out = "out";
  std::optional<std::uint64_t> seed;
  bool deterministic = false;
  bool dry_run = false;
};

const std::vector<std::string>& command_names();

/// Runs one subcommand. Returns 0 iff every embedded check passes. Unless dry_run is
/// set, manifest.json and summary.json are written to opts.out even on failure.
int run(const RunOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace enls::lab
