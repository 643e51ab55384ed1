#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "toric/torus_map.hpp"

namespace toric::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kError = 2 };

// Tolerance overrides from `--config` files and `--tolerances` strings, both
// in key=value form (lines or comma-separated). Recognized keys: unit_norm,
// agreement, symplectic, fd_step, margin, seed, workers.
struct Config {
  torus::Tolerances tolerances;
  double analytic_margin = 1e-9;
  std::optional<std::uint64_t> seed;
  unsigned workers = 0;  // 0: hardware concurrency

  void set(std::string_view key, std::string_view value);
  void merge_pairs(std::string_view text, char separator);
};

Config load_config_file(const std::string& path);

// Entry point shared by the executable and the tests. JSON goes to `out`,
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
