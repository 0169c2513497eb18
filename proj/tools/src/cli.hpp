#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "expanderlab/bounds.hpp"
#include "expanderlab/spectral.hpp"

namespace expanderlab::cli {

/// Bad flags, bad values, unknown family syntax. Maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  /// graph, spectral, bounds, real, sweep, families
  std::string command;
  /// verify | t1 ... | energy ... ; empty when the command takes none
  std::string action;
  /// Empty means the suite's default list.
  std::vector<std::uint32_t> primes;
  std::vector<std::string> families;
  /// "id" or "random"
  std::string tables = "id";
  std::uint64_t seed = 42;
  std::optional<std::size_t> trials;
  std::size_t jobs = 1;
  /// Exponent for the real pp71 suite and integer k for t3; rational text.
  std::string k = "1";
  std::uint32_t u = 1, v = 1;
  std::uint64_t cap = 64;
  /// Curve parameters range over {1, ..., max_param}.
  std::uint32_t max_param = 6;
  SpectralOptions spectral;
  std::string csv_path, json_path, dump_path;
  /// Forces holds=false on every record with this theorem id.
  std::string inject_fault;
};

/// "7..31", "7,11,13", "5,7..13". Ranges keep only primes; single values
/// must be primes. UsageError otherwise.
std::vector<std::uint32_t> parse_primes(const std::string& text);

/// Splits work into independent cells and runs them on up to `jobs`
/// threads. Output order follows cell index, not completion order.
std::vector<BoundReport> run_cells(std::size_t cells, std::size_t jobs,
                                   const std::function<std::vector<BoundReport>(std::size_t)>& fn);

/// Runs the configured suite and returns sorted records. Throws UsageError
/// for invalid configurations.
std::vector<BoundReport> run_suite(const RunConfig& cfg);

/// Runs the suite, writes reports, and returns the exit status:
/// 0 all hard assertions hold, 1 some failed (records listed on err),
/// 2 invalid configuration.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (flags, config file, EXPANDERLAB_JOBS) and calls run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace expanderlab::cli
