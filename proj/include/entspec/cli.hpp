#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "entspec/table_writer.hpp"

namespace entspec {

enum class Command { Spectrum, Entropy, Verify, Asymptotics, Sweep, Oracle };
enum class OutputFormat { Csv, Json };

struct RunConfig {
  Command command = Command::Spectrum;
  double gamma = 1.0;
  double h = 3.0;
  std::vector<double> alpha{2.0};
  std::size_t n_max = 20;
  std::size_t block_size = 64;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> output_path;
  int precision = 12;

  std::string representation = "qseries";  // entropy: theta|lambda|qseries|spectrum|all
  bool with_oracle = false;                 // verify
  std::string mode = "degeneracy";          // asymptotics: degeneracy|singularity|angular
  bool cauchy = false;                      // asymptotics degeneracy: add contour values
  std::vector<double> z_values{0.5, 0.9, 0.99, 0.999};
  std::size_t samples = 256;
  std::string source = "free-fermion";  // oracle: free-fermion|ring|ed
  std::size_t chain_size = 12;
  std::size_t levels = 50;  // oracle: top eigenvalues listed / compared
  bool compare = false;

  double gamma_min = 0.15, gamma_max = 1.5;
  std::size_t gamma_steps = 10;
  double h_min = 0.2, h_max = 3.8;
  std::size_t h_steps = 10;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitUsage = 3;

/// Executes one command and writes its table to `out` (or the output path).
/// Errors go to `err` as a single line "error: <kind>: <reason>".
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Worker count for sweeps: ENTSPEC_THREADS if set and positive, else hardware.
unsigned worker_threads();

/// Builds the table for a config without writing it (used by the bindings).
Table build_table(const RunConfig& config, bool& verification_passed);

}  // namespace entspec
