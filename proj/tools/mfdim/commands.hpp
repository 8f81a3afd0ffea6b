#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mfdim/error.hpp"
#include "mfdim/families.hpp"
#include "mfdim/mass_function.hpp"
#include "mfdim/multifractal.hpp"

namespace mfdim::cli {

enum class Command { Spectrum, Dimension, Sweep, Table, Family, Envelope };
enum class OutputFormat { Csv, Json, Svg };

inline constexpr std::size_t kDefaultEnvelopeSamples = 101;

struct RunConfig {
  Command command = Command::Spectrum;
  std::optional<std::filesystem::path> input_path;
  std::optional<mfdim::Family> family;
  std::optional<std::size_t> n;
  std::vector<double> alphas;
  std::string table_id;
  bool emit = false;
  std::size_t samples = kDefaultEnvelopeSamples;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::filesystem::path> output_path;
  double grouping_tolerance = kDefaultGroupingTolerance;
  double sum_tolerance = kDefaultSumTolerance;
};

/// 0 success, 2 input or parse error, 3 mathematical degeneracy,
/// 4 unknown command or table.
int exit_code_for(ErrorCode code) noexcept;

/// "a:b:s" -> a, a+s, ..., up to b inclusive.
std::vector<double> parse_alpha_range(const std::string& spec);

/// Relative paths are resolved against $MFDIM_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output_path(const std::filesystem::path& path);

/// Runs one command. Results go to cfg.output_path, or to out when unset;
/// diagnostics go to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs the command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mfdim::cli
