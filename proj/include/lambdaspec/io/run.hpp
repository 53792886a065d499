// Copyright 2026 The lambdaspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lambdaspec/io/config.hpp"
#include "lambdaspec/oracle/oracle.hpp"
#include "lambdaspec/spectrum/analysis.hpp"

namespace lambdaspec {

enum class ExitCode : int {
  Ok = 0,
  Config = 2,
  Io = 3,
  Heating = 4,
  Numerical = 5,
};

struct RunOptions {
  std::filesystem::path out_dir = ".";
  bool metadata = true;
  std::ostream* out = nullptr;  ///< progress and selftest lines; std::cout if null
  std::ostream* err = nullptr;  ///< diagnostics; std::cerr if null
};

/// Runs one of summary, spectrum, oracle, compare, selftest and maps
/// exceptions to exit codes. Never throws.
int run_command(std::string_view command, const RunConfig& config, const RunOptions& options);

/// Loads the config and calls run_command; config and I/O failures map to
/// their exit codes as well.
int run_command_file(std::string_view command, const std::filesystem::path& config_path,
                     const RunOptions& options);

/// Params with n_max resolved: explicit, or max(15, ceil(8 <n>)).
ModelParams resolved_params(const RunConfig& config);

/// Config grid, plus the sideband windows when enabled.
std::vector<double> spectrum_grid(const RunConfig& config, const Analysis& analysis);

/// Window of `points` frequencies centred on c with half-span `span`.
std::vector<double> window_grid(double c, double span, int points);

// Formatting. All numbers use %.17g and every line ends in a single LF.
std::string format_number(double value);
std::string summary_json(const Analysis& analysis, std::string_view metadata_json);
std::string spectrum_csv(const SpectrumResult& spectrum);
std::string oracle_csv(const OracleSpectrum& spectrum);
std::string plot_script(const Analysis& analysis, const GridConfig& grid, std::string_view csv_name,
                        std::string_view image_name);

/// Perturbative versus oracle comparison, as written to compare.json.
struct SidebandComparison {
  double center_expected = 0.0;
  PeakFit oracle;
  double perturbative_peak = 0.0;
  double height_deviation = 0.0;  ///< |oracle - perturbative| / perturbative
};

struct Comparison {
  double n_bar = 0.0;
  double oracle_n_bar = 0.0;
  double elastic_weight = 0.0;
  double oracle_elastic_weight = 0.0;
  SidebandComparison stokes;       ///< line at -(1 + nu_bar)
  SidebandComparison anti_stokes;  ///< line at +(1 + nu_bar)
  double half_width_expected = 0.0;
  double background_deviation = 0.0;  ///< max |dS| / max S away from the 1- and 2-phonon lines
  double cutoff_population = 0.0;
  int failed_points = 0;
  std::vector<std::string> warnings;
  std::string oracle_error;  ///< set when the oracle could not run; other oracle fields are then NaN
};

/// Oracle failures (NumericalFailure) are recorded in oracle_error rather
/// than thrown, so the perturbative part and any reference value still get
/// reported.
Comparison compare_with_oracle(const RunConfig& config, const Analysis& analysis);
std::string compare_json(const RunConfig& config, const Analysis& analysis, const Comparison& cmp,
                         std::string_view metadata_json);

/// Internal consistency checks; returns one line per check.
struct SelftestLine {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool skipped = false;  ///< not applicable to this config; counts as passed
};
std::vector<SelftestLine> selftest(const RunConfig& config, const Analysis& analysis);

/// {"tool", "version", "kernel_backend", "created_utc"} as a JSON object.
std::string metadata_block();

}  // namespace lambdaspec
