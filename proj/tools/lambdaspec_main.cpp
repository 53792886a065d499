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


// lambdaspec command-line driver.
//
//   lambdaspec summary  --config presets/fig2a.json --out out/
//   lambdaspec spectrum --config presets/fig2a.json --out out/ --no-metadata
//
// Exit codes: 0 ok, 2 config, 3 I/O, 4 heating regime, 5 numerical.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lambdaspec/io/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Resonance fluorescence spectrum of a trapped Lambda atom"};
  app.set_version_flag("--version", LAMBDASPEC_VERSION);
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir = ".";
  bool no_metadata = false;

  for (const char* name : {"summary", "spectrum", "oracle", "compare", "selftest"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_dir, "output directory (created if missing)");
    sub->add_flag("--no-metadata", no_metadata, "omit the metadata block from JSON outputs");
  }
  app.get_subcommand("summary")->description("phonon coefficients and internal eigenvalues as JSON");
  app.get_subcommand("spectrum")->description("perturbative spectrum CSV, summary and gnuplot script");
  app.get_subcommand("oracle")->description("brute-force master-equation spectrum CSV");
  app.get_subcommand("compare")->description("perturbative versus oracle report");
  app.get_subcommand("selftest")->description("internal consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(lambdaspec::ExitCode::Config);
  }

  lambdaspec::RunOptions options;
  options.out_dir = out_dir;
  options.metadata = !no_metadata;
  return lambdaspec::run_command_file(app.get_subcommands().front()->get_name(), config_path, options);
}
