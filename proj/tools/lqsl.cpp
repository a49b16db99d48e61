// Copyright 2026 The lindqsl Authors
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

// Command-line front end: qsl, fig1a, fig1b, scaling, verify, qfi, evolve.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lqsl/error.hpp"
#include "lqsl/experiments.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kConfigFailure = 1,
  kIntegrationFailure = 2,
  kPropertyViolation = 3,
};

struct Options {
  std::string config_path;
  std::string output_path;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::size_t workers = 1;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lqsl::ConfigError("cannot open output file '" + path + "'");
  out << text;
}

int run(const std::string& command, const Options& opts) {
  using namespace lqsl;
  const ExperimentConfig config = opts.config_path.empty()
                                      ? parse_experiment_config("")
                                      : load_experiment_config(opts.config_path);
  RunContext ctx;
  ctx.workers = opts.workers;
  ctx.seed = opts.seed;

  const std::string path = opts.output_path.empty() ? config.output.path : opts.output_path;
  const std::string format = opts.format.empty() ? config.output.format : opts.format;
  if (format != "csv" && format != "json") {
    throw ConfigError("--format must be csv or json");
  }

  std::string text;
  nlohmann::json extras;
  int status = kOk;
  if (command == "verify") {
    const VerifyConfig vc = verify_config_from(config, ctx);
    ctx.seed = vc.seed;
    const VerifyReport report = run_verification(vc);
    text = dump_json(to_json(report, vc));
    extras = {{"all_passed", report.all_passed()}};
    if (!report.all_passed()) status = kPropertyViolation;
  } else {
    static const std::map<std::string, std::function<Table(const ExperimentConfig&,
                                                           const RunContext&)>>
        commands = {{"qsl", cmd_qsl},         {"fig1a", cmd_fig1a}, {"fig1b", cmd_fig1b},
                    {"scaling", cmd_scaling}, {"qfi", cmd_qfi},     {"evolve", cmd_evolve}};
    const Table table = commands.at(command)(config, ctx);
    text = format == "json" ? to_json_text(table) : to_csv(table);
    extras = table.extras;
  }

  write_text(path, text);
  if (!path.empty() && path != "-") {
    write_text(path + ".meta.json", dump_json(make_metadata(command, config, ctx, extras)));
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum speed limits for Lindblad dynamics"};
  app.require_subcommand(1);
  Options opts;

  const std::map<std::string, std::string> descriptions = {
      {"qsl", "speed-limit quantities and bounds per sweep point"},
      {"fig1a", "t_qsl against dephasing rate for several drive frequencies"},
      {"fig1b", "exact, simulated and bounded times for spontaneous emission"},
      {"scaling", "t_qsl scaling of the product model with system size"},
      {"verify", "randomized falsification harness for all bounds (JSON)"},
      {"qfi", "Fisher-information estimate against its bound"},
      {"evolve", "raw trajectory dump"},
  };
  for (const auto& [name, description] : descriptions) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", opts.config_path, "config file")->check(CLI::ExistingFile);
    sub->add_option("--output", opts.output_path, "output path (default: stdout)");
    sub->add_option("--seed", opts.seed, "random seed (verify)");
    sub->add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--workers", opts.workers, "worker threads")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigFailure;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opts);
  } catch (const lqsl::IntegrationError& e) {
    std::cerr << "integration error: " << e.what() << "\n";
    return kIntegrationFailure;
  } catch (const lqsl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigFailure;
  }
}
