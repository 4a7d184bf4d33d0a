// Copyright 2026 The Authors.
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

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "pfim/error.hpp"
#include "pfim/harness.hpp"

namespace {

using Command = int (*)(const pfim::ExperimentConfig&, std::ostream&, std::ostream&);

struct Subcommand {
  const char* name;
  const char* help;
  Command run;
};

constexpr Subcommand kSubcommands[] = {
    {"sweep-alpha", "Evaluate a policy over a grid of alpha and budget values; writes CSV",
     pfim::cmd_sweep_alpha},
    {"evaluate", "Evaluate one (alpha, budget) cell; writes a CSV row and a transcript",
     pfim::cmd_evaluate},
    {"oracle-check", "Run exact-oracle and invariant checks on tiny graphs",
     pfim::cmd_oracle_check},
    {"bound", "Print closed-form approximation bounds", pfim::cmd_bound},
    {"gen-graph", "Generate a synthetic graph with trivalency probabilities",
     pfim::cmd_gen_graph},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-feedback influence maximization toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // Per subcommand: flag values as typed, applied on top of --config.
  std::map<std::string, std::map<std::string, std::string>> raw;
  std::map<std::string, std::string> config_paths;
  std::map<std::string, CLI::App*> apps;
  for (const Subcommand& sc : kSubcommands) {
    CLI::App* sub = app.add_subcommand(sc.name, sc.help);
    apps[sc.name] = sub;
    sub->add_option("--config", config_paths[sc.name], "Flat key = value config file");
    for (const std::string& key : pfim::config_keys()) {
      sub->add_option("--" + key, raw[sc.name][key]);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    std::fprintf(stderr, "error: bad-usage: %s\n", message.c_str());
    return 2;
  }

  for (const Subcommand& sc : kSubcommands) {
    CLI::App* sub = apps[sc.name];
    if (!sub->parsed()) continue;
    try {
      pfim::ExperimentConfig config;
      if (!config_paths[sc.name].empty()) {
        pfim::apply_config_text(config, pfim::read_file(config_paths[sc.name]));
      }
      for (const std::string& key : pfim::config_keys()) {
        if (sub->count("--" + key) > 0) pfim::set_config_value(config, key, raw[sc.name][key]);
      }
      return sc.run(config, std::cout, std::cerr);
    } catch (const pfim::Error& e) {
      std::fprintf(stderr, "error: %s: %s\n", e.code().c_str(), e.what());
      return 2;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error: internal: %s\n", e.what());
      return 3;
    }
  }
  return 0;
}
