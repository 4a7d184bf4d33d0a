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

#ifndef PFIM_HARNESS_HPP_
#define PFIM_HARNESS_HPP_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pfim/cost.hpp"
#include "pfim/estimation.hpp"
#include "pfim/graph.hpp"
#include "pfim/policies.hpp"

namespace pfim {

// Every field has a key of the same name (dashes in place of underscores)
// usable both in a config file and as a command-line flag.
struct ExperimentConfig {
  // Graph source: an edge-list file, or the generator when empty.
  std::string graph;
  std::string costs;
  std::size_t nodes = 200;
  std::size_t edges = 800;
  std::string model = "erdos-renyi";
  // unit | file | random
  std::string cost_mode = "unit";
  Cost cost_lo = Cost::units(1);
  Cost cost_hi = Cost::units(3);
  // Trivalency level; 0 keeps the probabilities of a loaded graph and
  // means level 1 for generated ones.
  int i = 0;
  double prob_base = 0.01;

  std::vector<double> alpha = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  std::vector<Cost> budget = {Cost::units(10)};
  std::string policy = "enhanced";
  // exact | mc
  std::string estimator = "mc";
  std::uint64_t samples = 200;
  double epsilon = 0.0;
  std::string eps_mode = "random";
  std::size_t realizations = 100;
  std::uint64_t seed = 1;
  std::string out;
  // sampled | exact
  std::string eval = "sampled";
  std::string transcript;

  // bound subcommand
  std::string variant = "uniform";
  double n = 1.0;
  double c_max = 1.0;
  double c_min = 1.0;
  double f_star = 1.0;

  // oracle-check
  std::size_t instances = 20;
};

// Sets one field from text. Unknown keys and bad values throw
// Error("bad-config", "field '<key>': ...").
void set_config_value(ExperimentConfig& config, std::string_view key, std::string_view value);

// Flat "key = value" lines; '#' starts a comment.
void apply_config_text(ExperimentConfig& config, std::string_view text);

std::vector<std::string> config_keys();

// Range checks that do not depend on the subcommand.
void validate_config(const ExperimentConfig& config);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// Loads or generates the graph, then applies probabilities and costs.
DirectedGraph build_graph(const ExperimentConfig& config);

Estimator build_estimator(const ExperimentConfig& config);

inline constexpr std::string_view kCsvHeader =
    "alpha,budget,i,policy,estimator,realizations,mean_spread,stderr,mean_slots,mean_seeds,"
    "rng_seed";

// Each command writes its primary output to `out` (or config.out when set)
// and human-facing notes to `log`. The return value is the exit status.
int cmd_sweep_alpha(const ExperimentConfig& config, std::ostream& out, std::ostream& log);
int cmd_evaluate(const ExperimentConfig& config, std::ostream& out, std::ostream& log);
int cmd_oracle_check(const ExperimentConfig& config, std::ostream& out, std::ostream& log);
int cmd_bound(const ExperimentConfig& config, std::ostream& out, std::ostream& log);
int cmd_gen_graph(const ExperimentConfig& config, std::ostream& out, std::ostream& log);

}  // namespace pfim

#endif  // PFIM_HARNESS_HPP_
