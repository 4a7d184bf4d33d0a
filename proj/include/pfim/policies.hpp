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

#ifndef PFIM_POLICIES_HPP_
#define PFIM_POLICIES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfim/cost.hpp"
#include "pfim/diffusion.hpp"
#include "pfim/estimation.hpp"
#include "pfim/graph.hpp"

namespace pfim {

// One iteration of the decision loop: either a selection or a one-slot wait.
struct RoundLog {
  std::size_t round = 0;
  Slot slot = 0;
  bool selected = false;
  NodeId node = 0;
  double gain = 0.0;
  Cost remaining_budget;
  // f(S; psi) / |V \ O|; empty before the first seed exists.
  std::optional<double> condition;
  std::size_t zero_set_size = 0;
  // Selected although the gate failed, because nothing more could be observed.
  bool forced = false;
};

enum class StopReason {
  kBudgetExhausted,  // no unselected node is affordable
  kUnaffordable,     // ratio-argmax exceeded the remaining budget (break)
  kNoCandidates,     // every node is a seed
  kSingleNode,       // enhanced policy took the single-node arm
};

enum class EnhancedArm { kSingleNode, kGreedy };

struct PolicyRun {
  SeedSchedule schedule;
  std::vector<RoundLog> rounds;
  std::size_t realized_cascade = 0;
  Cost total_cost;
  Slot slots_elapsed = 0;
  StopReason stop = StopReason::kBudgetExhausted;
  std::optional<EnhancedArm> arm;
};

// Condition (1): f / |V \ O| >= alpha; alpha = 0 always passes.
bool condition_satisfied(const ActivationEstimate& est, double alpha);

PolicyRun run_alpha_greedy_uniform(const DirectedGraph& graph, double alpha,
                                   std::size_t budget, const FullRealization& world,
                                   Estimator estimator, std::uint64_t seed);

PolicyRun run_alpha_greedy_nonuniform(const DirectedGraph& graph, double alpha, Cost budget,
                                      const FullRealization& world, Estimator estimator,
                                      std::uint64_t seed);

struct SingleNode {
  NodeId node = 0;
  double spread = 0.0;
};

// argmax_v I({v}) with an empty observation; ties go to the smallest id.
SingleNode best_single_node(const DirectedGraph& graph, Estimator& estimator);

// Fair coin between {v*} at slot 0 and the non-uniform greedy run.
PolicyRun run_enhanced(const DirectedGraph& graph, double alpha, Cost budget,
                       const FullRealization& world, Estimator estimator,
                       std::uint64_t seed);

// Which arm run_enhanced takes for this seed.
EnhancedArm enhanced_arm(std::uint64_t seed);

enum class PolicyKind { kUniform, kNonUniform, kEnhanced };

std::string to_string(PolicyKind kind);
PolicyKind parse_policy_kind(std::string_view text);

struct PolicyConfig {
  PolicyKind kind = PolicyKind::kUniform;
  double alpha = 0.0;
  Cost budget = Cost::units(1);
  Estimator estimator = Estimator::exact();
};

PolicyRun run_policy(const DirectedGraph& graph, const PolicyConfig& config,
                     const FullRealization& world, std::uint64_t seed);

// "r=<k> slot=<t> action=<select:v,gain,budget|wait> cond=<x> |O|=<m>" per round.
std::string format_transcript(const PolicyRun& run);

}  // namespace pfim

#endif  // PFIM_POLICIES_HPP_
