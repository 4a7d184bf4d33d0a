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

#include "pfim/policies.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pfim/error.hpp"
#include "pfim/random.hpp"

namespace pfim {
namespace {

// Gains closer than this (relative) count as ties; the smaller id wins.
constexpr double kTieTolerance = 1e-12;

bool beats(double value, double best) {
  return value > best + kTieTolerance * std::max(1.0, std::abs(best));
}

struct Pick {
  bool found = false;
  NodeId node = 0;
  double gain = 0.0;
};

// Candidates are scanned in ascending id order, so strict improvement keeps
// the smallest id on ties.
Pick argmax(const DirectedGraph& graph, const GainTable& table, bool ratio_rule,
            std::optional<Cost> affordable_within) {
  Pick best;
  double best_score = 0.0;
  for (std::size_t i = 0; i < table.candidates.size(); ++i) {
    const NodeId v = table.candidates[i];
    if (affordable_within && graph.cost(v) > *affordable_within) continue;
    const double score =
        ratio_rule ? table.gains[i] / graph.cost(v).to_double() : table.gains[i];
    if (!best.found || beats(score, best_score)) {
      best = {true, v, table.gains[i]};
      best_score = score;
    }
  }
  return best;
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error("bad-alpha", "alpha must lie in [0, 1]");
}

std::string format_g(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

PolicyRun greedy_loop(const DirectedGraph& graph, double alpha, Cost budget,
                      const FullRealization& world, Estimator estimator,
                      std::uint64_t seed) {
  check_alpha(alpha);
  if (world.edge_count() != graph.edge_count()) {
    throw Error("bad-realization", "realization does not match graph");
  }
  const std::size_t n = graph.node_count();
  // Live paths have at most n - 1 hops, so n slots after the last
  // activation nothing more can be observed.
  const std::size_t wait_limit = n;
  estimator = estimator.with_stream(hash_combine(seed, 0x5EEDULL));

  PolicyRun run;
  PartialRealization partial(graph.edge_count());
  Slot slot = 0;
  Cost remaining = budget;
  std::size_t round = 0;
  std::vector<NodeId> seeds;
  std::vector<std::uint8_t> chosen(n, 0);

  auto select = [&](const Pick& pick, std::optional<double> condition,
                    std::size_t zero_size, bool forced) {
    run.schedule.add(pick.node, slot);
    seeds.push_back(pick.node);
    chosen[pick.node] = 1;
    remaining -= graph.cost(pick.node);
    run.total_cost += graph.cost(pick.node);
    run.rounds.push_back(
        {round, slot, true, pick.node, pick.gain, remaining, condition, zero_size, forced});
  };
  auto unselected = [&] {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < n; ++v) {
      if (!chosen[v]) out.push_back(v);
    }
    return out;
  };

  // The first seed is chosen unconditionally: with S empty, O = V and the
  // gate is undefined.
  {
    auto candidates = unselected();
    GainTable table = estimator.gains(graph, seeds, partial, candidates);
    Pick pick = argmax(graph, table, true, remaining);
    if (!pick.found) throw Error("unaffordable", "no node fits within the budget");
    select(pick, std::nullopt, n, false);
  }

  while (true) {
    auto candidates = unselected();
    if (candidates.empty()) {
      run.stop = StopReason::kNoCandidates;
      break;
    }
    if (std::none_of(candidates.begin(), candidates.end(),
                     [&](NodeId v) { return graph.cost(v) <= remaining; })) {
      run.stop = StopReason::kBudgetExhausted;
      break;
    }
    ++round;
    ActivationEstimate current = estimator.estimate(graph, seeds, partial);
    if (current.support_size() == 0) {
      throw Error("internal", "seeded state with empty support");
    }
    const double condition = current.f / static_cast<double>(current.support_size());
    const bool holds = condition_satisfied(current, alpha);
    const bool settled = slot >= run.schedule.last_slot() + wait_limit;
    if (holds || settled) {
      GainTable table = estimator.gains(graph, seeds, partial, candidates);
      Pick pick = argmax(graph, table, true, std::nullopt);
      if (remaining - graph.cost(pick.node) < Cost{}) {
        run.stop = StopReason::kUnaffordable;
        break;
      }
      select(pick, condition, current.zero_count, !holds);
    } else {
      RoundLog wait;
      wait.round = round;
      wait.slot = slot;
      wait.remaining_budget = remaining;
      wait.condition = condition;
      wait.zero_set_size = current.zero_count;
      run.rounds.push_back(wait);
      ++slot;
      partial = observe(graph, world, run.schedule, slot);
    }
  }
  run.slots_elapsed = slot;
  run.realized_cascade = cascade_size(graph, world, seeds);
  return run;
}

}  // namespace

bool condition_satisfied(const ActivationEstimate& est, double alpha) {
  if (alpha <= 0.0) return true;
  const std::size_t support = est.support_size();
  if (support == 0) return false;
  return est.f / static_cast<double>(support) >= alpha;
}

PolicyRun run_alpha_greedy_uniform(const DirectedGraph& graph, double alpha,
                                   std::size_t budget, const FullRealization& world,
                                   Estimator estimator, std::uint64_t seed) {
  if (budget < 1) throw Error("bad-budget", "budget must be at least 1");
  if (!graph.has_unit_costs()) {
    throw Error("non-unit-costs", "uniform policy requires every node cost to be 1");
  }
  return greedy_loop(graph, alpha, Cost::units(static_cast<std::int64_t>(budget)), world,
                     std::move(estimator), seed);
}

PolicyRun run_alpha_greedy_nonuniform(const DirectedGraph& graph, double alpha, Cost budget,
                                      const FullRealization& world, Estimator estimator,
                                      std::uint64_t seed) {
  return greedy_loop(graph, alpha, budget, world, std::move(estimator), seed);
}

SingleNode best_single_node(const DirectedGraph& graph, Estimator& estimator) {
  if (graph.node_count() == 0) throw Error("bad-graph", "empty graph");
  std::vector<NodeId> all(graph.node_count());
  for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
  PartialRealization nothing(graph.edge_count());
  GainTable table = estimator.gains(graph, {}, nothing, all);
  Pick pick = argmax(graph, table, false, std::nullopt);
  return {pick.node, pick.gain};
}

EnhancedArm enhanced_arm(std::uint64_t seed) {
  return (hash_combine(seed, 0xC01FULL) & 1) ? EnhancedArm::kGreedy : EnhancedArm::kSingleNode;
}

PolicyRun run_enhanced(const DirectedGraph& graph, double alpha, Cost budget,
                       const FullRealization& world, Estimator estimator,
                       std::uint64_t seed) {
  check_alpha(alpha);
  Estimator probe = estimator.with_stream(hash_combine(seed, 0xB357ULL));
  const SingleNode best = best_single_node(graph, probe);
  if (graph.cost(best.node) > budget) {
    throw Error("unaffordable", "best single node exceeds the budget");
  }
  if (enhanced_arm(seed) == EnhancedArm::kGreedy) {
    PolicyRun run =
        run_alpha_greedy_nonuniform(graph, alpha, budget, world, std::move(estimator), seed);
    run.arm = EnhancedArm::kGreedy;
    return run;
  }
  PolicyRun run;
  run.arm = EnhancedArm::kSingleNode;
  run.schedule.add(best.node, 0);
  run.total_cost = graph.cost(best.node);
  RoundLog log;
  log.selected = true;
  log.node = best.node;
  log.gain = best.spread;
  log.remaining_budget = budget - run.total_cost;
  log.zero_set_size = graph.node_count();
  run.rounds.push_back(log);
  run.stop = StopReason::kSingleNode;
  const NodeId only[] = {best.node};
  run.realized_cascade = cascade_size(graph, world, only);
  return run;
}

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kUniform: return "uniform";
    case PolicyKind::kNonUniform: return "nonuniform";
    case PolicyKind::kEnhanced: return "enhanced";
  }
  return "uniform";
}

PolicyKind parse_policy_kind(std::string_view text) {
  if (text == "uniform") return PolicyKind::kUniform;
  if (text == "nonuniform") return PolicyKind::kNonUniform;
  if (text == "enhanced") return PolicyKind::kEnhanced;
  throw Error("bad-policy", "unknown policy '" + std::string(text) + "'");
}

PolicyRun run_policy(const DirectedGraph& graph, const PolicyConfig& config,
                     const FullRealization& world, std::uint64_t seed) {
  switch (config.kind) {
    case PolicyKind::kUniform: {
      if (config.budget.micros() % Cost::kScale != 0) {
        throw Error("bad-budget", "uniform policy needs an integer budget");
      }
      return run_alpha_greedy_uniform(
          graph, config.alpha, static_cast<std::size_t>(config.budget.micros() / Cost::kScale),
          world, config.estimator, seed);
    }
    case PolicyKind::kNonUniform:
      return run_alpha_greedy_nonuniform(graph, config.alpha, config.budget, world,
                                         config.estimator, seed);
    case PolicyKind::kEnhanced:
      return run_enhanced(graph, config.alpha, config.budget, world, config.estimator, seed);
  }
  throw Error("bad-policy", "unknown policy");
}

std::string format_transcript(const PolicyRun& run) {
  std::string out;
  for (const RoundLog& log : run.rounds) {
    out += "r=" + std::to_string(log.round) + " slot=" + std::to_string(log.slot) + " action=";
    if (log.selected) {
      out += "select:" + std::to_string(log.node) + "," + format_g(log.gain) + "," +
             log.remaining_budget.to_string();
    } else {
      out += "wait";
    }
    out += " cond=" + (log.condition ? format_g(*log.condition) : std::string("undefined"));
    out += " |O|=" + std::to_string(log.zero_set_size);
    if (log.forced) out += " forced";
    out += '\n';
  }
  return out;
}

}  // namespace pfim
