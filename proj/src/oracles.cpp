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

#include "pfim/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <unordered_map>

#include "pfim/error.hpp"
#include "pfim/random.hpp"

namespace pfim {
namespace {

constexpr double kTieTolerance = 1e-12;

bool beats(double value, double best) {
  return value > best + kTieTolerance * std::max(1.0, std::abs(best));
}

bool ties(double value, double best) { return !beats(value, best) && !beats(best, value); }

std::vector<EdgeId> uncertain_edges(const DirectedGraph& graph) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const double p = graph.edge(e).probability;
    if (p > 0.0 && p < 1.0) out.push_back(e);
  }
  return out;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("PFIM_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value >= 1) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_realization(const DirectedGraph& graph,
                          const std::function<void(const FullRealization&, double)>& visit) {
  const auto uncertain = uncertain_edges(graph);
  if (uncertain.size() > kRealizationEdgeLimit) {
    throw Error("too-many-edges", "too many uncertain edges to enumerate realizations (" +
                                      std::to_string(uncertain.size()) + ")");
  }
  FullRealization world = FullRealization::all(graph.edge_count(), false);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    world.set_live(e, graph.edge(e).probability >= 1.0);
  }
  const std::uint64_t total = std::uint64_t{1} << uncertain.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    double weight = 1.0;
    for (std::size_t k = 0; k < uncertain.size(); ++k) {
      const bool live = (bits >> k) & 1;
      const double p = graph.edge(uncertain[k]).probability;
      world.set_live(uncertain[k], live);
      weight *= live ? p : 1.0 - p;
    }
    visit(world, weight);
  }
}

double exact_spread(const DirectedGraph& graph, std::span<const NodeId> seeds) {
  double total = 0.0;
  for_each_realization(graph, [&](const FullRealization& world, double weight) {
    total += weight * static_cast<double>(cascade_size(graph, world, seeds));
  });
  return total;
}

ExactEvaluation evaluate_policy_exact(const DirectedGraph& graph, const PolicyConfig& config) {
  if (!config.estimator.is_exact()) {
    throw Error("bad-estimator", "exact evaluation needs the exact estimator");
  }
  PolicyConfig cfg = config;
  cfg.estimator = config.estimator.memoized();
  if (cfg.kind == PolicyKind::kEnhanced) cfg.kind = PolicyKind::kNonUniform;

  std::vector<NodeId> best_single;
  if (config.kind == PolicyKind::kEnhanced) {
    Estimator probe = cfg.estimator.with_stream(0);
    const SingleNode best = best_single_node(graph, probe);
    if (graph.cost(best.node) > config.budget) {
      throw Error("unaffordable", "best single node exceeds the budget");
    }
    best_single.push_back(best.node);
  }

  ExactEvaluation eval;
  eval.method = ExactEvaluation::Method::kEnumerated;
  std::uint64_t index = 0;
  for_each_realization(graph, [&](const FullRealization& world, double weight) {
    PolicyRun run = run_policy(graph, cfg, world, index++);
    double spread = static_cast<double>(run.realized_cascade);
    double slots = static_cast<double>(run.slots_elapsed);
    double seeds = static_cast<double>(run.schedule.size());
    if (!best_single.empty()) {
      spread = 0.5 * (spread + static_cast<double>(cascade_size(graph, world, best_single)));
      slots *= 0.5;
      seeds = 0.5 * (seeds + 1.0);
    }
    eval.value += weight * spread;
    eval.mean_slots += weight * slots;
    eval.mean_seeds += weight * seeds;
  });
  eval.count = static_cast<std::size_t>(index);
  return eval;
}

ExactEvaluation evaluate_policy_sampled(const DirectedGraph& graph, const PolicyConfig& config,
                                        std::size_t realizations, std::uint64_t seed,
                                        unsigned threads) {
  if (realizations < 2) throw Error("bad-realizations", "need at least two realizations");
  if (threads == 0) threads = default_thread_count();
  if (config.estimator.has_memo()) threads = 1;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, realizations));

  std::vector<std::size_t> spread(realizations), slots(realizations), seeds(realizations);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::size_t w = next++; w < realizations && !failed; w = next++) {
        const std::uint64_t world_seed = seed + w;
        FullRealization world = sample_full_realization(graph, hash_combine(world_seed, 0xA11ULL));
        PolicyRun run = run_policy(graph, config, world, world_seed);
        spread[w] = run.realized_cascade;
        slots[w] = run.slots_elapsed;
        seeds[w] = run.schedule.size();
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Integer sums first, so the result does not depend on scheduling.
  std::uint64_t spread_sum = 0, slot_sum = 0, seed_sum = 0;
  for (std::size_t w = 0; w < realizations; ++w) {
    spread_sum += spread[w];
    slot_sum += slots[w];
    seed_sum += seeds[w];
  }
  const auto count = static_cast<double>(realizations);
  ExactEvaluation eval;
  eval.method = ExactEvaluation::Method::kSampled;
  eval.count = realizations;
  eval.value = static_cast<double>(spread_sum) / count;
  eval.mean_slots = static_cast<double>(slot_sum) / count;
  eval.mean_seeds = static_cast<double>(seed_sum) / count;
  double squares = 0.0;
  for (std::size_t w = 0; w < realizations; ++w) {
    const double d = static_cast<double>(spread[w]) - eval.value;
    squares += d * d;
  }
  eval.std_error = std::sqrt(squares / (count - 1.0) / count);
  return eval;
}

SeedSetValue optimal_nonadaptive(const DirectedGraph& graph, Cost budget) {
  const std::size_t n = graph.node_count();
  if (n > 24) throw Error("too-large", "optimal_nonadaptive supports at most 24 nodes");
  const std::size_t k = uncertain_edges(graph).size();
  if (k > kRealizationEdgeLimit) throw Error("too-large", "too many uncertain edges");

  std::vector<std::uint32_t> feasible;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Cost total;
    for (NodeId v = 0; v < n; ++v) {
      if (mask >> v & 1) total += graph.cost(v);
    }
    if (total <= budget) feasible.push_back(mask);
  }
  if (static_cast<std::uint64_t>(feasible.size()) << k > kNonAdaptiveWorkLimit) {
    throw Error("too-large", "optimal_nonadaptive search exceeds the work guard");
  }

  std::vector<double> values(feasible.size(), 0.0);
  std::vector<std::vector<NodeId>> sets(feasible.size());
  for (std::size_t i = 0; i < feasible.size(); ++i) {
    for (NodeId v = 0; v < n; ++v) {
      if (feasible[i] >> v & 1) sets[i].push_back(v);
    }
  }
  for_each_realization(graph, [&](const FullRealization& world, double weight) {
    for (std::size_t i = 0; i < feasible.size(); ++i) {
      values[i] += weight * static_cast<double>(cascade_size(graph, world, sets[i]));
    }
  });

  SeedSetValue best{sets[0], values[0]};
  for (std::size_t i = 1; i < feasible.size(); ++i) {
    if (beats(values[i], best.value) || (ties(values[i], best.value) && sets[i] < best.seeds)) {
      best = {sets[i], values[i]};
    }
  }
  return best;
}

std::vector<NodeId> nonadaptive_greedy(const DirectedGraph& graph, std::size_t budget) {
  std::vector<NodeId> chosen;
  double current = 0.0;
  while (chosen.size() < budget && chosen.size() < graph.node_count()) {
    bool found = false;
    NodeId best = 0;
    double best_gain = 0.0, best_value = 0.0;
    for (NodeId v = 0; v < graph.node_count(); ++v) {
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      auto trial = chosen;
      trial.push_back(v);
      const double value = exact_spread(graph, trial);
      if (!found || beats(value - current, best_gain)) {
        found = true;
        best = v;
        best_gain = value - current;
        best_value = value;
      }
    }
    chosen.push_back(best);
    current = best_value;
  }
  return chosen;
}

namespace {

// Backward induction over settled full-feedback states. Edge statuses are
// packed into two bit masks (observed, live); nodes into `active`.
class FullFeedbackSolver {
 public:
  explicit FullFeedbackSolver(const DirectedGraph& graph) : graph_(graph) {}

  double value(std::uint32_t active, std::uint32_t observed, std::uint32_t live,
               std::size_t budget) {
    const double here = static_cast<double>(std::popcount(active));
    if (budget == 0) return here;
    const std::uint64_t key = (std::uint64_t{active} << 40) | (std::uint64_t{observed} << 24) |
                              (std::uint64_t{live} << 8) | budget;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    double best = value(active, observed, live, budget - 1);
    for (NodeId v = 0; v < graph_.node_count(); ++v) {
      if (active >> v & 1) continue;
      double expected = 0.0;
      settle(active | (1u << v), observed, live, 1.0,
             [&](std::uint32_t a, std::uint32_t o, std::uint32_t l, double weight) {
               expected += weight * value(a, o, l, budget - 1);
             });
      best = std::max(best, expected);
    }
    memo_.emplace(key, best);
    return best;
  }

 private:
  // Reveals, one edge at a time, every unobserved edge leaving an active
  // node, branching on its status, until the diffusion has settled.
  template <typename Leaf>
  void settle(std::uint32_t active, std::uint32_t observed, std::uint32_t live,
              double weight, Leaf&& leaf) {
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
      if (observed >> e & 1) continue;
      const Edge& edge = graph_.edge(e);
      if (!(active >> edge.source & 1)) continue;
      const std::uint32_t seen = observed | (1u << e);
      if (edge.probability > 0.0) {
        settle(active | (1u << edge.target), seen, live | (1u << e),
               weight * edge.probability, leaf);
      }
      if (edge.probability < 1.0) {
        settle(active, seen, live, weight * (1.0 - edge.probability), leaf);
      }
      return;
    }
    leaf(active, observed, live, weight);
  }

  const DirectedGraph& graph_;
  std::unordered_map<std::uint64_t, double> memo_;
};

}  // namespace

double optimal_full_feedback_adaptive(const DirectedGraph& graph, std::size_t budget) {
  if (!graph.has_unit_costs()) {
    throw Error("unsupported", "full-feedback optimum supports unit costs only");
  }
  if (graph.node_count() > 6 || graph.edge_count() > 12 || budget > 3) {
    throw Error("too-large", "full-feedback optimum needs n <= 6, |E| <= 12, B <= 3");
  }
  FullFeedbackSolver solver(graph);
  return solver.value(0, 0, 0, budget);
}

}  // namespace pfim
