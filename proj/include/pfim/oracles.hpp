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

#ifndef PFIM_ORACLES_HPP_
#define PFIM_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "pfim/cost.hpp"
#include "pfim/diffusion.hpp"
#include "pfim/graph.hpp"
#include "pfim/policies.hpp"

namespace pfim {

// Enumeration limit for full realizations (edges with 0 < p < 1).
inline constexpr std::size_t kRealizationEdgeLimit = 22;
// Work limit for optimal_nonadaptive: feasible sets x realizations.
inline constexpr std::uint64_t kNonAdaptiveWorkLimit = std::uint64_t{1} << 24;

struct ExactEvaluation {
  enum class Method { kEnumerated, kSampled };

  double value = 0.0;
  Method method = Method::kEnumerated;
  std::size_t count = 0;  // realizations enumerated or sampled
  double std_error = 0.0;
  double mean_slots = 0.0;
  double mean_seeds = 0.0;
};

// Visits every full realization with positive probability, in binary
// counter order over the uncertain edges (lowest edge id = lowest bit).
// Edges with p = 0 or p = 1 are fixed. Throws past kRealizationEdgeLimit.
void for_each_realization(const DirectedGraph& graph,
                          const std::function<void(const FullRealization&, double)>& visit);

// Expected cascade I(U) by realization enumeration.
double exact_spread(const DirectedGraph& graph, std::span<const NodeId> seeds);

// f(pi) = sum over worlds of p(world) * realized cascade. The policy must
// use an exact (possibly epsilon-wrapped) estimator. For the enhanced
// policy the coin is averaged out: (f(pi_nu) + I({v*})) / 2.
ExactEvaluation evaluate_policy_exact(const DirectedGraph& graph, const PolicyConfig& config);

// Mean realized cascade over sampled worlds. World w uses seed + w for both
// the realization and the policy. threads = 0 reads PFIM_THREADS, falling
// back to the hardware concurrency.
ExactEvaluation evaluate_policy_sampled(const DirectedGraph& graph, const PolicyConfig& config,
                                        std::size_t realizations, std::uint64_t seed,
                                        unsigned threads = 0);

struct SeedSetValue {
  std::vector<NodeId> seeds;
  double value = 0.0;
};

// Best seed set with total cost <= budget; ties go to the lexicographically
// smallest sorted set.
SeedSetValue optimal_nonadaptive(const DirectedGraph& graph, Cost budget);

// Classic greedy on exact I(U), ties to the smallest id. Used to check the
// alpha = 0 policy through an independent route.
std::vector<NodeId> nonadaptive_greedy(const DirectedGraph& graph, std::size_t budget);

// Optimal adaptive value when every seed's diffusion is observed to
// completion before the next choice. Unit costs, n <= 6, |E| <= 12, B <= 3.
double optimal_full_feedback_adaptive(const DirectedGraph& graph, std::size_t budget);

unsigned default_thread_count();

}  // namespace pfim

#endif  // PFIM_ORACLES_HPP_
