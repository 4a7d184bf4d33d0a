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

#ifndef PFIM_ESTIMATION_HPP_
#define PFIM_ESTIMATION_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pfim/diffusion.hpp"
#include "pfim/graph.hpp"

namespace pfim {

// Enumeration limit for the exact backend: relevant unobserved edges with
// 0 < p < 1.
inline constexpr std::size_t kExactEdgeLimit = 22;

// Conditional activation probabilities p_v(S; psi) and their sum f(S; psi).
struct ActivationEstimate {
  std::vector<double> p;
  double f = 0.0;
  // Nodes with exactly zero activation probability (O). Always computed by
  // reachability, never from samples.
  std::vector<std::uint8_t> in_zero_set;
  std::size_t zero_count = 0;
  std::string backend;

  // |V \ O|
  std::size_t support_size() const { return p.size() - zero_count; }
  std::vector<NodeId> zero_set() const;
};

// f(S; psi) and Delta(v; psi) = f(S + v; psi) - f(S; psi) for each candidate.
struct GainTable {
  double base_f = 0.0;
  std::vector<NodeId> candidates;
  std::vector<double> gains;
};

// Nodes unreachable from `seeds` once observed-Blocked and p = 0 edges are
// removed. Sorted ascending.
std::vector<NodeId> zero_probability_set(const DirectedGraph& graph,
                                         std::span<const NodeId> seeds,
                                         const PartialRealization& partial);

// Enumerates every assignment of the relevant unobserved edges. Throws
// pfim::Error("too-large") past kExactEdgeLimit.
ActivationEstimate exact_conditional_activation(const DirectedGraph& graph,
                                                std::span<const NodeId> seeds,
                                                const PartialRealization& partial);

GainTable exact_gains(const DirectedGraph& graph, std::span<const NodeId> seeds,
                      const PartialRealization& partial,
                      std::span<const NodeId> candidates);

// Averages `samples` completions of the unobserved edges. Completion k
// draws edge e from hash(seed, k, e), so results are reproducible and
// shared between f(S) and every f(S + v) of one gains call.
ActivationEstimate mc_conditional_activation(const DirectedGraph& graph,
                                             std::span<const NodeId> seeds,
                                             const PartialRealization& partial,
                                             std::uint64_t samples, std::uint64_t seed);

GainTable mc_gains(const DirectedGraph& graph, std::span<const NodeId> seeds,
                   const PartialRealization& partial, std::span<const NodeId> candidates,
                   std::uint64_t samples, std::uint64_t seed);

enum class EpsilonMode { kRandom, kAdversarialHigh, kAdversarialLow };

std::string to_string(EpsilonMode mode);
EpsilonMode parse_epsilon_mode(std::string_view text);

class ExactMemo;

// A configured estimation backend. Not thread-safe: each query advances an
// internal counter that keys the random stream, so two copies fed the same
// queries in the same order produce bit-identical answers.
class Estimator {
 public:
  static Estimator exact();
  // Exact backend that caches answers per (S, psi, candidates). Intended
  // for exhaustive policy evaluation where the same states recur.
  static Estimator exact_memoized();
  static Estimator monte_carlo(std::uint64_t samples, std::uint64_t seed);

  // Copy whose exact backend caches answers (no effect on Monte Carlo).
  Estimator memoized() const;
  bool has_memo() const { return memo_ != nullptr; }

  // Copy with a fresh stream and query counter.
  Estimator with_stream(std::uint64_t stream) const;

  ActivationEstimate estimate(const DirectedGraph& graph, std::span<const NodeId> seeds,
                              const PartialRealization& partial);
  GainTable gains(const DirectedGraph& graph, std::span<const NodeId> seeds,
                  const PartialRealization& partial, std::span<const NodeId> candidates);

  bool is_exact() const { return backend_ == Backend::kExact; }
  // True when some wrapper has epsilon > 0.
  bool is_perturbed() const;
  std::uint64_t samples() const { return samples_; }
  std::string tag() const;

  friend Estimator epsilon_wrap(const Estimator& inner, double epsilon,
                                EpsilonMode mode, std::uint64_t seed);

 private:
  enum class Backend { kExact, kMonteCarlo };
  struct Perturbation {
    double epsilon;
    EpsilonMode mode;
    std::uint64_t seed;
  };

  std::uint64_t next_query_key();
  double perturb(double value, std::uint64_t query, std::uint64_t index) const;

  Backend backend_ = Backend::kExact;
  std::uint64_t samples_ = 0;
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t queries_ = 0;
  std::vector<Perturbation> perturbations_;
  std::shared_ptr<ExactMemo> memo_;
};

// Every f-value the returned estimator reports is the inner value times a
// factor in [1 - eps, 1 + eps]: uniform per value (random), 1 + eps
// (adversarial-high) or 1 - eps (adversarial-low). eps = 0 is a no-op.
Estimator epsilon_wrap(const Estimator& inner, double epsilon, EpsilonMode mode,
                       std::uint64_t seed);

double marginal_gain(Estimator& estimator, const DirectedGraph& graph,
                     std::span<const NodeId> seeds, const PartialRealization& partial,
                     NodeId candidate);

}  // namespace pfim

#endif  // PFIM_ESTIMATION_HPP_
