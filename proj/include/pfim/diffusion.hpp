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

#ifndef PFIM_DIFFUSION_HPP_
#define PFIM_DIFFUSION_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "pfim/graph.hpp"

namespace pfim {

using Slot = std::uint32_t;
inline constexpr Slot kNever = std::numeric_limits<Slot>::max();

enum class EdgeState : std::uint8_t { kBlocked, kLive, kUnobserved };

// One possible world: every edge is Live or Blocked.
class FullRealization {
 public:
  FullRealization() = default;
  explicit FullRealization(std::vector<std::uint8_t> live) : live_(std::move(live)) {}

  static FullRealization all(std::size_t edge_count, bool live) {
    return FullRealization(std::vector<std::uint8_t>(edge_count, live ? 1 : 0));
  }

  bool is_live(EdgeId e) const { return live_[e] != 0; }
  void set_live(EdgeId e, bool live) { live_[e] = live ? 1 : 0; }
  std::size_t edge_count() const { return live_.size(); }

  friend bool operator==(const FullRealization&, const FullRealization&) = default;

 private:
  std::vector<std::uint8_t> live_;
};

// What has been revealed so far. Observed entries are write-once.
class PartialRealization {
 public:
  PartialRealization() = default;
  explicit PartialRealization(std::size_t edge_count)
      : states_(edge_count, EdgeState::kUnobserved) {}

  EdgeState state(EdgeId e) const { return states_[e]; }
  bool is_observed(EdgeId e) const { return states_[e] != EdgeState::kUnobserved; }
  std::size_t edge_count() const { return states_.size(); }
  std::size_t observed_count() const;
  std::span<const EdgeState> states() const { return states_; }

  // Records an observation. Throws if `e` was already observed with a
  // different status, or if `state` is kUnobserved.
  void observe(EdgeId e, EdgeState state);

  // Every observed entry of *this is observed identically in `other`.
  bool is_subset_of(const PartialRealization& other) const;
  bool is_consistent_with(const FullRealization& world) const;

  friend bool operator==(const PartialRealization&, const PartialRealization&) = default;

 private:
  std::vector<EdgeState> states_;
};

struct SeedEntry {
  NodeId node = 0;
  Slot slot = 0;

  friend bool operator==(const SeedEntry&, const SeedEntry&) = default;
};

// Seeds with activation slots, duplicate-free and non-decreasing in slot.
class SeedSchedule {
 public:
  SeedSchedule() = default;

  void add(NodeId node, Slot slot);
  bool contains(NodeId node) const;

  std::span<const SeedEntry> entries() const { return entries_; }
  std::vector<NodeId> nodes() const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Slot last_slot() const { return entries_.empty() ? 0 : entries_.back().slot; }

  friend bool operator==(const SeedSchedule&, const SeedSchedule&) = default;

 private:
  std::vector<SeedEntry> entries_;
};

struct DiffusionTrace {
  std::vector<Slot> activation_slot;  // kNever when not reached

  std::size_t activated_count() const;
};

// Each edge is Live independently with its probability.
FullRealization sample_full_realization(const DirectedGraph& graph, std::uint64_t seed);

// Multi-source BFS over Live edges; each seed starts at its own slot.
DiffusionTrace propagate(const DirectedGraph& graph, const FullRealization& world,
                         const SeedSchedule& schedule);

// Partial feedback at `current_slot`: a seed active for d >= 1 slots
// reveals the true status of every edge leaving a node within d-1 live
// hops of it. Union over seeds. Throws if current_slot precedes a seed.
PartialRealization observe(const DirectedGraph& graph, const FullRealization& world,
                           const SeedSchedule& schedule, Slot current_slot);

// Number of nodes reachable from `seeds` over Live edges, seeds included.
std::size_t cascade_size(const DirectedGraph& graph, const FullRealization& world,
                         std::span<const NodeId> seeds);

// Debug dump, one "u<TAB>v<TAB>{L|B|U}" line per edge.
std::string format_partial_realization(const DirectedGraph& graph,
                                       const PartialRealization& partial);

}  // namespace pfim

#endif  // PFIM_DIFFUSION_HPP_
