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

#include "pfim/diffusion.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "pfim/error.hpp"
#include "pfim/random.hpp"

namespace pfim {

std::size_t PartialRealization::observed_count() const {
  return static_cast<std::size_t>(std::count_if(
      states_.begin(), states_.end(),
      [](EdgeState s) { return s != EdgeState::kUnobserved; }));
}

void PartialRealization::observe(EdgeId e, EdgeState state) {
  if (state == EdgeState::kUnobserved) {
    throw Error("bad-observation", "cannot un-observe an edge");
  }
  if (states_[e] != EdgeState::kUnobserved && states_[e] != state) {
    throw Error("bad-observation", "conflicting observation for edge " + std::to_string(e));
  }
  states_[e] = state;
}

bool PartialRealization::is_subset_of(const PartialRealization& other) const {
  if (other.states_.size() != states_.size()) return false;
  for (std::size_t e = 0; e < states_.size(); ++e) {
    if (states_[e] != EdgeState::kUnobserved && states_[e] != other.states_[e]) return false;
  }
  return true;
}

bool PartialRealization::is_consistent_with(const FullRealization& world) const {
  if (world.edge_count() != states_.size()) return false;
  for (EdgeId e = 0; e < states_.size(); ++e) {
    if (states_[e] == EdgeState::kUnobserved) continue;
    if ((states_[e] == EdgeState::kLive) != world.is_live(e)) return false;
  }
  return true;
}

void SeedSchedule::add(NodeId node, Slot slot) {
  if (contains(node)) {
    throw Error("duplicate-seed", "node " + std::to_string(node) + " already scheduled");
  }
  if (!entries_.empty() && slot < entries_.back().slot) {
    throw Error("bad-schedule", "activation slots must be non-decreasing");
  }
  entries_.push_back({node, slot});
}

bool SeedSchedule::contains(NodeId node) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const SeedEntry& s) { return s.node == node; });
}

std::vector<NodeId> SeedSchedule::nodes() const {
  std::vector<NodeId> out;
  out.reserve(entries_.size());
  for (const SeedEntry& s : entries_) out.push_back(s.node);
  return out;
}

std::size_t DiffusionTrace::activated_count() const {
  return static_cast<std::size_t>(std::count_if(
      activation_slot.begin(), activation_slot.end(), [](Slot s) { return s != kNever; }));
}

FullRealization sample_full_realization(const DirectedGraph& graph, std::uint64_t seed) {
  std::vector<std::uint8_t> live(graph.edge_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    live[e] = to_unit(hash_combine(seed, 0xF011, e)) < graph.edge(e).probability ? 1 : 0;
  }
  return FullRealization(std::move(live));
}

DiffusionTrace propagate(const DirectedGraph& graph, const FullRealization& world,
                         const SeedSchedule& schedule) {
  DiffusionTrace trace;
  trace.activation_slot.assign(graph.node_count(), kNever);
  using Item = std::pair<Slot, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  for (const SeedEntry& s : schedule.entries()) {
    if (s.node >= graph.node_count()) throw Error("bad-schedule", "seed outside graph");
    if (s.slot < trace.activation_slot[s.node]) {
      trace.activation_slot[s.node] = s.slot;
      frontier.push({s.slot, s.node});
    }
  }
  while (!frontier.empty()) {
    auto [slot, u] = frontier.top();
    frontier.pop();
    if (slot != trace.activation_slot[u]) continue;
    for (EdgeId e : graph.out_edges(u)) {
      if (!world.is_live(e)) continue;
      NodeId v = graph.edge(e).target;
      if (slot + 1 < trace.activation_slot[v]) {
        trace.activation_slot[v] = slot + 1;
        frontier.push({slot + 1, v});
      }
    }
  }
  return trace;
}

PartialRealization observe(const DirectedGraph& graph, const FullRealization& world,
                           const SeedSchedule& schedule, Slot current_slot) {
  PartialRealization partial(graph.edge_count());
  const std::size_t n = graph.node_count();
  std::vector<std::size_t> depth(n);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::deque<NodeId> queue;
  for (const SeedEntry& s : schedule.entries()) {
    if (s.slot > current_slot) {
      throw Error("bad-slot", "current slot precedes a seed's activation slot");
    }
    const Slot age = current_slot - s.slot;
    if (age == 0) continue;
    const std::size_t max_hops = age - 1;
    ++epoch;
    stamp[s.node] = epoch;
    depth[s.node] = 0;
    queue.assign(1, s.node);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (EdgeId e : graph.out_edges(u)) {
        const bool live = world.is_live(e);
        partial.observe(e, live ? EdgeState::kLive : EdgeState::kBlocked);
        if (!live || depth[u] == max_hops) continue;
        NodeId v = graph.edge(e).target;
        if (stamp[v] != epoch) {
          stamp[v] = epoch;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return partial;
}

std::size_t cascade_size(const DirectedGraph& graph, const FullRealization& world,
                         std::span<const NodeId> seeds) {
  std::vector<std::uint8_t> seen(graph.node_count(), 0);
  std::vector<NodeId> stack;
  std::size_t count = 0;
  for (NodeId s : seeds) {
    if (!seen[s]) {
      seen[s] = 1;
      ++count;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (EdgeId e : graph.out_edges(u)) {
      NodeId v = graph.edge(e).target;
      if (world.is_live(e) && !seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count;
}

std::string format_partial_realization(const DirectedGraph& graph,
                                       const PartialRealization& partial) {
  std::string out;
  auto ext = graph.external_ids();
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    out += std::to_string(ext[edge.source]) + '\t' + std::to_string(ext[edge.target]) + '\t';
    switch (partial.state(e)) {
      case EdgeState::kLive: out += 'L'; break;
      case EdgeState::kBlocked: out += 'B'; break;
      case EdgeState::kUnobserved: out += 'U'; break;
    }
    out += '\n';
  }
  return out;
}

}  // namespace pfim
