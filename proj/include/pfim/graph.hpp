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

#ifndef PFIM_GRAPH_HPP_
#define PFIM_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfim/cost.hpp"

namespace pfim {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  NodeId source = 0;
  NodeId target = 0;
  double probability = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable directed graph with per-node costs and per-edge propagation
// probabilities. Nodes are dense ids 0..n-1; `external_ids()` maps them
// back to the ids used in the source file. Edge ids are positions in the
// edge list and stay stable across the with_* copies.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  // Validates: no self-loops, no duplicate (u,v), p in [0,1], cost > 0,
  // endpoints < node_count. Throws pfim::Error.
  DirectedGraph(std::size_t node_count, std::vector<Edge> edges,
                std::vector<Cost> costs,
                std::vector<std::uint64_t> external_ids = {});

  std::size_t node_count() const { return costs_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const EdgeId> out_edges(NodeId v) const {
    return {out_index_.data() + out_offset_[v], out_offset_[v + 1] - out_offset_[v]};
  }
  std::span<const EdgeId> in_edges(NodeId v) const {
    return {in_index_.data() + in_offset_[v], in_offset_[v + 1] - in_offset_[v]};
  }

  Cost cost(NodeId v) const { return costs_[v]; }
  std::span<const Cost> costs() const { return costs_; }
  Cost min_cost() const;
  Cost max_cost() const;
  Cost total_cost() const;
  bool has_unit_costs() const;

  std::span<const std::uint64_t> external_ids() const { return external_ids_; }
  bool is_remapped() const;

  DirectedGraph with_probabilities(std::vector<double> probabilities) const;
  DirectedGraph with_costs(std::vector<Cost> costs) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.edges_ == b.edges_ && a.costs_ == b.costs_ &&
           a.external_ids_ == b.external_ids_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<Cost> costs_;
  std::vector<std::uint64_t> external_ids_;
  std::vector<std::size_t> out_offset_, in_offset_;
  std::vector<EdgeId> out_index_, in_index_;
};

// Parses "u<TAB>v<TAB>p" lines. Blank lines and '#' comments are skipped,
// except the directive "# nodes <n>", which declares ids 0..n-1 so that
// isolated nodes survive. Sparse ids are remapped to dense ids in
// ascending external order.
DirectedGraph load_graph(std::string_view edge_list_text, Cost default_cost);

// Applies "v<TAB>c" lines (external ids) on top of an existing graph.
DirectedGraph apply_cost_file(const DirectedGraph& graph, std::string_view cost_text);

std::string serialize_graph(const DirectedGraph& graph);
std::string serialize_costs(const DirectedGraph& graph);
// "dense<TAB>external" per node.
std::string serialize_id_map(const DirectedGraph& graph);

// Each edge independently gets i*base or i*base/10 with probability 1/2.
DirectedGraph assign_trivalency_probabilities(const DirectedGraph& graph, int i,
                                              std::uint64_t seed,
                                              double base = 0.01);

DirectedGraph assign_random_costs(const DirectedGraph& graph, Cost lo, Cost hi,
                                  std::uint64_t seed);

// Longest finite hop distance over ordered reachable pairs, ignoring
// probabilities. Unreachable pairs do not count.
std::size_t diameter(const DirectedGraph& graph);

enum class GraphModel { kErdosRenyi, kScaleFreeIsh };

// m distinct directed edges without self-loops, all with probability 1
// and unit costs; callers assign probabilities afterwards.
DirectedGraph generate_graph(std::size_t node_count, std::size_t edge_count,
                             GraphModel model, std::uint64_t seed);

}  // namespace pfim

#endif  // PFIM_GRAPH_HPP_
