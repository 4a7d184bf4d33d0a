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

#ifndef PFIM_TESTS_TEST_GRAPHS_HPP_
#define PFIM_TESTS_TEST_GRAPHS_HPP_

#include <initializer_list>
#include <vector>

#include "pfim/diffusion.hpp"
#include "pfim/graph.hpp"
#include "pfim/random.hpp"

namespace pfim::testing {

inline DirectedGraph make_graph(std::size_t n, std::initializer_list<Edge> edges,
                                std::vector<Cost> costs = {}) {
  if (costs.empty()) costs.assign(n, Cost::units(1));
  return DirectedGraph(n, std::vector<Edge>(edges), std::move(costs));
}

inline DirectedGraph chain3(double p) { return make_graph(3, {{0, 1, p}, {1, 2, p}}); }

inline DirectedGraph diamond(double p) {
  return make_graph(4, {{0, 1, p}, {0, 2, p}, {1, 3, p}, {2, 3, p}});
}

// Random simple digraph with n nodes, up to max_edges edges and
// probabilities drawn from `levels`.
inline DirectedGraph random_small_graph(std::uint64_t seed, std::size_t n,
                                        std::size_t max_edges,
                                        std::vector<double> levels = {0.2, 0.5, 0.8}) {
  SplitMix rng(seed);
  std::vector<Edge> edges;
  std::vector<std::uint8_t> used(n * n, 0);
  const std::size_t target = rng.below(max_edges + 1);
  for (std::size_t attempt = 0; attempt < 20 * (target + 1) && edges.size() < target; ++attempt) {
    auto u = static_cast<NodeId>(rng.below(n));
    auto v = static_cast<NodeId>(rng.below(n));
    if (u == v || used[u * n + v]) continue;
    used[u * n + v] = 1;
    edges.push_back({u, v, levels[rng.below(levels.size())]});
  }
  return DirectedGraph(n, std::move(edges), std::vector<Cost>(n, Cost::units(1)));
}

// The subgraph of edges that are live in `world`.
inline DirectedGraph live_subgraph(const DirectedGraph& g, const FullRealization& world) {
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (world.is_live(e)) edges.push_back(g.edge(e));
  }
  return DirectedGraph(g.node_count(), edges, std::vector<Cost>(g.costs().begin(), g.costs().end()));
}

}  // namespace pfim::testing

#endif  // PFIM_TESTS_TEST_GRAPHS_HPP_
