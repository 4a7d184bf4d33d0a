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

#ifndef PFIM_TESTS_BRUTE_FORCE_HPP_
#define PFIM_TESTS_BRUTE_FORCE_HPP_

#include <vector>

#include "pfim/diffusion.hpp"
#include "pfim/graph.hpp"

namespace pfim::testing {

// Test-only oracle: walks all 2^|E| live/blocked worlds, discards those
// that contradict `partial`, and renormalises. Reachability by repeated
// relaxation rather than BFS. Deliberately naive.
inline std::vector<double> brute_force_activation(const DirectedGraph& g,
                                                  const std::vector<NodeId>& seeds,
                                                  const PartialRealization& partial) {
  const std::size_t m = g.edge_count();
  const std::size_t n = g.node_count();
  std::vector<double> p(n, 0.0);
  double mass = 0.0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    double w = 1.0;
    bool consistent = true;
    for (std::size_t e = 0; e < m; ++e) {
      const bool live = (bits >> e) & 1;
      const EdgeState s = partial.state(static_cast<EdgeId>(e));
      if (s != EdgeState::kUnobserved && (s == EdgeState::kLive) != live) consistent = false;
      if (s == EdgeState::kUnobserved) {
        w *= live ? g.edge(static_cast<EdgeId>(e)).probability
                  : 1.0 - g.edge(static_cast<EdgeId>(e)).probability;
      }
    }
    if (!consistent) continue;
    mass += w;
    std::vector<int> on(n, 0);
    for (NodeId s : seeds) on[s] = 1;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t e = 0; e < m; ++e) {
        const Edge& edge = g.edge(static_cast<EdgeId>(e));
        if (((bits >> e) & 1) && on[edge.source] && !on[edge.target]) {
          on[edge.target] = 1;
          changed = true;
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) p[v] += on[v] ? w : 0.0;
  }
  if (mass > 0.0) {
    for (double& x : p) x /= mass;
  }
  return p;
}

inline double brute_force_spread(const DirectedGraph& g, const std::vector<NodeId>& seeds) {
  double f = 0.0;
  for (double x : brute_force_activation(g, seeds, PartialRealization(g.edge_count()))) f += x;
  return f;
}

}  // namespace pfim::testing

#endif  // PFIM_TESTS_BRUTE_FORCE_HPP_
