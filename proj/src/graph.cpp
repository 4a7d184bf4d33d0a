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

#include "pfim/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>
#include <utility>

#include "pfim/error.hpp"
#include "pfim/random.hpp"

namespace pfim {
namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void build_index(std::size_t n, std::span<const Edge> edges, bool outgoing,
                 std::vector<std::size_t>& offset, std::vector<EdgeId>& index) {
  offset.assign(n + 1, 0);
  for (const Edge& e : edges) ++offset[(outgoing ? e.source : e.target) + 1];
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  index.assign(edges.size(), 0);
  std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    index[cursor[outgoing ? e.source : e.target]++] = id;
  }
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == '\t' || line[pos] == ' ')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != '\t' && line[end] != ' ') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    fn(line_no, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

bool parse_u64(std::string_view field, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

bool parse_double(std::string_view field, double& out) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

std::string at_line(std::size_t line_no) {
  return " (line " + std::to_string(line_no) + ")";
}

}  // namespace

DirectedGraph::DirectedGraph(std::size_t node_count, std::vector<Edge> edges,
                             std::vector<Cost> costs,
                             std::vector<std::uint64_t> external_ids)
    : edges_(std::move(edges)),
      costs_(std::move(costs)),
      external_ids_(std::move(external_ids)) {
  if (costs_.size() != node_count) {
    throw Error("bad-graph", "cost vector size does not match node count");
  }
  if (external_ids_.empty()) {
    external_ids_.resize(node_count);
    std::iota(external_ids_.begin(), external_ids_.end(), std::uint64_t{0});
  } else if (external_ids_.size() != node_count) {
    throw Error("bad-graph", "id map size does not match node count");
  }
  for (Cost c : costs_) {
    if (c <= Cost{}) throw Error("bad-cost", "node costs must be positive");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.source >= node_count || e.target >= node_count) {
      throw Error("bad-graph", "edge endpoint out of range");
    }
    if (e.source == e.target) throw Error("self-loop", "self-loops are not allowed");
    if (!(e.probability >= 0.0 && e.probability <= 1.0)) {
      throw Error("probability-range", "probability out of range");
    }
    if (!seen.insert(pair_key(e.source, e.target)).second) {
      throw Error("duplicate-edge", "duplicate edge");
    }
  }
  build_index(node_count, edges_, true, out_offset_, out_index_);
  build_index(node_count, edges_, false, in_offset_, in_index_);
}

Cost DirectedGraph::min_cost() const {
  return costs_.empty() ? Cost{} : *std::min_element(costs_.begin(), costs_.end());
}

Cost DirectedGraph::max_cost() const {
  return costs_.empty() ? Cost{} : *std::max_element(costs_.begin(), costs_.end());
}

Cost DirectedGraph::total_cost() const {
  Cost total;
  for (Cost c : costs_) total += c;
  return total;
}

bool DirectedGraph::has_unit_costs() const {
  return std::all_of(costs_.begin(), costs_.end(),
                     [](Cost c) { return c == Cost::units(1); });
}

bool DirectedGraph::is_remapped() const {
  for (std::size_t v = 0; v < external_ids_.size(); ++v) {
    if (external_ids_[v] != v) return true;
  }
  return false;
}

DirectedGraph DirectedGraph::with_probabilities(std::vector<double> probabilities) const {
  if (probabilities.size() != edges_.size()) {
    throw Error("bad-graph", "probability vector size does not match edge count");
  }
  std::vector<Edge> edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].probability = probabilities[i];
  return DirectedGraph(node_count(), std::move(edges), costs_, external_ids_);
}

DirectedGraph DirectedGraph::with_costs(std::vector<Cost> costs) const {
  return DirectedGraph(node_count(), edges_, std::move(costs), external_ids_);
}

DirectedGraph load_graph(std::string_view text, Cost default_cost) {
  struct RawEdge {
    std::uint64_t u, v;
    double p;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  std::set<std::uint64_t> ids;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto fields = split_fields(line);
    if (fields.empty()) return;
    if (fields[0].front() == '#') {
      // "# nodes <n>"
      if (fields[0] == "#" && fields.size() == 3 && fields[1] == "nodes") {
        std::uint64_t declared = 0;
        if (!parse_u64(fields[2], declared)) {
          throw Error("malformed-line", "bad node-count directive" + at_line(line_no));
        }
        for (std::uint64_t k = 0; k < declared; ++k) ids.insert(k);
      }
      return;
    }
    RawEdge edge{0, 0, 0.0, line_no};
    if (fields.size() != 3 || !parse_u64(fields[0], edge.u) ||
        !parse_u64(fields[1], edge.v) || !parse_double(fields[2], edge.p)) {
      throw Error("malformed-line", "malformed line" + at_line(line_no));
    }
    if (!(edge.p >= 0.0 && edge.p <= 1.0)) {
      throw Error("probability-range", "probability out of range" + at_line(line_no));
    }
    if (edge.u == edge.v) throw Error("self-loop", "self-loop" + at_line(line_no));
    ids.insert(edge.u);
    ids.insert(edge.v);
    raw.push_back(edge);
  });

  std::vector<std::uint64_t> external(ids.begin(), ids.end());
  std::map<std::uint64_t, NodeId> dense;
  for (std::size_t k = 0; k < external.size(); ++k) dense[external[k]] = static_cast<NodeId>(k);

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::unordered_set<std::uint64_t> seen;
  for (const RawEdge& r : raw) {
    Edge e{dense[r.u], dense[r.v], r.p};
    if (!seen.insert(pair_key(e.source, e.target)).second) {
      throw Error("duplicate-edge", "duplicate edge" + at_line(r.line));
    }
    edges.push_back(e);
  }
  const std::size_t n = external.size();
  return DirectedGraph(n, std::move(edges), std::vector<Cost>(n, default_cost),
                       std::move(external));
}

DirectedGraph apply_cost_file(const DirectedGraph& graph, std::string_view cost_text) {
  std::map<std::uint64_t, NodeId> dense;
  auto ext = graph.external_ids();
  for (std::size_t k = 0; k < ext.size(); ++k) dense[ext[k]] = static_cast<NodeId>(k);
  std::vector<Cost> costs(graph.costs().begin(), graph.costs().end());
  for_each_line(cost_text, [&](std::size_t line_no, std::string_view line) {
    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') return;
    std::uint64_t id = 0;
    if (fields.size() != 2 || !parse_u64(fields[0], id)) {
      throw Error("malformed-line", "malformed cost line" + at_line(line_no));
    }
    auto it = dense.find(id);
    if (it == dense.end()) {
      throw Error("unknown-node", "cost for unknown node " + std::to_string(id) + at_line(line_no));
    }
    Cost c = Cost::parse(fields[1]);
    if (c <= Cost{}) throw Error("bad-cost", "cost must be positive" + at_line(line_no));
    costs[it->second] = c;
  });
  return graph.with_costs(std::move(costs));
}

std::string serialize_graph(const DirectedGraph& graph) {
  std::string out;
  auto ext = graph.external_ids();
  if (!graph.is_remapped()) out += "# nodes " + std::to_string(graph.node_count()) + "\n";
  for (const Edge& e : graph.edges()) {
    out += std::to_string(ext[e.source]);
    out += '\t';
    out += std::to_string(ext[e.target]);
    out += '\t';
    out += format_double(e.probability);
    out += '\n';
  }
  return out;
}

std::string serialize_costs(const DirectedGraph& graph) {
  std::string out;
  auto ext = graph.external_ids();
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    out += std::to_string(ext[v]) + '\t' + graph.cost(v).to_string() + '\n';
  }
  return out;
}

std::string serialize_id_map(const DirectedGraph& graph) {
  std::string out;
  auto ext = graph.external_ids();
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    out += std::to_string(v) + '\t' + std::to_string(ext[v]) + '\n';
  }
  return out;
}

DirectedGraph assign_trivalency_probabilities(const DirectedGraph& graph, int i,
                                              std::uint64_t seed, double base) {
  if (i < 1) throw Error("bad-trivalency", "i must be at least 1");
  const double high = i * base;
  const double low = i * base / 10.0;
  if (!(base > 0.0) || high > 1.0) {
    throw Error("bad-trivalency", "i*" + format_double(base) + " exceeds 1");
  }
  std::vector<double> probabilities(graph.edge_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    probabilities[e] = (hash_combine(seed, 0x7121, e) & 1) ? high : low;
  }
  return graph.with_probabilities(std::move(probabilities));
}

DirectedGraph assign_random_costs(const DirectedGraph& graph, Cost lo, Cost hi,
                                  std::uint64_t seed) {
  if (lo <= Cost{}) throw Error("bad-cost", "lower cost bound must be positive");
  if (hi < lo) throw Error("bad-cost", "upper cost bound below lower bound");
  const auto span = static_cast<std::uint64_t>(hi.micros() - lo.micros()) + 1;
  std::vector<Cost> costs(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    auto offset = static_cast<std::int64_t>(to_range(hash_combine(seed, 0xC057, v), span));
    costs[v] = Cost::from_micros(lo.micros() + offset);
  }
  return graph.with_costs(std::move(costs));
}

std::size_t diameter(const DirectedGraph& graph) {
  const std::size_t n = graph.node_count();
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  std::deque<NodeId> queue;
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      best = std::max(best, dist[u]);
      for (EdgeId e : graph.out_edges(u)) {
        NodeId v = graph.edge(e).target;
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return best;
}

DirectedGraph generate_graph(std::size_t n, std::size_t m, GraphModel model,
                             std::uint64_t seed) {
  if (n == 0) throw Error("bad-generator", "node count must be positive");
  const std::uint64_t capacity = static_cast<std::uint64_t>(n) * (n - 1);
  if (m > capacity) {
    throw Error("too-many-edges", "m exceeds n(n-1) for a simple directed graph");
  }
  SplitMix rng(hash_combine(seed, 0x6E4));
  std::set<std::pair<NodeId, NodeId>> chosen;
  auto pair_from_index = [&](std::uint64_t k) {
    auto u = static_cast<NodeId>(k / (n - 1));
    auto w = static_cast<NodeId>(k % (n - 1));
    return std::pair<NodeId, NodeId>{u, w >= u ? w + 1 : w};
  };

  if (model == GraphModel::kErdosRenyi || 2 * m > capacity) {
    // Dense requests fall back to uniform sampling, where rejection stays cheap.
    if (2 * m > capacity) {
      std::vector<std::uint64_t> all(capacity);
      std::iota(all.begin(), all.end(), std::uint64_t{0});
      for (std::size_t k = 0; k < m; ++k) {
        std::swap(all[k], all[k + rng.below(capacity - k)]);
        chosen.insert(pair_from_index(all[k]));
      }
    } else {
      while (chosen.size() < m) chosen.insert(pair_from_index(rng.below(capacity)));
    }
  } else {
    // Preferential attachment on in-degree: target weight is indeg(v) + 1.
    std::vector<NodeId> urn(n);
    std::iota(urn.begin(), urn.end(), NodeId{0});
    while (chosen.size() < m) {
      auto u = static_cast<NodeId>(rng.below(n));
      NodeId v = urn[rng.below(urn.size())];
      if (u == v || !chosen.insert({u, v}).second) continue;
      urn.push_back(v);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (auto [u, v] : chosen) edges.push_back({u, v, 1.0});
  return DirectedGraph(n, std::move(edges), std::vector<Cost>(n, Cost::units(1)));
}

}  // namespace pfim
