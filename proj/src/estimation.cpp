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

#include "pfim/estimation.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "pfim/error.hpp"
#include "pfim/random.hpp"

namespace pfim {

class ExactMemo {
 public:
  void bind(const DirectedGraph& graph) {
    if (graph_ != &graph) {
      estimates.clear();
      gains.clear();
      graph_ = &graph;
    }
  }

  std::unordered_map<std::string, ActivationEstimate> estimates;
  std::unordered_map<std::string, GainTable> gains;

 private:
  const DirectedGraph* graph_ = nullptr;
};

namespace {

// Per-edge treatment during a completion.
enum class EdgeKind : std::uint8_t { kBlocked, kLive, kRandom };

std::vector<EdgeKind> classify_edges(const DirectedGraph& graph,
                                     const PartialRealization& partial) {
  if (partial.edge_count() != graph.edge_count()) {
    throw Error("bad-observation", "partial realization does not match graph");
  }
  std::vector<EdgeKind> kinds(graph.edge_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const double p = graph.edge(e).probability;
    switch (partial.state(e)) {
      case EdgeState::kLive: kinds[e] = EdgeKind::kLive; break;
      case EdgeState::kBlocked: kinds[e] = EdgeKind::kBlocked; break;
      case EdgeState::kUnobserved:
        kinds[e] = p <= 0.0 ? EdgeKind::kBlocked
                   : p >= 1.0 ? EdgeKind::kLive
                              : EdgeKind::kRandom;
        break;
    }
  }
  return kinds;
}

void check_nodes(const DirectedGraph& graph, std::span<const NodeId> nodes) {
  for (NodeId v : nodes) {
    if (v >= graph.node_count()) {
      throw Error("bad-node", "node " + std::to_string(v) + " outside graph");
    }
  }
}

// Stamp-based BFS scratch space; reset is O(1) per search.
class Searcher {
 public:
  explicit Searcher(std::size_t n) : mark_(n, 0) {}

  std::uint32_t begin() {
    if (++epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      epoch_ = 1;
    }
    return epoch_;
  }

  bool marked(NodeId v, std::uint32_t epoch) const { return mark_[v] == epoch; }

  // Adds everything reachable from `sources` over edges with live(e), not
  // entering nodes for which blocked(v) holds. Returns newly marked count.
  template <typename LiveFn, typename BlockedFn>
  std::size_t expand(const DirectedGraph& graph, std::span<const NodeId> sources,
                     std::uint32_t epoch, LiveFn&& live, BlockedFn&& blocked,
                     std::vector<NodeId>* reached = nullptr) {
    std::size_t count = 0;
    stack_.clear();
    for (NodeId s : sources) {
      if (mark_[s] != epoch && !blocked(s)) {
        mark_[s] = epoch;
        stack_.push_back(s);
        ++count;
      }
    }
    while (!stack_.empty()) {
      NodeId u = stack_.back();
      stack_.pop_back();
      if (reached) reached->push_back(u);
      for (EdgeId e : graph.out_edges(u)) {
        NodeId v = graph.edge(e).target;
        if (mark_[v] == epoch || blocked(v) || !live(e)) continue;
        mark_[v] = epoch;
        stack_.push_back(v);
        ++count;
      }
    }
    return count;
  }

 private:
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> stack_;
};

constexpr auto kNoBlock = [](NodeId) { return false; };

std::vector<std::uint8_t> zero_mask(const DirectedGraph& graph,
                                    std::span<const NodeId> seeds,
                                    std::span<const EdgeKind> kinds) {
  Searcher search(graph.node_count());
  auto epoch = search.begin();
  search.expand(graph, seeds, epoch,
                [&](EdgeId e) { return kinds[e] != EdgeKind::kBlocked; }, kNoBlock);
  std::vector<std::uint8_t> mask(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) mask[v] = search.marked(v, epoch) ? 0 : 1;
  return mask;
}

ActivationEstimate finish_estimate(std::vector<double> p, std::vector<std::uint8_t> zero,
                                   std::string backend) {
  ActivationEstimate est;
  est.f = 0.0;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (zero[v]) p[v] = 0.0;
    est.f += p[v];
  }
  est.zero_count = static_cast<std::size_t>(std::count(zero.begin(), zero.end(), 1));
  est.p = std::move(p);
  est.in_zero_set = std::move(zero);
  est.backend = std::move(backend);
  return est;
}

struct ExactResult {
  std::vector<double> p;
  std::vector<double> gains;
};

ExactResult exact_enumerate(const DirectedGraph& graph, std::span<const NodeId> seeds,
                            std::span<const EdgeKind> kinds,
                            std::span<const NodeId> candidates, bool want_gains) {
  const std::size_t n = graph.node_count();
  Searcher search(n);

  // Only uncertain edges whose tail can possibly activate matter.
  std::vector<NodeId> sources(seeds.begin(), seeds.end());
  if (want_gains) sources.insert(sources.end(), candidates.begin(), candidates.end());
  auto possible = search.begin();
  search.expand(graph, sources, possible,
                [&](EdgeId e) { return kinds[e] != EdgeKind::kBlocked; }, kNoBlock);
  std::vector<EdgeId> relevant;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (kinds[e] == EdgeKind::kRandom && search.marked(graph.edge(e).source, possible)) {
      relevant.push_back(e);
    }
  }
  if (relevant.size() > kExactEdgeLimit) {
    throw Error("too-large", "instance too large for exact backend (" +
                                 std::to_string(relevant.size()) + " uncertain edges)");
  }

  std::vector<std::uint8_t> certain(n, 0);
  auto certain_epoch = search.begin();
  search.expand(graph, seeds, certain_epoch,
                [&](EdgeId e) { return kinds[e] == EdgeKind::kLive; }, kNoBlock);
  for (NodeId v = 0; v < n; ++v) certain[v] = search.marked(v, certain_epoch) ? 1 : 0;

  std::vector<std::uint8_t> live(graph.edge_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) live[e] = kinds[e] == EdgeKind::kLive;

  ExactResult result;
  result.p.assign(n, 0.0);
  result.gains.assign(want_gains ? candidates.size() : 0, 0.0);
  std::vector<NodeId> reached;
  Searcher extra(n);
  const std::uint64_t assignments = std::uint64_t{1} << relevant.size();
  auto is_live = [&](EdgeId e) { return live[e] != 0; };
  for (std::uint64_t bits = 0; bits < assignments; ++bits) {
    double weight = 1.0;
    for (std::size_t k = 0; k < relevant.size(); ++k) {
      const bool on = (bits >> k) & 1;
      live[relevant[k]] = on;
      const double p = graph.edge(relevant[k]).probability;
      weight *= on ? p : 1.0 - p;
    }
    reached.clear();
    auto base = search.begin();
    search.expand(graph, seeds, base, is_live, kNoBlock, &reached);
    for (NodeId v : reached) {
      if (!certain[v]) result.p[v] += weight;
    }
    if (!want_gains) continue;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const NodeId c = candidates[i];
      if (certain[c] || search.marked(c, base)) continue;
      const NodeId start[] = {c};
      auto added = extra.expand(graph, start, extra.begin(), is_live,
                                [&](NodeId v) { return search.marked(v, base); });
      result.gains[i] += weight * static_cast<double>(added);
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (certain[v]) result.p[v] = 1.0;
  }
  return result;
}

struct McResult {
  std::vector<std::uint64_t> counts;
  std::uint64_t base_total = 0;
  std::vector<std::uint64_t> gain_counts;
};

McResult mc_simulate(const DirectedGraph& graph, std::span<const NodeId> seeds,
                     std::span<const EdgeKind> kinds, std::span<const NodeId> candidates,
                     bool want_gains, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error("bad-samples", "sample count must be positive");
  const std::size_t n = graph.node_count();
  Searcher search(n);
  Searcher extra(n);
  McResult result;
  result.counts.assign(n, 0);
  result.gain_counts.assign(want_gains ? candidates.size() : 0, 0);
  std::vector<NodeId> reached;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::uint64_t sample_key = hash_combine(seed, s);
    auto is_live = [&](EdgeId e) {
      switch (kinds[e]) {
        case EdgeKind::kLive: return true;
        case EdgeKind::kBlocked: return false;
        case EdgeKind::kRandom: break;
      }
      const std::uint64_t bits =
          splitmix64(sample_key + 0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(e) + 1));
      return to_unit(bits) < graph.edge(e).probability;
    };
    reached.clear();
    auto base = search.begin();
    search.expand(graph, seeds, base, is_live, kNoBlock, &reached);
    for (NodeId v : reached) ++result.counts[v];
    result.base_total += reached.size();
    if (!want_gains) continue;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const NodeId c = candidates[i];
      if (search.marked(c, base)) continue;
      const NodeId start[] = {c};
      result.gain_counts[i] += extra.expand(graph, start, extra.begin(), is_live,
                                            [&](NodeId v) { return search.marked(v, base); });
    }
  }
  return result;
}

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string memo_key(char kind, std::span<const NodeId> seeds,
                     const PartialRealization& partial,
                     std::span<const NodeId> candidates) {
  std::vector<NodeId> sorted(seeds.begin(), seeds.end());
  std::sort(sorted.begin(), sorted.end());
  std::string key(1, kind);
  auto append = [&](std::span<const NodeId> ids) {
    key.append(reinterpret_cast<const char*>(ids.data()), ids.size() * sizeof(NodeId));
    key.push_back('|');
  };
  append(sorted);
  append(candidates);
  for (EdgeState s : partial.states()) key.push_back(static_cast<char>(s));
  return key;
}

}  // namespace

std::vector<NodeId> ActivationEstimate::zero_set() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < in_zero_set.size(); ++v) {
    if (in_zero_set[v]) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> zero_probability_set(const DirectedGraph& graph,
                                         std::span<const NodeId> seeds,
                                         const PartialRealization& partial) {
  check_nodes(graph, seeds);
  auto mask = zero_mask(graph, seeds, classify_edges(graph, partial));
  std::vector<NodeId> out;
  for (NodeId v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

ActivationEstimate exact_conditional_activation(const DirectedGraph& graph,
                                                std::span<const NodeId> seeds,
                                                const PartialRealization& partial) {
  check_nodes(graph, seeds);
  auto kinds = classify_edges(graph, partial);
  auto result = exact_enumerate(graph, seeds, kinds, {}, false);
  return finish_estimate(std::move(result.p), zero_mask(graph, seeds, kinds), "exact");
}

GainTable exact_gains(const DirectedGraph& graph, std::span<const NodeId> seeds,
                      const PartialRealization& partial,
                      std::span<const NodeId> candidates) {
  check_nodes(graph, seeds);
  check_nodes(graph, candidates);
  auto kinds = classify_edges(graph, partial);
  auto result = exact_enumerate(graph, seeds, kinds, candidates, true);
  GainTable table;
  for (double p : result.p) table.base_f += p;
  table.candidates.assign(candidates.begin(), candidates.end());
  table.gains = std::move(result.gains);
  return table;
}

ActivationEstimate mc_conditional_activation(const DirectedGraph& graph,
                                             std::span<const NodeId> seeds,
                                             const PartialRealization& partial,
                                             std::uint64_t samples, std::uint64_t seed) {
  check_nodes(graph, seeds);
  auto kinds = classify_edges(graph, partial);
  auto result = mc_simulate(graph, seeds, kinds, {}, false, samples, seed);
  std::vector<double> p(graph.node_count());
  for (NodeId v = 0; v < p.size(); ++v) {
    p[v] = static_cast<double>(result.counts[v]) / static_cast<double>(samples);
  }
  return finish_estimate(std::move(p), zero_mask(graph, seeds, kinds),
                         "monte-carlo(" + std::to_string(samples) + ")");
}

GainTable mc_gains(const DirectedGraph& graph, std::span<const NodeId> seeds,
                   const PartialRealization& partial, std::span<const NodeId> candidates,
                   std::uint64_t samples, std::uint64_t seed) {
  check_nodes(graph, seeds);
  check_nodes(graph, candidates);
  auto kinds = classify_edges(graph, partial);
  auto result = mc_simulate(graph, seeds, kinds, candidates, true, samples, seed);
  GainTable table;
  const auto denom = static_cast<double>(samples);
  table.base_f = static_cast<double>(result.base_total) / denom;
  table.candidates.assign(candidates.begin(), candidates.end());
  table.gains.resize(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    table.gains[i] = static_cast<double>(result.gain_counts[i]) / denom;
  }
  return table;
}

std::string to_string(EpsilonMode mode) {
  switch (mode) {
    case EpsilonMode::kRandom: return "random";
    case EpsilonMode::kAdversarialHigh: return "adversarial-high";
    case EpsilonMode::kAdversarialLow: return "adversarial-low";
  }
  return "random";
}

EpsilonMode parse_epsilon_mode(std::string_view text) {
  if (text == "random") return EpsilonMode::kRandom;
  if (text == "adversarial-high") return EpsilonMode::kAdversarialHigh;
  if (text == "adversarial-low") return EpsilonMode::kAdversarialLow;
  throw Error("bad-eps-mode", "unknown epsilon mode '" + std::string(text) + "'");
}

Estimator Estimator::exact() { return Estimator(); }

Estimator Estimator::exact_memoized() {
  Estimator est;
  est.memo_ = std::make_shared<ExactMemo>();
  return est;
}

Estimator Estimator::monte_carlo(std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error("bad-samples", "sample count must be positive");
  Estimator est;
  est.backend_ = Backend::kMonteCarlo;
  est.samples_ = samples;
  est.seed_ = seed;
  return est;
}

Estimator Estimator::memoized() const {
  Estimator copy = *this;
  if (backend_ == Backend::kExact) copy.memo_ = std::make_shared<ExactMemo>();
  return copy;
}

Estimator Estimator::with_stream(std::uint64_t stream) const {
  Estimator copy = *this;
  copy.stream_ = stream;
  copy.queries_ = 0;
  return copy;
}

bool Estimator::is_perturbed() const {
  return std::any_of(perturbations_.begin(), perturbations_.end(),
                     [](const Perturbation& p) { return p.epsilon > 0.0; });
}

std::uint64_t Estimator::next_query_key() {
  return hash_combine(seed_, stream_, queries_++);
}

double Estimator::perturb(double value, std::uint64_t query, std::uint64_t index) const {
  for (const Perturbation& pert : perturbations_) {
    if (pert.epsilon == 0.0) continue;
    double factor = 1.0;
    switch (pert.mode) {
      case EpsilonMode::kAdversarialHigh: factor = 1.0 + pert.epsilon; break;
      case EpsilonMode::kAdversarialLow: factor = 1.0 - pert.epsilon; break;
      case EpsilonMode::kRandom: {
        const double u = to_unit(hash_combine(pert.seed, query, index));
        factor = 1.0 - pert.epsilon + 2.0 * pert.epsilon * u;
        break;
      }
    }
    value *= factor;
  }
  return value;
}

ActivationEstimate Estimator::estimate(const DirectedGraph& graph,
                                       std::span<const NodeId> seeds,
                                       const PartialRealization& partial) {
  const std::uint64_t key = next_query_key();
  ActivationEstimate est;
  if (backend_ == Backend::kMonteCarlo) {
    est = mc_conditional_activation(graph, seeds, partial, samples_, key);
  } else if (memo_) {
    memo_->bind(graph);
    auto memo = memo_key('e', seeds, partial, {});
    auto it = memo_->estimates.find(memo);
    if (it == memo_->estimates.end()) {
      it = memo_->estimates.emplace(memo, exact_conditional_activation(graph, seeds, partial)).first;
    }
    est = it->second;
  } else {
    est = exact_conditional_activation(graph, seeds, partial);
  }
  if (is_perturbed()) {
    est.f = perturb(est.f, key, 0);
    est.backend = tag();
  }
  return est;
}

GainTable Estimator::gains(const DirectedGraph& graph, std::span<const NodeId> seeds,
                           const PartialRealization& partial,
                           std::span<const NodeId> candidates) {
  const std::uint64_t key = next_query_key();
  GainTable table;
  if (backend_ == Backend::kMonteCarlo) {
    table = mc_gains(graph, seeds, partial, candidates, samples_, key);
  } else if (memo_) {
    memo_->bind(graph);
    auto memo = memo_key('g', seeds, partial, candidates);
    auto it = memo_->gains.find(memo);
    if (it == memo_->gains.end()) {
      it = memo_->gains.emplace(memo, exact_gains(graph, seeds, partial, candidates)).first;
    }
    table = it->second;
  } else {
    table = exact_gains(graph, seeds, partial, candidates);
  }
  if (is_perturbed()) {
    const double base = perturb(table.base_f, key, 0);
    for (std::size_t i = 0; i < table.gains.size(); ++i) {
      table.gains[i] = perturb(table.base_f + table.gains[i], key, i + 1) - base;
    }
    table.base_f = base;
  }
  return table;
}

std::string Estimator::tag() const {
  std::string out = backend_ == Backend::kExact
                        ? std::string("exact")
                        : "monte-carlo(" + std::to_string(samples_) + ")";
  for (const Perturbation& pert : perturbations_) {
    out = "epsilon-wrapped(" + format_number(pert.epsilon) + ";" + to_string(pert.mode) +
          ";" + out + ")";
  }
  return out;
}

Estimator epsilon_wrap(const Estimator& inner, double epsilon, EpsilonMode mode,
                       std::uint64_t seed) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw Error("bad-epsilon", "epsilon must lie in [0, 1)");
  }
  Estimator wrapped = inner;
  wrapped.perturbations_.push_back({epsilon, mode, seed});
  return wrapped;
}

double marginal_gain(Estimator& estimator, const DirectedGraph& graph,
                     std::span<const NodeId> seeds, const PartialRealization& partial,
                     NodeId candidate) {
  if (std::find(seeds.begin(), seeds.end(), candidate) != seeds.end()) {
    throw Error("already-seed", "candidate " + std::to_string(candidate) + " is already a seed");
  }
  const NodeId one[] = {candidate};
  return estimator.gains(graph, seeds, partial, one).gains[0];
}

}  // namespace pfim
