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

#include "pfim/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "pfim/bounds.hpp"
#include "pfim/diffusion.hpp"
#include "pfim/error.hpp"
#include "pfim/oracles.hpp"
#include "pfim/random.hpp"

namespace pfim {
namespace {

std::string format_g(double value, int digits = 9) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

// Keeps trailing zeros so every value shows exactly `digits` significant digits.
std::string format_fixed_digits(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.*g", digits, value);
  return buf;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void field_error(std::string_view key, const std::string& why) {
  throw Error("bad-config", "field '" + std::string(key) + "': " + why);
}

double parse_real(std::string_view key, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
      !std::isfinite(value)) {
    field_error(key, "expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_count(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    field_error(key, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

Cost parse_cost(std::string_view key, std::string_view text) {
  try {
    return Cost::parse(trim(text));
  } catch (const Error& e) {
    field_error(key, e.what());
  }
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = text.find(',');
    parts.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return parts;
}

std::string choice(std::string_view key, std::string_view text,
                   std::initializer_list<std::string_view> allowed) {
  text = trim(text);
  for (std::string_view a : allowed) {
    if (a == text) return std::string(text);
  }
  std::string list;
  for (std::string_view a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  field_error(key, "expected one of " + list + ", got '" + std::string(text) + "'");
}

using Setter = std::function<void(ExperimentConfig&, std::string_view, std::string_view)>;

const std::vector<std::pair<std::string, Setter>>& setters() {
  static const std::vector<std::pair<std::string, Setter>> table = {
      {"graph", [](auto& c, auto, auto v) { c.graph = std::string(trim(v)); }},
      {"costs", [](auto& c, auto, auto v) { c.costs = std::string(trim(v)); }},
      {"nodes", [](auto& c, auto k, auto v) { c.nodes = parse_count(k, v); }},
      {"edges", [](auto& c, auto k, auto v) { c.edges = parse_count(k, v); }},
      {"model",
       [](auto& c, auto k, auto v) { c.model = choice(k, v, {"erdos-renyi", "scale-free-ish"}); }},
      {"cost-mode",
       [](auto& c, auto k, auto v) { c.cost_mode = choice(k, v, {"unit", "file", "random"}); }},
      {"cost-lo", [](auto& c, auto k, auto v) { c.cost_lo = parse_cost(k, v); }},
      {"cost-hi", [](auto& c, auto k, auto v) { c.cost_hi = parse_cost(k, v); }},
      {"i", [](auto& c, auto k, auto v) { c.i = static_cast<int>(parse_count(k, v)); }},
      {"prob-base", [](auto& c, auto k, auto v) { c.prob_base = parse_real(k, v); }},
      {"alpha",
       [](auto& c, auto k, auto v) {
         c.alpha.clear();
         for (auto part : split_list(v)) c.alpha.push_back(parse_real(k, part));
       }},
      {"budget",
       [](auto& c, auto k, auto v) {
         c.budget.clear();
         for (auto part : split_list(v)) c.budget.push_back(parse_cost(k, part));
       }},
      {"policy",
       [](auto& c, auto k, auto v) {
         c.policy = choice(k, v, {"uniform", "nonuniform", "enhanced"});
       }},
      {"estimator", [](auto& c, auto k, auto v) { c.estimator = choice(k, v, {"exact", "mc"}); }},
      {"samples", [](auto& c, auto k, auto v) { c.samples = parse_count(k, v); }},
      {"epsilon", [](auto& c, auto k, auto v) { c.epsilon = parse_real(k, v); }},
      {"eps-mode",
       [](auto& c, auto k, auto v) {
         c.eps_mode = choice(k, v, {"random", "adversarial-high", "adversarial-low"});
       }},
      {"realizations", [](auto& c, auto k, auto v) { c.realizations = parse_count(k, v); }},
      {"seed", [](auto& c, auto k, auto v) { c.seed = parse_count(k, v); }},
      {"out", [](auto& c, auto, auto v) { c.out = std::string(trim(v)); }},
      {"eval", [](auto& c, auto k, auto v) { c.eval = choice(k, v, {"sampled", "exact"}); }},
      {"transcript", [](auto& c, auto, auto v) { c.transcript = std::string(trim(v)); }},
      {"variant",
       [](auto& c, auto k, auto v) {
         c.variant = choice(k, v, {"uniform", "nonuniform", "enhanced", "uniform-eps",
                                   "nonuniform-eps", "enhanced-eps", "all"});
       }},
      {"n", [](auto& c, auto k, auto v) { c.n = parse_real(k, v); }},
      {"c-max", [](auto& c, auto k, auto v) { c.c_max = parse_real(k, v); }},
      {"c-min", [](auto& c, auto k, auto v) { c.c_min = parse_real(k, v); }},
      {"f-star", [](auto& c, auto k, auto v) { c.f_star = parse_real(k, v); }},
      {"instances", [](auto& c, auto k, auto v) { c.instances = parse_count(k, v); }},
  };
  return table;
}

void write_output(const ExperimentConfig& config, std::ostream& out, const std::string& text,
                  std::ostream& log) {
  if (config.out.empty()) {
    out << text;
  } else {
    write_file(config.out, text);
    log << "wrote " << config.out << '\n';
  }
}

PolicyConfig policy_config(const ExperimentConfig& config, const DirectedGraph& graph,
                           double alpha, Cost budget) {
  PolicyConfig pc{parse_policy_kind(config.policy), alpha, budget, build_estimator(config)};
  if (pc.kind == PolicyKind::kUniform) {
    if (!graph.has_unit_costs()) {
      throw Error("bad-config", "uniform policy needs unit costs (cost-mode = unit)");
    }
    if (budget.micros() % Cost::kScale != 0) {
      throw Error("bad-config", "field 'budget': uniform policy needs an integer budget");
    }
    if (budget > Cost::units(static_cast<std::int64_t>(graph.node_count()))) {
      throw Error("budget-exceeds-nodes", "budget exceeds node count under uniform cost");
    }
  }
  return pc;
}

ExactEvaluation evaluate(const ExperimentConfig& config, const DirectedGraph& graph,
                         const PolicyConfig& pc) {
  if (config.eval == "exact") return evaluate_policy_exact(graph, pc);
  return evaluate_policy_sampled(graph, pc, config.realizations, config.seed);
}

std::string csv_row(const ExperimentConfig& config, const PolicyConfig& pc,
                    const ExactEvaluation& e) {
  std::string row = format_g(pc.alpha) + "," + pc.budget.to_string() + "," +
                    std::to_string(config.i) + "," + to_string(pc.kind) + "," +
                    pc.estimator.tag() + "," + std::to_string(e.count) + "," +
                    format_g(e.value) + "," + format_g(e.std_error) + "," +
                    format_g(e.mean_slots) + "," + format_g(e.mean_seeds) + "," +
                    std::to_string(config.seed);
  return row + "\n";
}

// ---- oracle-check ---------------------------------------------------------

struct Named {
  std::string name;
  DirectedGraph graph;
};

DirectedGraph unit_graph(std::size_t n, std::vector<Edge> edges) {
  return DirectedGraph(n, std::move(edges), std::vector<Cost>(n, Cost::units(1)));
}

std::vector<Named> tiny_suite(const ExperimentConfig& config) {
  std::vector<Named> suite;
  suite.push_back({"single-edge", unit_graph(2, {{0, 1, 0.5}})});
  suite.push_back({"chain", unit_graph(3, {{0, 1, 0.5}, {1, 2, 0.5}})});
  suite.push_back({"diamond", unit_graph(4, {{0, 1, 0.5}, {0, 2, 0.5}, {1, 3, 0.5}, {2, 3, 0.5}})});
  suite.push_back({"fork", unit_graph(4, {{0, 1, 0.5}, {1, 2, 1.0}})});
  static constexpr double kLevels[] = {0.2, 0.5, 0.8, 1.0};
  for (std::size_t k = 0; k < config.instances; ++k) {
    const std::uint64_t s = hash_combine(config.seed, 0x7147, k);
    const std::size_t n = 3 + k % 4;
    const std::size_t m = std::min<std::size_t>(2 + k % 9, n * (n - 1));
    DirectedGraph g = generate_graph(n, m, GraphModel::kErdosRenyi, s);
    std::vector<double> p(g.edge_count());
    for (EdgeId e = 0; e < p.size(); ++e) p[e] = kLevels[hash_combine(s, e) % 4];
    suite.push_back({"generated-" + std::to_string(k), g.with_probabilities(std::move(p))});
  }
  return suite;
}

bool is_guard(const Error& e) {
  return e.code() == "too-large" || e.code() == "too-many-edges" || e.code() == "unsupported";
}

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  // Runs one check; guard errors become "skipped" lines.
  void run(const std::string& name, const std::function<std::string()>& body) {
    try {
      const std::string detail = body();
      out_ << "PASS " << name << (detail.empty() ? "" : " " + detail) << '\n';
    } catch (const Violation& v) {
      ++failures_;
      out_ << "FAIL " << name << " " << v.what() << '\n';
    } catch (const Error& e) {
      if (!is_guard(e)) throw;
      out_ << "SKIP " << name << " skipped: " << e.what() << '\n';
    }
  }

  void line(const std::string& text) { out_ << text << '\n'; }
  int failures() const { return failures_; }

  struct Violation : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

 private:
  std::ostream& out_;
  int failures_ = 0;
};

std::size_t budget_for(const DirectedGraph& g, std::size_t k) {
  return std::min<std::size_t>(1 + k % 3, g.node_count());
}

}  // namespace

void set_config_value(ExperimentConfig& config, std::string_view key, std::string_view value) {
  for (const auto& [name, setter] : setters()) {
    if (name == key) {
      setter(config, key, value);
      return;
    }
  }
  field_error(key, "unknown key");
}

void apply_config_text(ExperimentConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error("bad-config", "line " + std::to_string(line_no) + ": expected key = value");
    }
    set_config_value(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& entry : setters()) keys.push_back(entry.first);
  return keys;
}

void validate_config(const ExperimentConfig& config) {
  if (config.alpha.empty()) field_error("alpha", "at least one value required");
  for (double a : config.alpha) {
    if (!(a >= 0.0 && a <= 1.0)) field_error("alpha", "values must lie in [0, 1]");
  }
  if (config.budget.empty()) field_error("budget", "at least one value required");
  for (Cost b : config.budget) {
    if (b <= Cost{}) field_error("budget", "values must be positive");
  }
  if (config.realizations < 1) field_error("realizations", "must be at least 1");
  if (config.eval == "sampled" && config.realizations < 2) {
    field_error("realizations", "sampled evaluation needs at least 2");
  }
  if (config.samples < 1) field_error("samples", "must be at least 1");
  if (!(config.epsilon >= 0.0 && config.epsilon < 1.0)) field_error("epsilon", "must lie in [0, 1)");
  if (config.cost_mode == "file" && config.costs.empty()) {
    field_error("costs", "cost-mode = file needs a cost file");
  }
  if (config.cost_lo > config.cost_hi || config.cost_lo <= Cost{}) {
    field_error("cost-lo", "need 0 < cost-lo <= cost-hi");
  }
  if (!(config.prob_base > 0.0) || config.i * config.prob_base > 1.0) {
    field_error("prob-base", "need 0 < i * prob-base <= 1");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("missing-file", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("write-failed", "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write-failed", "cannot write '" + path + "'");
}

DirectedGraph build_graph(const ExperimentConfig& config) {
  DirectedGraph graph = config.graph.empty()
                            ? generate_graph(config.nodes, config.edges,
                                             config.model == "scale-free-ish"
                                                 ? GraphModel::kScaleFreeIsh
                                                 : GraphModel::kErdosRenyi,
                                             config.seed)
                            : load_graph(read_file(config.graph), Cost::units(1));
  // Generated graphs come with p = 1 everywhere, so they always get a level.
  const int level = config.i > 0 ? config.i : (config.graph.empty() ? 1 : 0);
  if (level > 0) {
    graph = assign_trivalency_probabilities(graph, level, config.seed, config.prob_base);
  }
  if (config.cost_mode == "file" || (!config.costs.empty() && config.cost_mode != "random")) {
    if (config.costs.empty()) field_error("costs", "cost-mode = file needs a cost file");
    graph = apply_cost_file(graph, read_file(config.costs));
  } else if (config.cost_mode == "random") {
    graph = assign_random_costs(graph, config.cost_lo, config.cost_hi, config.seed);
  }
  return graph;
}

Estimator build_estimator(const ExperimentConfig& config) {
  Estimator est = config.estimator == "exact"
                      ? Estimator::exact()
                      : Estimator::monte_carlo(config.samples, hash_combine(config.seed, 0xE57));
  if (config.epsilon > 0.0) {
    est = epsilon_wrap(est, config.epsilon, parse_epsilon_mode(config.eps_mode),
                       hash_combine(config.seed, 0xE95));
  }
  return est;
}

int cmd_sweep_alpha(const ExperimentConfig& config, std::ostream& out, std::ostream& log) {
  validate_config(config);
  const DirectedGraph graph = build_graph(config);
  std::vector<PolicyConfig> cells;
  for (Cost budget : config.budget) {
    for (double alpha : config.alpha) cells.push_back(policy_config(config, graph, alpha, budget));
  }
  std::string csv = std::string(kCsvHeader) + "\n";
  for (const PolicyConfig& pc : cells) {
    const ExactEvaluation e = evaluate(config, graph, pc);
    log << "alpha=" << format_g(pc.alpha) << " budget=" << pc.budget.to_string()
        << " spread=" << format_g(e.value) << '\n';
    csv += csv_row(config, pc, e);
  }
  write_output(config, out, csv, log);
  return 0;
}

int cmd_evaluate(const ExperimentConfig& config, std::ostream& out, std::ostream& log) {
  validate_config(config);
  const DirectedGraph graph = build_graph(config);
  const PolicyConfig pc = policy_config(config, graph, config.alpha.front(), config.budget.front());
  const ExactEvaluation e = evaluate(config, graph, pc);
  write_output(config, out, std::string(kCsvHeader) + "\n" + csv_row(config, pc, e), log);
  log << "mean " << format_g(e.value) << " +- " << format_g(e.std_error) << '\n';

  // Transcript of the first sampled world, the same world evaluation uses.
  std::string path = config.transcript;
  if (path.empty() && !config.out.empty()) path = config.out + ".transcript";
  if (!path.empty()) {
    const std::uint64_t world_seed = config.seed;
    FullRealization world = sample_full_realization(graph, hash_combine(world_seed, 0xA11ULL));
    const PolicyRun run = run_policy(graph, pc, world, world_seed);
    write_file(path, format_transcript(run));
    log << "transcript " << path << '\n';
  }
  return 0;
}

int cmd_oracle_check(const ExperimentConfig& config, std::ostream& out, std::ostream& log) {
  validate_config(config);
  std::vector<Named> suite;
  if (config.graph.empty()) {
    suite = tiny_suite(config);
  } else {
    suite.push_back({config.graph, build_graph(config)});
  }
  const bool corrupted = config.epsilon > 0.0;
  Estimator policy_estimator = Estimator::exact();
  if (corrupted) {
    policy_estimator = epsilon_wrap(policy_estimator, config.epsilon,
                                    parse_epsilon_mode(config.eps_mode),
                                    hash_combine(config.seed, 0xE95));
  }
  Report report(out);
  report.line("# policy estimator " + policy_estimator.tag());
  const double bound = bound_uniform(1.0);
  std::size_t agreement_pairs = 0, agreement_inside = 0;

  for (std::size_t k = 0; k < suite.size(); ++k) {
    const Named& item = suite[k];
    const DirectedGraph& g = item.graph;
    const std::size_t budget = budget_for(g, k);
    report.line("# " + item.name + " n=" + std::to_string(g.node_count()) +
                " m=" + std::to_string(g.edge_count()) + " B=" + std::to_string(budget));

    report.run("alpha1-guarantee " + item.name, [&]() -> std::string {
      const double optimum = optimal_full_feedback_adaptive(g, budget);
      PolicyConfig pc{PolicyKind::kUniform, 1.0, Cost::units(static_cast<std::int64_t>(budget)),
                      policy_estimator};
      const double value = evaluate_policy_exact(g, pc).value;
      const double ratio = optimum > 0.0 ? value / optimum : 1.0;
      std::string detail = "ratio=" + format_g(ratio, 7) + " bound=" + format_g(bound, 7);
      if (ratio < bound - 1e-9) {
        if (corrupted) return detail + " DEGRADED under " + policy_estimator.tag();
        throw Report::Violation(detail);
      }
      return detail;
    });

    report.run("alpha0-nonadaptive " + item.name, [&]() -> std::string {
      if (!g.has_unit_costs()) throw Error("unsupported", "needs unit costs");
      const std::vector<NodeId> expected = nonadaptive_greedy(g, budget);
      FullRealization world = sample_full_realization(g, hash_combine(config.seed, k));
      const PolicyRun run =
          run_alpha_greedy_uniform(g, 0.0, budget, world, Estimator::exact(), config.seed);
      std::vector<NodeId> got;
      for (const SeedEntry& s : run.schedule.entries()) {
        if (s.slot != 0) throw Report::Violation("seed selected after slot 0");
        got.push_back(s.node);
      }
      if (got != expected) throw Report::Violation("seed set differs from greedy");
      return "seeds=" + std::to_string(got.size());
    });

    report.run("estimator-agreement " + item.name, [&]() -> std::string {
      const std::uint64_t samples = 10'000;
      std::size_t pairs = 0, inside = 0;
      for (NodeId s = 0; s < g.node_count(); ++s) {
        const std::vector<NodeId> seeds = {s};
        FullRealization world = sample_full_realization(g, hash_combine(config.seed, k, s));
        SeedSchedule schedule;
        schedule.add(s, 0);
        PartialRealization psi = observe(g, world, schedule, 1 + s % 2);
        const ActivationEstimate exact = exact_conditional_activation(g, seeds, psi);
        const ActivationEstimate mc = mc_conditional_activation(
            g, seeds, psi, samples, hash_combine(config.seed, 0x3C, k, s));
        const auto zero = zero_probability_set(g, seeds, psi);
        for (NodeId v = 0; v < g.node_count(); ++v) {
          const double p = exact.p[v];
          const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(samples));
          ++pairs;
          inside += std::abs(mc.p[v] - p) <= 3 * sigma + 1e-12;
          if (std::binary_search(zero.begin(), zero.end(), v) != (p == 0.0)) {
            throw Report::Violation("zero set disagrees at node " + std::to_string(v));
          }
        }
      }
      agreement_pairs += pairs;
      agreement_inside += inside;
      return "within3sigma=" + std::to_string(inside) + "/" + std::to_string(pairs);
    });

    report.run("observation-invariants " + item.name, [&]() -> std::string {
      std::size_t triples = 0;
      for (std::uint64_t t = 0; t < 20; ++t) {
        const std::uint64_t s = hash_combine(config.seed, 0x0B5, k, t);
        FullRealization world = sample_full_realization(g, s);
        SeedSchedule schedule;
        schedule.add(static_cast<NodeId>(s % g.node_count()), 0);
        const auto second = static_cast<NodeId>((s >> 8) % g.node_count());
        if (!schedule.contains(second)) schedule.add(second, static_cast<Slot>((s >> 16) % 3));
        std::vector<Edge> live;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          if (world.is_live(e)) live.push_back(g.edge(e));
        }
        const std::size_t live_diameter = diameter(unit_graph(g.node_count(), live));
        const Slot settle = schedule.last_slot() + static_cast<Slot>(live_diameter) + 1;
        PartialRealization previous = observe(g, world, schedule, schedule.last_slot());
        for (Slot slot = schedule.last_slot() + 1; slot <= settle + 2; ++slot) {
          PartialRealization now = observe(g, world, schedule, slot);
          if (!previous.is_subset_of(now)) throw Report::Violation("observation shrank");
          if (!now.is_consistent_with(world)) throw Report::Violation("inconsistent observation");
          if (slot > settle && !(now == previous)) throw Report::Violation("not settled");
          previous = std::move(now);
          ++triples;
        }
      }
      return "triples=" + std::to_string(triples);
    });
  }

  // The 3-sigma rate is judged over the whole suite, where a 99% floor is
  // meaningful.
  if (agreement_pairs > 0) {
    report.run("estimator-agreement overall", [&]() -> std::string {
      const std::string detail = "within3sigma=" + std::to_string(agreement_inside) + "/" +
                                 std::to_string(agreement_pairs);
      if (agreement_inside * 100 < agreement_pairs * 99) throw Report::Violation(detail);
      return detail;
    });
  }
  const int failures = report.failures();
  report.line(failures == 0 ? "oracle-check: ok" : "oracle-check: " + std::to_string(failures) +
                                                       " violation(s)");
  log << "checked " << suite.size() << " graph(s)\n";
  return failures == 0 ? 0 : 1;
}

int cmd_bound(const ExperimentConfig& config, std::ostream& out, std::ostream&) {
  const double alpha = config.alpha.empty() ? 1.0 : config.alpha.front();
  if (!(alpha >= 0.0 && alpha <= 1.0)) field_error("alpha", "must lie in [0, 1]");
  if (!(config.epsilon >= 0.0 && config.epsilon < 1.0)) field_error("epsilon", "must lie in [0, 1)");
  const double budget = config.budget.empty() ? 1.0 : config.budget.front().to_double();
  const double eps = config.epsilon;
  auto emit = [&](const std::string& name, double value, bool can_be_vacuous) {
    out << name << " " << format_fixed_digits(value, 7);
    if (can_be_vacuous && value < 0.0) out << " vacuous";
    out << '\n';
  };
  auto check_costs = [&] {
    if (!(config.c_max > 0.0 && config.c_max <= budget)) {
      field_error("c-max", "need 0 < c-max <= budget");
    }
  };
  auto check_cmin = [&] {
    if (!(config.c_min > 0.0)) field_error("c-min", "must be positive");
  };
  const std::string& v = config.variant;
  const bool all = v == "all";
  if (all || v == "uniform") emit("uniform", bound_uniform(alpha), false);
  if (all || v == "nonuniform") {
    check_costs();
    emit("nonuniform", bound_nonuniform(alpha, budget, config.c_max), false);
  }
  if (all || v == "enhanced") emit("enhanced", bound_enhanced(alpha), false);
  if (all || v == "uniform-eps") {
    emit("uniform-eps", bound_uniform_eps(alpha, eps, config.n, config.f_star).value, true);
  }
  if (all || v == "nonuniform-eps") {
    check_costs();
    check_cmin();
    emit("nonuniform-eps",
         bound_nonuniform_eps(alpha, eps, config.n, budget, config.c_max, config.c_min,
                              config.f_star)
             .value,
         true);
  }
  if (all || v == "enhanced-eps") {
    check_cmin();
    emit("enhanced-eps",
         bound_enhanced_eps(alpha, eps, config.n, budget, config.c_min, config.f_star).value,
         true);
  }
  return 0;
}

int cmd_gen_graph(const ExperimentConfig& config, std::ostream& out, std::ostream& log) {
  // Level 1 unless asked otherwise.
  const int level = config.i > 0 ? config.i : 1;
  if (!(config.prob_base > 0.0) || level * config.prob_base > 1.0) {
    field_error("prob-base", "need 0 < i * prob-base <= 1");
  }
  const GraphModel model =
      config.model == "scale-free-ish" ? GraphModel::kScaleFreeIsh : GraphModel::kErdosRenyi;
  DirectedGraph graph = generate_graph(config.nodes, config.edges, model, config.seed);
  graph = assign_trivalency_probabilities(graph, level, config.seed, config.prob_base);
  write_output(config, out, serialize_graph(graph), log);
  return 0;
}

}  // namespace pfim
