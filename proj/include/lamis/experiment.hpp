#pragma once

// Experiment runner: builds instances and oracles per trial, runs one
// algorithm, validates its output, and collects trial records.
//
// Seeding. Each trial has a trial seed s (listed explicitly, or derived as
// derive_seed(seed_base, i) for trial i). From s:
//   instance seed  = instance.seed if given, else derive_seed(s, 1)
//   oracle seed    = derive_seed(derive_seed(s, 2), oracle.seed)
//   algorithm seed = derive_seed(s, 3)   (sampler coin flips, random greedy order)
// so adding trials never perturbs earlier ones.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "lamis/bandit.hpp"
#include "lamis/baselines.hpp"
#include "lamis/errors.hpp"
#include "lamis/instance.hpp"
#include "lamis/io.hpp"
#include "lamis/mis.hpp"
#include "lamis/oracle.hpp"
#include "lamis/persistent.hpp"
#include "lamis/random.hpp"

namespace lamis {

enum class AlgorithmId { persistent, bandit, sampler, amplify, greedy, exact };

inline const char* to_string(AlgorithmId a) {
  switch (a) {
    case AlgorithmId::persistent:
      return "persistent";
    case AlgorithmId::bandit:
      return "bandit";
    case AlgorithmId::sampler:
      return "sampler";
    case AlgorithmId::amplify:
      return "amplify";
    case AlgorithmId::greedy:
      return "greedy";
    case AlgorithmId::exact:
      return "exact";
  }
  return "greedy";
}

inline AlgorithmId parse_algorithm(const std::string& s) {
  if (s == "persistent") return AlgorithmId::persistent;
  if (s == "bandit") return AlgorithmId::bandit;
  if (s == "sampler") return AlgorithmId::sampler;
  if (s == "amplify") return AlgorithmId::amplify;
  if (s == "greedy") return AlgorithmId::greedy;
  if (s == "exact") return AlgorithmId::exact;
  throw ConfigError("unknown algorithm '" + s + "'");
}

inline bool uses_oracle(AlgorithmId a) { return a != AlgorithmId::greedy && a != AlgorithmId::exact; }

inline NoiseMode default_mode(AlgorithmId a) {
  return a == AlgorithmId::persistent ? NoiseMode::persistent_random : NoiseMode::bandit_bernoulli;
}

struct InstanceSpec {
  std::optional<std::string> path;
  GraphModel model = GraphModel::gnp;
  std::size_t n = 100;
  double alpha = 0.5;
  double p = 0.05;
  std::size_t degree = 10;
  bool ensure_maximal = false;
  std::optional<std::uint64_t> seed;
};

struct AlgorithmParams {
  // bandit (and the bandit base routine inside amplify)
  double delta = 0.1;
  double budget_coeff = 30.0;
  double schedule_coeff = 4.0;
  // persistent
  double low_degree_cutoff_coeff = 36.0;
  double threshold_coeff = 6.0;
  GreedyOrder greedy_order = GreedyOrder::ascending_id;
  // sampler; unset means the size-dependent defaults
  std::optional<double> sample_prob;
  std::optional<std::uint64_t> queries_per_sampled;
  // amplify; unset means the size-dependent defaults
  std::optional<std::uint64_t> amplify_rounds;
  std::optional<std::uint64_t> amplify_reps;
  std::optional<std::uint64_t> amplify_final_queries;
};

struct ExperimentConfig {
  AlgorithmId algorithm = AlgorithmId::greedy;
  InstanceSpec instance;
  OracleConfig oracle;
  bool oracle_mode_set = false;  // false: pick the algorithm's natural mode
  AlgorithmParams params;
  std::vector<std::uint64_t> seeds{1};
  std::string output;
  std::string format = "csv";
  unsigned workers = 1;

  NoiseMode resolved_mode() const { return oracle_mode_set ? oracle.mode : default_mode(algorithm); }

  void validate() const {
    if (seeds.empty()) throw ConfigError("experiment needs at least one seed");
    if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
    if (uses_oracle(algorithm)) {
      OracleConfig o = oracle;
      o.mode = resolved_mode();
      o.validate();
      const bool persistent_alg = algorithm == AlgorithmId::persistent;
      if (persistent_alg != is_persistent(o.mode)) {
        throw ConfigError(std::string("oracle mode ") + to_string(o.mode) + " does not suit algorithm " +
                          to_string(algorithm));
      }
      if ((algorithm == AlgorithmId::sampler || algorithm == AlgorithmId::amplify) &&
          o.mode == NoiseMode::bandit_gaussian) {
        throw ConfigError(std::string(to_string(algorithm)) + " needs a Bernoulli oracle");
      }
    }
  }
};

/// Derived trial seeds: derive_seed(base, i) for i in [0, count).
inline std::vector<std::uint64_t> derived_seeds(std::uint64_t base, std::size_t count) {
  std::vector<std::uint64_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = derive_seed(base, i);
  return out;
}

// ---------------------------------------------------------------------------
// JSON config schema
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const OracleConfig& c) {
  return {{"epsilon", c.epsilon}, {"mode", to_string(c.mode)}, {"k", c.k}, {"seed", c.seed},
          {"apply_cap", c.apply_cap}};
}

inline OracleConfig oracle_config_from_json(const nlohmann::json& j) {
  OracleConfig c;
  c.epsilon = j.value("epsilon", c.epsilon);
  if (j.contains("mode")) c.mode = parse_noise_mode(j.at("mode").get<std::string>());
  c.k = j.value("k", c.k);
  c.seed = j.value("seed", c.seed);
  c.apply_cap = j.value("apply_cap", c.apply_cap);
  return c;
}

namespace detail {

template <class T>
void read_optional(const nlohmann::json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace detail

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  try {
    c.algorithm = parse_algorithm(j.value("algorithm", std::string("greedy")));
    if (j.contains("instance")) {
      const auto& ij = j.at("instance");
      detail::read_optional(ij, "path", c.instance.path);
      if (ij.contains("model")) c.instance.model = parse_graph_model(ij.at("model").get<std::string>());
      c.instance.n = ij.value("n", c.instance.n);
      c.instance.alpha = ij.value("alpha", c.instance.alpha);
      c.instance.p = ij.value("p", c.instance.p);
      c.instance.degree = ij.value("d", c.instance.degree);
      c.instance.ensure_maximal = ij.value("ensure_maximal", c.instance.ensure_maximal);
      detail::read_optional(ij, "seed", c.instance.seed);
    }
    if (j.contains("oracle")) {
      c.oracle = oracle_config_from_json(j.at("oracle"));
      c.oracle_mode_set = j.at("oracle").contains("mode");
    }
    if (j.contains("params")) {
      const auto& pj = j.at("params");
      auto& p = c.params;
      p.delta = pj.value("delta", p.delta);
      p.budget_coeff = pj.value("budget_coeff", p.budget_coeff);
      p.schedule_coeff = pj.value("schedule_coeff", p.schedule_coeff);
      p.low_degree_cutoff_coeff = pj.value("low_degree_cutoff_coeff", p.low_degree_cutoff_coeff);
      p.threshold_coeff = pj.value("threshold_coeff", p.threshold_coeff);
      if (pj.contains("greedy_order")) p.greedy_order = parse_greedy_order(pj.at("greedy_order").get<std::string>());
      detail::read_optional(pj, "sample_prob", p.sample_prob);
      detail::read_optional(pj, "queries_per_sampled", p.queries_per_sampled);
      detail::read_optional(pj, "amplify_rounds", p.amplify_rounds);
      detail::read_optional(pj, "amplify_reps", p.amplify_reps);
      detail::read_optional(pj, "amplify_final_queries", p.amplify_final_queries);
    }
    if (j.contains("seeds")) {
      c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    } else if (j.contains("seed_base")) {
      c.seeds = derived_seeds(j.at("seed_base").get<std::uint64_t>(), j.value("trials", std::size_t{1}));
    }
    c.output = j.value("output", c.output);
    c.format = j.value("format", c.format);
    c.workers = j.value("workers", c.workers);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad experiment config: ") + e.what());
  }
  return c;
}

inline nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json inst = {{"path", detail::optional_json(c.instance.path)},
                         {"model", to_string(c.instance.model)},
                         {"n", c.instance.n},
                         {"alpha", c.instance.alpha},
                         {"p", c.instance.p},
                         {"d", c.instance.degree},
                         {"ensure_maximal", c.instance.ensure_maximal},
                         {"seed", detail::optional_json(c.instance.seed)}};
  OracleConfig o = c.oracle;
  o.mode = c.resolved_mode();
  const auto& p = c.params;
  nlohmann::json params = {{"delta", p.delta},
                           {"budget_coeff", p.budget_coeff},
                           {"schedule_coeff", p.schedule_coeff},
                           {"low_degree_cutoff_coeff", p.low_degree_cutoff_coeff},
                           {"threshold_coeff", p.threshold_coeff},
                           {"greedy_order", to_string(p.greedy_order)},
                           {"sample_prob", detail::optional_json(p.sample_prob)},
                           {"queries_per_sampled", detail::optional_json(p.queries_per_sampled)},
                           {"amplify_rounds", detail::optional_json(p.amplify_rounds)},
                           {"amplify_reps", detail::optional_json(p.amplify_reps)},
                           {"amplify_final_queries", detail::optional_json(p.amplify_final_queries)}};
  return {{"algorithm", to_string(c.algorithm)},
          {"instance", inst},
          {"oracle", to_json(o)},
          {"params", params},
          {"seeds", c.seeds},
          {"output", c.output},
          {"format", c.format},
          {"workers", c.workers}};
}

// ---------------------------------------------------------------------------
// Trial records
// ---------------------------------------------------------------------------

/// One row of the persistent filter debug dump.
struct FilterRow {
  Vertex v = 0;
  std::size_t degree = 0;
  std::uint32_t yes = 0;
  std::optional<double> threshold;
  bool low_degree = false;
  bool survivor = false;
};

struct TrialRecord {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  double alpha = 0.0;
  std::optional<double> epsilon;
  std::optional<double> delta;
  std::uint64_t seed = 0;
  std::size_t planted_size = 0;
  std::size_t set_size = 0;
  double ratio = 0.0;
  std::uint64_t total_queries = 0;
  std::optional<std::size_t> rounds;
  bool valid = false;
  double wall_time_ms = 0.0;

  // Not part of the CSV row.
  VertexSet output;
  std::vector<RoundRecord> trace;
  std::optional<std::string> terminated;
  std::vector<FilterRow> filter_rows;
};

/// CSV column order; wall_time_ms is last so determinism checks can drop it.
inline constexpr const char* kCsvHeader =
    "algorithm,n,m,max_degree,alpha,epsilon,delta,seed,planted_size,set_size,ratio,total_queries,rounds,valid,"
    "wall_time_ms";

inline std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline void write_csv_row(std::ostream& out, const TrialRecord& r, bool include_wall_time = true) {
  out << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.max_degree << ',' << format_real(r.alpha) << ','
      << (r.epsilon ? format_real(*r.epsilon) : "") << ',' << (r.delta ? format_real(*r.delta) : "") << ','
      << r.seed << ',' << r.planted_size << ',' << r.set_size << ',' << format_real(r.ratio) << ','
      << r.total_queries << ',' << (r.rounds ? std::to_string(*r.rounds) : "") << ',' << (r.valid ? 1 : 0);
  if (include_wall_time) out << ',' << format_real(r.wall_time_ms);
  out << '\n';
}

inline void write_csv(std::ostream& out, const std::vector<TrialRecord>& records, bool include_wall_time = true) {
  std::string header = kCsvHeader;
  if (!include_wall_time) header = header.substr(0, header.rfind(','));
  out << header << '\n';
  for (const auto& r : records) write_csv_row(out, r, include_wall_time);
}

inline nlohmann::json to_json(const RoundRecord& r) {
  return {{"round", r.round},
          {"q", r.queries_per_vertex},
          {"survivors_before", r.survivors_before},
          {"survivors_after", r.survivors_after},
          {"cover_size", r.cover_size},
          {"candidate_size", r.candidate_size},
          {"queries_before", r.queries_before},
          {"cumulative_queries", r.cumulative_queries}};
}

inline nlohmann::json to_json(const TrialRecord& r) {
  nlohmann::json j = {{"algorithm", r.algorithm},
                      {"n", r.n},
                      {"m", r.m},
                      {"max_degree", r.max_degree},
                      {"alpha", r.alpha},
                      {"epsilon", detail::optional_json(r.epsilon)},
                      {"delta", detail::optional_json(r.delta)},
                      {"seed", r.seed},
                      {"planted_size", r.planted_size},
                      {"set_size", r.set_size},
                      {"ratio", r.ratio},
                      {"total_queries", r.total_queries},
                      {"rounds", detail::optional_json(r.rounds)},
                      {"valid", r.valid},
                      {"wall_time_ms", r.wall_time_ms}};
  if (!r.trace.empty()) {
    auto rounds = nlohmann::json::array();
    for (const auto& rec : r.trace) rounds.push_back(to_json(rec));
    j["rounds_trace"] = std::move(rounds);
  }
  if (r.terminated) j["terminated"] = *r.terminated;
  return j;
}

inline void write_json(std::ostream& out, const std::vector<TrialRecord>& records) {
  auto arr = nlohmann::json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  out << arr.dump(2) << '\n';
}

inline void write_trace_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "seed,round,q,survivors_before,survivors_after,cover_size,candidate_size,queries_before,"
         "cumulative_queries\n";
  for (const auto& r : records) {
    for (const auto& t : r.trace) {
      out << r.seed << ',' << t.round << ',' << t.queries_per_vertex << ',' << t.survivors_before << ','
          << t.survivors_after << ',' << t.cover_size << ',' << t.candidate_size << ',' << t.queries_before << ','
          << t.cumulative_queries << '\n';
    }
  }
}

inline void write_filter_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "seed,v,deg,yes,s_v,in_L,in_S\n";
  for (const auto& r : records) {
    for (const auto& row : r.filter_rows) {
      out << r.seed << ',' << row.v << ',' << row.degree << ',' << row.yes << ','
          << (row.threshold ? format_real(*row.threshold) : "") << ',' << (row.low_degree ? 1 : 0) << ','
          << (row.survivor ? 1 : 0) << '\n';
    }
  }
}

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace detail

/// Parses CSV produced by write_csv (with or without the wall-time column).
inline std::vector<TrialRecord> read_csv(std::istream& in) {
  std::vector<TrialRecord> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line.rfind("algorithm,", 0) != 0) throw ParseError(line_no, "missing CSV header");
      header_seen = true;
      continue;
    }
    const auto f = detail::split_csv(line);
    if (f.size() != 14 && f.size() != 15) throw ParseError(line_no, "expected 14 or 15 CSV fields");
    try {
      TrialRecord r;
      r.algorithm = f[0];
      r.n = std::stoull(f[1]);
      r.m = std::stoull(f[2]);
      r.max_degree = std::stoull(f[3]);
      r.alpha = std::stod(f[4]);
      if (!f[5].empty()) r.epsilon = std::stod(f[5]);
      if (!f[6].empty()) r.delta = std::stod(f[6]);
      r.seed = std::stoull(f[7]);
      r.planted_size = std::stoull(f[8]);
      r.set_size = std::stoull(f[9]);
      r.ratio = std::stod(f[10]);
      r.total_queries = std::stoull(f[11]);
      if (!f[12].empty()) r.rounds = std::stoull(f[12]);
      r.valid = f[13] == "1";
      if (f.size() == 15) r.wall_time_ms = std::stod(f[14]);
      out.push_back(std::move(r));
    } catch (const std::exception&) {
      throw ParseError(line_no, "malformed CSV record");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Running
// ---------------------------------------------------------------------------

namespace detail {

inline PlantedInstance generate_instance(const InstanceSpec& spec, std::uint64_t seed) {
  switch (spec.model) {
    case GraphModel::gnp:
      return gen_planted_gnp(spec.n, spec.alpha, spec.p, seed, spec.ensure_maximal);
    case GraphModel::bounded_degree:
      return gen_planted_bounded_degree(spec.n, spec.alpha, spec.degree, seed);
    case GraphModel::external:
      break;
  }
  throw ConfigError("instance spec needs a path or a generator model");
}

inline void fill_filter_rows(TrialRecord& rec, const Graph& g, const PersistentReport& rep,
                             const PersistentParams& params) {
  const auto low = rep.low_degree.mask();
  const auto surv = rep.survivors.mask();
  const std::size_t n = g.num_vertices();
  rec.filter_rows.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    FilterRow row;
    row.v = static_cast<Vertex>(v);
    row.degree = g.degree(row.v);
    row.yes = rep.yes_counts[v];
    if (row.degree >= 1 && n >= 2) {
      row.threshold = survival_threshold(row.degree, params.epsilon_effective, static_cast<double>(n),
                                         params.threshold_coeff);
    }
    row.low_degree = low[v] != 0;
    row.survivor = surv[v] != 0;
    rec.filter_rows.push_back(row);
  }
}

}  // namespace detail

struct TrialOptions {
  bool keep_filter_rows = false;
};

/// Runs one trial on `inst`. Throws ValidationError if the output is not an
/// independent set.
inline TrialRecord run_trial(const ExperimentConfig& config, const PlantedInstance& inst, std::uint64_t trial_seed,
                             const TrialOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = inst.graph;
  const auto& p = config.params;
  TrialRecord rec;
  rec.algorithm = to_string(config.algorithm);
  rec.n = g.num_vertices();
  rec.m = g.num_edges();
  rec.max_degree = g.max_degree();
  rec.alpha = inst.params.alpha;
  rec.seed = trial_seed;
  rec.planted_size = inst.planted.size();

  const std::uint64_t algo_seed = derive_seed(trial_seed, 3);
  std::optional<Oracle> oracle;
  if (uses_oracle(config.algorithm)) {
    OracleConfig oc = config.oracle;
    oc.mode = config.resolved_mode();
    oc.seed = derive_seed(derive_seed(trial_seed, 2), config.oracle.seed);
    oracle.emplace(make_oracle(inst, oc));
    rec.epsilon = oc.epsilon;
  }

  auto bandit_params = [&](const Oracle& o) {
    BanditParams bp = BanditParams::for_oracle(o, p.delta);
    bp.budget_coeff = p.budget_coeff;
    bp.schedule_coeff = p.schedule_coeff;
    return bp;
  };

  switch (config.algorithm) {
    case AlgorithmId::persistent: {
      PersistentParams pp = PersistentParams::for_oracle(*oracle);
      pp.low_degree_cutoff_coeff = p.low_degree_cutoff_coeff;
      pp.threshold_coeff = p.threshold_coeff;
      pp.greedy_order = p.greedy_order;
      pp.order_seed = algo_seed;
      auto rep = run_persistent(g, *oracle, pp);
      if (options.keep_filter_rows) detail::fill_filter_rows(rec, g, rep, pp);
      rec.output = std::move(rep.independent_set);
      break;
    }
    case AlgorithmId::bandit: {
      auto res = run_bandit(g, *oracle, bandit_params(*oracle));
      rec.delta = p.delta;
      rec.rounds = res.trace.size();
      rec.terminated = to_string(res.terminated);
      rec.trace = std::move(res.trace);
      rec.output = std::move(res.best_set);
      break;
    }
    case AlgorithmId::sampler: {
      auto sp = SamplerParams::defaults(g.num_vertices(), oracle->config().epsilon, algo_seed);
      if (p.sample_prob) sp.sample_prob = *p.sample_prob;
      if (p.queries_per_sampled) sp.queries_per_sampled = *p.queries_per_sampled;
      rec.output = run_sampler(g.num_vertices(), *oracle, sp).selected;
      break;
    }
    case AlgorithmId::amplify: {
      auto ap = AmplifyParams::defaults(g.num_vertices(), oracle->config().epsilon);
      if (p.amplify_rounds) ap.rounds = *p.amplify_rounds;
      if (p.amplify_reps) ap.reps_per_round = *p.amplify_reps;
      if (p.amplify_final_queries) ap.final_queries = *p.amplify_final_queries;
      const BanditParams bp = bandit_params(*oracle);
      BaseAlgorithm base = [&g, bp](const VertexSet& residual, Oracle& o) {
        return run_bandit(g, residual, o, bp).best_set;
      };
      auto res = run_amplify(base, *oracle, g.num_vertices(), ap);
      rec.delta = p.delta;
      rec.rounds = res.promoted_per_round.size();
      rec.output = std::move(res.set);
      break;
    }
    case AlgorithmId::greedy:
      rec.output = run_greedy_baseline(g);
      break;
    case AlgorithmId::exact:
      rec.output = exact_mis(g);
      break;
  }

  rec.total_queries = oracle ? oracle->total_queries() : 0;
  rec.set_size = rec.output.size();
  rec.ratio = rec.planted_size == 0 ? (rec.set_size == 0 ? 1.0 : 0.0)
                                    : static_cast<double>(rec.set_size) / static_cast<double>(rec.planted_size);
  rec.valid = is_independent_set(g, rec.output);
  rec.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!rec.valid) {
    throw ValidationError(std::string("algorithm ") + rec.algorithm + " produced a non-independent set for seed " +
                          std::to_string(trial_seed));
  }
  return rec;
}

/// One record per seed, in seed-list order regardless of worker count.
inline std::vector<TrialRecord> run_experiment(const ExperimentConfig& config, const TrialOptions& options = {}) {
  config.validate();

  // A file or a fixed generator seed means every trial shares one instance.
  std::shared_ptr<const PlantedInstance> shared;
  if (config.instance.path) {
    shared = std::make_shared<const PlantedInstance>(read_instance(*config.instance.path));
  } else if (config.instance.seed) {
    shared = std::make_shared<const PlantedInstance>(detail::generate_instance(config.instance, *config.instance.seed));
  }

  const std::size_t trials = config.seeds.size();
  std::vector<TrialRecord> records(trials);
  std::vector<std::exception_ptr> errors(trials);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      try {
        const std::uint64_t s = config.seeds[i];
        if (shared) {
          records[i] = run_trial(config, *shared, s, options);
        } else {
          const auto inst = detail::generate_instance(config.instance, derive_seed(s, 1));
          records[i] = run_trial(config, inst, s, options);
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(config.workers, static_cast<unsigned>(trials)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

// ---------------------------------------------------------------------------
// Aggregation
// ---------------------------------------------------------------------------

struct Summary {
  std::size_t count = 0;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  double median_ratio = 0.0;
  double max_ratio = 0.0;
  double p10_ratio = 0.0;
  double p90_ratio = 0.0;
  double mean_queries = 0.0;
  std::uint64_t max_queries = 0;
  std::optional<double> threshold;
  std::size_t passes = 0;
  double pass_rate = 0.0;
};

/// Linear-interpolated quantile of sorted values.
inline double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.size() == 1) return sorted.front();
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

/// Order-invariant summary. Pass-rate counts records with ratio >= threshold
/// (0 passes when no threshold is given).
inline Summary aggregate(const std::vector<TrialRecord>& records, std::optional<double> threshold = std::nullopt) {
  if (records.empty()) throw InputError("aggregate needs at least one record");
  Summary s;
  s.count = records.size();
  s.threshold = threshold;
  std::vector<double> ratios;
  std::vector<std::uint64_t> queries;
  for (const auto& r : records) {
    ratios.push_back(r.ratio);
    queries.push_back(r.total_queries);
    if (threshold && r.ratio >= *threshold) ++s.passes;
  }
  std::sort(ratios.begin(), ratios.end());
  std::sort(queries.begin(), queries.end());
  double ratio_sum = 0.0;
  for (double x : ratios) ratio_sum += x;
  double query_sum = 0.0;
  for (auto q : queries) query_sum += static_cast<double>(q);
  s.mean_ratio = ratio_sum / static_cast<double>(s.count);
  s.min_ratio = ratios.front();
  s.max_ratio = ratios.back();
  s.median_ratio = quantile(ratios, 0.5);
  s.p10_ratio = quantile(ratios, 0.1);
  s.p90_ratio = quantile(ratios, 0.9);
  s.mean_queries = query_sum / static_cast<double>(s.count);
  s.max_queries = queries.back();
  s.pass_rate = static_cast<double>(s.passes) / static_cast<double>(s.count);
  return s;
}

inline nlohmann::json to_json(const Summary& s) {
  return {{"count", s.count},
          {"mean_ratio", s.mean_ratio},
          {"min_ratio", s.min_ratio},
          {"median_ratio", s.median_ratio},
          {"max_ratio", s.max_ratio},
          {"p10_ratio", s.p10_ratio},
          {"p90_ratio", s.p90_ratio},
          {"mean_queries", s.mean_queries},
          {"max_queries", s.max_queries},
          {"threshold", detail::optional_json(s.threshold)},
          {"passes", s.passes},
          {"pass_rate", s.pass_rate}};
}

}  // namespace lamis
