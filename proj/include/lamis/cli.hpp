#pragma once

// Command-line front end. run_cli never calls exit(); it returns
//   0  success
//   1  validation failure (non-independent output, or `verify` rejecting a set)
//   2  usage error (bad flags, bad config, unreadable or malformed input)

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lamis/concentration.hpp"
#include "lamis/errors.hpp"
#include "lamis/experiment.hpp"
#include "lamis/instance.hpp"
#include "lamis/io.hpp"
#include "lamis/mis.hpp"

namespace lamis {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

namespace cli_detail {

struct GenFlags {
  std::string model = "gnp";
  std::size_t n = 100;
  double alpha = 0.5;
  double p = 0.05;
  std::size_t d = 10;
  std::uint64_t seed = 1;
  bool maximal = false;
  std::string out;
};

struct RunFlags {
  std::string config;
  std::string algo;
  std::string instance;
  std::string model;
  std::size_t n = 0;
  double alpha = 0.0;
  double p = 0.0;
  std::size_t d = 0;
  bool maximal = false;
  std::uint64_t instance_seed = 0;
  double eps = 0.0;
  double delta = 0.0;
  std::string mode;
  std::uint32_t k = 2;
  bool no_cap = false;
  std::uint64_t oracle_seed = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  unsigned workers = 1;
  std::string order;
  double cutoff_coeff = 0.0;
  double threshold_coeff = 0.0;
  double budget_coeff = 0.0;
  double schedule_coeff = 0.0;
  std::string out;
  bool json = false;
  std::string trace;
  std::string dump;
  std::string ids_out;
  bool print_config = false;
};

struct ExactFlags {
  std::string instance;
  bool ids = false;
};

struct VerifyFlags {
  std::string instance;
  std::string set;
  bool maximal = false;
};

struct StatsFlags {
  std::string in;
  double threshold = 0.0;
  bool json = false;
  std::string mc;
  double eps = 0.25;
  double delta = 0.1;
  std::uint32_t round = 1;
  bool member = true;
  std::size_t deg = 200;
  std::size_t planted_neighbors = 0;
  double n_for_log = 100.0;
  double coeff = 6.0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

inline bool given(const CLI::Option* opt) { return opt->count() > 0; }

/// Writes to `path`, or to `fallback` when path is empty.
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
  } else {
    auto os = detail::open_output(path);
    fn(os);
  }
}

inline int do_gen(const GenFlags& f, std::ostream& out) {
  const GraphModel model = parse_graph_model(f.model);
  PlantedInstance inst = model == GraphModel::bounded_degree
                             ? gen_planted_bounded_degree(f.n, f.alpha, f.d, f.seed)
                             : gen_planted_gnp(f.n, f.alpha, f.p, f.seed, f.maximal);
  emit(f.out, out, [&](std::ostream& os) { write_instance(os, inst); });
  return kExitOk;
}

inline ExperimentConfig build_run_config(const RunFlags& f, const CLI::App& run) {
  ExperimentConfig c;
  if (!f.config.empty()) {
    auto in = detail::open_input(f.config);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    c = config_from_json(j);
  }
  auto has = [&](const char* name) { return given(run.get_option(name)); };

  if (has("--algo")) c.algorithm = parse_algorithm(f.algo);
  if (has("--instance")) c.instance.path = f.instance;
  const bool generator_flag = has("--model") || has("--n") || has("--alpha") || has("--p") || has("--d") ||
                              has("--maximal") || has("--instance-seed");
  if (generator_flag && !has("--instance")) c.instance.path.reset();
  if (has("--model")) c.instance.model = parse_graph_model(f.model);
  if (has("--n")) c.instance.n = f.n;
  if (has("--alpha")) c.instance.alpha = f.alpha;
  if (has("--p")) c.instance.p = f.p;
  if (has("--d")) c.instance.degree = f.d;
  if (has("--maximal")) c.instance.ensure_maximal = true;
  if (has("--instance-seed")) c.instance.seed = f.instance_seed;

  if (has("--eps")) c.oracle.epsilon = f.eps;
  if (has("--mode")) {
    c.oracle.mode = parse_noise_mode(f.mode);
    c.oracle_mode_set = true;
  }
  if (has("--k")) c.oracle.k = f.k;
  if (has("--no-cap")) c.oracle.apply_cap = false;
  if (has("--oracle-seed")) c.oracle.seed = f.oracle_seed;

  if (has("--delta")) c.params.delta = f.delta;
  if (has("--order")) c.params.greedy_order = parse_greedy_order(f.order);
  if (has("--cutoff-coeff")) c.params.low_degree_cutoff_coeff = f.cutoff_coeff;
  if (has("--threshold-coeff")) c.params.threshold_coeff = f.threshold_coeff;
  if (has("--budget-coeff")) c.params.budget_coeff = f.budget_coeff;
  if (has("--schedule-coeff")) c.params.schedule_coeff = f.schedule_coeff;

  if (has("--trials")) {
    c.seeds = derived_seeds(f.seed, f.trials);
  } else if (has("--seed")) {
    c.seeds = {f.seed};
  }
  if (has("--workers")) c.workers = f.workers;
  if (has("--out")) c.output = f.out;
  if (has("--json")) c.format = "json";
  return c;
}

inline int do_run(const RunFlags& f, const CLI::App& run, std::ostream& out) {
  const ExperimentConfig c = build_run_config(f, run);
  if (f.print_config) {
    out << to_json(c).dump(2) << '\n';
    return kExitOk;
  }
  TrialOptions options;
  options.keep_filter_rows = !f.dump.empty();
  const auto records = run_experiment(c, options);

  emit(c.output, out, [&](std::ostream& os) {
    if (c.format == "json") {
      write_json(os, records);
    } else {
      write_csv(os, records);
    }
  });
  if (!f.trace.empty()) emit(f.trace, out, [&](std::ostream& os) { write_trace_csv(os, records); });
  if (!f.dump.empty()) emit(f.dump, out, [&](std::ostream& os) { write_filter_csv(os, records); });
  if (!f.ids_out.empty()) {
    emit(f.ids_out, out, [&](std::ostream& os) {
      for (const auto& r : records) write_vertex_ids(os, r.output);
    });
  }
  return kExitOk;
}

inline int do_exact(const ExactFlags& f, std::ostream& out) {
  const auto inst = read_instance(f.instance);
  const VertexSet best = exact_mis(inst.graph);
  out << best.size() << '\n';
  if (f.ids) write_vertex_ids(out, best);
  return kExitOk;
}

inline int do_verify(const VerifyFlags& f, std::ostream& out) {
  const auto inst = read_instance(f.instance);
  const VertexSet s = read_vertex_ids(f.set, inst.graph.num_vertices());
  const auto mask = s.mask();
  for (const auto& [u, v] : inst.graph.edges()) {
    if (mask[u] && mask[v]) {
      out << "not independent: edge (" << u << ", " << v << ")\n";
      return kExitValidation;
    }
  }
  if (f.maximal && !is_maximal_independent_set(inst.graph, s)) {
    out << "independent but not maximal\n";
    return kExitValidation;
  }
  out << "independent, size " << s.size() << '\n';
  return kExitOk;
}

inline void print_summary(std::ostream& out, const Summary& s) {
  out << "count: " << s.count << '\n'
      << "mean_ratio: " << format_real(s.mean_ratio) << '\n'
      << "min_ratio: " << format_real(s.min_ratio) << '\n'
      << "median_ratio: " << format_real(s.median_ratio) << '\n'
      << "max_ratio: " << format_real(s.max_ratio) << '\n'
      << "p10_ratio: " << format_real(s.p10_ratio) << '\n'
      << "p90_ratio: " << format_real(s.p90_ratio) << '\n'
      << "mean_queries: " << format_real(s.mean_queries) << '\n'
      << "max_queries: " << s.max_queries << '\n';
  if (s.threshold) {
    out << "threshold: " << format_real(*s.threshold) << '\n'
        << "passes: " << s.passes << '\n'
        << "pass_rate: " << format_real(s.pass_rate) << '\n';
  }
}

inline int do_stats(const StatsFlags& f, const CLI::App& stats, std::ostream& out) {
  if (!f.mc.empty()) {
    TailEstimate est;
    double bound = -1.0;
    if (f.mc == "elimination") {
      EliminationErrorEvent ev(f.eps, f.delta, f.round, f.member);
      est = estimate_tail(ev, f.trials, f.seed, f.workers);
      bound = EliminationErrorEvent::bound(f.delta, f.round);
      out << "queries_per_round: " << ev.queries() << '\n';
    } else if (f.mc == "member-filtered") {
      MemberFilteredEvent ev(f.deg, f.eps, f.n_for_log, f.coeff);
      est = estimate_tail(ev, f.trials, f.seed, f.workers);
      out << "threshold: " << format_real(ev.threshold()) << '\n';
    } else if (f.mc == "blocker-survives") {
      BlockerSurvivesEvent ev(f.deg, f.planted_neighbors, f.eps, f.n_for_log, f.coeff);
      est = estimate_tail(ev, f.trials, f.seed, f.workers);
      out << "threshold: " << format_real(ev.threshold()) << '\n';
    } else {
      throw ConfigError("unknown --mc event '" + f.mc + "' (elimination, member-filtered, blocker-survives)");
    }
    out << "trials: " << est.trials << '\n'
        << "hits: " << est.hits << '\n'
        << "probability: " << format_real(est.probability) << '\n'
        << "half_width: " << format_real(est.half_width) << '\n';
    if (bound >= 0.0) out << "bound: " << format_real(bound) << '\n';
    return kExitOk;
  }
  if (f.in.empty()) throw ConfigError("stats needs --in or --mc");
  auto in = detail::open_input(f.in);
  const auto records = read_csv(in);
  std::optional<double> threshold;
  if (given(stats.get_option("--threshold"))) threshold = f.threshold;
  const Summary s = aggregate(records, threshold);
  if (f.json) {
    out << to_json(s).dump(2) << '\n';
  } else {
    print_summary(out, s);
  }
  return kExitOk;
}

}  // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  using namespace cli_detail;
  CLI::App app{"Independent-set recovery under a noisy membership oracle"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  GenFlags gf;
  auto* gen = app.add_subcommand("gen", "Generate a planted instance");
  gen->add_option("--model", gf.model, "gnp or bounded")->capture_default_str();
  gen->add_option("--n", gf.n, "Number of vertices")->capture_default_str();
  gen->add_option("--alpha", gf.alpha, "Planted fraction")->capture_default_str();
  gen->add_option("--p", gf.p, "Edge probability (gnp)")->capture_default_str();
  gen->add_option("--d", gf.d, "Edges per non-planted vertex (bounded)")->capture_default_str();
  gen->add_option("--seed", gf.seed, "Generator seed")->capture_default_str();
  gen->add_flag("--maximal", gf.maximal, "Make the planted set maximal (gnp)");
  gen->add_option("--out", gf.out, "Instance file (default stdout)");

  RunFlags rf;
  auto* run = app.add_subcommand("run", "Run an experiment");
  run->add_option("--config", rf.config, "JSON experiment config");
  run->add_option("--algo", rf.algo, "persistent, bandit, sampler, amplify, greedy, exact");
  run->add_option("--instance", rf.instance, "Instance file");
  run->add_option("--model", rf.model, "Generator model: gnp or bounded");
  run->add_option("--n", rf.n, "Generator n");
  run->add_option("--alpha", rf.alpha, "Generator planted fraction");
  run->add_option("--p", rf.p, "Generator edge probability");
  run->add_option("--d", rf.d, "Generator degree parameter");
  run->add_flag("--maximal", rf.maximal, "Generator: make the planted set maximal");
  run->add_option("--instance-seed", rf.instance_seed, "Use one generated instance for all trials");
  run->add_option("--eps", rf.eps, "Oracle advantage epsilon");
  run->add_option("--delta", rf.delta, "Bandit confidence delta");
  run->add_option("--mode", rf.mode, "persistent-random, persistent-kwise, bandit-bernoulli, bandit-gaussian");
  run->add_option("--k", rf.k, "Independence of the persistent-kwise oracle");
  run->add_flag("--no-cap", rf.no_cap, "Do not cap epsilon at 1/4 in persistent modes");
  run->add_option("--oracle-seed", rf.oracle_seed, "Mixed into every trial's oracle seed");
  run->add_option("--seed", rf.seed, "Trial seed, or seed base with --trials");
  run->add_option("--trials", rf.trials, "Number of trials with seeds derived from --seed");
  run->add_option("--workers", rf.workers, "Parallel trials");
  run->add_option("--order", rf.order, "Persistent greedy order: ascending, degree, random");
  run->add_option("--cutoff-coeff", rf.cutoff_coeff, "Low-degree cutoff coefficient (36)");
  run->add_option("--threshold-coeff", rf.threshold_coeff, "Survival threshold coefficient (6)");
  run->add_option("--budget-coeff", rf.budget_coeff, "Bandit budget coefficient (30)");
  run->add_option("--schedule-coeff", rf.schedule_coeff, "Bandit schedule coefficient (4)");
  run->add_option("--out", rf.out, "Record file (default stdout)");
  run->add_flag("--json", rf.json, "Write JSON records instead of CSV");
  run->add_option("--trace", rf.trace, "Per-round bandit trace CSV");
  run->add_option("--dump", rf.dump, "Persistent filter dump CSV (seed,v,deg,yes,s_v,in_L,in_S)");
  run->add_option("--ids-out", rf.ids_out, "Output vertex ids, one line per trial");
  run->add_flag("--print-config", rf.print_config, "Print the resolved config as JSON and exit");
  run->footer(std::string("CSV columns: ") + kCsvHeader);

  ExactFlags ef;
  auto* exact = app.add_subcommand("exact", "Exact maximum independent set size (n <= 30)");
  exact->add_option("--instance", ef.instance, "Instance file")->required();
  exact->add_flag("--ids", ef.ids, "Also print the ids");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Check that a vertex set is independent");
  verify->add_option("--instance", vf.instance, "Instance file")->required();
  verify->add_option("--set", vf.set, "Vertex id file")->required();
  verify->add_flag("--maximal", vf.maximal, "Also require maximality");

  StatsFlags sf;
  auto* stats = app.add_subcommand("stats", "Summarize a record CSV or run a Monte Carlo tail estimate");
  stats->add_option("--in", sf.in, "Record CSV");
  stats->add_option("--threshold", sf.threshold, "Ratio threshold for pass-rate");
  stats->add_flag("--json", sf.json, "JSON summary");
  stats->add_option("--mc", sf.mc, "elimination, member-filtered, blocker-survives");
  stats->add_option("--eps", sf.eps, "Epsilon")->capture_default_str();
  stats->add_option("--delta", sf.delta, "Delta (elimination)")->capture_default_str();
  stats->add_option("--round", sf.round, "Round (elimination)")->capture_default_str();
  stats->add_option("--member", sf.member, "Vertex in the hidden set (elimination)")->capture_default_str();
  stats->add_option("--deg", sf.deg, "Degree (filter events)")->capture_default_str();
  stats->add_option("--planted-neighbors", sf.planted_neighbors, "Hidden-set neighbors (blocker-survives)");
  stats->add_option("--n-log", sf.n_for_log, "n used inside ln n (filter events)")->capture_default_str();
  stats->add_option("--coeff", sf.coeff, "Threshold coefficient (filter events)")->capture_default_str();
  stats->add_option("--trials", sf.trials, "Trials (>= 1000)")->capture_default_str();
  stats->add_option("--seed", sf.seed, "Seed")->capture_default_str();
  stats->add_option("--workers", sf.workers, "Threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    const CLI::App* help_for = &app;
    for (const auto* sub : {gen, run, exact, verify, stats}) {
      if (sub->parsed()) help_for = sub;
    }
    err << "error: " << e.what() << "\n\n" << help_for->help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return do_gen(gf, out);
    if (run->parsed()) return do_run(rf, *run, out);
    if (exact->parsed()) return do_exact(ef, out);
    if (verify->parsed()) return do_verify(vf, out);
    if (stats->parsed()) return do_stats(sf, *stats, out);
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lamis
