// Generates a planted instance, runs both oracle algorithms plus the greedy
// baseline, and prints one summary line per algorithm.
//
//   planted_demo [n] [epsilon] [seed]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "lamis/lamis.hpp"

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::stoul(argv[1]) : 2000;
  const double eps = argc > 2 ? std::stod(argv[2]) : 0.25;
  const std::uint64_t seed = argc > 3 ? std::stoull(argv[3]) : 1;

  const auto inst = lamis::gen_planted_gnp(n, 0.3, 10.0 / static_cast<double>(n), seed, true);
  std::printf("n=%zu m=%zu max_degree=%zu |I*|=%zu\n", inst.graph.num_vertices(), inst.graph.num_edges(),
              inst.graph.max_degree(), inst.planted.size());

  auto report = [&](const char* name, const lamis::VertexSet& s, std::uint64_t queries) {
    std::printf("%-10s |I|=%zu ratio=%.3f queries=%llu independent=%s\n", name, s.size(),
                static_cast<double>(s.size()) / static_cast<double>(inst.planted.size()),
                static_cast<unsigned long long>(queries), lamis::is_independent_set(inst.graph, s) ? "yes" : "no");
  };

  {
    auto o = lamis::make_oracle(inst, {eps, lamis::NoiseMode::persistent_random, 2, seed, true});
    const auto rep = lamis::run_persistent(inst.graph, o, lamis::PersistentParams::for_oracle(o));
    report("persistent", rep.independent_set, o.total_queries());
  }
  {
    auto o = lamis::make_oracle(inst, {eps, lamis::NoiseMode::bandit_bernoulli, 2, seed, true});
    const auto res = lamis::run_bandit(inst.graph, o, lamis::BanditParams::for_oracle(o, 0.1));
    report("bandit", res.best_set, res.total_queries);
    std::printf("           rounds=%zu budget=%.0f\n", res.trace.size(), res.budget);
  }
  report("greedy", lamis::run_greedy_baseline(inst.graph), 0);
  return EXIT_SUCCESS;
}
