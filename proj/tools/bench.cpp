// Serial reference kernels against the OpenMP kernels on a few fixed
// workloads. Prints one JSON line per workload.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iostream>

#include "wsc/cliques.hpp"
#include "wsc/domains.hpp"
#include "wsc/mutations.hpp"

using namespace wsc;

namespace {

double best_seconds(int repeat, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    best = std::min(best, took.count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernel timings"};
  int repeat = 3;
  int threads = 0;
  app.add_option("--repeat", repeat, "Runs per measurement (best is reported)")->capture_default_str();
  app.add_option("--threads", threads, "Workers for the parallel runs (0 = OpenMP default)");
  CLI11_PARSE(app, argc, argv);

  set_thread_count(threads);
  const int workers = thread_count();

  const CompatGraph grid = build_compat_graph(Collection(k_subsets(8, 4)), Relation::weak);
  const CompatGraph powerset = build_compat_graph(Collection(all_subsets(6)), Relation::weak);
  const CompatGraph chord = build_compat_graph(Collection(all_subsets(5)), Relation::chord);
  const std::vector<Subset> big = k_subsets(16, 8);
  const Subset probe = Subset::of({1, 3, 5, 7, 9, 11, 13, 15}, 16);
  const Collection seed = complete_to_maximal(Collection::empty(7), Collection(k_subsets(7, 3)));

  struct Workload {
    std::string name;
    std::function<std::size_t()> serial;
    std::function<std::size_t()> parallel;
  };
  const std::vector<Workload> workloads = {
      {"maximal_cliques [8]choose4", [&] { return kernels::serial::maximal_cliques(grid.adjacency).size(); },
       [&] { return kernels::parallel::maximal_cliques(grid.adjacency).size(); }},
      {"clique_sizes 2^[6] weak", [&] { return kernels::serial::maximal_clique_sizes(powerset.adjacency).size(); },
       [&] { return kernels::parallel::maximal_clique_sizes(powerset.adjacency).size(); }},
      {"clique_sizes 2^[5] chord", [&] { return kernels::serial::maximal_clique_sizes(chord.adjacency).size(); },
       [&] { return kernels::parallel::maximal_clique_sizes(chord.adjacency).size(); }},
      {"maximum_clique [8]choose4",
       [&] { return kernels::serial::maximum_clique(grid.adjacency).size(); },
       [&] { return static_cast<std::size_t>(kernels::parallel::maximum_clique_size(grid.adjacency)); }},
      {"filter [16]choose8",
       [&] {
         return kernels::serial::filter(static_cast<int>(big.size()),
                                        [&](int t) { return is_weakly_separated(big[t], probe); })
             .size();
       },
       [&] {
         return kernels::parallel::filter(static_cast<int>(big.size()),
                                          [&](int t) { return is_weakly_separated(big[t], probe); })
             .size();
       }},
      {"explore [7]choose3",
       [&] {
         set_thread_count(1);
         const std::size_t nodes = explore_mutation_graph(seed).node_count;
         set_thread_count(threads);
         return nodes;
       },
       [&] { return explore_mutation_graph(seed).node_count; }},
  };

  for (const Workload& w : workloads) {
    std::size_t serial_result = 0;
    std::size_t parallel_result = 0;
    const double serial = best_seconds(repeat, [&] { serial_result = w.serial(); });
    const double parallel = best_seconds(repeat, [&] { parallel_result = w.parallel(); });
    const nlohmann::json line = {{"workload", w.name},   {"threads", workers},
                                 {"serial_s", serial},   {"parallel_s", parallel},
                                 {"speedup", parallel > 0 ? serial / parallel : 0.0},
                                 {"agree", serial_result == parallel_result}};
    std::cout << line.dump() << '\n';
  }
  return 0;
}
