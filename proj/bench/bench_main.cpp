// Benchmark comparing the serial reference kernels against their
// OpenMP-parallel counterparts: k-core peeling on one large graph, and the
// trial loop of a small Monte Carlo sweep at 1 vs 8 workers. Wall-clock only;
// results double as a cross-check that both variants agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "corefactor/experiments.hpp"
#include "corefactor/kcore.hpp"
#include "corefactor/random_graph.hpp"

using corefactor::CoreResult;
using corefactor::MultiGraph;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = 1000000;
    double c = 12.0;
    int k = 8;
    if (argc > 1) n = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));
    if (argc > 2) c = std::strtod(argv[2], nullptr);
    if (argc > 3) k = std::atoi(argv[3]);

    std::printf("== k-core peeling: n=%zu c=%g k=%d ==\n", n, c, k);
    auto t = Clock::now();
    const MultiGraph g = corefactor::gnp_random(n, c, 42);
    std::printf("generate            %8.3f s   (%zu edges)\n", seconds_since(t), g.edge_count());

    t = Clock::now();
    const CoreResult serial = corefactor::k_core(g, k);
    const double serial_s = seconds_since(t);
    std::printf("serial peel         %8.3f s   (core %zu)\n", serial_s,
                serial.core.vertex_count());

    for (int threads : {1, 2, 4, 8}) {
        t = Clock::now();
        const CoreResult parallel = corefactor::k_core_parallel(g, k, threads);
        const double par_s = seconds_since(t);
        const bool same = parallel.core_to_orig == serial.core_to_orig &&
                          parallel.core.edge_count() == serial.core.edge_count();
        std::printf("parallel peel (t=%d) %8.3f s   speedup %5.2fx   agrees=%s\n", threads, par_s,
                    serial_s / par_s, same ? "yes" : "NO");
        if (!same) return 1;
    }

    std::printf("\n== sweep trial loop: n=20000 k=3 grid 3.2:3.5:0.3 trials=8 ==\n");
    corefactor::SweepConfig config;
    config.n = 20000;
    config.k = 3;
    config.factor_k = 0;
    config.grid = {3.2, 3.5};
    config.trials = 8;
    config.base_seed = 7;
    double base_s = 0;
    for (int threads : {1, 8}) {
        config.parallelism = threads;
        t = Clock::now();
        const corefactor::SweepSummary summary = corefactor::sweep(config);
        const double s = seconds_since(t);
        if (threads == 1) base_s = s;
        std::printf("sweep (t=%d)         %8.3f s   speedup %5.2fx   (%zu records)\n", threads, s,
                    base_s / s, summary.records.size());
    }
    return 0;
}
