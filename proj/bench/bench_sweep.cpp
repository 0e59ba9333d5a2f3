// Timings of the grid kernels, serial reference vs OpenMP. Build and run:
//   cmake --build build && ./build/bench/bench_sweep
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gqd/sweep.hpp"

using namespace gqd;

namespace {

template <typename F>
double time_ms(const F& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, const char* size, double serial_ms, double parallel_ms) {
    std::printf("%-16s %-12s %10.1f %10.1f %9.2fx\n", name, size, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads: %d\n", threads);
    std::printf("%-16s %-12s %10s %10s %10s\n", "kernel", "grid", "serial/ms", "openmp/ms",
                "speedup");

    {
        const auto alphas = linspace(0.01, 0.99, 60);
        const auto kts = linspace(0.0, 8.0, 200);
        const std::vector<PairLabel> pairs = {PairLabel::c1c2, PairLabel::r1r2, PairLabel::c1r1,
                                              PairLabel::c1r2};
        const double s = time_ms([&] { dynamics_sweep(alphas, kts, pairs, Exec::serial); });
        const double p = time_ms([&] { dynamics_sweep(alphas, kts, pairs, Exec::parallel); });
        row("dynamics_sweep", "60x200x4", s, p);
    }
    {
        const auto alphas = linspace(0.05, 0.95, 40);
        const auto kts = linspace(0.0, 5.0, 150);
        const double s = time_ms([&] { monogamy_sweep(alphas, kts, Exec::serial); });
        const double p = time_ms([&] { monogamy_sweep(alphas, kts, Exec::parallel); });
        row("monogamy_sweep", "40x150", s, p);
    }
    {
        const auto alphas = linspace(0.1, 0.95, 24);
        const double s = time_ms([&] { classify_scan(alphas, Exec::serial); });
        const double p = time_ms([&] { classify_scan(alphas, Exec::parallel); });
        row("classify_scan", "24", s, p);
    }
    {
        OptimizerConfig cfg;
        cfg.starts = 32;
        const double s = time_ms([&] { oracle_certify(60, 4, 7, cfg, Exec::serial); });
        const double p = time_ms([&] { oracle_certify(60, 4, 7, cfg, Exec::parallel); });
        row("oracle_certify", "60+4", s, p);
    }
    return 0;
}
