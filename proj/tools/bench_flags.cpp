// Times the OpenMP flag kernels against their serial reference and checks
// that both agree. Usage: bench_flags [budget]
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "k3strat/qflag.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    long long budget = k3strat::default_enumeration_budget;
    if (argc > 1) budget = std::atoll(argv[1]);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled, parallel kernels fall back to one thread\n");
#endif

    const int count_cases[][2] = {{4, 3}, {5, 3}, {6, 3}, {7, 3}, {5, 5}, {8, 3}};
    std::printf("\n%-10s %14s %14s %9s %12s\n", "count", "serial ms", "parallel ms",
                "speedup", "flags");
    for (const auto& c : count_cases) {
        const int n = c[0], p = c[1];
        long long needed = 1;
        bool fits = true;
        for (int i = 0; i < n; ++i) {
            needed *= p;
            if (needed > budget) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;
        const k3strat::QuadraticSpace V = k3strat::make_split_space(n, p);

        auto t0 = std::chrono::steady_clock::now();
        const long long serial = k3strat::count_isotropic_flags_serial(V, budget);
        const double ts = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        const long long parallel = k3strat::count_isotropic_flags(V, budget);
        const double tp = ms_since(t0);

        std::printf("n=%d p=%d   %14.2f %14.2f %8.2fx %12lld%s\n", n, p, ts, tp,
                    tp > 0 ? ts / tp : 0.0, parallel,
                    serial == parallel ? "" : "  MISMATCH");
        if (serial != parallel) return 1;
    }

    const int census_cases[][2] = {{4, 3}, {5, 3}, {6, 3}};
    std::printf("\n%-10s %14s %14s %9s %12s\n", "census", "serial ms", "parallel ms",
                "speedup", "cells");
    for (const auto& c : census_cases) {
        const int n = c[0], p = c[1];
        const k3strat::QuadraticSpace V = k3strat::make_split_space(n, p);
        const k3strat::IsotropicFlag ref = k3strat::standard_flag(V);

        auto t0 = std::chrono::steady_clock::now();
        const k3strat::CensusMap serial = k3strat::bruhat_cell_census_serial(V, ref, budget);
        const double ts = ms_since(t0);

        t0 = std::chrono::steady_clock::now();
        const k3strat::CensusMap parallel = k3strat::bruhat_cell_census(V, ref, budget);
        const double tp = ms_since(t0);

        std::printf("n=%d p=%d   %14.2f %14.2f %8.2fx %12zu%s\n", n, p, ts, tp,
                    tp > 0 ? ts / tp : 0.0, parallel.size(),
                    serial == parallel ? "" : "  MISMATCH");
        if (serial != parallel) return 1;
    }
    return 0;
}
