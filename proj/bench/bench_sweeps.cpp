// Times the serial reference implementations of the Monte Carlo sweeps
// against their OpenMP counterparts and reports the speedup.

#include "uan/sweeps.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace uan;

namespace {

template <typename F>
double time_seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the serial path\n");
#endif
    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]", "speedup");

    {
        InequalitySweepConfig cfg;
        cfg.trials = 60000;
        cfg.seed = 9001;
        InequalitySweepResult serial_result{}, parallel_result{};
        const double ts = time_seconds(
            [&] { serial_result = run_inequality_sweep(cfg, ExecutionPolicy::Serial); });
        const double tp = time_seconds(
            [&] { parallel_result = run_inequality_sweep(cfg, ExecutionPolicy::Parallel); });
        std::printf("%-28s %12.3f %12.3f %8.2fx\n", "inequality sweep (60k)", ts, tp, ts / tp);
        if (serial_result.margin_min != parallel_result.margin_min ||
            serial_result.violations != parallel_result.violations) {
            std::printf("MISMATCH between serial and parallel results\n");
            return 1;
        }
    }

    {
        TransportSweepConfig cfg;
        cfg.runs = 64;
        cfg.seed = 9002;
        cfg.n_min = 16;
        cfg.n_max = 64;
        cfg.slots = 32;
        std::vector<SimRecord> serial_records, parallel_records;
        const double ts = time_seconds(
            [&] { serial_records = run_transport_sweep(cfg, ExecutionPolicy::Serial); });
        const double tp = time_seconds(
            [&] { parallel_records = run_transport_sweep(cfg, ExecutionPolicy::Parallel); });
        std::printf("%-28s %12.3f %12.3f %8.2fx\n", "transport sweep (64 runs)", ts, tp,
                    ts / tp);
        for (std::size_t i = 0; i < serial_records.size(); ++i) {
            if (serial_records[i].transport_achieved !=
                parallel_records[i].transport_achieved) {
                std::printf("MISMATCH between serial and parallel records\n");
                return 1;
            }
        }
    }
    return 0;
}
