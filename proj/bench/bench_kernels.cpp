// Serial vs OpenMP timings for the three parallel kernels.
//
//   bench_kernels [reps]

#include "secb/experiments.hpp"
#include "secb/regularizer.hpp"
#include "secb/resolvent_fem.hpp"
#include "secb/spectral.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

using namespace secb;

namespace {

double best_of(int reps, const std::function<void()>& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void report(const char* name, double serial, double parallel, double diff) {
    std::printf("%-18s %10.2f %10.2f %8.2fx   max diff %.1e\n", name, serial * 1e3, parallel * 1e3,
                serial / parallel, diff);
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
    std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
    std::printf("%-18s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

    const Mesh mesh(1024);
    const RegularizedSolver solver(SecbParams{1e-4, 1420.0, 3.8, 4.0, std::nullopt}, mesh, CoefficientField(1.0 / 32.0));
    const GridFunction u0 = perturb(reference_field(mesh, 0.0), 1e-4, 1);
    const std::vector<double> times = table_times(4.0);

    std::vector<GridFunction> a, b;
    const double cs = best_of(reps, [&] { a = solver.evaluate_contour(u0, times, Execution::serial); });
    const double cp = best_of(reps, [&] { b = solver.evaluate_contour(u0, times, Execution::parallel); });
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, mass_norm(a[i] - b[i]));
    report("evaluate_contour", cs, cp, d);

    GridFunction rs, rp;
    const double ss = best_of(reps, [&] { rs = reference_field_serial(mesh, 0.0); });
    const double sp = best_of(reps, [&] { rp = reference_field(mesh, 0.0); });
    report("reference_field", ss, sp, mass_norm(rs - rp));

    std::vector<ExperimentConfig> configs;
    for (double delta : {1e-4, 1e-3, 1e-2})
        for (double s : {3.8, 3.9}) {
            ExperimentConfig c;
            c.delta = delta;
            c.s = s;
            configs.push_back(c);
        }
    std::vector<TableRun> ts, tp;
    const double ts_t = best_of(1, [&] { ts = run_tables_serial(configs); });
    const double tp_t = best_of(1, [&] { tp = run_tables(configs); });
    double td = 0.0;
    for (std::size_t r = 0; r < ts.size(); ++r)
        for (std::size_t i = 0; i < ts[r].table.rows.size(); ++i)
            td = std::max(td, std::abs(ts[r].table.rows[i].computed - tp[r].table.rows[i].computed));
    report("run_tables", ts_t, tp_t, td);
    return 0;
}
