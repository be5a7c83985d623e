// Times the OpenMP batch kernels against their serial references on
// independent composition sweeps. Items are identical in both runs, so the
// outputs must agree bit for bit; the benchmark prints throughput and the
// max entrywise difference as a sanity column.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ufact/batch.hpp"
#include "ufact/factorization.hpp"

using namespace ufact;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

double max_diff(const std::vector<ComplexMatrix>& x, const std::vector<ComplexMatrix>& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& a = x[i].data();
        const auto& b = y[i].data();
        for (std::size_t j = 0; j < a.size(); ++j)
            worst = std::max(worst, std::abs(a[j] - b[j]));
    }
    return worst;
}

void bench_scheme(const Scheme& scheme, std::size_t count) {
    const std::vector<ParamSet> sets = batch::random_param_sets(scheme, count, 42);

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<ComplexMatrix> serial = batch::compose_many_serial(sets);
    const auto t1 = std::chrono::steady_clock::now();
    const std::vector<ComplexMatrix> parallel = batch::compose_many(sets);
    const auto t2 = std::chrono::steady_clock::now();

    const double ts = seconds(t0, t1);
    const double tp = seconds(t1, t2);
    std::printf("%-16s n=%2zu x%zu  serial %8.1f/s  openmp %8.1f/s  speedup %4.2fx  maxdiff %g\n",
                to_string(scheme.tag).c_str(), scheme.n, count, count / ts, count / tp, ts / tp,
                max_diff(serial, parallel));
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t count = 4000;
    if (argc > 1) count = std::stoul(argv[1]);
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    bench_scheme({SchemeTag::Flag, 8, 0}, count);
    bench_scheme({SchemeTag::Flag, 12, 0}, count);
    bench_scheme({SchemeTag::FullUnitary, 12, 0}, count);
    bench_scheme({SchemeTag::Grassmann, 12, 6}, count);
    return 0;
}
