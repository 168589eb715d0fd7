// Benchmark: OpenMP kernels against their serial reference implementations.
// The arithmetic is exact on both sides, so the results must agree bit for
// bit; the bench verifies that while it times them.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hameig/json_io.hpp"
#include "hameig/operators.hpp"
#include "hameig/oracle.hpp"

using namespace hameig;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

bool bench_adjacency(int n, int q) {
    const GraphParams params(n, q);
    const VertexFunction f = random_eigenfunction(1, params, /*seed=*/42);

    auto start = std::chrono::steady_clock::now();
    const VertexFunction column_sums = apply_adjacency(f);
    const double parallel_s = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const VertexFunction naive = apply_adjacency_reference(f);
    const double reference_s = seconds_since(start);

    const bool equal = column_sums == naive;
    std::printf("adjacency H(%d,%d) (%lld vertices): column-sum %.3fs, naive %.3fs, "
                "speedup %.2fx, equal: %s\n",
                n, q, static_cast<long long>(params.vertex_count()), parallel_s,
                reference_s, reference_s / parallel_s, equal ? "yes" : "NO");
    return equal;
}

bool bench_grid(int n, int q, int radius) {
    const GraphParams params(n, q);
    std::vector<int> set;
    for (int v = -radius; v <= radius; ++v) {
        set.push_back(v);
    }

    auto start = std::chrono::steady_clock::now();
    const SearchReport pruned = grid_min_support(params, set);
    const double parallel_s = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const SearchReport serial = grid_min_support_reference(params, set);
    const double reference_s = seconds_since(start);

    const bool equal =
        render_json(report_to_json(pruned)) == render_json(report_to_json(serial));
    std::printf("grid search H(%d,%d) {-%d..%d}^%d (%lld vectors): pruned %.3fs, "
                "full-scan %.3fs, speedup %.2fx, min %lld, achievers %zu, equal "
                "reports: %s\n",
                n, q, radius, radius, params.n() * (params.q() - 1),
                static_cast<long long>(pruned.enumerated_count), parallel_s,
                reference_s, reference_s / parallel_s,
                static_cast<long long>(pruned.observed_min), pruned.achievers.size(),
                equal ? "yes" : "NO");
    return equal;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif
    bool ok = true;
    ok = bench_adjacency(8, 4) && ok;   // 65536 vertices
    ok = bench_adjacency(7, 5) && ok;   // 78125 vertices
    ok = bench_grid(2, 5, 2) && ok;     // 5^8 coefficient vectors
    ok = bench_grid(3, 3, 2) && ok;     // 5^6 coefficient vectors
    if (!ok) {
        std::printf("MISMATCH between parallel and reference results\n");
        return 1;
    }
    return 0;
}
