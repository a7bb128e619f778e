// Kernel benchmark: serial reference implementations against the optimized
// (packed / table-driven / OpenMP) paths, over the sizes the pipeline hits.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lieblocks/gf_linalg.hpp"
#include "lieblocks/gf_reference.hpp"

using namespace lieblocks;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GFMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint16_t p, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    GFMatrix m(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<std::uint16_t>(dist(rng)));
    return m;
}

reference::SimpleMat to_simple(const GFMatrix& m) {
    reference::SimpleMat s = reference::make(m.rows(), m.cols(), m.modulus());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s.at(i, j) = m.get(i, j);
    return s;
}

void bench_matmul(std::size_t dim, std::uint16_t p, bool run_reference) {
    GFMatrix a = random_matrix(dim, dim, p, 1);
    GFMatrix b = random_matrix(dim, dim, p, 2);
    const double mops = 1e-6 * double(dim) * double(dim) * double(dim);

    double ref_time = 0;
    if (run_reference) {
        reference::SimpleMat sa = to_simple(a), sb = to_simple(b);
        auto t0 = std::chrono::steady_clock::now();
        reference::SimpleMat sc = reference::mat_mul_serial(sa, sb);
        ref_time = seconds_since(t0);
        if (sc.at(0, 0) > p) std::puts("?"); // keep the result alive
    }

    auto t0 = std::chrono::steady_clock::now();
    GFMatrix c = mat_mul(a, b);
    double opt_time = seconds_since(t0);
    if (c.get(0, 0) > p) std::puts("?");

    std::printf("matmul  %5zu  GF(%u)  optimized %8.3f s (%8.1f Mop/s)", dim, p, opt_time,
                mops / opt_time);
    if (run_reference)
        std::printf("  serial %8.3f s (%8.1f Mop/s)  speedup %.1fx", ref_time, mops / ref_time,
                    ref_time / opt_time);
    std::printf("\n");
}

void bench_rref(std::size_t rows, std::size_t cols, std::uint16_t p, bool run_reference) {
    GFMatrix a = random_matrix(rows, cols, p, 3);
    const double mops = 1e-6 * double(rows) * double(rows) * double(cols);

    double ref_time = 0;
    if (run_reference) {
        reference::SimpleMat sa = to_simple(a);
        auto t0 = std::chrono::steady_clock::now();
        reference::SerialRref sr = reference::rref_serial(std::move(sa));
        ref_time = seconds_since(t0);
        if (sr.rank > rows) std::puts("?");
    }

    auto t0 = std::chrono::steady_clock::now();
    RrefResult rr = rref(a);
    double opt_time = seconds_since(t0);
    if (rr.rank > rows) std::puts("?");

    std::printf("rref    %zux%zu  GF(%u)  optimized %8.3f s (%8.1f Mop/s)", rows, cols, p,
                opt_time, mops / opt_time);
    if (run_reference)
        std::printf("  serial %8.3f s (%8.1f Mop/s)  speedup %.1fx", ref_time, mops / ref_time,
                    ref_time / opt_time);
    std::printf("\n");
}

} // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif

    std::printf("-- product kernels --\n");
    bench_matmul(512, 2, true);
    bench_matmul(512, 3, true);
    if (!quick) {
        bench_matmul(2048, 2, true);
        bench_matmul(2048, 3, true);
        bench_matmul(5040, 2, false);
        bench_matmul(5040, 3, false);
    }

    std::printf("-- elimination kernels --\n");
    bench_rref(512, 1024, 2, true);
    bench_rref(512, 1024, 3, true);
    if (!quick) {
        bench_rref(2048, 4096, 2, true);
        bench_rref(2048, 4096, 3, true);
        bench_rref(5040, 40320, 2, false);
    }
    return 0;
}
