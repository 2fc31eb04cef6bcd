// benchmark: serial reference vs OpenMP-parallel brute-force minimum rank
// distance on a family of Gabidulin codes

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skewcyc/enumerate.hpp"
#include "skewcyc/gabidulin.hpp"

using namespace skewcyc;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    u32 m = argc > 1 ? (u32)std::atoi(argv[1]) : 5;
    u32 k = argc > 2 ? (u32)std::atoi(argv[2]) : 4;
    Tower t = Tower::build({2, 1, m, 1, m});
    FieldElem cur = t.find_normal_basis(1);
    std::vector<FieldElem> beta;
    for (u32 i = 0; i < m; ++i) {
        beta.push_back(cur);
        cur = t.frobenius(cur, 1);
    }
    LinearCode c = gabidulin_code(t, beta, k);
    u64 words = codeword_count(t, k) - 1;
    std::printf("Gab_{%u,1} over F_{2^%u}: %llu nonzero codewords\n", k, m,
                (unsigned long long)words);

    auto t0 = std::chrono::steady_clock::now();
    u32 ds = min_rank_distance_serial(t, c.gen, UINT64_MAX);
    double serial = seconds_since(t0);
    std::printf("serial:   d_R = %u in %.3f s\n", ds, serial);

#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    t0 = std::chrono::steady_clock::now();
    u32 dp = min_rank_distance_parallel(t, c.gen, UINT64_MAX);
    double parallel = seconds_since(t0);
    std::printf("parallel: d_R = %u in %.3f s (%d threads, speedup %.2fx)\n", dp, parallel, threads,
                serial / parallel);
    if (ds != dp) {
        std::printf("MISMATCH\n");
        return 1;
    }
    return 0;
}
