#include "skewcyc/enumerate.hpp"

#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewcyc {

namespace {

// rank over F_q; rows are consumed in place, `nrows` of them are valid
u32 raw_rank(const SmallField& fq, std::vector<std::vector<u32>>& rows, size_t nrows) {
    if (nrows == 0) return 0;
    const size_t ncols = rows[0].size();
    u32 rank = 0;
    for (size_t col = 0; col < ncols && rank < nrows; ++col) {
        size_t piv = nrows;
        for (size_t i = rank; i < nrows; ++i)
            if (rows[i][col] != 0) { piv = i; break; }
        if (piv == nrows) continue;
        std::swap(rows[rank], rows[piv]);
        u32 ilc = fq.inv(rows[rank][col]);
        for (size_t j = col; j < ncols; ++j) rows[rank][j] = fq.mul(rows[rank][j], ilc);
        for (size_t i = rank + 1; i < nrows; ++i) {
            if (rows[i][col] == 0) continue;
            u32 c = rows[i][col];
            for (size_t j = col; j < ncols; ++j)
                rows[i][j] = fq.sub(rows[i][j], fq.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

// per-thread working set so the scan allocates nothing in steady state
struct Scratch {
    Vec word;
    FieldElem term;
    std::vector<u32> conv;
    std::vector<std::vector<u32>> rows;

    Scratch(const Tower& t, u32 n)
        : word(n, t.zero()), term(t.zero()), rows(n, std::vector<u32>(t.big_degree(), 0)) {}
};

struct Scan {
    const Tower& t;
    const Mat& gen;
    const std::vector<FieldElem>& msgs;  // F_{q^m} sorted by radix code
    u32 k, n;

    u32 weight_of(u64 index, Scratch& s) const {
        // codeword: lexicographic messages, first coordinate most significant
        for (auto& e : s.word) e.c.assign(t.big_degree(), 0);
        for (u32 i = k; i-- > 0;) {
            const FieldElem& u = msgs[index % msgs.size()];
            index /= msgs.size();
            if (t.is_zero(u)) continue;
            for (u32 j = 0; j < n; ++j) {
                if (t.is_zero(gen[i][j])) continue;
                t.mul_into(u, gen[i][j], s.term, s.conv);
                t.add_into(s.word[j], s.term);
            }
        }
        size_t nrows = 0;
        for (const auto& e : s.word)
            if (!t.is_zero(e)) s.rows[nrows++] = e.c;
        return raw_rank(t.fq(), s.rows, nrows);
    }
};

void check_cap(const Tower& t, u32 k, u64 cap, u64& total) {
    if (k == 0) fail("EmptyCode", "the zero code has no nonzero codewords");
    total = codeword_count(t, k);
    if (total == UINT64_MAX || total - 1 > cap)
        fail("EnumerationTooLarge", "q^{mk} - 1 exceeds the enumeration cap");
}

}  // namespace

u32 rank_weight_raw(const Tower& t, const Vec& v) {
    std::vector<std::vector<u32>> rows;
    rows.reserve(v.size());
    for (const auto& e : v)
        if (!t.is_zero(e)) rows.push_back(e.c);
    size_t nrows = rows.size();
    return raw_rank(t.fq(), rows, nrows);
}

u64 codeword_count(const Tower& t, u32 k) {
    u64 total = 1;
    const u64 qm = [&] {
        u64 v = 1;
        for (u32 i = 0; i < t.params().m; ++i) v *= t.fq().q();
        return v;
    }();
    for (u32 i = 0; i < k; ++i) {
        if (total > UINT64_MAX / qm) return UINT64_MAX;
        total *= qm;
    }
    return total;
}

u32 min_rank_distance_serial(const Tower& t, const Mat& gen, u64 cap) {
    u64 total = 0;
    check_cap(t, (u32)gen.size(), cap, total);
    Scan scan{t, gen, t.subfield_elements(t.params().m), (u32)gen.size(), (u32)gen[0].size()};
    Scratch scratch(t, scan.n);
    u32 best = UINT32_MAX;
    for (u64 idx = 1; idx < total; ++idx) {
        u32 w = scan.weight_of(idx, scratch);
        if (w < best) best = w;
    }
    return best;
}

u32 min_rank_distance_parallel(const Tower& t, const Mat& gen, u64 cap, int jobs) {
    u64 total = 0;
    check_cap(t, (u32)gen.size(), cap, total);
    Scan scan{t, gen, t.subfield_elements(t.params().m), (u32)gen.size(), (u32)gen[0].size()};
    u32 best = UINT32_MAX;
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
    const long long last = (long long)total - 1;
#pragma omp parallel reduction(min : best)
    {
        Scratch scratch(t, scan.n);
#pragma omp for schedule(dynamic, 4096)
        for (long long idx = 1; idx <= last; ++idx) {
            u32 w = scan.weight_of((u64)idx, scratch);
            if (w < best) best = w;
        }
    }
#else
    (void)jobs;
    Scratch scratch(t, scan.n);
    for (u64 idx = 1; idx < total; ++idx) {
        u32 w = scan.weight_of(idx, scratch);
        if (w < best) best = w;
    }
#endif
    return best;
}

}  // namespace skewcyc
