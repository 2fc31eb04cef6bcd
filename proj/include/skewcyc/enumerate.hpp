#pragma once

#include "skewcyc/skewcode.hpp"

namespace skewcyc {

// Brute-force minimum rank distance over all q^{mk} - 1 nonzero codewords of
// a k x n generator matrix. Messages run over F_{q^m}^k in lexicographic
// order; the message space is a pure index range, so it partitions into
// disjoint chunks and the result is the min of the partial minima.
//
// Both kernels compute the same scan; the serial one is the reference
// implementation the parallel one is tested against.

u32 rank_weight_raw(const Tower& t, const Vec& v);  // single-route kernel rank

u64 codeword_count(const Tower& t, u32 k);  // q^{mk}, saturating at UINT64_MAX

u32 min_rank_distance_serial(const Tower& t, const Mat& gen, u64 cap);
u32 min_rank_distance_parallel(const Tower& t, const Mat& gen, u64 cap, int jobs = 0);

}  // namespace skewcyc
