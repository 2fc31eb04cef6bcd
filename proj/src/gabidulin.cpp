#include "skewcyc/gabidulin.hpp"

#include <cassert>
#include <numeric>

#include "skewcyc/rootspace.hpp"

namespace skewcyc {

LinearCode gabidulin_code(const Tower& t, const std::vector<FieldElem>& beta, u32 k) {
    const u32 m = t.params().m;
    const u32 r = t.params().r;
    const u32 n_len = (u32)beta.size();
    if (n_len == 0 || n_len > m) fail("ParameterViolation", "need 1 <= n <= m evaluation points");
    if (std::gcd(r, m) != 1) fail("ParameterViolation", "need gcd(r, m) = 1");
    if (k < 1 || k > n_len) fail("ParameterViolation", "need 1 <= k <= n");
    for (const auto& b : beta)
        if (!t.in_subfield(b, m)) fail("ParameterViolation", "evaluation points must lie in F_{q^m}");
    {
        std::vector<std::vector<u32>> rows;
        for (const auto& b : beta) rows.push_back(b.c);
        if (fqlin::rank(t.fq(), std::move(rows)) != n_len)
            fail("DependentEvaluationPoints", "evaluation points must be F_q-independent");
    }
    if (k == n_len) {
        Mat id(n_len, Vec(n_len, t.zero()));
        for (u32 i = 0; i < n_len; ++i) id[i][i] = t.one();
        return linear_code_from_rows(t, std::move(id));
    }
    // Moore parity check rows beta_j^{[ir]}, i < n-k
    Mat parity(n_len - k, Vec(n_len));
    for (u32 j = 0; j < n_len; ++j) {
        FieldElem cur = beta[j];
        for (u32 i = 0; i + k < n_len; ++i) {
            parity[i][j] = cur;
            cur = t.frobenius(cur, r);
        }
    }
    Mat gen = qdlin::kernel(t, parity);
    LinearCode c = linear_code_from_rows(t, std::move(gen));
    assert(c.k == k);
    return c;
}

SkewCyclicCode rank_bch_code(const Tower& t, const FieldElem& alpha, u32 delta) {
    const u32 m = t.params().m;
    const u32 r = t.params().r;
    if (delta < 1 || delta > m) fail("ParameterViolation", "need 1 <= delta <= m");
    if (delta == 1) return whole_space_code(t);
    std::vector<FieldElem> chain;
    FieldElem cur = alpha;
    for (u32 i = 0; i + 2 <= delta; ++i) {
        chain.push_back(cur);
        cur = t.frobenius(cur, r);
    }
    if (span_of(t, r, chain).dim() != chain.size())
        fail("DependentChain", "alpha, ..., alpha^{[(delta-2)r]} must be F_{q^r}-independent");
    Subspace T = zero_subspace(t, r);
    for (const auto& b : chain) T = sum(t, T, cyclotomic_space(t, b));
    return rho_inverse(t, T);
}

bool bch_equals_gabidulin_check(const Tower& t, const FieldElem& alpha, u32 delta) {
    const u32 m = t.params().m, n = t.params().n, r = t.params().r;
    if (m != n) fail("ParameterViolation", "needs m = n");
    if (std::gcd(r, n) != 1) fail("ParameterViolation", "needs gcd(r, n) = 1");
    if (delta < 1 || delta > n) fail("ParameterViolation", "need 1 <= delta <= n");
    if (!t.in_subfield(alpha, m)) fail("ParameterViolation", "alpha must lie in F_{q^m}");
    {
        // alpha must generate a normal basis of F_{q^m} over F_q
        std::vector<std::vector<u32>> rows;
        FieldElem cur = alpha;
        for (u32 i = 0; i < m; ++i) {
            rows.push_back(cur.c);
            cur = t.frobenius(cur, 1);
        }
        if (fqlin::rank(t.fq(), std::move(rows)) != m)
            fail("ParameterViolation", "alpha does not generate a normal basis");
    }
    SkewCyclicCode bch = rank_bch_code(t, alpha, delta);

    std::vector<FieldElem> beta;
    FieldElem cur = alpha;
    for (u32 i = 0; i < n; ++i) {
        beta.push_back(cur);
        cur = t.frobenius(cur, r);
    }
    // the lift lemma backs the F_{q^r}-independence used by the construction
    assert(independence_lift_check(t, beta));
    LinearCode gab = gabidulin_code(t, beta, n - delta + 1);
    if (bch.k != gab.k) return false;
    return rowspace_equal(t, generator_matrix(t, bch), gab.gen);
}

bool independence_lift_check(const Tower& t, const std::vector<FieldElem>& elems) {
    const u32 r = t.params().r;
    std::vector<std::vector<u32>> rows;
    for (const auto& e : elems) rows.push_back(e.c);
    if (fqlin::rank(t.fq(), std::move(rows)) != elems.size()) return true;  // hypothesis fails
    return span_of(t, r, elems).dim() == elems.size();
}

}  // namespace skewcyc
