#include "skewcyc/rootspace.hpp"

#include <cassert>

namespace skewcyc {

Subspace zero_space(const Tower& t, const LinPoly& f) {
    const u32 r = t.params().r;
    const u32 n = t.params().n;
    LinPoly red = residue_reduce(t, f);
    if (red.is_zero()) return full_subspace(t, r);
    // kernel of beta -> F(beta) over F_{q^r}: columns indexed by the power
    // basis of F_{q^{rn}} over F_{q^r}
    const auto& pb = t.subfield_power_basis(r);
    std::vector<std::vector<FieldElem>> mat(n, std::vector<FieldElem>(n, t.zero()));
    for (u32 j = 0; j < n; ++j) {
        FieldElem img = evaluate(t, red, pb[j]);
        auto coords = t.subfield_coords(img, r);
        for (u32 i = 0; i < n; ++i) mat[i][j] = coords[i];
    }
    auto ker = qdlin::kernel(t, std::move(mat));
    return span_of_coords(t, r, std::move(ker));
}

LinPoly subspace_polynomial(const Tower& t, const Subspace& T) {
    const u32 r = t.params().r;
    if (T.d != r) fail("MixedScalars", "subspace polynomial expects an F_{q^r}-subspace");
    LinPoly p = lp_identity(t);
    p.tag = CoeffField::full;
    for (const auto& b : basis_elements(t, T)) {
        FieldElem g = evaluate(t, p, b);
        assert(!t.is_zero(g));
        // (x^{[r]} - g^{q^r - 1} x) (x) p
        FieldElem c = t.mul(t.frobenius(g, r), t.inv(g));
        LinPoly factor;
        factor.c = {t.neg(c), t.one()};
        factor.tag = CoeffField::full;
        p = sym_mul(t, factor, p);
    }
    return p;
}

GaloisClosureCheck galois_closure_check(const Tower& t, const Subspace& T) {
    const u32 r = t.params().r;
    const u32 n = t.params().n;
    const u32 m = t.params().m;
    if (T.d != r) fail("MixedScalars", "expected an F_{q^r}-subspace");
    GaloisClosureCheck out;
    auto beta = basis_elements(t, T);
    // Moore rows over F_{q^{rn}}
    std::vector<std::vector<FieldElem>> moore;
    for (const auto& b : beta) {
        std::vector<FieldElem> row(n);
        FieldElem cur = b;
        for (u32 j = 0; j < n; ++j) {
            row[j] = cur;
            cur = t.frobenius(cur, r);
        }
        moore.push_back(std::move(row));
    }
    u32 rank_big = moore.empty() ? 0 : qdlin::rank(t, moore);
    out.dim_big = n - rank_big;

    // intersection with F_{q^m}^n: expand every equation over the F_{q^m}
    // coordinates of its entries
    const u32 slots = t.big_degree() / m;
    std::vector<std::vector<FieldElem>> expanded;
    for (const auto& row : moore) {
        std::vector<std::vector<FieldElem>> per_slot(slots, std::vector<FieldElem>(n, t.zero()));
        for (u32 j = 0; j < n; ++j) {
            auto coords = t.subfield_coords(row[j], m);
            for (u32 tt = 0; tt < slots; ++tt) per_slot[tt][j] = coords[tt];
        }
        for (auto& e : per_slot) expanded.push_back(std::move(e));
    }
    if (expanded.empty()) {
        out.dim_sub = n;
        return out;
    }
    u32 rank_sub = qdlin::rank(t, std::move(expanded));
    out.dim_sub = n - rank_sub;
    return out;
}

bool is_root_space_over_fqm(const Tower& t, const Subspace& T) {
    LinPoly p = subspace_polynomial(t, T);
    const u32 m = t.params().m;
    for (const auto& a : p.c)
        if (!t.in_subfield(a, m)) return false;
    return true;
}

LinPoly minimal_qr_polynomial(const Tower& t, const FieldElem& beta) {
    const u32 r = t.params().r;
    const u32 m = t.params().m;
    const u32 slots = t.big_degree() / m;
    // Frobenius chain beta, beta^{[r]}, ... in F_{q^m}-coordinates; the first
    // linear dependence gives the minimal polynomial.
    std::vector<FieldElem> chain = {beta};
    for (u32 D = 0;; ++D) {
        // solve sum_i lambda_i v_i = v_D over F_{q^m}
        std::vector<std::vector<FieldElem>> aug(slots, std::vector<FieldElem>(D + 1, t.zero()));
        for (u32 i = 0; i <= D; ++i) {
            auto coords = t.subfield_coords(chain[i], m);
            for (u32 tt = 0; tt < slots; ++tt) aug[tt][i] = coords[tt];
        }
        // eliminate: if the last column is dependent on the first D columns
        std::vector<u32> pivots;
        qdlin::rref(t, aug, &pivots);
        bool dependent = true;
        for (u32 c : pivots)
            if (c == D) { dependent = false; break; }
        if (dependent) {
            // read off lambda: column D expressed in the pivot columns
            std::vector<FieldElem> lambda(D, t.zero());
            for (size_t i = 0; i < pivots.size(); ++i) lambda[pivots[i]] = aug[i][D];
            LinPoly f;
            f.c.assign(D + 1, t.zero());
            for (u32 i = 0; i < D; ++i) f.c[i] = t.neg(lambda[i]);
            f.c[D] = t.one();
            f.tag = CoeffField::mid_m;
            assert(t.is_zero(evaluate(t, f, beta)));
            return f;
        }
        chain.push_back(t.frobenius(chain.back(), r));
    }
}

Subspace cyclotomic_space(const Tower& t, const FieldElem& beta) {
    LinPoly f = minimal_qr_polynomial(t, beta);
    Subspace s = zero_space(t, f);
    assert(contains(t, s, beta));
    return s;
}

}  // namespace skewcyc
