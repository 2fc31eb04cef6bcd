#include "skewcyc/skewcode.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace skewcyc {

LinearCode linear_code_from_rows(const Tower& t, Mat rows) {
    LinearCode c;
    c.gen = rowspace_rref(t, std::move(rows));
    c.k = (u32)c.gen.size();
    return c;
}

Vec sigma_shift(const Tower& t, const Vec& v) {
    const u32 r = t.params().r;
    const size_t n = v.size();
    Vec out(n, t.zero());
    if (n == 0) return out;
    out[0] = t.frobenius(v[n - 1], r);
    for (size_t i = 1; i < n; ++i) out[i] = t.frobenius(v[i - 1], r);
    return out;
}

bool is_skew_cyclic(const Tower& t, const std::vector<Vec>& finite_set) {
    std::set<Vec> set(finite_set.begin(), finite_set.end());
    for (const auto& v : finite_set)
        if (!set.count(sigma_shift(t, v))) return false;
    return true;
}

bool is_skew_cyclic(const Tower& t, const LinearCode& c) {
    for (const auto& row : c.gen)
        if (!rowspace_contains(t, c.gen, sigma_shift(t, row))) return false;
    return true;
}

SkewCyclicCode zero_code(const Tower& t) {
    SkewCyclicCode c;
    c.G = lp_modulus(t);
    c.G.tag = CoeffField::mid_m;
    c.H = lp_identity(t);
    c.k = 0;
    return c;
}

SkewCyclicCode whole_space_code(const Tower& t) {
    return code_from_generator(t, lp_identity(t));
}

SkewCyclicCode code_from_generators(const Tower& t, const std::vector<LinPoly>& gens) {
    const LinPoly mod = lp_modulus(t);
    LinPoly g = mod;
    bool any = false;
    for (const auto& f : gens) {
        LinPoly red = residue_reduce(t, f);
        if (red.is_zero()) continue;
        any = true;
        g = right_gcd(t, g, red);
    }
    if (!any) return zero_code(t);

    SkewCyclicCode c;
    c.G = g;
    c.G.tag = infer_tag(t, c.G);
    auto [h, rem] = left_divmod(t, mod, c.G);
    assert(rem.is_zero());
    c.H = h;
    c.H.tag = c.G.tag;
    c.k = t.params().n - (u32)c.G.degree();
    // the defining identity holds on both sides
    assert(sym_mul(t, c.G, c.H) == mod);
    assert(sym_mul(t, c.H, c.G) == mod);
#ifndef NDEBUG
    // shift closure of the generator matrix rows
    if (c.k > 0) {
        Mat rs = rowspace_rref(t, generator_matrix(t, c));
        for (const auto& row : generator_matrix(t, c))
            assert(rowspace_contains(t, rs, sigma_shift(t, row)));
    }
#endif
    return c;
}

SkewCyclicCode code_from_generator(const Tower& t, const LinPoly& gen) {
    return code_from_generators(t, std::vector<LinPoly>{gen});
}

Mat generator_matrix(const Tower& t, const SkewCyclicCode& c) {
    const u32 n = t.params().n;
    const u32 r = t.params().r;
    Mat g(c.k, Vec(n, t.zero()));
    const u32 e = n - c.k;  // deg G
    for (u32 i = 0; i < c.k; ++i)
        for (u32 j = 0; j <= e; ++j)
            g[i][i + j] = t.frobenius(c.G.c[j], (long long)i * r);
    return g;
}

Mat parity_matrix(const Tower& t, const SkewCyclicCode& c) {
    const u32 n = t.params().n;
    const u32 r = t.params().r;
    const u32 k = c.k;
    // h_i = H_i^{[(k-i)r]}
    std::vector<FieldElem> h(k + 1, t.zero());
    for (u32 i = 0; i <= k; ++i) {
        FieldElem hi = i < c.H.c.size() ? c.H.c[i] : t.zero();
        h[i] = t.frobenius(hi, (long long)(k - i) * r);
    }
    Mat mat(n - k, Vec(n, t.zero()));
    for (u32 row = 0; row + k < n; ++row)
        for (u32 j = 0; j <= k; ++j)
            mat[row][row + j] = t.frobenius(h[k - j], (long long)row * r);
    return mat;
}

SkewCyclicCode dual(const Tower& t, const SkewCyclicCode& c) {
    const u32 r = t.params().r;
    const u32 k = c.k;
    std::vector<FieldElem> h(k + 1, t.zero());
    for (u32 i = 0; i <= k; ++i) {
        FieldElem hi = i < c.H.c.size() ? c.H.c[i] : t.zero();
        h[i] = t.frobenius(hi, (long long)(k - i) * r);
    }
    // H_perp = (h_k x + h_{k-1} x^{[r]} + ... + h_0 x^{[kr]}) / h_0
    FieldElem ih0 = t.inv(h[0]);
    LinPoly hp;
    hp.c.assign(k + 1, t.zero());
    for (u32 i = 0; i <= k; ++i) hp.c[i] = t.mul(h[k - i], ih0);
    hp.tag = CoeffField::mid_m;
    hp.trim();
    SkewCyclicCode d = code_from_generator(t, hp);
    assert(d.k == t.params().n - k);
#ifndef NDEBUG
    // classical orthogonality against the primal generator matrix
    if (d.k > 0 && c.k > 0) {
        Mat gd = generator_matrix(t, d);
        Mat gc = generator_matrix(t, c);
        for (const auto& x : gd)
            for (const auto& y : gc) {
                FieldElem acc = t.zero();
                for (size_t j = 0; j < x.size(); ++j) acc = t.add(acc, t.mul(x[j], y[j]));
                assert(t.is_zero(acc));
            }
    }
#endif
    return d;
}

bool code_contains(const Tower& t, const SkewCyclicCode& c, const LinPoly& f) {
    LinPoly red = residue_reduce(t, f);
    bool by_division = right_divides(t, c.G, red);
    bool by_check = sym_mul_mod(t, red, c.H).is_zero();
    assert(by_division == by_check);
    (void)by_check;
    return by_division;
}

bool code_contains(const Tower& t, const SkewCyclicCode& c, const Vec& v) {
    return code_contains(t, c, gamma(t, v));
}

Subspace rho(const Tower& t, const SkewCyclicCode& c) { return zero_space(t, c.G); }

SkewCyclicCode rho_inverse(const Tower& t, const Subspace& T) {
    LinPoly p = subspace_polynomial(t, T);
    const u32 m = t.params().m;
    for (const auto& a : p.c)
        if (!t.in_subfield(a, m))
            fail("NotARootSpace", "subspace has no minimal generator over F_{q^m}");
    p.tag = CoeffField::mid_m;
    SkewCyclicCode c = code_from_generator(t, p);
    assert(c.G == p || T.dim() == t.params().n);
    return c;
}

Mat moore_parity_matrix(const Tower& t, const std::vector<FieldElem>& basis) {
    const u32 r = t.params().r;
    const u32 n = t.params().n;
    Subspace s = span_of(t, r, basis);
    if (s.dim() != basis.size()) fail("DependentRows", "Moore matrix rows must be independent");
    Mat mat;
    for (const auto& b : basis) {
        Vec row(n);
        FieldElem cur = b;
        for (u32 j = 0; j < n; ++j) {
            row[j] = cur;
            cur = t.frobenius(cur, r);
        }
        mat.push_back(std::move(row));
    }
    return mat;
}

Mat moore_kernel_intersection(const Tower& t, const Mat& moore) {
    const u32 m = t.params().m;
    const u32 n = t.params().n;
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
    Mat basis;
    if (expanded.empty()) {
        for (u32 i = 0; i < n; ++i) {
            Vec v(n, t.zero());
            v[i] = t.one();
            basis.push_back(std::move(v));
        }
        return basis;
    }
    basis = qdlin::kernel(t, std::move(expanded));
    return rowspace_rref(t, std::move(basis));
}

Vec psi_embed(const Tower& t, const Vec& c) {
    const u32 n = t.params().n;
    const u32 N = (u32)c.size();
    if (N == 0 || n % N != 0) fail("ParameterViolation", "source length must divide n");
    Vec out;
    out.reserve(n);
    for (u32 rep = 0; rep < n / N; ++rep)
        for (u32 i = 0; i < N; ++i) out.push_back(c[i]);
    return out;
}

std::vector<Vec> all_codewords(const Tower& t, const Mat& gen) {
    const u32 m = t.params().m;
    const auto& sub = t.subfield_elements(m);
    const u32 k = (u32)gen.size();
    u64 total = 1;
    for (u32 i = 0; i < k; ++i) {
        total *= sub.size();
        if (total > (1u << 20)) fail("EnumerationTooLarge", "too many codewords to enumerate");
    }
    const u32 n = gen.empty() ? t.params().n : (u32)gen[0].size();
    std::vector<Vec> out;
    out.reserve(total);
    for (u64 code = 0; code < total; ++code) {
        Vec w(n, t.zero());
        u64 cc = code;
        // lexicographic: the first message coordinate is the most significant digit
        for (u32 i = k; i-- > 0;) {
            const FieldElem& u = sub[cc % sub.size()];
            cc /= sub.size();
            if (!t.is_zero(u))
                for (u32 j = 0; j < n; ++j) w[j] = t.add(w[j], t.mul(u, gen[i][j]));
        }
        out.push_back(std::move(w));
    }
    return out;
}

Mat rowspace_rref(const Tower& t, Mat rows) {
    qdlin::rref(t, rows);
    return rows;
}

bool rowspace_contains(const Tower& t, const Mat& rref_rows, const Vec& v) {
    Vec w = v;
    for (const auto& row : rref_rows) {
        size_t piv = 0;
        while (piv < row.size() && t.is_zero(row[piv])) ++piv;
        if (piv == row.size() || t.is_zero(w[piv])) continue;
        FieldElem c = w[piv];
        for (size_t j = piv; j < w.size(); ++j) w[j] = t.sub(w[j], t.mul(c, row[j]));
    }
    for (const auto& x : w)
        if (!t.is_zero(x)) return false;
    return true;
}

bool rowspace_equal(const Tower& t, const Mat& a, const Mat& b) {
    return rowspace_rref(t, a) == rowspace_rref(t, b);
}

}  // namespace skewcyc
