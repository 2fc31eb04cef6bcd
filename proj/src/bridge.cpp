#include "skewcyc/bridge.hpp"

#include <cassert>
#include <numeric>

namespace skewcyc {

namespace {
void fqp_trim(FqPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}
}  // namespace

FqPoly fqp_from(std::vector<u32> coeffs) {
    FqPoly f{std::move(coeffs)};
    fqp_trim(f);
    return f;
}

FqPoly fqp_one() { return FqPoly{{1}}; }

FqPoly fqp_xn_minus_1(const SmallField& fq, u32 n) {
    FqPoly f;
    f.c.assign(n + 1, 0);
    f.c[0] = fq.neg(1);
    f.c[n] = 1;
    return f;
}

FqPoly fqp_add(const SmallField& fq, const FqPoly& a, const FqPoly& b) {
    FqPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = fq.add(out.c[i], b.c[i]);
    fqp_trim(out);
    return out;
}

FqPoly fqp_mul(const SmallField& fq, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FqPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = fq.add(out.c[i + j], fq.mul(a.c[i], b.c[j]));
    }
    return out;
}

FqPoly fqp_mod(const SmallField& fq, FqPoly a, const FqPoly& b) {
    assert(!b.is_zero());
    u32 ilc = fq.inv(b.c.back());
    while ((int)a.c.size() >= (int)b.c.size() && !a.is_zero()) {
        u32 c = fq.mul(a.c.back(), ilc);
        size_t shift = a.c.size() - b.c.size();
        if (c != 0)
            for (size_t j = 0; j < b.c.size(); ++j)
                a.c[shift + j] = fq.sub(a.c[shift + j], fq.mul(c, b.c[j]));
        a.c.pop_back();
        fqp_trim(a);
    }
    return a;
}

FqPoly fqp_monic(const SmallField& fq, FqPoly a) {
    if (a.is_zero()) return a;
    u32 ilc = fq.inv(a.c.back());
    for (auto& x : a.c) x = fq.mul(x, ilc);
    return a;
}

FqPoly fqp_gcd(const SmallField& fq, FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = fqp_mod(fq, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fqp_monic(fq, std::move(a));
}

// ---------------------------------------------------------------------------

ClassicCyclicCode classic_cyclic(const SmallField& fq, const FqPoly& gen, u32 n) {
    ClassicCyclicCode c;
    c.n = n;
    FqPoly mod = fqp_xn_minus_1(fq, n);
    if (gen.is_zero()) {
        c.g = fqp_monic(fq, mod);
        c.k = 0;
        return c;
    }
    c.g = fqp_gcd(fq, gen, mod);
    c.k = n - (u32)c.g.degree();
    return c;
}

std::vector<std::vector<u32>> classic_generator_matrix(const ClassicCyclicCode& c) {
    std::vector<std::vector<u32>> rows(c.k, std::vector<u32>(c.n, 0));
    for (u32 i = 0; i < c.k; ++i)
        for (size_t j = 0; j < c.g.c.size(); ++j) rows[i][i + j] = c.g.c[j];
    return rows;
}

std::vector<std::vector<u32>> classic_codewords(const SmallField& fq, const ClassicCyclicCode& c) {
    auto gen = classic_generator_matrix(c);
    u64 total = 1;
    for (u32 i = 0; i < c.k; ++i) {
        total *= fq.q();
        if (total > (1u << 22)) fail("EnumerationTooLarge", "too many classical codewords");
    }
    std::vector<std::vector<u32>> out;
    out.reserve(total);
    for (u64 code = 0; code < total; ++code) {
        std::vector<u32> w(c.n, 0);
        u64 cc = code;
        for (u32 i = 0; i < c.k; ++i) {
            u32 u = (u32)(cc % fq.q());
            cc /= fq.q();
            if (u != 0)
                for (u32 j = 0; j < c.n; ++j) w[j] = fq.add(w[j], fq.mul(u, gen[i][j]));
        }
        out.push_back(std::move(w));
    }
    return out;
}

u32 min_hamming_distance(const SmallField& fq, const ClassicCyclicCode& c) {
    if (c.k == 0) fail("EmptyCode", "the zero code has no nonzero codewords");
    u32 best = UINT32_MAX;
    for (const auto& w : classic_codewords(fq, c)) {
        u32 wt = 0;
        for (u32 x : w) wt += x != 0;
        if (wt > 0 && wt < best) best = wt;
    }
    return best;
}

std::vector<u64> hamming_weight_distribution(const SmallField& fq, const ClassicCyclicCode& c) {
    std::vector<u64> counts(c.n + 1, 0);
    for (const auto& w : classic_codewords(fq, c)) {
        u32 wt = 0;
        for (u32 x : w) wt += x != 0;
        ++counts[wt];
    }
    return counts;
}

// ---------------------------------------------------------------------------

BridgeContext make_bridge(const Tower& t) {
    const u32 m = t.params().m, n = t.params().n, r = t.params().r;
    if (m != n) fail("ParameterViolation", "the bridge needs m = n");
    if (std::gcd(n, r) != 1) fail("ParameterViolation", "the bridge needs gcd(n, r) = 1");
    BridgeContext ctx;
    // normal basis of F_{q^n} = F_{q^m} over F_q: first element of the
    // subfield whose q-power orbit is F_q-independent
    for (u64 code = 1;; ++code) {
        FieldElem a = t.from_radix(code);
        if (!t.in_subfield(a, m)) continue;
        std::vector<std::vector<u32>> rows;
        FieldElem cur = a;
        for (u32 i = 0; i < n; ++i) {
            rows.push_back(cur.c);
            cur = t.frobenius(cur, 1);
        }
        if (fqlin::rank(t.fq(), std::move(rows)) == n) {
            ctx.alpha = a;
            break;
        }
    }
    ctx.alphas.resize(n);
    for (u32 i = 0; i < n; ++i) ctx.alphas[i] = t.frobenius(ctx.alpha, (long long)i * r);
    return ctx;
}

Vec e_map(const Tower& t, const BridgeContext& ctx, const std::vector<u32>& c) {
    const u32 n = t.params().n;
    if (c.size() != n) fail("BadParameter", "expected a length-n vector over F_q");
    Vec out(n);
    for (u32 i = 0; i < n; ++i) out[i] = t.scalar_mul(c[i], ctx.alphas[i]);
    return out;
}

LinPoly l_map(const Tower& t, const FqPoly& f) {
    const u32 n = t.params().n;
    std::vector<FieldElem> coeffs(n, t.zero());
    for (size_t i = 0; i < f.c.size(); ++i) {
        size_t slot = i % n;
        coeffs[slot] = t.add(coeffs[slot], t.from_fq(f.c[i]));
    }
    return lp_from_coeffs(t, std::move(coeffs), CoeffField::base_q);
}

LinPoly e_op(const Tower& t, const BridgeContext& ctx, const FqPoly& g) {
    const u32 n = t.params().n;
    std::vector<u32> folded(n, 0);
    for (size_t i = 0; i < g.c.size(); ++i)
        folded[i % n] = t.fq().add(folded[i % n], g.c[i]);
    std::vector<FieldElem> coeffs(n, t.zero());
    for (u32 i = 0; i < n; ++i) coeffs[i] = t.scalar_mul(folded[i], ctx.alphas[i]);
    return lp_from_coeffs(t, std::move(coeffs), CoeffField::mid_m);
}

// ---------------------------------------------------------------------------

namespace {
std::vector<u32> flatten(const Tower& t, const Vec& v) {
    std::vector<u32> out;
    out.reserve(v.size() * t.big_degree());
    for (const auto& e : v) out.insert(out.end(), e.c.begin(), e.c.end());
    return out;
}
}  // namespace

FqLeftIdealCode fq_ideal_span(const Tower& t, const std::vector<LinPoly>& gens) {
    const u32 n = t.params().n;
    FqLeftIdealCode code;
    std::vector<std::vector<u32>> rows;
    for (const auto& g : gens) {
        LinPoly red = residue_reduce(t, g);
        code.gens.push_back(red);
        if (red.is_zero()) continue;
        LinPoly shifted = red;
        for (u32 j = 0; j < n; ++j) {
            rows.push_back(flatten(t, gamma_inv(t, shifted)));
            // next twisted shift: x^{[r]} (x) shifted
            shifted = sym_mul_mod(t, lp_monomial(t, t.one(), 1, CoeffField::base_q), shifted);
        }
    }
    fqlin::rref(t.fq(), rows);
    code.basis = std::move(rows);
    assert(code.basis.size() <= (size_t)n * gens.size());
    return code;
}

bool fq_ideal_contains(const Tower& t, const FqLeftIdealCode& c, const Vec& v) {
    std::vector<u32> w = flatten(t, v);
    const auto& fq = t.fq();
    for (const auto& row : c.basis) {
        size_t piv = 0;
        while (piv < row.size() && row[piv] == 0) ++piv;
        if (piv == row.size() || w[piv] == 0) continue;
        u32 coef = w[piv];
        for (size_t j = piv; j < w.size(); ++j) w[j] = fq.sub(w[j], fq.mul(coef, row[j]));
    }
    for (u32 x : w)
        if (x != 0) return false;
    return true;
}

std::vector<Vec> fq_ideal_codewords(const Tower& t, const FqLeftIdealCode& c) {
    const u32 n = t.params().n;
    const u32 D = t.big_degree();
    u64 total = 1;
    for (u32 i = 0; i < c.dim(); ++i) {
        total *= t.fq().q();
        if (total > (1u << 20)) fail("EnumerationTooLarge", "too many ideal codewords");
    }
    std::vector<Vec> out;
    out.reserve(total);
    for (u64 code = 0; code < total; ++code) {
        std::vector<u32> flat(n * D, 0);
        u64 cc = code;
        for (u32 i = 0; i < c.dim(); ++i) {
            u32 u = (u32)(cc % t.fq().q());
            cc /= t.fq().q();
            if (u != 0)
                for (size_t j = 0; j < flat.size(); ++j)
                    flat[j] = t.fq().add(flat[j], t.fq().mul(u, c.basis[i][j]));
        }
        Vec v(n, t.zero());
        for (u32 j = 0; j < n; ++j)
            for (u32 i = 0; i < D; ++i) v[j].c[i] = flat[j * D + i];
        out.push_back(std::move(v));
    }
    return out;
}

FqLeftIdealCode cyclic_to_skew(const Tower& t, const BridgeContext& ctx, const ClassicCyclicCode& c) {
    FqLeftIdealCode ideal = fq_ideal_span(t, {e_op(t, ctx, c.g)});
    assert(ideal.dim() == c.k);
    return ideal;
}

SkewCyclicCode hat_code(const Tower& t, const BridgeContext& ctx, const ClassicCyclicCode& c) {
    LinPoly eg = e_op(t, ctx, c.g);
    SkewCyclicCode skew = code_from_generator(t, eg);
    assert(skew.k == c.k);
    // the minimal generator is the monic associate of E(g)
    assert(skew.is_zero_code() || skew.G == monic_left(t, residue_reduce(t, eg)));
    return skew;
}

}  // namespace skewcyc
