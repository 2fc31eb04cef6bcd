#include "skewcyc/linpoly.hpp"

#include <cassert>

namespace skewcyc {

LinPoly lp_zero() { return LinPoly{{}, CoeffField::base_q}; }

LinPoly lp_identity(const Tower& t) { return LinPoly{{t.one()}, CoeffField::base_q}; }

LinPoly lp_monomial(const Tower& t, const FieldElem& a, u32 i, CoeffField tag) {
    if (t.is_zero(a)) return lp_zero();
    LinPoly f;
    f.c.assign(i + 1, t.zero());
    f.c[i] = a;
    f.tag = tag;
    return f;
}

LinPoly lp_modulus(const Tower& t) {
    LinPoly f;
    f.c.assign(t.params().n + 1, t.zero());
    f.c[0] = t.neg(t.one());
    f.c[t.params().n] = t.one();
    f.tag = CoeffField::base_q;
    return f;
}

LinPoly lp_from_coeffs(const Tower&, std::vector<FieldElem> coeffs, CoeffField tag) {
    LinPoly f;
    f.c = std::move(coeffs);
    f.tag = tag;
    f.trim();
    return f;
}

bool coeffs_in_tag_field(const Tower& t, const LinPoly& f) {
    u32 d = f.tag == CoeffField::base_q ? 1
          : f.tag == CoeffField::mid_m  ? t.params().m
                                        : t.big_degree();
    for (const auto& a : f.c)
        if (!t.in_subfield(a, d)) return false;
    return true;
}

CoeffField infer_tag(const Tower& t, const LinPoly& f) {
    bool all_q = true, all_m = true;
    for (const auto& a : f.c) {
        if (all_q && !t.in_subfield(a, 1)) all_q = false;
        if (all_m && !t.in_subfield(a, t.params().m)) all_m = false;
        if (!all_q && !all_m) break;
    }
    return all_q ? CoeffField::base_q : all_m ? CoeffField::mid_m : CoeffField::full;
}

LinPoly lp_add(const Tower& t, const LinPoly& f, const LinPoly& g) {
    LinPoly out;
    out.tag = join(f.tag, g.tag);
    out.c.resize(std::max(f.c.size(), g.c.size()), t.zero());
    for (size_t i = 0; i < f.c.size(); ++i) out.c[i] = f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) out.c[i] = t.add(out.c[i], g.c[i]);
    out.trim();
    return out;
}

LinPoly lp_neg(const Tower& t, const LinPoly& f) {
    LinPoly out = f;
    for (auto& a : out.c) a = t.neg(a);
    return out;
}

LinPoly lp_sub(const Tower& t, const LinPoly& f, const LinPoly& g) {
    return lp_add(t, f, lp_neg(t, g));
}

LinPoly lp_scale(const Tower& t, const FieldElem& a, const LinPoly& f) {
    if (t.is_zero(a)) return lp_zero();
    LinPoly out = f;
    for (auto& x : out.c) x = t.mul(a, x);
    return out;
}

LinPoly sym_mul(const Tower& t, const LinPoly& f, const LinPoly& g) {
    if (f.is_zero() || g.is_zero()) return lp_zero();
    const u32 r = t.params().r;
    LinPoly out;
    out.tag = join(f.tag, g.tag);
    out.c.assign(f.c.size() + g.c.size() - 1, t.zero());
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (t.is_zero(f.c[i])) continue;
        for (size_t j = 0; j < g.c.size(); ++j) {
            if (t.is_zero(g.c[j])) continue;
            FieldElem term = t.mul(f.c[i], t.frobenius(g.c[j], (long long)i * r));
            out.c[i + j] = t.add(out.c[i + j], term);
        }
    }
    out.trim();
    return out;
}

FieldElem evaluate(const Tower& t, const LinPoly& f, const FieldElem& beta) {
    const u32 r = t.params().r;
    FieldElem acc = t.zero();
    FieldElem cur = beta;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (!t.is_zero(f.c[i])) acc = t.add(acc, t.mul(f.c[i], cur));
        if (i + 1 < f.c.size()) cur = t.frobenius(cur, r);
    }
    return acc;
}

DivModResult right_divmod(const Tower& t, const LinPoly& f, const LinPoly& g) {
    if (g.is_zero()) fail("DivisionByZero", "right division by the zero polynomial");
    const u32 r = t.params().r;
    LinPoly rem = f;
    LinPoly quot;
    quot.tag = join(f.tag, g.tag);
    if (rem.degree() >= g.degree()) quot.c.assign(rem.degree() - g.degree() + 1, t.zero());
    const int e = g.degree();
    while (rem.degree() >= e) {
        const int d = rem.degree();
        const u32 shift = (u32)(d - e);
        // eliminate the top term: subtract (R_d / G_e^{[shift r]}) x^{[shift r]} (x) G
        FieldElem coef = t.mul(rem.c[d], t.inv(t.frobenius(g.c[e], (long long)shift * r)));
        quot.c[shift] = coef;
        for (int j = 0; j <= e; ++j) {
            if (t.is_zero(g.c[j])) continue;
            FieldElem term = t.mul(coef, t.frobenius(g.c[j], (long long)shift * r));
            rem.c[shift + j] = t.sub(rem.c[shift + j], term);
        }
        rem.trim();
    }
    quot.trim();
    rem.tag = quot.tag;
    return {std::move(quot), std::move(rem)};
}

DivModResult left_divmod(const Tower& t, const LinPoly& f, const LinPoly& g) {
    if (g.is_zero()) fail("DivisionByZero", "left division by the zero polynomial");
    const u32 r = t.params().r;
    LinPoly rem = f;
    LinPoly quot;
    quot.tag = join(f.tag, g.tag);
    if (rem.degree() >= g.degree()) quot.c.assign(rem.degree() - g.degree() + 1, t.zero());
    const int e = g.degree();
    while (rem.degree() >= e) {
        const int d = rem.degree();
        const u32 shift = (u32)(d - e);
        // top term of G (x) (c x^{[shift r]}) is G_e c^{[e r]} x^{[d r]},
        // so c is a Frobenius preimage
        FieldElem c = t.frobenius(t.mul(rem.c[d], t.inv(g.c[e])), -(long long)e * r);
        quot.c[shift] = c;
        for (int i = 0; i <= e; ++i) {
            if (t.is_zero(g.c[i])) continue;
            FieldElem term = t.mul(g.c[i], t.frobenius(c, (long long)i * r));
            rem.c[shift + i] = t.sub(rem.c[shift + i], term);
        }
        rem.trim();
    }
    quot.trim();
    rem.tag = quot.tag;
    return {std::move(quot), std::move(rem)};
}

bool right_divides(const Tower& t, const LinPoly& g, const LinPoly& f) {
    if (g.is_zero()) return f.is_zero();
    return right_divmod(t, f, g).rem.is_zero();
}

bool left_divides(const Tower& t, const LinPoly& g, const LinPoly& f) {
    if (g.is_zero()) return f.is_zero();
    return left_divmod(t, f, g).rem.is_zero();
}

LinPoly monic_left(const Tower& t, const LinPoly& f) {
    if (f.is_zero()) return f;
    FieldElem c = t.inv(f.c.back());
    return lp_scale(t, c, f);
}

LinPoly monic_right(const Tower& t, const LinPoly& f) {
    if (f.is_zero()) return f;
    const u32 r = t.params().r;
    const int d = f.degree();
    // f (x) (c x) has coefficients f_i c^{[i r]}; choose c with f_d c^{[d r]} = 1
    FieldElem c = t.frobenius(t.inv(f.c.back()), -(long long)d * r);
    LinPoly out = f;
    for (size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = t.mul(out.c[i], t.frobenius(c, (long long)i * r));
    return out;
}

XgcdResult right_xgcd(const Tower& t, const LinPoly& f, const LinPoly& g) {
    if (f.is_zero() && g.is_zero()) fail("BothZero", "gcd of two zero polynomials");
    LinPoly r0 = f, r1 = g;
    LinPoly a0 = lp_identity(t), a1 = lp_zero();
    LinPoly b0 = lp_zero(), b1 = lp_identity(t);
    while (!r1.is_zero()) {
        auto [q, rem] = right_divmod(t, r0, r1);
        LinPoly a2 = lp_sub(t, a0, sym_mul(t, q, a1));
        LinPoly b2 = lp_sub(t, b0, sym_mul(t, q, b1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        a0 = std::move(a1);
        a1 = std::move(a2);
        b0 = std::move(b1);
        b1 = std::move(b2);
    }
    FieldElem c = t.inv(r0.c.back());
    return {lp_scale(t, c, r0), lp_scale(t, c, a0), lp_scale(t, c, b0)};
}

XgcdResult left_xgcd(const Tower& t, const LinPoly& f, const LinPoly& g) {
    if (f.is_zero() && g.is_zero()) fail("BothZero", "gcd of two zero polynomials");
    const u32 r = t.params().r;
    LinPoly r0 = f, r1 = g;
    LinPoly a0 = lp_identity(t), a1 = lp_zero();
    LinPoly b0 = lp_zero(), b1 = lp_identity(t);
    while (!r1.is_zero()) {
        auto [q, rem] = left_divmod(t, r0, r1);
        LinPoly a2 = lp_sub(t, a0, sym_mul(t, a1, q));
        LinPoly b2 = lp_sub(t, b0, sym_mul(t, b1, q));
        r0 = std::move(r1);
        r1 = std::move(rem);
        a0 = std::move(a1);
        a1 = std::move(a2);
        b0 = std::move(b1);
        b1 = std::move(b2);
    }
    // normalize monic by a right scalar, applied to the cofactors as well
    const int d = r0.degree();
    FieldElem c = t.frobenius(t.inv(r0.c.back()), -(long long)d * r);
    LinPoly cx = lp_monomial(t, c, 0);
    return {sym_mul(t, r0, cx), sym_mul(t, a0, cx), sym_mul(t, b0, cx)};
}

LinPoly right_gcd(const Tower& t, const LinPoly& f, const LinPoly& g) {
    if (f.is_zero()) return monic_left(t, g);
    if (g.is_zero()) return monic_left(t, f);
    LinPoly r0 = f, r1 = g;
    while (!r1.is_zero()) {
        auto rem = right_divmod(t, r0, r1).rem;
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    return monic_left(t, r0);
}

LinPoly right_lcm(const Tower& t, const LinPoly& f, const LinPoly& g) {
    if (f.is_zero() || g.is_zero()) fail("ZeroInput", "lcm with a zero polynomial");
    LinPoly r0 = f, r1 = g;
    LinPoly a0 = lp_identity(t), a1 = lp_zero();
    while (!r1.is_zero()) {
        auto [q, rem] = right_divmod(t, r0, r1);
        LinPoly a2 = lp_sub(t, a0, sym_mul(t, q, a1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        a0 = std::move(a1);
        a1 = std::move(a2);
    }
    return monic_left(t, sym_mul(t, a1, f));
}

LinPoly residue_reduce(const Tower& t, const LinPoly& f) {
    const u32 n = t.params().n;
    LinPoly out;
    out.tag = f.tag;
    out.c.assign(std::min<size_t>(f.c.size(), n), t.zero());
    for (size_t i = 0; i < f.c.size(); ++i) {
        size_t slot = i % n;
        if (out.c.size() <= slot) out.c.resize(slot + 1, t.zero());
        out.c[slot] = t.add(out.c[slot], f.c[i]);
    }
    out.trim();
    return out;
}

LinPoly sym_mul_mod(const Tower& t, const LinPoly& f, const LinPoly& g) {
    return residue_reduce(t, sym_mul(t, f, g));
}

LinPoly gamma(const Tower& t, const std::vector<FieldElem>& v, CoeffField tag) {
    if (v.size() != t.params().n) fail("BadParameter", "gamma expects a length-n vector");
    LinPoly f;
    f.c = v;
    f.tag = tag;
    f.trim();
    return f;
}

std::vector<FieldElem> gamma_inv(const Tower& t, const LinPoly& f) {
    const u32 n = t.params().n;
    if (f.degree() >= (int)n) fail("BadParameter", "gamma_inv expects a reduced class");
    std::vector<FieldElem> v(n, t.zero());
    for (size_t i = 0; i < f.c.size(); ++i) v[i] = f.c[i];
    return v;
}

}  // namespace skewcyc
