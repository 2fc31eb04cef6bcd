#include "skewcyc/lattice.hpp"

#include <cassert>

namespace skewcyc {

SkewCyclicCode meet(const Tower& t, const SkewCyclicCode& a, const SkewCyclicCode& b) {
    LinPoly m = right_lcm(t, a.G, b.G);
    return code_from_generator(t, m);
}

SkewCyclicCode join(const Tower& t, const SkewCyclicCode& a, const SkewCyclicCode& b) {
    LinPoly d = right_gcd(t, a.G, b.G);
    return code_from_generator(t, d);
}

bool are_complementary(const Tower& t, const SkewCyclicCode& a, const SkewCyclicCode& b) {
    LinPoly d = right_gcd(t, a.G, b.G);
    bool by_criterion = d.degree() == 0 && (u32)(a.G.degree() + b.G.degree()) == t.params().n;
    // direct check through the lattice
    bool direct = meet(t, a, b).k == 0 && join(t, a, b).k == t.params().n;
    assert(by_criterion == direct);
    (void)direct;
    return by_criterion;
}

LinPoly idempotent_generator(const Tower& t, const SkewCyclicCode& c) {
    const LinPoly x = lp_identity(t);
    auto rgt = right_xgcd(t, c.G, c.H);  // d = a (x) G + b (x) H
    auto lft = left_xgcd(t, c.G, c.H);   // d = G (x) a + H (x) b
    if (!(rgt.d == x) || !(lft.d == x))
        fail("NotCoprimeBothSides", "G and H have a nontrivial one-sided gcd");
    LinPoly e = residue_reduce(t, lp_sub(t, x, sym_mul(t, rgt.b, c.H)));
    LinPoly e2 = residue_reduce(t, lp_sub(t, x, sym_mul(t, c.H, lft.b)));
    assert(e == e2);
    (void)e2;
    assert(sym_mul_mod(t, e, e) == e);
    // E generates the ideal
    assert(code_from_generator(t, e).G == c.G);
    // x - E is idempotent and generates the complementary ideal (H)
    LinPoly xe = residue_reduce(t, lp_sub(t, x, e));
    assert(sym_mul_mod(t, xe, xe) == xe);
    assert(code_from_generator(t, xe).G == monic_left(t, c.H));
    (void)xe;
    return e;
}

LinPoly phi_map(const Tower& t, const LinPoly& f, u32 a) {
    const u32 rn = t.big_degree();
    a %= rn;
    LinPoly out = residue_reduce(t, f);
    for (auto& x : out.c) x = t.frobenius(x, (long long)rn - a);
    out.trim();
    return out;
}

Vec phi_map_vec(const Tower& t, const Vec& v, u32 a) {
    const u32 rn = t.big_degree();
    a %= rn;
    Vec out = v;
    for (auto& x : out) x = t.frobenius(x, (long long)rn - a);
    return out;
}

}  // namespace skewcyc
