#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "skewcyc/rootspace.hpp"

using namespace skewcyc;
using skewcyc::testing::all_subspaces;

namespace {

Tower f8_tower() { return Tower::build({2, 1, 3, 1, 3}); }
Tower f16_tower() { return Tower::build({2, 1, 2, 1, 4}); }

// independent root-count oracle: evaluate by plain powering
u32 count_roots(const Tower& t, const LinPoly& f) {
    u32 roots = 0;
    for (u64 code = 0; code < (u64)t.field_size(); ++code) {
        FieldElem b = t.from_radix(code);
        FieldElem acc = t.zero();
        for (size_t i = 0; i < f.c.size(); ++i) {
            u128 e = 1;
            for (u32 j = 0; j < i * t.params().r; ++j) e *= t.fq().q();
            acc = t.add(acc, t.mul(f.c[i], t.pow(b, e)));
        }
        if (t.is_zero(acc)) ++roots;
    }
    return roots;
}

}  // namespace

TEST_CASE("zero spaces of the unit and of the modulus") {
    Tower t = f8_tower();
    CHECK(zero_space(t, lp_identity(t)).dim() == 0);
    CHECK(zero_space(t, lp_modulus(t)).dim() == t.params().n);
    CHECK(zero_space(t, lp_zero()).dim() == t.params().n);
}

TEST_CASE("dim Z(G) = deg G for the divisor from the worked example") {
    Tower t = f8_tower();
    FieldElem a = t.primitive_element();
    LinPoly g = lp_from_coeffs(t, {t.pow(a, 6), t.pow(a, 4), t.one()});
    Subspace z = zero_space(t, g);
    CHECK(z.dim() == 2);
    CHECK(count_roots(t, g) == 4);  // q^dim
    for (const auto& b : basis_elements(t, z)) CHECK(t.is_zero(evaluate(t, g, b)));
}

TEST_CASE("subspace polynomials of the extreme spaces") {
    Tower t = f8_tower();
    CHECK(subspace_polynomial(t, zero_subspace(t, 1)) == lp_identity(t));
    CHECK(subspace_polynomial(t, full_subspace(t, 1)) == lp_modulus(t));
    // span{1} in F_8: product over {0,1} of (x - b) = x^{[1]} + x
    Subspace s = span_of(t, 1, {t.one()});
    CHECK(subspace_polynomial(t, s) == lp_from_coeffs(t, {t.one(), t.one()}));
}

TEST_CASE("zero_space and subspace_polynomial are mutually inverse (exhaustive F_8)") {
    Tower t = f8_tower();
    auto subs = all_subspaces(t, 1);
    CHECK(subs.size() == 16);
    for (const auto& T : subs) {
        LinPoly p = subspace_polynomial(t, T);
        CHECK(p.degree() == (int)T.dim());
        CHECK(zero_space(t, p) == T);
        // the polynomial right-divides the modulus, and the converse holds
        CHECK(right_divides(t, p, lp_modulus(t)));
        CHECK(subspace_polynomial(t, zero_space(t, p)) == p);
        // roots are exactly the subspace elements
        CHECK(count_roots(t, p) == (u32)(1u << T.dim()));
    }
}

TEST_CASE("root-space membership: the worked m = 2, n = 4 instance") {
    Tower t = f16_tower();
    FieldElem alpha = t.find_normal_basis(1);
    Subspace t1 = span_of(t, 1, {alpha});
    Subspace t2 = span_of(t, 1, {alpha, t.frobenius(alpha, 2)});
    CHECK_FALSE(is_root_space_over_fqm(t, t1));
    CHECK(is_root_space_over_fqm(t, t2));
    // cross check through the Galois-closure dimensions
    CHECK_FALSE(galois_closure_check(t, t1).closed());
    CHECK(galois_closure_check(t, t2).closed());
}

TEST_CASE("membership test agrees with the Galois-closure computation exhaustively") {
    SUBCASE("F_8, m = rn: every subspace is a root space") {
        Tower t = f8_tower();
        for (const auto& T : all_subspaces(t, 1)) {
            CHECK(is_root_space_over_fqm(t, T));
            CHECK(galois_closure_check(t, T).closed());
        }
    }
    SUBCASE("F_16, m = 2: the two tests agree on all 67 subspaces") {
        Tower t = f16_tower();
        auto subs = all_subspaces(t, 1);
        CHECK(subs.size() == 67);
        u32 root_spaces = 0;
        for (const auto& T : subs) {
            bool primary = is_root_space_over_fqm(t, T);
            CHECK(primary == galois_closure_check(t, T).closed());
            root_spaces += primary;
        }
        CHECK(root_spaces > 2);  // at least {0}, cyclotomic spaces, and the full space
    }
}

TEST_CASE("minimal q^r-polynomials") {
    Tower t = f8_tower();
    SUBCASE("beta = 0 gives x") { CHECK(minimal_qr_polynomial(t, t.zero()) == lp_identity(t)); }
    SUBCASE("m = rn: degree-1 annihilator x^{[r]} - (beta^{q^r}/beta) x") {
        for (u64 code = 1; code < 8; ++code) {
            FieldElem b = t.from_radix(code);
            LinPoly f = minimal_qr_polynomial(t, b);
            CHECK(f.degree() == 1);
            FieldElem c = t.mul(t.frobenius(b, 1), t.inv(b));
            CHECK(f == lp_from_coeffs(t, {t.neg(c), t.one()}));
        }
    }
    SUBCASE("divides any annihilator over F_{q^m} on the right") {
        std::mt19937_64 rng(5);
        Tower t16 = f16_tower();
        for (u64 code = 0; code < 16; ++code) {
            FieldElem b = t16.from_radix(code);
            LinPoly f = minimal_qr_polynomial(t16, b);
            CHECK(t16.is_zero(evaluate(t16, f, b)));
            CHECK(right_divides(t16, f, lp_modulus(t16)));
            // other annihilators over F_{q^m}: cyclotomic sums containing b,
            // and arbitrary left multiples of f
            FieldElem other = t16.from_radix(1 + rng() % 15);
            Subspace s = sum(t16, cyclotomic_space(t16, b), cyclotomic_space(t16, other));
            LinPoly ann = subspace_polynomial(t16, s);
            CHECK(t16.is_zero(evaluate(t16, ann, b)));
            CHECK(right_divides(t16, f, ann));
            const auto& fqm = t16.subfield_elements(2);
            LinPoly mult = lp_from_coeffs(t16, {fqm[rng() % 4], fqm[rng() % 4], t16.one()});
            CHECK(right_divides(t16, f, sym_mul(t16, mult, f)));
        }
    }
    SUBCASE("n = 2m: the minimal polynomial of a normal element has degree 2") {
        Tower t16 = f16_tower();
        FieldElem alpha = t16.find_normal_basis(1);
        LinPoly f = minimal_qr_polynomial(t16, alpha);
        CHECK(f.degree() == 2);
        CHECK(zero_space(t16, f) == span_of(t16, 1, {alpha, t16.frobenius(alpha, 2)}));
    }
}

TEST_CASE("cyclotomic spaces") {
    Tower t = f16_tower();
    CHECK(cyclotomic_space(t, t.zero()).dim() == 0);
    FieldElem alpha = t.find_normal_basis(1);
    // C_q(alpha^{[b]}) = <alpha^{[b]}, alpha^{[b+m]}> for every b
    const u32 m = t.params().m;
    for (u32 b = 0; b < t.big_degree(); ++b) {
        FieldElem ab = t.frobenius(alpha, b);
        Subspace c = cyclotomic_space(t, ab);
        CHECK(contains(t, c, ab));
        CHECK(c == span_of(t, 1, {ab, t.frobenius(ab, m)}));
        CHECK(c.dim() == 2);
    }
}

TEST_CASE("every root space is the sum of the cyclotomic spaces of a basis") {
    auto check_tower = [](const Tower& t) {
        for (const auto& T : all_subspaces(t, 1)) {
            if (!is_root_space_over_fqm(t, T)) continue;
            Subspace acc = zero_subspace(t, 1);
            for (const auto& b : basis_elements(t, T)) acc = sum(t, acc, cyclotomic_space(t, b));
            CHECK(acc == T);
        }
    };
    Tower t8 = f8_tower();
    Tower t16 = f16_tower();
    check_tower(t8);
    check_tower(t16);
}

TEST_CASE("subspace lattice operations") {
    Tower t = f8_tower();
    std::mt19937_64 rng(7);
    auto subs = all_subspaces(t, 1);
    SUBCASE("units and idempotence") {
        for (const auto& T : subs) {
            CHECK(sum(t, T, zero_subspace(t, 1)) == T);
            CHECK(intersect(t, T, full_subspace(t, 1)) == T);
            CHECK(frobenius_image(t, T, t.big_degree()) == T);
        }
    }
    SUBCASE("dimension identity") {
        for (int it = 0; it < 60; ++it) {
            const Subspace& a = subs[rng() % subs.size()];
            const Subspace& b = subs[rng() % subs.size()];
            CHECK(sum(t, a, b).dim() + intersect(t, a, b).dim() == a.dim() + b.dim());
        }
    }
    SUBCASE("intersection matches element-wise intersection") {
        for (int it = 0; it < 30; ++it) {
            const Subspace& a = subs[rng() % subs.size()];
            const Subspace& b = subs[rng() % subs.size()];
            Subspace i = intersect(t, a, b);
            for (u64 code = 0; code < 8; ++code) {
                FieldElem e = t.from_radix(code);
                CHECK(contains(t, i, e) == (contains(t, a, e) && contains(t, b, e)));
            }
        }
    }
    SUBCASE("mixed scalars are rejected") {
        Tower t4 = Tower::build({2, 1, 2, 2, 2});  // r = 2: F_{q^r}-subspaces with d = 2
        Subspace a = zero_subspace(t4, 2);
        Subspace b = zero_subspace(t4, 1);
        CHECK_THROWS_WITH_AS(sum(t4, a, b), doctest::Contains("MixedScalars"), Error);
    }
}

TEST_CASE("frobenius images of subspaces") {
    Tower t = f16_tower();
    std::mt19937_64 rng(11);
    auto subs = all_subspaces(t, 1);
    for (int it = 0; it < 30; ++it) {
        const Subspace& T = subs[rng() % subs.size()];
        long long a = (long long)(rng() % t.big_degree());
        Subspace img = frobenius_image(t, T, a);
        CHECK(img.dim() == T.dim());
        for (const auto& b : basis_elements(t, T)) CHECK(contains(t, img, t.frobenius(b, a)));
    }
}
