#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "skewcyc/bounds.hpp"
#include "skewcyc/format.hpp"

using namespace skewcyc;
using skewcyc::testing::all_subspaces;

namespace {

Tower f8_tower() { return Tower::build({2, 1, 3, 1, 3}); }

std::set<Vec> codeword_set(const Tower& t, const SkewCyclicCode& c) {
    if (c.k == 0) return {Vec(t.params().n, t.zero())};
    auto words = all_codewords(t, generator_matrix(t, c));
    return std::set<Vec>(words.begin(), words.end());
}

}  // namespace

TEST_CASE("meet and join against brute-force codeword sets (exhaustive F_8)") {
    Tower t = f8_tower();
    auto subs = all_subspaces(t, 1);
    std::vector<SkewCyclicCode> codes;
    for (const auto& T : subs) codes.push_back(rho_inverse(t, T));
    for (const auto& a : codes) {
        for (const auto& b : codes) {
            SkewCyclicCode mt = meet(t, a, b);
            SkewCyclicCode jn = join(t, a, b);
            // codeword-set oracles
            auto sa = codeword_set(t, a), sb = codeword_set(t, b);
            std::set<Vec> inter;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::inserter(inter, inter.begin()));
            CHECK(codeword_set(t, mt) == inter);
            // join = span of the union
            Mat rows;
            if (a.k) for (const auto& rw : generator_matrix(t, a)) rows.push_back(rw);
            if (b.k) for (const auto& rw : generator_matrix(t, b)) rows.push_back(rw);
            if (jn.k)
                CHECK(rowspace_equal(t, rows, generator_matrix(t, jn)));
            else
                CHECK(rowspace_rref(t, rows).empty());
            // anti-isomorphism: rho(meet) = sum, rho(join) = intersection
            CHECK(rho(t, mt) == sum(t, rho(t, a), rho(t, b)));
            CHECK(rho(t, jn) == intersect(t, rho(t, a), rho(t, b)));
            // degree identity
            CHECK(mt.G.degree() + jn.G.degree() == a.G.degree() + b.G.degree());
        }
    }
}

TEST_CASE("lattice laws") {
    Tower t = f8_tower();
    auto subs = all_subspaces(t, 1);
    std::vector<SkewCyclicCode> codes;
    for (const auto& T : subs) codes.push_back(rho_inverse(t, T));
    SkewCyclicCode whole = whole_space_code(t);
    SkewCyclicCode zero = zero_code(t);
    std::mt19937_64 rng(3);
    for (int it = 0; it < 40; ++it) {
        const auto& a = codes[rng() % codes.size()];
        const auto& b = codes[rng() % codes.size()];
        const auto& c = codes[rng() % codes.size()];
        CHECK(meet(t, a, whole).G == a.G);
        CHECK(join(t, a, zero).G == a.G);
        CHECK(meet(t, a, a).G == a.G);
        CHECK(join(t, a, a).G == a.G);
        CHECK(meet(t, a, b).G == meet(t, b, a).G);
        CHECK(join(t, a, b).G == join(t, b, a).G);
        CHECK(meet(t, meet(t, a, b), c).G == meet(t, a, meet(t, b, c)).G);
        CHECK(join(t, join(t, a, b), c).G == join(t, a, join(t, b, c)).G);
        CHECK(join(t, a, meet(t, a, b)).G == a.G);  // absorption
        CHECK(meet(t, a, join(t, a, b)).G == a.G);
    }
}

TEST_CASE("complementarity") {
    Tower t = f8_tower();
    FieldElem a = t.primitive_element();
    CHECK(are_complementary(t, whole_space_code(t), zero_code(t)));
    SkewCyclicCode cg = code_from_generator(t, lp_from_coeffs(t, {t.pow(a, 6), t.pow(a, 4), t.one()}));
    SkewCyclicCode ch = code_from_generator(t, lp_from_coeffs(t, {a, t.one()}));
    CHECK(are_complementary(t, cg, ch));  // (G) and (H) in the worked example
    CHECK_FALSE(are_complementary(t, cg, cg));
    CHECK_FALSE(are_complementary(t, ch, ch));
}

TEST_CASE("idempotent generator of the worked example") {
    Tower t = f8_tower();
    FieldElem a = t.primitive_element();
    SkewCyclicCode c = code_from_generator(t, lp_from_coeffs(t, {t.pow(a, 6), t.pow(a, 4), t.one()}));
    LinPoly e = idempotent_generator(t, c);
    // E = E' = G here
    CHECK(e == c.G);
    CHECK(sym_mul_mod(t, e, e) == e);
    // x - E = x^{[2]} + a^4 x^{[1]} + a^2 x generates (H)
    LinPoly xe = residue_reduce(t, lp_sub(t, lp_identity(t), e));
    CHECK(xe == lp_from_coeffs(t, {t.pow(a, 2), t.pow(a, 4), t.one()}));
    SkewCyclicCode ch = code_from_generator(t, lp_from_coeffs(t, {a, t.one()}));
    CHECK(code_from_generator(t, xe).G == ch.G);
    // right-unit law: F in C(x) iff F = F (x) E
    std::mt19937_64 rng(5);
    for (int it = 0; it < 30; ++it) {
        LinPoly f = lp_from_coeffs(t, {t.from_radix(rng() % 8), t.from_radix(rng() % 8), t.from_radix(rng() % 8)});
        bool member = code_contains(t, c, f);
        CHECK(member == (sym_mul_mod(t, residue_reduce(t, f), e) == residue_reduce(t, f)));
    }
}

TEST_CASE("idempotent of the whole space is x; zero code gives 0") {
    Tower t = f8_tower();
    CHECK(idempotent_generator(t, whole_space_code(t)) == lp_identity(t));
    CHECK(idempotent_generator(t, zero_code(t)).is_zero());
}

TEST_CASE("NotCoprimeBothSides is reported when G = H") {
    Tower t = Tower::build({2, 1, 2, 1, 2});  // F_4, n = 2
    // G = x^{[1]} + x divides x^{[2]} - x with cofactor H = G
    SkewCyclicCode c = code_from_generator(t, lp_from_coeffs(t, {t.one(), t.one()}));
    CHECK(c.H == c.G);
    CHECK_THROWS_WITH_AS(idempotent_generator(t, c), doctest::Contains("NotCoprimeBothSides"), Error);
}

TEST_CASE("phi maps: identity, inverse, weights, congruence, root spaces") {
    Tower t = f8_tower();
    std::mt19937_64 rng(7);
    const u32 rn = t.big_degree();
    auto random_class = [&] {
        return lp_from_coeffs(t, {t.from_radix(rng() % 8), t.from_radix(rng() % 8), t.from_radix(rng() % 8)});
    };
    SUBCASE("phi_0 is the identity and phi_a inverts phi_{rn-a}") {
        for (int it = 0; it < 30; ++it) {
            LinPoly f = random_class();
            CHECK(phi_map(t, f, 0) == residue_reduce(t, f));
            for (u32 a = 1; a < rn; ++a)
                CHECK(phi_map(t, phi_map(t, f, a), rn - a) == residue_reduce(t, f));
        }
    }
    SUBCASE("ring morphism on the residue ring") {
        for (int it = 0; it < 30; ++it) {
            LinPoly f = random_class(), g = random_class();
            for (u32 a = 0; a < rn; ++a) {
                CHECK(phi_map(t, sym_mul_mod(t, f, g), a) ==
                      sym_mul_mod(t, phi_map(t, f, a), phi_map(t, g, a)));
                CHECK(phi_map(t, lp_add(t, f, g), a) ==
                      lp_add(t, phi_map(t, f, a), phi_map(t, g, a)));
            }
        }
    }
    SUBCASE("rank weight is preserved") {
        for (int it = 0; it < 40; ++it) {
            LinPoly f = random_class();
            Vec v = gamma_inv(t, residue_reduce(t, f));
            for (u32 a = 0; a < rn; ++a)
                CHECK(rank_weight(t, v) == rank_weight(t, phi_map_vec(t, v, a)));
        }
    }
    SUBCASE("phi_a = phi_a' on F_{q^m}^n iff a = a' mod m") {
        Tower t16 = Tower::build({2, 1, 2, 1, 4});  // m = 2, rn = 4
        const auto& fqm = t16.subfield_elements(2);
        for (u32 a = 0; a < 4; ++a)
            for (u32 a2 = 0; a2 < 4; ++a2) {
                bool equal = true;
                for (const auto& e : fqm) {
                    Vec v(4, t16.zero());
                    v[0] = e;
                    if (phi_map_vec(t16, v, a) != phi_map_vec(t16, v, a2)) { equal = false; break; }
                }
                CHECK(equal == ((a % 2) == (a2 % 2)));
            }
    }
    SUBCASE("Z(phi_a(F)) is the inverse Frobenius image of Z(F)") {
        // phi_a(F)(g) = (F(g^{[a]}))^{[rn-a]}, so the root space moves by -a
        for (int it = 0; it < 20; ++it) {
            LinPoly f = random_class();
            for (u32 a = 0; a < rn; ++a)
                CHECK(zero_space(t, phi_map(t, f, a)) ==
                      frobenius_image(t, zero_space(t, f), (long long)rn - a));
        }
    }
    SUBCASE("phi_a maps left ideals to left ideals") {
        auto subs = all_subspaces(t, 1);
        for (const auto& T : subs) {
            SkewCyclicCode c = rho_inverse(t, T);
            if (c.k == 0) continue;
            for (u32 a = 0; a < rn; ++a) {
                Mat rows;
                for (const auto& rw : generator_matrix(t, c)) rows.push_back(phi_map_vec(t, rw, a));
                LinearCode image = linear_code_from_rows(t, rows);
                CHECK(is_skew_cyclic(t, image));
            }
        }
    }
}
