// acceptance suite: one line per criterion, nonzero exit on any failure

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "skewcyc/bounds.hpp"
#include "skewcyc/bridge.hpp"
#include "skewcyc/gabidulin.hpp"

using namespace skewcyc;

namespace {

struct Harness {
    int failures = 0;

    template <class F>
    void run(int number, const char* title, double budget_s, F&& body) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > budget_s) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        std::printf("[%s] criterion %d: %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", number, title,
                    secs, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

bool expect(bool cond, const char* what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

std::vector<Subspace> subspace_universe(const Tower& t) {
    // closure of {0} under one-element extensions: every F_{q^r}-subspace
    std::vector<Subspace> out;
    std::set<std::string> seen;
    std::vector<Subspace> queue = {zero_subspace(t, t.params().r)};
    seen.insert(canonical_key(t, queue[0]));
    out.push_back(queue[0]);
    while (!queue.empty()) {
        Subspace cur = std::move(queue.back());
        queue.pop_back();
        for (u64 code = 1; code < (u64)t.field_size(); ++code) {
            FieldElem e = t.from_radix(code);
            if (contains(t, cur, e)) continue;
            Subspace ext = extend(t, cur, e);
            if (seen.insert(canonical_key(t, ext)).second) {
                out.push_back(ext);
                queue.push_back(std::move(ext));
            }
        }
    }
    return out;
}

std::set<Vec> codeword_set(const Tower& t, const SkewCyclicCode& c) {
    if (c.k == 0) return {Vec(t.params().n, t.zero())};
    auto words = all_codewords(t, generator_matrix(t, c));
    return std::set<Vec>(words.begin(), words.end());
}

bool criterion_idempotent(std::string& detail) {
    Tower t = Tower::build({2, 1, 3, 1, 3});
    FieldElem a = t.primitive_element();
    if (!expect(t.pow(a, 3) == t.add(a, t.one()), "alpha^3 = alpha + 1", detail)) return false;
    SkewCyclicCode c = code_from_generator(t, lp_from_coeffs(t, {t.pow(a, 6), t.pow(a, 4), t.one()}));
    LinPoly e = idempotent_generator(t, c);
    LinPoly expected = lp_from_coeffs(t, {t.pow(a, 6), t.pow(a, 4), t.one()});
    if (!expect(e == expected, "E = x^{[2]} + a^4 x^{[1]} + a^6 x", detail)) return false;
    if (!expect(sym_mul_mod(t, e, e) == e, "E idempotent", detail)) return false;
    LinPoly xe = residue_reduce(t, lp_sub(t, lp_identity(t), e));
    SkewCyclicCode ch = code_from_generator(t, lp_from_coeffs(t, {a, t.one()}));
    return expect(code_from_generator(t, xe).G == ch.G, "(x - E) = (H)", detail);
}

bool criterion_lattice(std::string& detail) {
    Tower t = Tower::build({2, 1, 3, 1, 3});
    auto subs = subspace_universe(t);
    if (!expect(subs.size() == 16, "16 subspaces of F_8", detail)) return false;
    std::vector<SkewCyclicCode> codes;
    std::set<std::string> gen_keys;
    for (const auto& T : subs) {
        if (!expect(is_root_space_over_fqm(t, T), "every subspace is a root space", detail))
            return false;
        SkewCyclicCode c = rho_inverse(t, T);
        if (!expect(rho(t, c) == T, "rho round trip", detail)) return false;
        std::string key;
        for (const auto& x : c.G.c) key += std::to_string(t.to_radix(x)) + ",";
        gen_keys.insert(key);
        codes.push_back(std::move(c));
    }
    if (!expect(gen_keys.size() == 16, "rho bijective onto 16 codes", detail)) return false;
    for (const auto& a : codes)
        for (const auto& b : codes) {
            SkewCyclicCode mt = meet(t, a, b);
            SkewCyclicCode jn = join(t, a, b);
            if (!expect(rho(t, mt) == sum(t, rho(t, a), rho(t, b)), "rho(meet) = sum", detail))
                return false;
            if (!expect(rho(t, jn) == intersect(t, rho(t, a), rho(t, b)), "rho(join) = intersect",
                        detail))
                return false;
            auto sa = codeword_set(t, a), sb = codeword_set(t, b);
            std::set<Vec> inter;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::inserter(inter, inter.begin()));
            if (!expect(codeword_set(t, mt) == inter, "meet = set intersection", detail)) return false;
            std::set<Vec> spanned;
            for (const auto& u : sa)
                for (const auto& v : sb) {
                    Vec w(t.params().n, t.zero());
                    for (u32 j = 0; j < t.params().n; ++j) w[j] = t.add(u[j], v[j]);
                    spanned.insert(std::move(w));
                }
            if (!expect(codeword_set(t, jn) == spanned, "join = set span", detail)) return false;
        }
    return true;
}

bool criterion_mrd(std::string& detail) {
    Tower t = Tower::build({2, 1, 3, 1, 3});
    FieldElem cur = t.find_normal_basis(1);
    std::vector<FieldElem> beta;
    for (u32 i = 0; i < 3; ++i) {
        beta.push_back(cur);
        cur = t.frobenius(cur, 1);
    }
    for (u32 k = 1; k <= 2; ++k) {
        LinearCode c = gabidulin_code(t, beta, k);
        u32 d = min_rank_distance(t, c.gen);
        if (!expect(d == 3 - k + 1, "Gab_{k,1} is MRD", detail)) return false;
    }
    return true;
}

bool criterion_bch_gabidulin(std::string& detail) {
    {
        Tower t = Tower::build({2, 1, 3, 1, 3});
        FieldElem alpha = t.find_normal_basis(1);
        for (u32 delta : {2u, 3u})
            if (!expect(bch_equals_gabidulin_check(t, alpha, delta), "q=2 r=1 n=m=3", detail))
                return false;
    }
    {
        Tower t = Tower::build({2, 1, 3, 2, 3});
        // normal basis of F_8 over F_2 inside F_64
        FieldElem alpha = t.zero();
        for (u64 code = 1;; ++code) {
            FieldElem a = t.from_radix(code);
            if (!t.in_subfield(a, 3)) continue;
            std::vector<std::vector<u32>> rows;
            FieldElem cur = a;
            for (u32 i = 0; i < 3; ++i) {
                rows.push_back(cur.c);
                cur = t.frobenius(cur, 1);
            }
            if (fqlin::rank(t.fq(), std::move(rows)) == 3) {
                alpha = a;
                break;
            }
        }
        if (!expect(bch_equals_gabidulin_check(t, alpha, 2), "q=2 r=2 n=m=3", detail)) return false;
    }
    {
        Tower t = Tower::build({2, 1, 5, 1, 5});
        FieldElem alpha = t.find_normal_basis(1);
        for (u32 delta : {2u, 3u})
            if (!expect(bch_equals_gabidulin_check(t, alpha, delta), "q=2 r=1 n=m=5", detail))
                return false;
    }
    return true;
}

bool sandwich_family(const Tower& t, const std::vector<Subspace>& family, std::string& detail) {
    for (const auto& T : family) {
        SkewCyclicCode code = rho_inverse(t, T);
        CodeBoundReport rep = code_bounds(t, T);
        if (code.k == 0) {
            if (!expect(rep.zero_code, "zero code reported", detail)) return false;
            continue;
        }
        u32 d = min_rank_distance(t, code);
        if (!expect(rep.bch_sound <= rep.ht_sound, "BCH <= HT", detail)) return false;
        if (!expect(rep.ht_sound <= rep.shift, "HT <= shift", detail)) return false;
        if (!expect(rep.shift <= d, "shift <= d_R", detail)) return false;
        if (!expect(d <= t.params().n - code.k + 1, "d_R <= Singleton", detail)) return false;
        if (!expect(verify_bch_certificate(t, T, rep.bch_cert), "BCH cert re-verifies", detail))
            return false;
        if (!expect(verify_ht_certificate(t, T, rep.ht_cert), "HT cert re-verifies", detail))
            return false;
        if (!expect(verify_independent_sequence(t, rep.shift_detail.witness,
                                                rep.shift_detail.binding_space),
                    "shift witness re-verifies", detail))
            return false;
    }
    return true;
}

bool criterion_sandwich(std::string& detail) {
    {
        Tower t = Tower::build({2, 1, 3, 1, 3});
        auto family = subspace_universe(t);
        if (family.size() != 16) return expect(false, "F_8 family", detail);
        if (!sandwich_family(t, family, detail)) return false;
    }
    {
        Tower t = Tower::build({2, 1, 2, 1, 4});
        std::vector<Subspace> family = root_space_supersets(t, zero_subspace(t, 1));
        family.push_back(full_subspace(t, 1));
        if (!expect(family.size() > 3, "F_16 q-cyclic family nontrivial", detail)) return false;
        if (!sandwich_family(t, family, detail)) return false;
    }
    return true;
}

bool criterion_ht_paper(std::string& detail) {
    Tower t = Tower::build({2, 1, 31, 1, 62});
    FieldElem alpha = t.find_normal_basis(1);
    Subspace T = zero_subspace(t, 1);
    for (u32 b : {0u, 1u, 2u, 5u, 6u, 7u, 10u, 11u, 12u, 15u, 16u, 17u})
        T = sum(t, T, cyclotomic_space(t, t.frobenius(alpha, b)));
    if (!expect(T.dim() == 24, "dim T = 24", detail)) return false;
    SkewCyclicCode code = rho_inverse(t, T);
    if (!expect(code.k == 38, "code dimension 38", detail)) return false;
    BchCertificate bch{alpha, 4};
    if (!expect(verify_bch_certificate(t, T, bch), "BCH certificate delta = 4", detail)) return false;
    HTCertificate ht{alpha, 5, 4, 3};
    if (!expect(verify_ht_certificate(t, T, ht), "HT certificate (c=5, delta=4, s=3)", detail))
        return false;
    if (!expect(ht.value() == 7, "HT value 7", detail)) return false;
    IndependentSequence seq = ht_to_independent_sequence(t, ht, T);
    if (!expect(seq.final_dim() == 7, "sequence of dimension 7", detail)) return false;
    return expect(verify_independent_sequence(t, seq, T), "sequence verifies", detail);
}

bool criterion_cyclotomic_law(std::string& detail) {
    for (TowerParams params : {TowerParams{2, 1, 2, 1, 4}, TowerParams{2, 1, 3, 1, 6}}) {
        Tower t = Tower::build(params);
        const u32 m = params.m;
        const u32 s = params.n / m;
        FieldElem alpha = t.find_normal_basis(1);
        for (u32 b = 0; b < t.big_degree(); ++b) {
            FieldElem ab = t.frobenius(alpha, b);
            std::vector<FieldElem> expected;
            for (u32 j = 0; j < s; ++j) expected.push_back(t.frobenius(alpha, b + (long long)j * m));
            if (!expect(cyclotomic_space(t, ab) == span_of(t, 1, expected),
                        "C_q(alpha^{[b]}) = <alpha^{[b + jm]}>", detail))
                return false;
        }
    }
    return true;
}

bool criterion_bridge(std::string& detail) {
    Tower t = Tower::build({2, 1, 3, 1, 3});
    BridgeContext ctx = make_bridge(t);
    const SmallField& fq = t.fq();
    // the four binary cyclic codes of length 3
    std::vector<FqPoly> gens = {fqp_one(), fqp_from({1, 1}), fqp_from({1, 1, 1}),
                                fqp_xn_minus_1(fq, 3)};
    for (const auto& g : gens) {
        ClassicCyclicCode c = classic_cyclic(fq, g, 3);
        FqLeftIdealCode ideal = cyclic_to_skew(t, ctx, c);
        auto words = fq_ideal_codewords(t, ideal);
        if (!expect(is_skew_cyclic(t, words), "E-image is q-cyclic", detail)) return false;
        auto ham = hamming_weight_distribution(fq, c);
        std::vector<u64> rnk(4, 0);
        for (const auto& w : words) ++rnk[rank_weight(t, w)];
        for (u32 w = 0; w <= 3; ++w)
            if (!expect(rnk[w] == ham[w], "weight distribution preserved", detail)) return false;
        SkewCyclicCode hat = hat_code(t, ctx, c);
        if (!expect(hat.k == c.k, "dimension preserved", detail)) return false;
        if (c.k == 0) continue;
        if (!expect(hat.G == monic_left(t, residue_reduce(t, e_op(t, ctx, c.g))),
                    "minimal generator is monic E(g)", detail))
            return false;
        u32 dr = min_rank_distance(t, hat);
        u32 dh = min_hamming_distance(fq, c);
        if (!expect(dr <= dh, "d_R <= d_H", detail)) return false;
        if (dr == t.params().n - hat.k + 1)
            if (!expect(dh == c.n - c.k + 1, "MRD implies MDS", detail)) return false;
    }
    // repetition code: MDS -> MRD
    {
        ClassicCyclicCode rep = classic_cyclic(fq, fqp_from({1, 1, 1}), 3);
        SkewCyclicCode hat = hat_code(t, ctx, rep);
        if (!expect(min_hamming_distance(fq, rep) == 3 && min_rank_distance(t, hat) == 3,
                    "repetition: MDS and MRD", detail))
            return false;
    }
    // even-length example at n = m = 4
    {
        Tower t4 = Tower::build({2, 1, 4, 1, 4});
        BridgeContext ctx4 = make_bridge(t4);
        ClassicCyclicCode c = classic_cyclic(t4.fq(), fqp_from({1, 0, 1}), 4);
        SkewCyclicCode hat = hat_code(t4, ctx4, c);
        if (!expect(c.k == 2 && hat.k == 2, "even example dimensions", detail)) return false;
        u32 dh = min_hamming_distance(t4.fq(), c);
        u32 dr = min_rank_distance(t4, hat);
        if (!expect(dh == 2 && dr == 2, "even example d_H = d_R = 2", detail)) return false;
        // MRD implies MDS across the length-4 family as well
        FqPoly mod4 = fqp_xn_minus_1(t4.fq(), 4);
        for (u32 deg = 0; deg <= 4; ++deg)
            for (u32 code = 0; code < (1u << deg); ++code) {
                std::vector<u32> cc;
                for (u32 i = 0; i < deg; ++i) cc.push_back((code >> i) & 1);
                cc.push_back(1);
                FqPoly g = fqp_from(cc);
                if (!fqp_mod(t4.fq(), mod4, g).is_zero()) continue;
                ClassicCyclicCode cyc = classic_cyclic(t4.fq(), g, 4);
                if (cyc.k == 0) continue;
                SkewCyclicCode hh = hat_code(t4, ctx4, cyc);
                u32 ddr = min_rank_distance(t4, hh);
                u32 ddh = min_hamming_distance(t4.fq(), cyc);
                if (!expect(ddr <= ddh, "d_R <= d_H (length 4)", detail)) return false;
                if (ddr == t4.params().n - hh.k + 1)
                    if (!expect(ddh == cyc.n - cyc.k + 1, "MRD implies MDS (length 4)", detail))
                        return false;
            }
    }
    return true;
}

bool algebra_suite(const Tower& t, u32 cases, std::string& detail) {
    std::mt19937_64 rng(20260810);
    const u32 n = t.params().n;
    const u32 rn = t.big_degree();
    const auto& fqm = t.subfield_elements(t.params().m);
    auto random_poly = [&](u32 max_deg) {
        std::vector<FieldElem> c;
        u32 deg = (u32)(rng() % (max_deg + 1));
        for (u32 i = 0; i <= deg; ++i) c.push_back(fqm[rng() % fqm.size()]);
        return lp_from_coeffs(t, std::move(c), CoeffField::mid_m);
    };
    LinPoly mod = lp_modulus(t);
    for (u32 it = 0; it < cases; ++it) {
        LinPoly f = random_poly(n), g = random_poly(n), h = random_poly(n);
        // ring laws
        if (!expect(sym_mul(t, sym_mul(t, f, g), h) == sym_mul(t, f, sym_mul(t, g, h)),
                    "associativity", detail))
            return false;
        if (!expect(sym_mul(t, f, lp_add(t, g, h)) ==
                        lp_add(t, sym_mul(t, f, g), sym_mul(t, f, h)),
                    "left distributivity", detail))
            return false;
        if (!f.is_zero() && !g.is_zero())
            if (!expect(sym_mul(t, f, g).degree() == f.degree() + g.degree(), "degree additivity",
                        detail))
                return false;
        // evaluation composition
        FieldElem beta = t.from_radix(rng() % (u64)t.field_size());
        if (!expect(evaluate(t, sym_mul(t, f, g), beta) == evaluate(t, f, evaluate(t, g, beta)),
                    "evaluation composition", detail))
            return false;
        // division round trips
        if (!g.is_zero()) {
            auto [q1, r1] = right_divmod(t, f, g);
            if (!expect(lp_add(t, sym_mul(t, q1, g), r1) == f && r1.degree() < g.degree(),
                        "right division round trip", detail))
                return false;
            auto [q2, r2] = left_divmod(t, f, g);
            if (!expect(lp_add(t, sym_mul(t, g, q2), r2) == f && r2.degree() < g.degree(),
                        "left division round trip", detail))
                return false;
        }
        // Bezout re-expansion
        if (!f.is_zero() || !g.is_zero()) {
            auto rx = right_xgcd(t, f, g);
            if (!expect(lp_add(t, sym_mul(t, rx.a, f), sym_mul(t, rx.b, g)) == rx.d,
                        "right Bezout", detail))
                return false;
            auto lx = left_xgcd(t, f, g);
            if (!expect(lp_add(t, sym_mul(t, f, lx.a), sym_mul(t, g, lx.b)) == lx.d, "left Bezout",
                        detail))
                return false;
        }
        // centrality of the modulus
        if (!expect(sym_mul(t, mod, f) == sym_mul(t, f, mod), "central modulus", detail))
            return false;
        // gamma bijectivity
        Vec v;
        for (u32 i = 0; i < n; ++i) v.push_back(fqm[rng() % fqm.size()]);
        if (!expect(gamma_inv(t, gamma(t, v)) == v, "gamma bijective", detail)) return false;
        // phi maps
        u32 a = (u32)(rng() % rn);
        LinPoly fr = residue_reduce(t, f);
        if (!expect(phi_map(t, phi_map(t, fr, a), (rn - a) % rn) == fr, "phi inverse", detail))
            return false;
        if (!expect(rank_weight(t, v) == rank_weight(t, phi_map_vec(t, v, a)),
                    "phi preserves rank weight", detail))
            return false;
        if (!expect(zero_space(t, phi_map(t, fr, a)) ==
                        frobenius_image(t, zero_space(t, fr), (long long)rn - a),
                    "phi moves root spaces by the inverse Frobenius", detail))
            return false;
    }
    return true;
}

bool criterion_algebra(std::string& detail) {
    Tower t8 = Tower::build({2, 1, 3, 1, 3});
    if (!algebra_suite(t8, 1000, detail)) return false;
    Tower t16 = Tower::build({2, 1, 2, 1, 4});
    return algebra_suite(t16, 1000, detail);
}

}  // namespace

int main() {
    Harness h;
    h.run(1, "idempotent example (q=2, r=1, m=n=3)", 1.0, criterion_idempotent);
    h.run(2, "lattice anti-isomorphism, exhaustive over F_8", 10.0, criterion_lattice);
    h.run(3, "Gabidulin MRD reproduction over F_8", 1.0, criterion_mrd);
    h.run(4, "rank-BCH codes from normal bases are Gabidulin codes", 30.0, criterion_bch_gabidulin);
    h.run(5, "bound sandwich, exhaustive families", 60.0, criterion_sandwich);
    h.run(6, "rank-HT paper example (m=31, n=62)", 120.0, criterion_ht_paper);
    h.run(7, "cyclotomic normal-basis law", 10.0, criterion_cyclotomic_law);
    h.run(8, "Hamming bridge (lengths 3 and 4)", 10.0, criterion_bridge);
    h.run(9, "algebra property suite (1000 cases each over F_8 and F_16)", 60.0, criterion_algebra);
    if (h.failures) {
        std::printf("%d criterion(s) failed\n", h.failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
