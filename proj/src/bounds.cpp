#include "skewcyc/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "skewcyc/rootspace.hpp"

namespace skewcyc {

u32 rank_weight(const Tower& t, const Vec& v) {
    u32 direct = rank_weight_raw(t, v);
    // basis-expansion route: write each coordinate over an F_q-basis of
    // F_{q^m}; the m x n digit matrix has the same rank.
    const u32 m = t.params().m;
    const auto& kappa = t.subfield_fq_basis(m);
    const u32 D = t.big_degree();
    std::vector<std::vector<u32>> aug(D, std::vector<u32>(m + v.size(), 0));
    for (u32 j = 0; j < m; ++j)
        for (u32 i = 0; i < D; ++i) aug[i][j] = kappa[j].c[i];
    for (size_t j = 0; j < v.size(); ++j)
        for (u32 i = 0; i < D; ++i) aug[i][m + j] = v[j].c[i];
    std::vector<u32> pivots;
    fqlin::rref(t.fq(), aug, &pivots);
    // coordinates of v_j over kappa sit in the augmented columns
    std::vector<std::vector<u32>> expansion(v.size(), std::vector<u32>(m, 0));
    for (size_t p = 0; p < pivots.size(); ++p) {
        assert(pivots[p] < m);  // every v_j lies in F_{q^m}
        for (size_t j = 0; j < v.size(); ++j) expansion[j][pivots[p]] = aug[p][m + j];
    }
    u32 via_basis = fqlin::rank(t.fq(), std::move(expansion));
    assert(direct == via_basis);
    (void)via_basis;
    return direct;
}

u32 min_rank_distance(const Tower& t, const Mat& gen, const MinDistanceOptions& opt) {
    u32 d = opt.jobs == 1 ? min_rank_distance_serial(t, gen, opt.cap)
                          : min_rank_distance_parallel(t, gen, opt.cap, opt.jobs);
    return d;
}

u32 min_rank_distance(const Tower& t, const SkewCyclicCode& c, const MinDistanceOptions& opt) {
    u32 d = min_rank_distance(t, generator_matrix(t, c), opt);
    assert(d <= t.params().n - c.k + 1);  // Singleton
    return d;
}

// ---------------------------------------------------------------------------

bool verify_bch_certificate(const Tower& t, const Subspace& T, const BchCertificate& cert) {
    const u32 mn = std::min(t.params().m, t.params().n);
    if (cert.delta < 1 || cert.delta > mn) return false;
    if (cert.delta == 1) return true;  // vacuous
    const u32 r = t.params().r;
    std::vector<FieldElem> chain;
    FieldElem cur = cert.alpha;
    for (u32 j = 0; j + 2 <= cert.delta; ++j) {
        if (!contains(t, T, cur)) return false;
        chain.push_back(cur);
        cur = t.frobenius(cur, r);
    }
    return span_of(t, r, chain).dim() == cert.delta - 1;
}

bool verify_ht_certificate(const Tower& t, const Subspace& T, const HTCertificate& cert) {
    const u32 m = t.params().m, n = t.params().n, r = t.params().r;
    const u32 mn = std::min(m, n);
    if (cert.c < 1 || cert.delta < 1) return false;
    if (cert.delta + cert.s > mn) return false;
    if (cert.delta == 1 && cert.s == 0) return true;  // vacuous
    if (std::gcd(cert.c, n) >= cert.delta) return false;
    // grid elements, dedup by Frobenius exponent mod rn
    std::set<u32> exps;
    for (u32 i = 0; i + 2 <= cert.delta; ++i)
        for (u32 j = 0; j <= cert.s; ++j) exps.insert((u32)(((u64)(i + (u64)j * cert.c) * r) % t.big_degree()));
    std::vector<FieldElem> grid;
    for (u32 e : exps) {
        FieldElem x = t.frobenius(cert.alpha, e);
        if (!contains(t, T, x)) return false;
        grid.push_back(std::move(x));
    }
    return span_of(t, r, grid).dim() == grid.size();
}

namespace {

// chain subspaces U_i = { beta : beta^{[jr]} in T for all 0 <= j <= i }
std::vector<Subspace> chain_spaces(const Tower& t, const Subspace& T, u32 max_i) {
    const u32 r = t.params().r;
    std::vector<Subspace> u = {T};
    for (u32 i = 1; i <= max_i; ++i) {
        if (u.back().dim() == 0) break;
        Subspace w = frobenius_image(t, T, -(long long)i * r);
        u.push_back(intersect(t, u.back(), w));
    }
    return u;
}

// deterministic candidate pool from a subspace: all elements when small,
// otherwise the canonical basis elements
std::vector<FieldElem> candidate_pool(const Tower& t, const Subspace& s, u64 budget) {
    u64 scalar_count = 1;  // |F_{q^d}|
    for (u32 j = 0; j < s.d; ++j) scalar_count *= t.fq().q();
    u64 count = 1;
    bool small = true;
    for (u32 i = 0; i < s.dim(); ++i) {
        if (count > budget / scalar_count || count * scalar_count > (1u << 20)) {
            small = false;
            break;
        }
        count *= scalar_count;
    }
    if (small) {
        auto all = all_elements(t, s);
        std::sort(all.begin(), all.end(),
                  [&](const FieldElem& x, const FieldElem& y) { return t.to_radix(x) < t.to_radix(y); });
        return all;
    }
    return basis_elements(t, s);
}

}  // namespace

BchCertificate rank_bch_bound(const Tower& t, const Subspace& T, const SearchBudget& budget) {
    const u32 r = t.params().r;
    const u32 mn = std::min(t.params().m, t.params().n);
    BchCertificate best{t.zero(), 1};
    if (T.dim() == 0 || mn < 2) return best;
    auto chains = chain_spaces(t, T, mn >= 2 ? mn - 2 : 0);
    u64 tested = 0;
    for (u32 i = (u32)chains.size(); i-- > 0;) {
        if (chains[i].dim() == 0) continue;
        const u32 delta = i + 2;
        for (const auto& alpha : candidate_pool(t, chains[i], budget.max_candidates)) {
            if (t.is_zero(alpha)) continue;
            if (++tested > budget.max_candidates) return best;
            std::vector<FieldElem> chain;
            FieldElem cur = alpha;
            for (u32 j = 0; j <= i; ++j) {
                chain.push_back(cur);
                cur = t.frobenius(cur, r);
            }
            if (span_of(t, r, chain).dim() == delta - 1) {
                BchCertificate cert{alpha, delta};
                assert(verify_bch_certificate(t, T, cert));
                return cert;
            }
        }
    }
    return best;
}

HTCertificate rank_ht_bound(const Tower& t, const Subspace& T, const SearchBudget& budget) {
    const u32 n = t.params().n, r = t.params().r;
    const u32 mn = std::min(t.params().m, t.params().n);
    BchCertificate bch = rank_bch_bound(t, T, budget);
    HTCertificate best{bch.alpha, 1, bch.delta, 0};
    if (T.dim() == 0) return best;
    auto chains = chain_spaces(t, T, mn >= 2 ? mn - 2 : 0);
    u64 combos = 0, tested = 0;
    for (u32 w = mn; w > best.value(); --w) {
        for (u32 delta = std::min(w, mn); delta >= 2; --delta) {
            const u32 s = w - delta;
            if (delta + s != w) continue;
            if (delta - 2 >= chains.size() || chains[delta - 2].dim() == 0) continue;
            for (u32 c = 1; c < std::max(n, 2u); ++c) {
                if (n > 1 && std::gcd(c, n) >= delta) continue;
                if (++combos > budget.max_combos) return best;
                // W = { alpha : whole grid inside T }
                Subspace w_space = chains[delta - 2];
                for (u32 j = 1; j <= s && w_space.dim() > 0; ++j)
                    w_space = intersect(t, w_space,
                                        frobenius_image(t, chains[delta - 2], -(long long)j * c * r));
                if (w_space.dim() == 0) continue;
                for (const auto& alpha : candidate_pool(t, w_space, budget.max_candidates)) {
                    if (t.is_zero(alpha)) continue;
                    if (++tested > budget.max_candidates) break;
                    HTCertificate cert{alpha, c, delta, s};
                    if (verify_ht_certificate(t, T, cert)) return cert;
                }
            }
        }
    }
    return best;
}

// ---------------------------------------------------------------------------

bool verify_independent_sequence(const Tower& t, const IndependentSequence& seq, const Subspace& S,
                                 std::string* diagnostic) {
    auto report = [&](size_t i, const std::string& why) {
        if (diagnostic) {
            std::ostringstream os;
            os << "step " << i << ": " << why;
            *diagnostic = os.str();
        }
        return false;
    };
    const u32 r = t.params().r;
    if (seq.spaces.empty()) return report(0, "empty sequence");
    if (seq.spaces[0].dim() != 0) return report(0, "I_0 is not the zero space");
    if (seq.steps.size() + 1 != seq.spaces.size()) return report(0, "step/space count mismatch");
    for (size_t i = 1; i < seq.spaces.size(); ++i) {
        const auto& st = seq.steps[i - 1];
        if (st.from >= i) return report(i, "provenance points forward");
        const Subspace& prev = seq.spaces[st.from];
        if (st.rule == 'a') {
            if (!contains_all(t, S, prev)) return report(i, "rule (a) needs I_j inside S");
            if (contains(t, S, st.beta)) return report(i, "rule (a) needs beta outside S");
            Subspace ext = extend(t, prev, st.beta);
            if (!(ext == seq.spaces[i])) return report(i, "rule (a) span mismatch");
            if (seq.spaces[i].dim() != prev.dim() + 1) return report(i, "rule (a) sum not direct");
        } else if (st.rule == 'b') {
            Subspace img = frobenius_image(t, prev, (long long)st.b * r);
            if (!(img == seq.spaces[i])) return report(i, "rule (b) image mismatch");
        } else {
            return report(i, "unknown rule");
        }
    }
    return true;
}

IndependentSequence ht_to_independent_sequence(const Tower& t, HTCertificate cert, const Subspace& S) {
    const u32 n = t.params().n, r = t.params().r;
    const u32 mn = std::min(t.params().m, t.params().n);
    if (!verify_ht_certificate(t, S, cert))
        fail("CertificateInvalid", "certificate does not verify against the given space");
    if (cert.delta == 1 && cert.s == 0) {
        IndependentSequence seq;
        seq.spaces.push_back(zero_subspace(t, r));
        return seq;
    }
    auto alpha_pow = [&](u64 e) { return t.frobenius(cert.alpha, (long long)(e % t.big_degree())); };

    // maximality completion: find a grid row exit and a grid column exit,
    // extending delta / s while the structure stays inside S
    u32 delta = cert.delta, s = cert.s;
    long long istar = -1, jstar = -1;
    for (;;) {
        jstar = -1;
        for (u32 j = 0; j <= s; ++j)
            if (!contains(t, S, alpha_pow(((u64)delta - 1 + (u64)j * cert.c) * r))) { jstar = j; break; }
        if (jstar < 0) {
            if (delta + s + 1 > mn)
                fail("CertificateInvalid", "maximality completion exceeded min(m, n)");
            ++delta;
            continue;
        }
        istar = -1;
        for (u32 i = 0; i + 2 <= delta; ++i)
            if (!contains(t, S, alpha_pow(((u64)i + (u64)(s + 1) * cert.c) * r))) { istar = i; break; }
        if (istar < 0) {
            if (delta + s + 1 > mn)
                fail("CertificateInvalid", "maximality completion exceeded min(m, n)");
            ++s;
            continue;
        }
        break;
    }

    IndependentSequence seq;
    seq.spaces.push_back(zero_subspace(t, r));
    auto push_a = [&](const FieldElem& beta) {
        SequenceStep st;
        st.rule = 'a';
        st.from = (u32)seq.spaces.size() - 1;
        st.beta = beta;
        seq.spaces.push_back(extend(t, seq.spaces.back(), beta));
        seq.steps.push_back(std::move(st));
    };
    auto push_b = [&](u32 b) {
        SequenceStep st;
        st.rule = 'b';
        st.from = (u32)seq.spaces.size() - 1;
        st.b = b;
        seq.spaces.push_back(frobenius_image(t, seq.spaces.back(), (long long)b * r));
        seq.steps.push_back(std::move(st));
    };

    // stage 1: the column-filling loop for row istar
    FieldElem beta1 = alpha_pow(((u64)istar + (u64)(s + 1) * cert.c) * r);
    const u32 c_mod = cert.c % n;
    for (u32 j = 0; j <= s; ++j) {
        push_a(beta1);
        push_b(n - c_mod);
    }
    // shift the row up to delta-2
    if ((u32)istar < delta - 2) push_b(delta - 2 - (u32)istar);
    // stage 2: add the row exit and walk the rows down
    FieldElem beta2 = alpha_pow(((u64)delta - 1 + (u64)jstar * cert.c) * r);
    for (u32 tt = 1; tt + 1 <= delta; ++tt) {
        push_a(beta2);
        if (tt + 1 < delta) push_b(n - 1);
    }
    assert(seq.final_dim() == delta + s);
#ifndef NDEBUG
    std::string diag;
    assert(verify_independent_sequence(t, seq, S, &diag));
#endif
    return seq;
}

// ---------------------------------------------------------------------------

ShiftWeightResult shift_bound_weight(const Tower& t, const Subspace& S, const SearchBudget& budget,
                                     const std::vector<FieldElem>& extra_pool,
                                     const std::vector<IndependentSequence>& seeds) {
    const u32 r = t.params().r;
    const u32 rn = t.big_degree();

    // deterministic rule (a) candidate pool: the F_{q^r} power basis, the
    // extra pool (certificates), and a complement basis of S, all closed
    // under Frobenius
    std::vector<FieldElem> pool;
    {
        std::set<u64> seen;
        auto add_orbit = [&](const FieldElem& e) {
            FieldElem cur = e;
            for (u32 j = 0; j < rn; ++j) {
                if (!t.is_zero(cur) && seen.insert(t.to_radix(cur)).second) pool.push_back(cur);
                cur = t.frobenius(cur, 1);
            }
        };
        for (const auto& e : t.subfield_power_basis(r)) add_orbit(e);
        for (const auto& e : extra_pool) add_orbit(e);
        for (const auto& e : complement_basis(t, S)) add_orbit(e);
    }

    struct State {
        Subspace space;
        SequenceStep step;  // how it was made (unused for the root)
        u32 parent = 0;
        bool is_root = false;
    };
    std::vector<State> states;
    std::map<std::string, u32> memo;
    std::deque<u32> queue;

    auto add_state = [&](State st) -> long long {
        std::string key = canonical_key(t, st.space);
        auto it = memo.find(key);
        if (it != memo.end()) return -1;
        u32 idx = (u32)states.size();
        memo.emplace(std::move(key), idx);
        states.push_back(std::move(st));
        queue.push_back(idx);
        return idx;
    };

    {
        State root;
        root.space = zero_subspace(t, r);
        root.is_root = true;
        add_state(std::move(root));
    }
    // seed chains, re-based onto the state graph
    for (const auto& seq : seeds) {
        if (seq.spaces.empty() || seq.spaces[0].dim() != 0) continue;
        std::vector<u32> chain_idx(seq.spaces.size(), 0);
        for (size_t i = 1; i < seq.spaces.size(); ++i) {
            State st;
            st.space = seq.spaces[i];
            st.step = seq.steps[i - 1];
            st.parent = chain_idx[seq.steps[i - 1].from];
            long long idx = add_state(std::move(st));
            if (idx < 0) {
                // space already known: reuse its index for later references
                chain_idx[i] = memo.at(canonical_key(t, seq.spaces[i]));
            } else {
                chain_idx[i] = (u32)idx;
            }
        }
    }

    u64 expanded = 0;
    u32 best_idx = 0;
    while (!queue.empty()) {
        if (expanded >= budget.max_nodes) break;
        u32 idx = queue.front();
        queue.pop_front();
        ++expanded;
        Subspace cur = states[idx].space;  // copy: states may reallocate
        if (cur.dim() > states[best_idx].space.dim()) best_idx = idx;

        // rule (b)
        for (u32 b = 1; b < rn; ++b) {
            State st;
            st.space = frobenius_image(t, cur, (long long)b * r);
            st.step.rule = 'b';
            st.step.b = b;
            st.step.from = idx;
            st.parent = idx;
            add_state(std::move(st));
        }
        // rule (a)
        if (contains_all(t, S, cur)) {
            for (const auto& beta : pool) {
                if (contains(t, S, beta)) continue;
                if (contains(t, cur, beta)) continue;
                State st;
                st.space = extend(t, cur, beta);
                st.step.rule = 'a';
                st.step.beta = beta;
                st.step.from = idx;
                st.parent = idx;
                add_state(std::move(st));
            }
        }
    }
    // track the best over everything discovered (also states never expanded)
    for (u32 i = 0; i < states.size(); ++i)
        if (states[i].space.dim() > states[best_idx].space.dim()) best_idx = i;

    // rebuild the witness chain root..best
    std::vector<u32> chain;
    for (u32 cur = best_idx;; cur = states[cur].parent) {
        chain.push_back(cur);
        if (states[cur].is_root) break;
    }
    std::reverse(chain.begin(), chain.end());
    ShiftWeightResult out;
    out.value = states[best_idx].space.dim();
    for (size_t i = 0; i < chain.size(); ++i) {
        out.witness.spaces.push_back(states[chain[i]].space);
        if (i > 0) {
            SequenceStep st = states[chain[i]].step;
            st.from = (u32)i - 1;
            out.witness.steps.push_back(st);
        }
    }
#ifndef NDEBUG
    std::string diag;
    assert(verify_independent_sequence(t, out.witness, S, &diag));
#endif
    return out;
}

std::vector<Subspace> root_space_supersets(const Tower& t, const Subspace& T, const SearchBudget& budget) {
    const u32 n = t.params().n;
    if (T.dim() == n) return {};
    if (t.field_size() > (u128)(1u << 20))
        fail("EnumerationTooLarge", "root-space lattice enumeration needs a small field");

    // distinct cyclotomic spaces: the lattice generators
    std::vector<Subspace> cyclo;
    {
        std::set<std::string> seen;
        for (u64 code = 1; code < (u64)t.field_size(); ++code) {
            Subspace c = cyclotomic_space(t, t.from_radix(code));
            if (seen.insert(canonical_key(t, c)).second) cyclo.push_back(std::move(c));
        }
    }
    std::vector<Subspace> out;
    std::set<std::string> seen;
    std::deque<Subspace> queue;
    auto push = [&](Subspace s) {
        if (s.dim() == n) return;  // proper spaces only
        if (seen.insert(canonical_key(t, s)).second) {
            queue.push_back(s);
            out.push_back(std::move(s));
        }
    };
    push(T);
    while (!queue.empty()) {
        Subspace cur = std::move(queue.front());
        queue.pop_front();
        if (out.size() > budget.max_supersets) fail("BudgetExceeded", "too many root-space supersets");
        for (const auto& c : cyclo) {
            Subspace s = sum(t, cur, c);
            if (s.dim() == cur.dim()) continue;
            push(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [&](const Subspace& a, const Subspace& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return canonical_key(t, a) < canonical_key(t, b);
    });
    return out;
}

namespace {

struct PerSpaceValues {
    u32 bch = 1;
    u32 ht = 1;
    u32 shift = 1;
    ShiftWeightResult shift_detail;
};

PerSpaceValues per_space_bounds(const Tower& t, const Subspace& S, const SearchBudget& budget) {
    PerSpaceValues v;
    BchCertificate bch = rank_bch_bound(t, S, budget);
    HTCertificate ht = rank_ht_bound(t, S, budget);
    std::vector<IndependentSequence> seeds;
    std::vector<FieldElem> pool;
    if (bch.delta >= 2) {
        HTCertificate as_ht{bch.alpha, 1, bch.delta, 0};
        try {
            auto seq = ht_to_independent_sequence(t, as_ht, S);
            v.bch = std::max(v.bch, seq.final_dim());
            seeds.push_back(std::move(seq));
        } catch (const Error&) {
        }
        pool.push_back(bch.alpha);
    }
    v.ht = v.bch;
    if (ht.value() >= 2 && !(ht.delta == 1 && ht.s == 0)) {
        try {
            auto seq = ht_to_independent_sequence(t, ht, S);
            v.ht = std::max(v.ht, seq.final_dim());
            seeds.push_back(std::move(seq));
        } catch (const Error&) {
        }
        pool.push_back(ht.alpha);
    }
    v.shift_detail = shift_bound_weight(t, S, budget, pool, seeds);
    v.shift = std::max(v.ht, v.shift_detail.value);
    return v;
}

}  // namespace

ShiftBoundResult shift_bound(const Tower& t, const Subspace& T, const SearchBudget& budget) {
    ShiftBoundResult out;
    if (T.dim() == t.params().n) {
        out.zero_code = true;  // no nonzero codewords to bound
        out.value = 0;
        return out;
    }
    auto sups = root_space_supersets(t, T, budget);
    bool first = true;
    for (const auto& S : sups) {
        PerSpaceValues v = per_space_bounds(t, S, budget);
        if (first || v.shift < out.value) {
            out.value = v.shift;
            out.witness = v.shift_detail.witness;
            out.binding_space = S;
            first = false;
        }
    }
    return out;
}

CodeBoundReport code_bounds(const Tower& t, const Subspace& T, const SearchBudget& budget) {
    CodeBoundReport rep;
    if (T.dim() == t.params().n) {
        rep.zero_code = true;
        return rep;
    }
    rep.bch_cert = rank_bch_bound(t, T, budget);
    rep.ht_cert = rank_ht_bound(t, T, budget);
    auto sups = root_space_supersets(t, T, budget);
    bool first = true;
    for (const auto& S : sups) {
        PerSpaceValues v = per_space_bounds(t, S, budget);
        if (first) {
            rep.bch_sound = v.bch;
            rep.ht_sound = v.ht;
            rep.shift = v.shift;
            rep.shift_detail.value = v.shift;
            rep.shift_detail.witness = v.shift_detail.witness;
            rep.shift_detail.binding_space = S;
            first = false;
        } else {
            rep.bch_sound = std::min(rep.bch_sound, v.bch);
            rep.ht_sound = std::min(rep.ht_sound, v.ht);
            if (v.shift < rep.shift) {
                rep.shift = v.shift;
                rep.shift_detail.value = v.shift;
                rep.shift_detail.witness = v.shift_detail.witness;
                rep.shift_detail.binding_space = S;
            }
        }
    }
    return rep;
}

}  // namespace skewcyc
