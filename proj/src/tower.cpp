#include "skewcyc/tower.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "skewcyc/subspace.hpp"

namespace skewcyc {

void fail(const std::string& code, const std::string& msg) { throw Error(code, msg); }

namespace {

// ---------- small number theory ----------

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [](u64 a, u64 b, u64 mod) { return (u64)((u128)a * b % mod); };
    auto powmod = [&](u64 a, u64 e, u64 mod) {
        u64 x = 1;
        a %= mod;
        while (e) {
            if (e & 1) x = mulmod(x, a, mod);
            a = mulmod(a, a, mod);
            e >>= 1;
        }
        return x;
    };
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    auto mulmod = [](u64 a, u64 b, u64 mod) { return (u64)((u128)a * b % mod); };
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_u64(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) { primes.push_back(n); return; }
    for (u64 p = 2; p < 100000 && p * p <= n; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
            factor_u64(n, primes);
            return;
        }
    }
    u64 d = pollard_rho(n);
    factor_u64(d, primes);
    factor_u64(n / d, primes);
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> ps;
    factor_u64(n, ps);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

// ---------- dense polynomials over a generic "digit field" ----------
// Used twice: over F_p (building base_poly) and over F_q (building ext_poly).
// ops: add(a,b), mul(a,b), neg(a), inv(a); elements are u32 indices.

template <class Ops>
struct Poly {
    static void trim(std::vector<u32>& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    static std::vector<u32> mul(const Ops& k, const std::vector<u32>& a, const std::vector<u32>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<u32> out(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
        }
        return out;
    }
    static std::vector<u32> mod(const Ops& k, std::vector<u32> a, const std::vector<u32>& f) {
        // f monic
        while (a.size() >= f.size()) {
            u32 c = a.back();
            size_t shift = a.size() - f.size();
            if (c != 0) {
                for (size_t j = 0; j < f.size(); ++j)
                    a[shift + j] = k.add(a[shift + j], k.neg(k.mul(c, f[j])));
            }
            a.pop_back();
            trim(a);
            if (a.size() < f.size()) break;
        }
        trim(a);
        return a;
    }
    static std::vector<u32> mulmod(const Ops& k, const std::vector<u32>& a, const std::vector<u32>& b,
                                   const std::vector<u32>& f) {
        return mod(k, mul(k, a, b), f);
    }
    static std::vector<u32> powmod(const Ops& k, std::vector<u32> base, u64 e, const std::vector<u32>& f) {
        std::vector<u32> out = {1};
        base = mod(k, std::move(base), f);
        while (e) {
            if (e & 1) out = mulmod(k, out, base, f);
            base = mulmod(k, base, base, f);
            e >>= 1;
        }
        return out;
    }
    static std::vector<u32> gcd(const Ops& k, std::vector<u32> a, std::vector<u32> b) {
        while (!b.empty()) {
            // a mod b, b need not be monic: normalize first
            u32 lc = b.back();
            if (lc != 1) {
                u32 ilc = k.inv(lc);
                for (auto& x : b) x = k.mul(x, ilc);
            }
            a = mod(k, std::move(a), b);
            std::swap(a, b);
        }
        trim(a);
        return a;
    }
};

struct FpOps {
    u32 p;
    u32 add(u32 a, u32 b) const { return (a + b) % p; }
    u32 neg(u32 a) const { return a == 0 ? 0 : p - a; }
    u32 mul(u32 a, u32 b) const { return (u32)((u64)a * b % p); }
    u32 inv(u32 a) const {
        // p is prime and small
        u32 x = 1, e = p - 2, base = a;
        while (e) {
            if (e & 1) x = mul(x, base);
            base = mul(base, base);
            e >>= 1;
        }
        return x;
    }
};

struct FqOps {
    const SmallField* k;
    u32 add(u32 a, u32 b) const { return k->add(a, b); }
    u32 neg(u32 a) const { return k->neg(a); }
    u32 mul(u32 a, u32 b) const { return k->mul(a, b); }
    u32 inv(u32 a) const { return k->inv(a); }
};

// Rabin irreducibility test for a monic f of degree d over the digit field
// with field size qq: f irreducible iff x^{qq^d} == x (mod f) and for every
// prime l | d, gcd(x^{qq^{d/l}} - x, f) = 1.
template <class Ops>
bool is_irreducible(const Ops& k, u64 qq, const std::vector<u32>& f) {
    const size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    using P = Poly<Ops>;
    auto q_power = [&](std::vector<u32> g, u32 times) {
        for (u32 i = 0; i < times; ++i) g = P::powmod(k, std::move(g), qq, f);
        return g;
    };
    std::vector<u32> x = {0, 1};
    auto xs = prime_factors((u64)d);
    for (u64 l : xs) {
        auto g = q_power(x, (u32)(d / l));  // x^{qq^{d/l}}
        // gcd(g - x, f) must be 1
        std::vector<u32> h = g;
        if (h.size() < 2) h.resize(2, 0);
        h[1] = k.add(h[1], k.neg(1));
        P::trim(h);
        auto gc = P::gcd(k, f, h);
        if (gc.size() != 1) return false;
    }
    auto top = q_power(x, (u32)d);
    return top == x;
}

}  // namespace

// ---------- SmallField ----------

SmallField::SmallField(u32 p, u32 s) : p_(p), s_(s) {
    if (!is_prime_u64(p)) fail("NonPrime", "p = " + std::to_string(p) + " is not prime");
    if (s == 0) fail("BadParameter", "s must be positive");
    u64 q = 1;
    for (u32 i = 0; i < s; ++i) {
        q *= p;
        if (q > (1u << 20)) fail("FieldTooLarge", "q = p^s exceeds 2^20");
    }
    q_ = (u32)q;

    FpOps fp{p};
    if (s == 1) {
        base_poly_ = {0, 1};  // the polynomial y
    } else {
        // smallest monic irreducible of degree s over F_p, scanning the low
        // coefficients as a radix-p integer
        u64 total = 1;
        for (u32 i = 0; i < s; ++i) total *= p;
        bool found = false;
        for (u64 code = 0; code < total; ++code) {
            std::vector<u32> f(s + 1, 0);
            u64 c = code;
            for (u32 i = 0; i < s; ++i) { f[i] = (u32)(c % p); c /= p; }
            f[s] = 1;
            if (is_irreducible(fp, p, f)) {
                base_poly_ = f;
                found = true;
                break;
            }
        }
        assert(found);
        (void)found;
    }

    // multiplication bootstrap: poly mulmod over F_p
    auto unpack = [&](u32 a) {
        std::vector<u32> f;
        while (a) { f.push_back(a % p); a /= p; }
        return f;
    };
    auto pack = [&](const std::vector<u32>& f) {
        u64 v = 0;
        for (size_t i = f.size(); i-- > 0;) v = v * p + f[i];
        return (u32)v;
    };
    auto raw_mul = [&](u32 a, u32 b) {
        if (s_ == 1) return fp.mul(a, b);
        auto m = Poly<FpOps>::mulmod(fp, unpack(a), unpack(b), base_poly_);
        return pack(m);
    };

    // smallest multiplicative generator
    auto raw_pow = [&](u32 a, u64 e) {
        u32 x = 1;
        while (e) {
            if (e & 1) x = raw_mul(x, a);
            a = raw_mul(a, a);
            e >>= 1;
        }
        return x;
    };
    auto fs = prime_factors(q_ - 1);
    gen_ = 0;
    for (u32 g = 2; g < q_; ++g) {
        bool ok = true;
        for (u64 l : fs) {
            if (raw_pow(g, (q_ - 1) / l) == 1) { ok = false; break; }
        }
        if (ok) { gen_ = g; break; }
    }
    if (q_ == 2) gen_ = 1;
    assert(gen_ != 0);

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    u32 e = 1;
    for (u32 i = 0; i + 1 < q_; ++i) {
        exp_[i] = e;
        log_[e] = i;
        e = raw_mul(e, gen_);
    }
}

u32 SmallField::add(u32 a, u32 b) const {
    if (p_ == 2) return a ^ b;
    if (s_ == 1) return (a + b) % p_;
    u32 out = 0, mult = 1;
    for (u32 i = 0; i < s_; ++i) {
        out += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

u32 SmallField::neg(u32 a) const {
    if (p_ == 2) return a;
    if (s_ == 1) return a == 0 ? 0 : p_ - a;
    u32 out = 0, mult = 1;
    for (u32 i = 0; i < s_; ++i) {
        u32 d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

u32 SmallField::sub(u32 a, u32 b) const { return add(a, neg(b)); }

u32 SmallField::mul(u32 a, u32 b) const {
    if (a == 0 || b == 0) return 0;
    u64 l = (u64)log_[a] + log_[b];
    if (l >= q_ - 1) l -= q_ - 1;
    return exp_[l];
}

u32 SmallField::inv(u32 a) const {
    if (a == 0) fail("DivisionByZero", "inverse of 0 in F_q");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

u32 SmallField::pow(u32 a, u64 e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    u64 l = (u64)log_[a] % (q_ - 1) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[l];
}

// ---------- fqlin ----------

namespace fqlin {

u32 rref(const SmallField& fq, std::vector<std::vector<u32>>& rows, std::vector<u32>* pivots) {
    if (pivots) pivots->clear();
    if (rows.empty()) return 0;
    const size_t ncols = rows[0].size();
    u32 rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = rows.size();
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] != 0) { piv = i; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        u32 ilc = fq.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = fq.mul(x, ilc);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            u32 c = rows[i][col];
            for (size_t j = 0; j < ncols; ++j)
                rows[i][j] = fq.sub(rows[i][j], fq.mul(c, rows[rank][j]));
        }
        if (pivots) pivots->push_back((u32)col);
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

u32 rank(const SmallField& fq, std::vector<std::vector<u32>> rows) { return rref(fq, rows); }

}  // namespace fqlin

// ---------- Tower ----------

Tower::Tower(TowerParams params, SmallField fq)
    : params_(params), fq_(std::move(fq)), caches_(std::make_unique<Caches>()) {}

Tower Tower::build(const TowerParams& params) {
    if (!is_prime_u64(params.p)) fail("NonPrime", "p = " + std::to_string(params.p));
    if (params.s == 0 || params.m == 0 || params.r == 0 || params.n == 0)
        fail("BadParameter", "s, m, r, n must be positive");
    const u64 rn = (u64)params.r * params.n;
    if (rn % params.m != 0)
        fail("DivisibilityViolated", "m = " + std::to_string(params.m) + " does not divide rn = " + std::to_string(rn));
    if (params.r > params.m) fail("ROutOfRange", "need 1 <= r <= m");

    SmallField fq(params.p, params.s);
    Tower t(params, std::move(fq));
    t.D_ = (u32)rn;
    const u32 D = t.D_;
    const u32 q = t.fq_.q();

    {
        u128 sz = 1;
        for (u32 i = 0; i < D; ++i) {
            if (sz > (u128)1 << 120) fail("FieldTooLarge", "q^{rn} is out of range");
            sz *= q;
        }
        t.size_ = sz;
    }

    // smallest monic irreducible of degree rn over F_q
    FqOps kq{&t.fq_};
    {
        bool found = false;
        u64 limit = t.size_ > (u128)UINT64_MAX ? UINT64_MAX : (u64)t.size_;
        for (u64 code = 0; code < limit; ++code) {
            std::vector<u32> f(D + 1, 0);
            u64 c = code;
            for (u32 i = 0; i < D; ++i) { f[i] = (u32)(c % q); c /= q; }
            f[D] = 1;
            if (D > 1 && f[0] == 0) continue;
            if (is_irreducible(kq, q, f)) {
                t.ext_poly_ = f;
                found = true;
                break;
            }
        }
        if (!found) fail("Internal", "no irreducible found");
    }

    // reduction rows: theta^{D+i} for i < D-1
    if (D >= 1) {
        std::vector<u32> cur(D, 0);  // theta^D = -(f_0 .. f_{D-1})
        for (u32 j = 0; j < D; ++j) cur[j] = t.fq_.neg(t.ext_poly_[j]);
        t.red_.push_back(cur);
        for (u32 i = 1; i + 1 < D; ++i) {
            std::vector<u32> nxt(D, 0);
            u32 top = cur[D - 1];
            for (u32 j = D - 1; j > 0; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (top != 0)
                for (u32 j = 0; j < D; ++j)
                    nxt[j] = t.fq_.add(nxt[j], t.fq_.mul(top, t.red_[0][j]));
            t.red_.push_back(nxt);
            cur = nxt;
        }
    }

    // Frobenius matrices: frob_[j] maps coordinates of e to coordinates of e^{q^j}
    {
        t.frob_.assign(D, std::vector<u32>(D * D, 0));
        // identity
        for (u32 i = 0; i < D; ++i) t.frob_[0][i * D + i] = 1;
        if (D > 1) {
            // columns of M1: coords of (theta^i)^q
            FieldElem th = t.theta();
            FieldElem thq = t.pow(th, q);
            FieldElem p = t.one();
            for (u32 i = 0; i < D; ++i) {
                for (u32 row = 0; row < D; ++row) t.frob_[1][row * D + i] = p.c[row];
                p = t.mul(p, thq);
            }
            for (u32 j = 2; j < D; ++j) {
                // M_j = M_1 * M_{j-1}
                for (u32 rr = 0; rr < D; ++rr)
                    for (u32 kk = 0; kk < D; ++kk) {
                        u32 a = t.frob_[1][rr * D + kk];
                        if (a == 0) continue;
                        for (u32 cc = 0; cc < D; ++cc)
                            t.frob_[j][rr * D + cc] =
                                t.fq_.add(t.frob_[j][rr * D + cc], t.fq_.mul(a, t.frob_[j - 1][kk * D + cc]));
                    }
            }
        }
    }

    // zeta: smallest multiplicative generator when |F|-1 is factorable in
    // 64 bits, otherwise the smallest element of full degree rn over F_q.
    {
        if (t.size_ - 1 <= (u128)UINT64_MAX) {
            auto fs = prime_factors((u64)(t.size_ - 1));
            u64 order = (u64)(t.size_ - 1);
            for (u64 code = 1;; ++code) {
                FieldElem e = t.from_radix(code);
                bool ok = order == 1 ? !t.is_zero(e) : true;
                for (u64 l : fs) {
                    if (t.pow(e, order / l) == t.one()) { ok = false; break; }
                }
                if (ok) {
                    t.zeta_ = e;
                    t.zeta_is_generator_ = true;
                    break;
                }
            }
        } else {
            auto ls = prime_factors((u64)D);
            for (u64 code = 1;; ++code) {
                FieldElem e = t.from_radix(code);
                bool ok = true;
                for (u64 l : ls) {
                    if (t.frobenius(e, (long long)(D / l)) == e) { ok = false; break; }
                }
                if (ok) { t.zeta_ = e; break; }
            }
        }
    }

    // stored subfield coordinate data for d in {1, r, m}
    {
        std::vector<u32> ds = {1, params.r, params.m};
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        t.stored_ds_ = ds;
        for (u32 d : ds) {
            SubfieldData sd;
            sd.kappa = t.compute_subfield_fq_basis(d);
            // zeta powers
            {
                FieldElem p = t.one();
                for (u32 i = 0; i < D / d; ++i) {
                    sd.zeta_pows.push_back(p);
                    p = t.mul(p, t.zeta_);
                }
            }
            // coordinate matrix: columns (i*d + tt) = coords of zeta^i * kappa_tt
            {
                std::vector<std::vector<u32>> aug(D, std::vector<u32>(2 * D, 0));
                for (u32 i = 0; i < D / d; ++i)
                    for (u32 tt = 0; tt < d; ++tt) {
                        FieldElem v = t.mul(sd.zeta_pows[i], sd.kappa[tt]);
                        for (u32 row = 0; row < D; ++row) aug[row][i * d + tt] = v.c[row];
                    }
                for (u32 i = 0; i < D; ++i) aug[i][D + i] = 1;
                u32 rank = fqlin::rref(t.fq_, aug);
                if (rank != D) fail("Internal", "subfield basis not invertible, d = " + std::to_string(d));
                sd.coord_mat_inv.assign(D * D, 0);
                for (u32 i = 0; i < D; ++i)
                    for (u32 j = 0; j < D; ++j) sd.coord_mat_inv[i * D + j] = aug[i][D + j];
            }
            t.sub_.emplace(d, std::move(sd));
        }
    }

    return t;
}

FieldElem Tower::zero() const { return FieldElem{std::vector<u32>(D_, 0)}; }

FieldElem Tower::one() const {
    FieldElem e = zero();
    e.c[0] = 1;
    return e;
}

FieldElem Tower::from_fq(u32 a) const {
    FieldElem e = zero();
    e.c[0] = a;
    return e;
}

FieldElem Tower::theta() const {
    FieldElem e = zero();
    if (D_ == 1) {
        // degree-1 extension: theta = -f_0
        e.c[0] = fq_.neg(ext_poly_[0]);
    } else {
        e.c[1] = 1;
    }
    return e;
}

FieldElem Tower::from_radix(u64 code) const {
    FieldElem e = zero();
    const u32 q = fq_.q();
    for (u32 i = 0; i < D_ && code; ++i) {
        e.c[i] = (u32)(code % q);
        code /= q;
    }
    if (code != 0) fail("BadParameter", "radix code out of range");
    return e;
}

u64 Tower::to_radix(const FieldElem& e) const {
    u64 v = 0;
    const u32 q = fq_.q();
    for (size_t i = e.c.size(); i-- > 0;) v = v * q + e.c[i];
    return v;
}

bool Tower::is_zero(const FieldElem& e) const {
    for (u32 x : e.c)
        if (x != 0) return false;
    return true;
}

FieldElem Tower::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem out = a;
    for (u32 i = 0; i < D_; ++i) out.c[i] = fq_.add(out.c[i], b.c[i]);
    return out;
}

FieldElem Tower::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem out = a;
    for (u32 i = 0; i < D_; ++i) out.c[i] = fq_.sub(out.c[i], b.c[i]);
    return out;
}

FieldElem Tower::neg(const FieldElem& a) const {
    FieldElem out = a;
    for (u32 i = 0; i < D_; ++i) out.c[i] = fq_.neg(out.c[i]);
    return out;
}

void Tower::add_into(FieldElem& acc, const FieldElem& a) const {
    for (u32 i = 0; i < D_; ++i) acc.c[i] = fq_.add(acc.c[i], a.c[i]);
}

void Tower::mul_into(const FieldElem& a, const FieldElem& b, FieldElem& out,
                     std::vector<u32>& scratch) const {
    scratch.assign(2 * D_ - 1, 0);
    for (u32 i = 0; i < D_; ++i) {
        if (a.c[i] == 0) continue;
        for (u32 j = 0; j < D_; ++j) {
            if (b.c[j] == 0) continue;
            scratch[i + j] = fq_.add(scratch[i + j], fq_.mul(a.c[i], b.c[j]));
        }
    }
    out.c.assign(D_, 0);
    for (u32 i = 0; i < D_; ++i) out.c[i] = scratch[i];
    for (u32 i = D_; i < 2 * D_ - 1; ++i) {
        u32 c = scratch[i];
        if (c == 0) continue;
        const auto& row = red_[i - D_];
        for (u32 j = 0; j < D_; ++j) out.c[j] = fq_.add(out.c[j], fq_.mul(c, row[j]));
    }
}

FieldElem Tower::mul(const FieldElem& a, const FieldElem& b) const {
    std::vector<u32> scratch;
    FieldElem out;
    mul_into(a, b, out, scratch);
    return out;
}

FieldElem Tower::scalar_mul(u32 a, const FieldElem& b) const {
    FieldElem out = b;
    for (u32 i = 0; i < D_; ++i) out.c[i] = fq_.mul(a, out.c[i]);
    return out;
}

FieldElem Tower::pow(const FieldElem& a, u128 e) const {
    FieldElem out = one();
    FieldElem base = a;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

FieldElem Tower::inv(const FieldElem& a) const {
    if (is_zero(a)) fail("DivisionByZero", "inverse of zero");
    // extended Euclid in F_q[y] against ext_poly
    FqOps kq{&fq_};
    using P = Poly<FqOps>;
    std::vector<u32> r0 = ext_poly_, r1(a.c.begin(), a.c.end());
    P::trim(r1);
    std::vector<u32> t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<u32> q;
        std::vector<u32> rem = r0;
        u32 ilc = fq_.inv(r1.back());
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            u32 c = fq_.mul(rem.back(), ilc);
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            if (c != 0)
                for (size_t j = 0; j < r1.size(); ++j)
                    rem[shift + j] = fq_.sub(rem[shift + j], fq_.mul(c, r1[j]));
            P::trim(rem);
            if (rem.size() < r1.size()) break;
        }
        auto t2 = t0;  // t0 - q*t1
        {
            auto qt = P::mul(kq, q, t1);
            if (t2.size() < qt.size()) t2.resize(qt.size(), 0);
            for (size_t i = 0; i < qt.size(); ++i) t2[i] = fq_.sub(t2[i], qt[i]);
            P::trim(t2);
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd (a constant, since ext_poly is irreducible)
    assert(r0.size() == 1);
    u32 ic = fq_.inv(r0[0]);
    FieldElem out = zero();
    for (size_t i = 0; i < t0.size(); ++i) out.c[i] = fq_.mul(t0[i], ic);
    return out;
}

// F_q-basis of F_{q^d}: kernel basis of (Frobenius^d - id), sorted by radix
// code so results are reproducible.
std::vector<FieldElem> Tower::compute_subfield_fq_basis(u32 d) const {
    const u32 D = D_;
    std::vector<std::vector<u32>> mat(D, std::vector<u32>(D, 0));
    for (u32 i = 0; i < D; ++i)
        for (u32 j = 0; j < D; ++j) {
            u32 v = frob_[d % D][i * D + j];
            if (i == j) v = fq_.sub(v, 1);
            mat[i][j] = v;
        }
    std::vector<u32> pivots;
    fqlin::rref(fq_, mat, &pivots);
    std::vector<bool> is_pivot(D, false);
    for (u32 c : pivots) is_pivot[c] = true;
    std::vector<FieldElem> kappa;
    for (u32 c = 0; c < D; ++c) {
        if (is_pivot[c]) continue;
        FieldElem v = zero();
        v.c[c] = 1;
        for (u32 i = 0; i < pivots.size(); ++i) v.c[pivots[i]] = fq_.neg(mat[i][c]);
        kappa.push_back(std::move(v));
    }
    if (kappa.size() != d) fail("Internal", "subfield dimension mismatch for d = " + std::to_string(d));
    std::sort(kappa.begin(), kappa.end(),
              [&](const FieldElem& x, const FieldElem& y) { return to_radix(x) < to_radix(y); });
    return kappa;
}

FieldElem Tower::frobenius_once(const FieldElem& e, u32 j) const {
    const auto& M = frob_[j];
    FieldElem out = zero();
    for (u32 row = 0; row < D_; ++row) {
        u32 acc = 0;
        for (u32 col = 0; col < D_; ++col) {
            u32 a = M[row * D_ + col];
            if (a != 0 && e.c[col] != 0) acc = fq_.add(acc, fq_.mul(a, e.c[col]));
        }
        out.c[row] = acc;
    }
    return out;
}

FieldElem Tower::frobenius(const FieldElem& e, long long j) const {
    long long jj = j % (long long)D_;
    if (jj < 0) jj += D_;
    if (jj == 0) return e;
    return frobenius_once(e, (u32)jj);
}

bool Tower::in_subfield(const FieldElem& e, u32 d) const {
    if (d == 0 || D_ % d != 0) fail("NotADivisor", "d = " + std::to_string(d) + " does not divide rn");
    if (d == D_) return true;
    return frobenius(e, d) == e;
}

std::vector<FieldElem> Tower::subfield_coords(const FieldElem& e, u32 d) const {
    auto it = sub_.find(d);
    if (it == sub_.end()) fail("UnsupportedSubfield", "no stored basis for d = " + std::to_string(d));
    const auto& sd = it->second;
    // y = inv * coords(e), then group y into F_{q^d} combinations of kappa
    std::vector<u32> y(D_, 0);
    for (u32 row = 0; row < D_; ++row) {
        u32 acc = 0;
        for (u32 col = 0; col < D_; ++col) {
            u32 a = sd.coord_mat_inv[row * D_ + col];
            if (a != 0 && e.c[col] != 0) acc = fq_.add(acc, fq_.mul(a, e.c[col]));
        }
        y[row] = acc;
    }
    std::vector<FieldElem> out;
    out.reserve(D_ / d);
    for (u32 i = 0; i < D_ / d; ++i) {
        FieldElem ci = zero();
        for (u32 tt = 0; tt < d; ++tt) {
            u32 a = y[i * d + tt];
            if (a != 0) ci = add(ci, scalar_mul(a, sd.kappa[tt]));
        }
        out.push_back(std::move(ci));
    }
    return out;
}

FieldElem Tower::from_subfield_coords(const std::vector<FieldElem>& coords, u32 d) const {
    auto it = sub_.find(d);
    if (it == sub_.end()) fail("UnsupportedSubfield", "no stored basis for d = " + std::to_string(d));
    const auto& sd = it->second;
    if (coords.size() != sd.zeta_pows.size()) fail("BadParameter", "coordinate length mismatch");
    FieldElem out = zero();
    for (size_t i = 0; i < coords.size(); ++i)
        out = add(out, mul(coords[i], sd.zeta_pows[i]));
    return out;
}

const std::vector<FieldElem>& Tower::subfield_fq_basis(u32 d) const {
    auto it = sub_.find(d);
    if (it == sub_.end()) fail("UnsupportedSubfield", "no stored basis for d = " + std::to_string(d));
    return it->second.kappa;
}

const std::vector<FieldElem>& Tower::subfield_power_basis(u32 d) const {
    auto it = sub_.find(d);
    if (it == sub_.end()) fail("UnsupportedSubfield", "no stored basis for d = " + std::to_string(d));
    return it->second.zeta_pows;
}

const std::vector<FieldElem>& Tower::subfield_elements(u32 d) const {
    if (d == 0 || D_ % d != 0) fail("NotADivisor", "d = " + std::to_string(d));
    std::lock_guard<std::mutex> lk(caches_->mu);
    auto it = caches_->subfield_elems.find(d);
    if (it != caches_->subfield_elems.end()) return it->second;
    std::vector<FieldElem> kappa;
    if (auto sit = sub_.find(d); sit != sub_.end())
        kappa = sit->second.kappa;
    else
        kappa = compute_subfield_fq_basis(d);
    u64 count = 1;
    for (u32 i = 0; i < d; ++i) {
        count *= fq_.q();
        if (count > (1u << 22)) fail("EnumerationTooLarge", "subfield too large to enumerate");
    }
    std::vector<FieldElem> elems;
    elems.reserve(count);
    for (u64 code = 0; code < count; ++code) {
        FieldElem e = zero();
        u64 c = code;
        for (u32 tt = 0; tt < d; ++tt) {
            u32 a = (u32)(c % fq_.q());
            c /= fq_.q();
            if (a != 0) e = add(e, scalar_mul(a, kappa[tt]));
        }
        elems.push_back(std::move(e));
    }
    std::sort(elems.begin(), elems.end(),
              [&](const FieldElem& x, const FieldElem& y) { return to_radix(x) < to_radix(y); });
    return caches_->subfield_elems.emplace(d, std::move(elems)).first->second;
}

FieldElem Tower::find_normal_basis(u32 d) const {
    if (d == 0 || D_ % d != 0) fail("NotADivisor", "d = " + std::to_string(d));
    {
        std::lock_guard<std::mutex> lk(caches_->mu);
        auto it = caches_->normal.find(d);
        if (it != caches_->normal.end()) return it->second;
    }
    const u32 u = D_ / d;
    std::vector<FieldElem> kappa;
    if (auto it = sub_.find(d); it != sub_.end())
        kappa = it->second.kappa;
    else
        kappa = compute_subfield_fq_basis(d);
    auto is_normal = [&](const FieldElem& a) {
        // F_{q^d}-independence of the orbit a, a^{[d]}, ... is equivalent to
        // F_q-rank d*u of all kappa-multiples of the orbit.
        std::vector<std::vector<u32>> rows;
        rows.reserve((size_t)d * u);
        FieldElem cur = a;
        for (u32 j = 0; j < u; ++j) {
            for (const auto& k : kappa) rows.push_back(mul(k, cur).c);
            cur = frobenius(cur, d);
        }
        return fqlin::rank(fq_, std::move(rows)) == d * u;
    };
    // plain scan first. When the defining polynomial is sparse every small
    // radix code can sit inside a proper submodule (e.g. the trace-zero
    // hyperplane), so cap the scan and fall back to the exact search.
    u64 cap = std::min<u64>(size_ > (u128)2048 ? 2048 : (u64)size_ - 1, (u64)2048);
    for (u64 code = 1; code <= cap; ++code) {
        FieldElem a = from_radix(code);
        if (is_normal(a)) {
            std::lock_guard<std::mutex> lk(caches_->mu);
            caches_->normal.emplace(d, a);
            return a;
        }
    }
    FieldElem a = zero();
    try {
        a = find_normal_basis_lexmin(d);
    } catch (const Error&) {
        // exact search unavailable: exhaust small fields, give up otherwise
        if (size_ > (u128)(1u << 20)) throw;
        for (u64 code = cap + 1;; ++code) {
            FieldElem b = from_radix(code);
            if (is_normal(b)) { a = b; break; }
        }
    }
    if (!is_normal(a)) fail("Internal", "lexmin normal-basis search returned a non-normal element");
    std::lock_guard<std::mutex> lk(caches_->mu);
    caches_->normal.emplace(d, a);
    return a;
}

namespace {

// dense polynomials with FieldElem coefficients (entries restricted to a
// subfield); low degree first
using EPoly = std::vector<FieldElem>;

void ep_trim(const Tower& t, EPoly& f) {
    while (!f.empty() && t.is_zero(f.back())) f.pop_back();
}

EPoly ep_mul(const Tower& t, const EPoly& a, const EPoly& b) {
    if (a.empty() || b.empty()) return {};
    EPoly out(a.size() + b.size() - 1, t.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (t.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = t.add(out[i + j], t.mul(a[i], b[j]));
    }
    return out;
}

EPoly ep_mod(const Tower& t, EPoly a, const EPoly& b) {
    FieldElem ilc = t.inv(b.back());
    while (a.size() >= b.size()) {
        FieldElem c = t.mul(a.back(), ilc);
        size_t shift = a.size() - b.size();
        if (!t.is_zero(c))
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = t.sub(a[shift + j], t.mul(c, b[j]));
        a.pop_back();
        ep_trim(t, a);
        if (a.size() < b.size()) break;
    }
    ep_trim(t, a);
    return a;
}

EPoly ep_divexact(const Tower& t, EPoly a, const EPoly& b) {
    FieldElem ilc = t.inv(b.back());
    EPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, t.zero());
    while (a.size() >= b.size()) {
        FieldElem c = t.mul(a.back(), ilc);
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j)
            a[shift + j] = t.sub(a[shift + j], t.mul(c, b[j]));
        a.pop_back();
        ep_trim(t, a);
        if (a.size() < b.size()) break;
    }
    return q;
}

EPoly ep_monic(const Tower& t, EPoly a) {
    if (a.empty()) return a;
    FieldElem ilc = t.inv(a.back());
    for (auto& x : a) x = t.mul(ilc, x);
    return a;
}

EPoly ep_gcd(const Tower& t, EPoly a, EPoly b) {
    ep_trim(t, a);
    ep_trim(t, b);
    while (!b.empty()) {
        EPoly r = ep_mod(t, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return ep_monic(t, std::move(a));
}

// distinct monic irreducible factors of x^w - 1 over F_{q^d} (w coprime to
// p), by Berlekamp with deterministic splitting over the subfield elements
std::vector<EPoly> factor_x_w_minus_1(const Tower& t, u32 d, u32 w) {
    EPoly f(w + 1, t.zero());
    f[0] = t.neg(t.one());
    f[w] = t.one();
    if (w == 1) return {f};
    const u64 qd = [&] {
        u64 v = 1;
        for (u32 i = 0; i < d; ++i) v *= t.fq().q();
        return v;
    }();
    // x^{q^d} mod f, then the Berlekamp matrix rows x^{i q^d} mod f
    EPoly xq(2, t.zero());
    xq[1] = t.one();
    {
        // x^{q^d} = x^{q^d mod w} since x^w = 1 mod f
        u64 e = qd % w;
        EPoly g(e + 1, t.zero());
        g[e] = t.one();
        xq = g;
        if (xq.size() >= f.size()) xq = ep_mod(t, xq, f);
    }
    std::vector<std::vector<FieldElem>> bm(w, std::vector<FieldElem>(w, t.zero()));
    EPoly cur = {t.one()};
    for (u32 i = 0; i < w; ++i) {
        for (size_t j = 0; j < cur.size(); ++j) bm[i][j] = cur[j];
        cur = ep_mod(t, ep_mul(t, cur, xq), f);
    }
    // kernel of (B - I)^T: v with v(x)^{q^d} = v(x) mod f
    std::vector<std::vector<FieldElem>> mt(w, std::vector<FieldElem>(w, t.zero()));
    for (u32 i = 0; i < w; ++i)
        for (u32 j = 0; j < w; ++j) {
            FieldElem v = bm[i][j];
            if (i == j) v = t.sub(v, t.one());
            mt[j][i] = v;
        }
    auto kernel = qdlin::kernel(t, std::move(mt));
    std::vector<EPoly> factors = {f};
    const auto& subs = t.subfield_elements(d);
    for (const auto& kv : kernel) {
        if ((u32)factors.size() == kernel.size()) break;
        EPoly b(kv.begin(), kv.end());
        ep_trim(t, b);
        if (b.size() <= 1) continue;  // the constants split nothing
        std::vector<EPoly> next;
        for (auto& g : factors) {
            if (g.size() <= 2) { next.push_back(std::move(g)); continue; }
            EPoly rest = g;
            for (const auto& c : subs) {
                if (rest.size() <= 2) break;
                EPoly shifted = b;
                shifted[0] = t.sub(shifted[0], c);
                ep_trim(t, shifted);
                EPoly h = shifted.empty() ? EPoly{} : ep_gcd(t, rest, shifted);
                if (h.size() > 1 && h.size() < rest.size()) {
                    next.push_back(h);
                    rest = ep_divexact(t, std::move(rest), h);
                }
            }
            next.push_back(std::move(rest));
        }
        factors = std::move(next);
    }
    return factors;
}

// reduced echelon form over F_q processing columns from high to low; rows end
// sorted by descending pivot
u32 rref_desc(const SmallField& fq, std::vector<std::vector<u32>>& rows) {
    if (rows.empty()) return 0;
    const size_t ncols = rows[0].size();
    u32 rank = 0;
    for (size_t col = ncols; col-- > 0 && rank < rows.size();) {
        size_t piv = rows.size();
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] != 0) { piv = i; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        u32 ilc = fq.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = fq.mul(x, ilc);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            u32 c = rows[i][col];
            for (size_t j = 0; j < ncols; ++j)
                rows[i][j] = fq.sub(rows[i][j], fq.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

u32 desc_pivot(const std::vector<u32>& row) {
    for (size_t j = row.size(); j-- > 0;)
        if (row[j] != 0) return (u32)j;
    return 0;
}

// intersection of two F_q-subspaces given by row bases (Zassenhaus)
std::vector<std::vector<u32>> fq_intersect(const SmallField& fq,
                                           const std::vector<std::vector<u32>>& a,
                                           const std::vector<std::vector<u32>>& b) {
    if (a.empty() || b.empty()) return {};
    const size_t n = a[0].size();
    std::vector<std::vector<u32>> big;
    for (const auto& u : a) {
        std::vector<u32> row(2 * n, 0);
        for (size_t j = 0; j < n; ++j) row[j] = row[n + j] = u[j];
        big.push_back(std::move(row));
    }
    for (const auto& v : b) {
        std::vector<u32> row(2 * n, 0);
        for (size_t j = 0; j < n; ++j) row[j] = v[j];
        big.push_back(std::move(row));
    }
    fqlin::rref(fq, big);
    std::vector<std::vector<u32>> inter;
    for (const auto& row : big) {
        bool left_zero = true;
        for (size_t j = 0; j < n; ++j)
            if (row[j] != 0) { left_zero = false; break; }
        if (left_zero) inter.emplace_back(row.begin() + n, row.end());
    }
    rref_desc(fq, inter);
    return inter;
}

}  // namespace

// The non-normal elements over F_{q^d} form the union of the maximal
// submodule kernels K_i = ker(((x^u - 1)/f_i)(Frobenius^d)), one per distinct
// irreducible factor f_i of x^u - 1 over F_{q^d}. The first normal element in
// radix order is found by fixing coordinates from the most significant down,
// counting the elements avoiding every K_i via inclusion-exclusion.
FieldElem Tower::find_normal_basis_lexmin(u32 d) const {
    const u32 D = D_;
    const u32 u = D / d;
    const u32 p = params_.p;
    if ((u128)1 << 100 < size_) fail("FieldTooLarge", "normal-basis search out of range");
    {
        u64 qd = 1;
        for (u32 i = 0; i < d; ++i) {
            qd *= fq_.q();
            if (qd > (1u << 16)) fail("FieldTooLarge", "subfield too large for the exact search");
        }
    }
    u32 w = u;
    while (w % p == 0) w /= p;
    auto factors = factor_x_w_minus_1(*this, d, w);

    // kernel bases of the maximal submodules, in descending echelon form
    std::vector<std::vector<std::vector<u32>>> kernels;
    {
        EPoly xu(u + 1, zero());
        xu[0] = neg(one());
        xu[u] = one();
        for (const auto& f : factors) {
            EPoly h = ep_divexact(*this, xu, f);
            // operator matrix of h(Frobenius^d) over F_q
            std::vector<std::vector<u32>> mat(D, std::vector<u32>(D, 0));
            for (u32 col = 0; col < D; ++col) {
                FieldElem v = zero();
                v.c[col] = 1;
                FieldElem acc = zero();
                FieldElem cur = v;
                for (size_t j = 0; j < h.size(); ++j) {
                    if (!is_zero(h[j])) acc = add(acc, mul(h[j], cur));
                    if (j + 1 < h.size()) cur = frobenius(cur, d);
                }
                for (u32 row = 0; row < D; ++row) mat[row][col] = acc.c[row];
            }
            std::vector<u32> pivots;
            fqlin::rref(fq_, mat, &pivots);
            std::vector<bool> is_piv(D, false);
            for (u32 c : pivots) is_piv[c] = true;
            std::vector<std::vector<u32>> ker;
            for (u32 c = 0; c < D; ++c) {
                if (is_piv[c]) continue;
                std::vector<u32> v(D, 0);
                v[c] = 1;
                for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = fq_.neg(mat[i][c]);
                ker.push_back(std::move(v));
            }
            rref_desc(fq_, ker);
            kernels.push_back(std::move(ker));
        }
    }
    const size_t nk = kernels.size();
    if (nk > 20) fail("FieldTooLarge", "too many factors for the exact search");

    // all subset intersections K_S with their descending pivot lists
    std::vector<std::vector<std::vector<u32>>> inter(1u << nk);
    inter[0].clear();  // the empty intersection is the whole space (flag below)
    std::vector<bool> whole(1u << nk, false);
    whole[0] = true;
    for (u32 s = 1; s < (1u << nk); ++s) {
        u32 low = s & (s - 1);
        u32 bit = 0;
        while (!((s >> bit) & 1)) ++bit;
        if (low == 0) {
            inter[s] = kernels[bit];
        } else {
            inter[s] = fq_intersect(fq_, inter[low], kernels[bit]);
        }
    }

    // greedy digit descent; coords above `pos` are fixed in a0
    std::vector<u32> a0(D, 0);
    auto count_normal = [&](u32 free_cols) -> __int128 {
        // number of elements with the fixed high part avoiding every kernel
        __int128 total = 0;
        for (u32 s = 0; s < (1u << nk); ++s) {
            u32 dim;
            bool member;
            if (whole[s]) {
                dim = free_cols;
                member = true;
            } else {
                const auto& rows = inter[s];
                // reduce a0 by the kernel rows (descending pivots)
                std::vector<u32> v = a0;
                for (const auto& row : rows) {
                    u32 pivc = desc_pivot(row);
                    if (v[pivc] == 0) continue;
                    u32 c = v[pivc];
                    for (u32 j = 0; j < D; ++j) v[j] = fq_.sub(v[j], fq_.mul(c, row[j]));
                }
                member = true;
                for (u32 j = free_cols; j < D; ++j)
                    if (v[j] != 0) { member = false; break; }
                dim = 0;
                for (const auto& row : rows)
                    if (desc_pivot(row) < free_cols) ++dim;
            }
            if (!member) continue;
            __int128 term = 1;
            for (u32 i = 0; i < dim; ++i) term *= fq_.q();
            total += (__builtin_popcount(s) & 1) ? -term : term;
        }
        return total;
    };
    for (u32 pos = D; pos-- > 0;) {
        bool placed = false;
        for (u32 v = 0; v < fq_.q(); ++v) {
            a0[pos] = v;
            if (count_normal(pos) > 0) { placed = true; break; }
        }
        if (!placed) fail("Internal", "normal-element descent has no feasible digit");
    }
    return FieldElem{a0};
}

bool Tower::power_notation_available() const {
    return zeta_is_generator_ && size_ <= ((u128)1 << 20);
}

std::optional<u64> Tower::discrete_log(const FieldElem& e) const {
    if (!power_notation_available()) return std::nullopt;
    if (is_zero(e)) return std::nullopt;
    std::lock_guard<std::mutex> lk(caches_->mu);
    if (!caches_->log_built) {
        u64 N = (u64)size_;
        caches_->log_table.assign(N, 0);
        FieldElem cur = one();
        for (u64 i = 0; i + 1 < N; ++i) {
            caches_->log_table[to_radix(cur)] = (u32)i;
            cur = mul(cur, zeta_);
        }
        caches_->log_built = true;
    }
    return caches_->log_table[to_radix(e)];
}

std::string Tower::header() const {
    std::ostringstream os;
    os << "q=" << params_.p << "^" << params_.s << "; m=" << params_.m << "; r=" << params_.r
       << "; n=" << params_.n << "; base_poly=";
    const auto& bp = fq_.base_poly();
    for (size_t i = 0; i < bp.size(); ++i) os << (i ? "," : "") << bp[i];
    os << "; ext_poly=";
    for (size_t i = 0; i < ext_poly_.size(); ++i) os << (i ? "," : "") << ext_poly_[i];
    return os.str();
}

}  // namespace skewcyc
