#pragma once

#include "skewcyc/skewcode.hpp"

namespace skewcyc {

// ---------------------------------------------------------------------------
// commutative polynomials over F_q (dense, low-degree-first coefficients)

struct FqPoly {
    std::vector<u32> c;
    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const FqPoly&) const = default;
};

FqPoly fqp_from(std::vector<u32> coeffs);  // trims
FqPoly fqp_one();
FqPoly fqp_xn_minus_1(const SmallField& fq, u32 n);
FqPoly fqp_add(const SmallField& fq, const FqPoly& a, const FqPoly& b);
FqPoly fqp_mul(const SmallField& fq, const FqPoly& a, const FqPoly& b);
FqPoly fqp_mod(const SmallField& fq, FqPoly a, const FqPoly& b);
FqPoly fqp_gcd(const SmallField& fq, FqPoly a, FqPoly b);  // monic
FqPoly fqp_monic(const SmallField& fq, FqPoly a);

// ---------------------------------------------------------------------------
// classical cyclic codes over F_q

struct ClassicCyclicCode {
    u32 n = 0;
    FqPoly g;   // monic divisor of x^n - 1
    u32 k = 0;  // n - deg g
};

ClassicCyclicCode classic_cyclic(const SmallField& fq, const FqPoly& gen, u32 n);
std::vector<std::vector<u32>> classic_generator_matrix(const ClassicCyclicCode& c);
std::vector<std::vector<u32>> classic_codewords(const SmallField& fq, const ClassicCyclicCode& c);
u32 min_hamming_distance(const SmallField& fq, const ClassicCyclicCode& c);
// weight distribution: counts[w] = number of codewords of Hamming weight w
std::vector<u64> hamming_weight_distribution(const SmallField& fq, const ClassicCyclicCode& c);

// ---------------------------------------------------------------------------
// the E-map bridge (m = n, gcd(n, r) = 1, twisted normal basis)

struct BridgeContext {
    FieldElem alpha;                 // normal basis generator of F_{q^n} over F_q
    std::vector<FieldElem> alphas;   // alpha_i = alpha^{[i r]}
};
BridgeContext make_bridge(const Tower& t);  // ParameterViolation

// E(c) = (c_0 alpha_0, ..., c_{n-1} alpha_{n-1})
Vec e_map(const Tower& t, const BridgeContext& ctx, const std::vector<u32>& c);
// L(f) = f_0 x + f_1 x^{[r]} + ...   (reduces f modulo x^n - 1 first)
LinPoly l_map(const Tower& t, const FqPoly& f);
// E(g) = g_0 alpha x + g_1 alpha^{[r]} x^{[r]} + ...
LinPoly e_op(const Tower& t, const BridgeContext& ctx, const FqPoly& g);

// ---------------------------------------------------------------------------
// F_q-left ideals

struct FqLeftIdealCode {
    std::vector<LinPoly> gens;            // residue classes
    std::vector<std::vector<u32>> basis;  // RREF over F_q of flattened codewords
    u32 dim() const { return (u32)basis.size(); }
};

FqLeftIdealCode fq_ideal_span(const Tower& t, const std::vector<LinPoly>& gens);
bool fq_ideal_contains(const Tower& t, const FqLeftIdealCode& c, const Vec& v);
std::vector<Vec> fq_ideal_codewords(const Tower& t, const FqLeftIdealCode& c);

// E(C) as a principal F_q-left ideal generated by E(g)
FqLeftIdealCode cyclic_to_skew(const Tower& t, const BridgeContext& ctx, const ClassicCyclicCode& c);

// the F_{q^n}-linear span of E(C): a q^r-cyclic code with minimal generator
// the monic associate of E(g)
SkewCyclicCode hat_code(const Tower& t, const BridgeContext& ctx, const ClassicCyclicCode& c);

}  // namespace skewcyc
