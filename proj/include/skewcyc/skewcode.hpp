#pragma once

#include "skewcyc/rootspace.hpp"

namespace skewcyc {

using Vec = std::vector<FieldElem>;  // codeword over F_{q^m}, length n
using Mat = std::vector<Vec>;

// q^r-cyclic code as a left ideal: minimal generator G, check polynomial H
// with G (x) H = H (x) G = x^{[rn]} - x, dimension k = n - deg G.
struct SkewCyclicCode {
    LinPoly G;
    LinPoly H;
    u32 k = 0;
    bool is_zero_code() const { return k == 0; }
};

// general F_{q^m}-linear code, stored with a canonical (RREF) generator matrix
struct LinearCode {
    Mat gen;
    u32 k = 0;
    bool operator==(const LinearCode&) const = default;
};

LinearCode linear_code_from_rows(const Tower& t, Mat rows);

Vec sigma_shift(const Tower& t, const Vec& v);

bool is_skew_cyclic(const Tower& t, const std::vector<Vec>& finite_set);
bool is_skew_cyclic(const Tower& t, const LinearCode& c);

SkewCyclicCode code_from_generator(const Tower& t, const LinPoly& gen);
SkewCyclicCode code_from_generators(const Tower& t, const std::vector<LinPoly>& gens);
SkewCyclicCode whole_space_code(const Tower& t);
SkewCyclicCode zero_code(const Tower& t);

// banded matrices of the generator/check polynomials
Mat generator_matrix(const Tower& t, const SkewCyclicCode& c);  // k x n
Mat parity_matrix(const Tower& t, const SkewCyclicCode& c);     // (n-k) x n

SkewCyclicCode dual(const Tower& t, const SkewCyclicCode& c);

bool code_contains(const Tower& t, const SkewCyclicCode& c, const LinPoly& f);
bool code_contains(const Tower& t, const SkewCyclicCode& c, const Vec& v);

Subspace rho(const Tower& t, const SkewCyclicCode& c);
SkewCyclicCode rho_inverse(const Tower& t, const Subspace& T);  // NotARootSpace

// Moore matrix of the given F_{q^r}-independent elements: row i is
// (b_i, b_i^{[r]}, ..., b_i^{[(n-1)r]}); a parity check of the code over
// F_{q^{rn}}.
Mat moore_parity_matrix(const Tower& t, const std::vector<FieldElem>& basis);
// right kernel of a Moore matrix intersected with F_{q^m}^n, as an RREF basis
Mat moore_kernel_intersection(const Tower& t, const Mat& moore);

// length embedding: N | n, repeats the vector n/N times
Vec psi_embed(const Tower& t, const Vec& c);

// all q^{mk} codewords of a generator matrix; EnumerationTooLarge beyond 2^20
std::vector<Vec> all_codewords(const Tower& t, const Mat& gen);

// row space helpers over F_{q^m}
Mat rowspace_rref(const Tower& t, Mat rows);
bool rowspace_contains(const Tower& t, const Mat& rref_rows, const Vec& v);
bool rowspace_equal(const Tower& t, const Mat& a, const Mat& b);

}  // namespace skewcyc
