#pragma once

#include "skewcyc/skewcode.hpp"

namespace skewcyc {

// generalized Gabidulin code of dimension k with the Moore parity check built
// from beta; beta entries must be F_q-independent elements of F_{q^m} and the
// length may be any n_len <= m with gcd(r, m) = 1
LinearCode gabidulin_code(const Tower& t, const std::vector<FieldElem>& beta, u32 k);

// q^r-cyclic code whose root space is the sum of the cyclotomic spaces of
// alpha, alpha^{[r]}, ..., alpha^{[(delta-2)r]}; designed distance delta
SkewCyclicCode rank_bch_code(const Tower& t, const FieldElem& alpha, u32 delta);

// with m = n, gcd(r, n) = 1 and alpha generating a normal basis, the rank-BCH
// code of designed distance delta equals Gab_{n-delta+1, r}(alpha, ..., alpha^{[(n-1)r]})
bool bch_equals_gabidulin_check(const Tower& t, const FieldElem& alpha, u32 delta);

// F_q-independent elements of F_{q^n} are F_{q^r}-independent when gcd(r,n)=1;
// returns (not F_q-independent) or F_{q^r}-independent
bool independence_lift_check(const Tower& t, const std::vector<FieldElem>& elems);

}  // namespace skewcyc
