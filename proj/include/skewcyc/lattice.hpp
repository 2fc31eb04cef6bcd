#pragma once

#include "skewcyc/skewcode.hpp"

namespace skewcyc {

// lattice of q^r-cyclic codes; all arguments must come from the same tower
SkewCyclicCode meet(const Tower& t, const SkewCyclicCode& a, const SkewCyclicCode& b);  // intersection
SkewCyclicCode join(const Tower& t, const SkewCyclicCode& a, const SkewCyclicCode& b);  // sum

bool are_complementary(const Tower& t, const SkewCyclicCode& a, const SkewCyclicCode& b);

// idempotent generator E with (E) = C, E (x) E = E, from the two-sided Bezout
// identities of G and H; NotCoprimeBothSides when they do not exist.
LinPoly idempotent_generator(const Tower& t, const SkewCyclicCode& c);

// phi_a: coefficientwise power q^{rn-a}; ring morphism of the residue ring
LinPoly phi_map(const Tower& t, const LinPoly& f, u32 a);
Vec phi_map_vec(const Tower& t, const Vec& v, u32 a);

}  // namespace skewcyc
