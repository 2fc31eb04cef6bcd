#pragma once

#include "skewcyc/linpoly.hpp"
#include "skewcyc/subspace.hpp"

namespace skewcyc {

// Z(F): the F_{q^r}-space of roots of F in F_{q^{rn}}. The zero class maps to
// the full space.
Subspace zero_space(const Tower& t, const LinPoly& f);

// monic q^r-polynomial of degree dim(T) vanishing exactly on T; coefficients
// live in F_{q^{rn}} in general.
LinPoly subspace_polynomial(const Tower& t, const Subspace& T);

// Galois-closure cross check: dimensions of the extension code cut out by the
// Moore parity matrix of a basis of T, over F_{q^{rn}} and intersected with
// F_{q^m}^n.
struct GaloisClosureCheck {
    u32 dim_big = 0;  // dim over F_{q^{rn}}
    u32 dim_sub = 0;  // dim of the intersection with F_{q^m}^n over F_{q^m}
    bool closed() const { return dim_big == dim_sub; }
};
GaloisClosureCheck galois_closure_check(const Tower& t, const Subspace& T);

// primary test: every coefficient of subspace_polynomial(T) lies in F_{q^m}
bool is_root_space_over_fqm(const Tower& t, const Subspace& T);

// unique monic q^r-polynomial over F_{q^m} of minimal degree annihilating beta
LinPoly minimal_qr_polynomial(const Tower& t, const FieldElem& beta);

// roots of the minimal q^r-polynomial of beta
Subspace cyclotomic_space(const Tower& t, const FieldElem& beta);

}  // namespace skewcyc
