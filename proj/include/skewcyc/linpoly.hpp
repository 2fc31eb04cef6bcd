#pragma once

#include <limits>

#include "skewcyc/tower.hpp"

namespace skewcyc {

// Coefficient field tag; ordered by inclusion F_q < F_{q^m} < F_{q^{rn}}.
enum class CoeffField : int { base_q = 0, mid_m = 1, full = 2 };

inline CoeffField join(CoeffField a, CoeffField b) { return a < b ? b : a; }

// q^r-linearized polynomial F_0 x + F_1 x^{[r]} + ... + F_d x^{[dr]}.
// c[i] is the coefficient of x^{[i*r]}; trailing coefficient nonzero.
struct LinPoly {
    static constexpr int kNegInfDeg = std::numeric_limits<int>::min();

    std::vector<FieldElem> c;
    CoeffField tag = CoeffField::full;

    int degree() const { return c.empty() ? kNegInfDeg : (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty()) {
            bool z = true;
            for (u32 x : c.back().c)
                if (x) { z = false; break; }
            if (!z) break;
            c.pop_back();
        }
    }
    bool operator==(const LinPoly& o) const { return c == o.c; }
};

LinPoly lp_zero();
LinPoly lp_identity(const Tower& t);                                   // x
LinPoly lp_monomial(const Tower& t, const FieldElem& a, u32 i,
                    CoeffField tag = CoeffField::full);                // a x^{[i*r]}
LinPoly lp_modulus(const Tower& t);                                    // x^{[rn]} - x
LinPoly lp_from_coeffs(const Tower& t, std::vector<FieldElem> coeffs,
                       CoeffField tag = CoeffField::full);

bool coeffs_in_tag_field(const Tower& t, const LinPoly& f);
CoeffField infer_tag(const Tower& t, const LinPoly& f);

LinPoly lp_add(const Tower& t, const LinPoly& f, const LinPoly& g);
LinPoly lp_sub(const Tower& t, const LinPoly& f, const LinPoly& g);
LinPoly lp_neg(const Tower& t, const LinPoly& f);
LinPoly lp_scale(const Tower& t, const FieldElem& a, const LinPoly& f);  // (a x) (x) f

// symbolic product F(G(x))
LinPoly sym_mul(const Tower& t, const LinPoly& f, const LinPoly& g);
FieldElem evaluate(const Tower& t, const LinPoly& f, const FieldElem& beta);

struct DivModResult {
    LinPoly quot;
    LinPoly rem;
};
// F = Q (x) G + R with deg R < deg G
DivModResult right_divmod(const Tower& t, const LinPoly& f, const LinPoly& g);
// F = G (x) Q + R with deg R < deg G
DivModResult left_divmod(const Tower& t, const LinPoly& f, const LinPoly& g);

bool right_divides(const Tower& t, const LinPoly& g, const LinPoly& f);  // f = Q (x) g
bool left_divides(const Tower& t, const LinPoly& g, const LinPoly& f);   // f = g (x) Q

struct XgcdResult {
    LinPoly d;  // monic gcd
    LinPoly a;
    LinPoly b;
};
// d = a (x) F + b (x) G, d the monic right gcd
XgcdResult right_xgcd(const Tower& t, const LinPoly& f, const LinPoly& g);
// d = F (x) a + G (x) b, d the monic left gcd
XgcdResult left_xgcd(const Tower& t, const LinPoly& f, const LinPoly& g);

LinPoly right_gcd(const Tower& t, const LinPoly& f, const LinPoly& g);
// monic M of minimal degree with F and G both right-dividing M
LinPoly right_lcm(const Tower& t, const LinPoly& f, const LinPoly& g);

// monic associates: scale on the left (coefficients times a constant), or on
// the right (Frobenius-twisted scaling)
LinPoly monic_left(const Tower& t, const LinPoly& f);
LinPoly monic_right(const Tower& t, const LinPoly& f);

// class representative modulo x^{[rn]} - x: indices folded mod n, degree < n
LinPoly residue_reduce(const Tower& t, const LinPoly& f);
LinPoly sym_mul_mod(const Tower& t, const LinPoly& f, const LinPoly& g);

// gamma_r: coefficient vector of length n <-> residue class
LinPoly gamma(const Tower& t, const std::vector<FieldElem>& v,
              CoeffField tag = CoeffField::mid_m);
std::vector<FieldElem> gamma_inv(const Tower& t, const LinPoly& f);

}  // namespace skewcyc
