#pragma once

#include <string>

#include "skewcyc/tower.hpp"

namespace skewcyc {

// F_{q^d}-linear subspace of F_{q^{rn}} in canonical form: the rows are the
// reduced row echelon basis of the coordinate vectors over F_{q^d} w.r.t. the
// tower's power basis. Two subspaces are equal iff their matrices coincide.
struct Subspace {
    u32 d = 1;
    u32 cols = 0;  // rn/d
    std::vector<std::vector<FieldElem>> rows;

    u32 dim() const { return (u32)rows.size(); }
    bool operator==(const Subspace&) const = default;
};

// Linear algebra over F_{q^d} on rows of FieldElems (entries must lie in the
// scalar subfield; the arithmetic itself is big-field arithmetic).
namespace qdlin {
u32 rref(const Tower& t, std::vector<std::vector<FieldElem>>& rows, std::vector<u32>* pivots = nullptr);
u32 rank(const Tower& t, std::vector<std::vector<FieldElem>> rows);
// basis of { x : rows * x = 0 }
std::vector<std::vector<FieldElem>> kernel(const Tower& t, std::vector<std::vector<FieldElem>> rows);
}  // namespace qdlin

Subspace zero_subspace(const Tower& t, u32 d);
Subspace full_subspace(const Tower& t, u32 d);
Subspace span_of(const Tower& t, u32 d, const std::vector<FieldElem>& gens);
Subspace span_of_coords(const Tower& t, u32 d, std::vector<std::vector<FieldElem>> coord_rows);

std::vector<FieldElem> coords_of(const Tower& t, const Subspace& s, const FieldElem& e);  // raw coords
std::vector<FieldElem> basis_elements(const Tower& t, const Subspace& s);
bool contains(const Tower& t, const Subspace& s, const FieldElem& e);
bool contains_all(const Tower& t, const Subspace& outer, const Subspace& inner);

Subspace sum(const Tower& t, const Subspace& a, const Subspace& b);
Subspace intersect(const Tower& t, const Subspace& a, const Subspace& b);
// image under x -> x^{q^a}
Subspace frobenius_image(const Tower& t, const Subspace& s, long long a);
// T + <e>
Subspace extend(const Tower& t, const Subspace& s, const FieldElem& e);

// all q^{d dim} elements; throws EnumerationTooLarge beyond ~2^20
std::vector<FieldElem> all_elements(const Tower& t, const Subspace& s);
// basis of a complement: the power-basis elements at the non-pivot columns
std::vector<FieldElem> complement_basis(const Tower& t, const Subspace& s);

// canonical byte key (memoization / hashing)
std::string canonical_key(const Tower& t, const Subspace& s);

}  // namespace skewcyc
