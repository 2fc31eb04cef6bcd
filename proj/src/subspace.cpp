#include "skewcyc/subspace.hpp"

#include <algorithm>
#include <cassert>

namespace skewcyc {

namespace qdlin {

u32 rref(const Tower& t, std::vector<std::vector<FieldElem>>& rows, std::vector<u32>* pivots) {
    if (pivots) pivots->clear();
    if (rows.empty()) return 0;
    const size_t ncols = rows[0].size();
    u32 rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = rows.size();
        for (size_t i = rank; i < rows.size(); ++i)
            if (!t.is_zero(rows[i][col])) { piv = i; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        FieldElem ilc = t.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = t.mul(ilc, x);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || t.is_zero(rows[i][col])) continue;
            FieldElem c = rows[i][col];
            for (size_t j = 0; j < ncols; ++j)
                rows[i][j] = t.sub(rows[i][j], t.mul(c, rows[rank][j]));
        }
        if (pivots) pivots->push_back((u32)col);
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

u32 rank(const Tower& t, std::vector<std::vector<FieldElem>> rows) { return rref(t, rows); }

std::vector<std::vector<FieldElem>> kernel(const Tower& t, std::vector<std::vector<FieldElem>> rows) {
    if (rows.empty()) return {};
    const size_t ncols = rows[0].size();
    std::vector<u32> pivots;
    rref(t, rows, &pivots);
    std::vector<bool> is_piv(ncols, false);
    for (u32 c : pivots) is_piv[c] = true;
    std::vector<std::vector<FieldElem>> out;
    for (size_t c = 0; c < ncols; ++c) {
        if (is_piv[c]) continue;
        std::vector<FieldElem> v(ncols, t.zero());
        v[c] = t.one();
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = t.neg(rows[i][c]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace qdlin

Subspace zero_subspace(const Tower& t, u32 d) {
    return Subspace{d, t.big_degree() / d, {}};
}

Subspace full_subspace(const Tower& t, u32 d) {
    const u32 cols = t.big_degree() / d;
    Subspace s{d, cols, {}};
    for (u32 i = 0; i < cols; ++i) {
        std::vector<FieldElem> row(cols, t.zero());
        row[i] = t.one();
        s.rows.push_back(std::move(row));
    }
    return s;
}

Subspace span_of_coords(const Tower& t, u32 d, std::vector<std::vector<FieldElem>> coord_rows) {
    Subspace s{d, t.big_degree() / d, {}};
    qdlin::rref(t, coord_rows);
    s.rows = std::move(coord_rows);
    return s;
}

Subspace span_of(const Tower& t, u32 d, const std::vector<FieldElem>& gens) {
    std::vector<std::vector<FieldElem>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(t.subfield_coords(g, d));
    return span_of_coords(t, d, std::move(rows));
}

std::vector<FieldElem> coords_of(const Tower& t, const Subspace& s, const FieldElem& e) {
    (void)s;
    return t.subfield_coords(e, s.d);
}

std::vector<FieldElem> basis_elements(const Tower& t, const Subspace& s) {
    std::vector<FieldElem> out;
    out.reserve(s.rows.size());
    for (const auto& row : s.rows) out.push_back(t.from_subfield_coords(row, s.d));
    return out;
}

bool contains(const Tower& t, const Subspace& s, const FieldElem& e) {
    std::vector<FieldElem> v = t.subfield_coords(e, s.d);
    // reduce against the RREF rows
    for (const auto& row : s.rows) {
        size_t piv = 0;
        while (piv < row.size() && t.is_zero(row[piv])) ++piv;
        if (piv == row.size()) continue;
        if (t.is_zero(v[piv])) continue;
        FieldElem c = v[piv];
        for (size_t j = piv; j < v.size(); ++j) v[j] = t.sub(v[j], t.mul(c, row[j]));
    }
    for (const auto& x : v)
        if (!t.is_zero(x)) return false;
    return true;
}

bool contains_all(const Tower& t, const Subspace& outer, const Subspace& inner) {
    for (const auto& e : basis_elements(t, inner))
        if (!contains(t, outer, e)) return false;
    return true;
}

Subspace sum(const Tower& t, const Subspace& a, const Subspace& b) {
    if (a.d != b.d) fail("MixedScalars", "subspace sum over different scalar fields");
    std::vector<std::vector<FieldElem>> rows = a.rows;
    rows.insert(rows.end(), b.rows.begin(), b.rows.end());
    return span_of_coords(t, a.d, std::move(rows));
}

Subspace intersect(const Tower& t, const Subspace& a, const Subspace& b) {
    if (a.d != b.d) fail("MixedScalars", "subspace intersection over different scalar fields");
    const u32 cols = a.cols;
    // Zassenhaus: rows [u | u] for u in A, [v | 0] for v in B; after
    // elimination the rows with zero left half carry an intersection basis.
    std::vector<std::vector<FieldElem>> big;
    for (const auto& u : a.rows) {
        std::vector<FieldElem> row(2 * cols, t.zero());
        for (u32 j = 0; j < cols; ++j) row[j] = row[cols + j] = u[j];
        big.push_back(std::move(row));
    }
    for (const auto& v : b.rows) {
        std::vector<FieldElem> row(2 * cols, t.zero());
        for (u32 j = 0; j < cols; ++j) row[j] = v[j];
        big.push_back(std::move(row));
    }
    qdlin::rref(t, big);
    std::vector<std::vector<FieldElem>> inter;
    for (const auto& row : big) {
        bool left_zero = true;
        for (u32 j = 0; j < cols; ++j)
            if (!t.is_zero(row[j])) { left_zero = false; break; }
        if (!left_zero) continue;
        inter.emplace_back(row.begin() + cols, row.end());
    }
    return span_of_coords(t, a.d, std::move(inter));
}

Subspace frobenius_image(const Tower& t, const Subspace& s, long long a) {
    std::vector<FieldElem> imgs;
    for (const auto& e : basis_elements(t, s)) imgs.push_back(t.frobenius(e, a));
    return span_of(t, s.d, imgs);
}

Subspace extend(const Tower& t, const Subspace& s, const FieldElem& e) {
    std::vector<std::vector<FieldElem>> rows = s.rows;
    rows.push_back(t.subfield_coords(e, s.d));
    return span_of_coords(t, s.d, std::move(rows));
}

std::vector<FieldElem> all_elements(const Tower& t, const Subspace& s) {
    const auto& sub = t.subfield_elements(s.d);  // scalars, sorted
    u64 total = 1;
    for (u32 i = 0; i < s.dim(); ++i) {
        total *= sub.size();
        if (total > (1u << 20)) fail("EnumerationTooLarge", "subspace too large to enumerate");
    }
    auto base = basis_elements(t, s);
    std::vector<FieldElem> out;
    out.reserve(total);
    for (u64 code = 0; code < total; ++code) {
        FieldElem acc = t.zero();
        u64 c = code;
        for (u32 i = 0; i < s.dim(); ++i) {
            const FieldElem& lambda = sub[c % sub.size()];
            c /= sub.size();
            if (!t.is_zero(lambda)) acc = t.add(acc, t.mul(lambda, base[i]));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<FieldElem> complement_basis(const Tower& t, const Subspace& s) {
    std::vector<bool> is_piv(s.cols, false);
    for (const auto& row : s.rows) {
        size_t piv = 0;
        while (piv < row.size() && t.is_zero(row[piv])) ++piv;
        if (piv < row.size()) is_piv[piv] = true;
    }
    const auto& pb = t.subfield_power_basis(s.d);
    std::vector<FieldElem> out;
    for (u32 c = 0; c < s.cols; ++c)
        if (!is_piv[c]) out.push_back(pb[c]);
    return out;
}

std::string canonical_key(const Tower& t, const Subspace& s) {
    std::string key;
    key.reserve(8 + s.rows.size() * s.cols * 8);
    auto push_u64 = [&](u64 v) {
        for (int i = 0; i < 8; ++i) {
            key.push_back((char)(v & 0xff));
            v >>= 8;
        }
    };
    push_u64(((u64)s.d << 32) | s.dim());
    for (const auto& row : s.rows)
        for (const auto& e : row) push_u64(t.to_radix(e));
    return key;
}

}  // namespace skewcyc
