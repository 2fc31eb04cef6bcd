#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewcyc {

// Error with a stable machine-readable code ("DivisibilityViolated", ...).
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] void fail(const std::string& code, const std::string& msg);

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// The base field F_q, q = p^s. Elements are indices in [0, q) packing the
// coefficient vector over F_p in radix p (low degree = least significant).
// Multiplication runs through log/antilog tables over a fixed generator.
class SmallField {
public:
    SmallField(u32 p, u32 s);

    u32 p() const { return p_; }
    u32 s() const { return s_; }
    u32 q() const { return q_; }
    // Monic irreducible of degree s over F_p defining F_q; the smallest one
    // when coefficient strings are read as radix-p integers (low degree least
    // significant). Length s+1, low degree first.
    const std::vector<u32>& base_poly() const { return base_poly_; }
    u32 generator() const { return gen_; }

    u32 add(u32 a, u32 b) const;
    u32 sub(u32 a, u32 b) const;
    u32 neg(u32 a) const;
    u32 mul(u32 a, u32 b) const;
    u32 inv(u32 a) const;
    u32 pow(u32 a, u64 e) const;

private:
    u32 p_, s_, q_, gen_;
    std::vector<u32> base_poly_;
    std::vector<u32> log_;  // log_[a] for a in [1, q)
    std::vector<u32> exp_;  // exp_[k] = gen^k, k in [0, q-1)
};

struct TowerParams {
    u32 p = 2;
    u32 s = 1;
    u32 m = 1;
    u32 r = 1;
    u32 n = 1;
};

// Element of F_{q^{rn}}: coordinates over F_q relative to the power basis of
// the root of ext_poly. Length rn, entry i is an F_q index.
struct FieldElem {
    std::vector<u32> c;
    bool operator==(const FieldElem&) const = default;
    bool operator<(const FieldElem& o) const { return c < o.c; }
};

// The four-field tower F_q <= {F_{q^r}, F_{q^m}} <= F_{q^{rn}} in a single
// representation: every element lives in F_{q^{rn}}, subfields are cut out by
// Frobenius fixed-point tests. Immutable after construction; lazy caches are
// mutex-guarded so concurrent readers are safe.
class Tower {
public:
    static Tower build(const TowerParams& params);

    const TowerParams& params() const { return params_; }
    const SmallField& fq() const { return fq_; }
    u32 big_degree() const { return D_; }  // rn
    u128 field_size() const { return size_; }
    // Monic irreducible of degree rn over F_q defining F_{q^{rn}}; smallest
    // in the same radix ordering as base_poly. Length rn+1, low degree first.
    const std::vector<u32>& ext_poly() const { return ext_poly_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_fq(u32 a) const;    // constant a (element of F_q)
    FieldElem theta() const;           // the root of ext_poly
    FieldElem from_radix(u64 code) const;
    u64 to_radix(const FieldElem& e) const;
    bool is_zero(const FieldElem& e) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    // allocation-free kernels for hot loops: acc += a, out = a*b with a
    // caller-provided convolution scratch (resized on first use)
    void add_into(FieldElem& acc, const FieldElem& a) const;
    void mul_into(const FieldElem& a, const FieldElem& b, FieldElem& out,
                  std::vector<u32>& scratch) const;
    FieldElem scalar_mul(u32 a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;  // DivisionByZero on 0
    FieldElem pow(const FieldElem& a, u128 e) const;

    // e |-> e^{q^j}; j taken modulo rn, negative j allowed.
    FieldElem frobenius(const FieldElem& e, long long j) const;

    // true iff e^{q^d} = e. Requires d | rn.
    bool in_subfield(const FieldElem& e, u32 d) const;

    // Subfield degrees with stored coordinate bases: {1, r, m} (deduplicated).
    const std::vector<u32>& stored_subfield_degrees() const { return stored_ds_; }
    // Coordinates of e over F_{q^d} w.r.t. the basis 1, zeta, ..., zeta^{rn/d-1};
    // entries are elements of F_{q^d} (represented inside the big field).
    std::vector<FieldElem> subfield_coords(const FieldElem& e, u32 d) const;
    FieldElem from_subfield_coords(const std::vector<FieldElem>& coords, u32 d) const;
    // F_q-basis of the subfield F_{q^d} (kernel basis of Frobenius^d - id).
    const std::vector<FieldElem>& subfield_fq_basis(u32 d) const;
    // The stored basis of F_{q^{rn}} over F_{q^d}: 1, zeta, ..., zeta^{rn/d-1}.
    const std::vector<FieldElem>& subfield_power_basis(u32 d) const;
    // All q^d elements of F_{q^d}, sorted by radix code. Cached; only for
    // subfields small enough to enumerate.
    const std::vector<FieldElem>& subfield_elements(u32 d) const;

    // The fixed primitive element zeta: smallest element (radix order) that
    // generates the multiplicative group. Its powers give the stored subfield
    // bases and the "a^k" text notation.
    const FieldElem& primitive_element() const { return zeta_; }
    bool primitive_is_generator() const { return zeta_is_generator_; }

    // First alpha in radix order whose Frobenius orbit over F_{q^d} has full
    // Moore rank. Cached per d. Requires d | rn.
    FieldElem find_normal_basis(u32 d) const;
    // exact search for the same element: lexicographic minimum over the
    // complement of the maximal Frobenius-submodule kernels (no scanning)
    FieldElem find_normal_basis_lexmin(u32 d) const;

    // Discrete log base zeta. Available only when the field is small enough
    // for a log table (|F| <= 2^20) and zeta is a multiplicative generator.
    std::optional<u64> discrete_log(const FieldElem& e) const;
    bool power_notation_available() const;

    // "q=p^s; m=..; r=..; n=..; base_poly=..; ext_poly=.." with coefficients
    // listed low-degree-first as comma-separated radix-p integer codes.
    std::string header() const;

private:
    Tower(TowerParams params, SmallField fq);

    FieldElem frobenius_once(const FieldElem& e, u32 j) const;  // via matrix j
    std::vector<FieldElem> compute_subfield_fq_basis(u32 d) const;

    TowerParams params_;
    SmallField fq_;
    u32 D_;
    u128 size_;
    std::vector<u32> ext_poly_;
    std::vector<std::vector<u32>> red_;   // red_[i] = theta^{rn+i}, i < rn-1
    std::vector<std::vector<u32>> frob_;  // frob_[j]: rn x rn row-major, e -> e^{q^j}
    FieldElem zeta_;
    bool zeta_is_generator_ = false;

    struct SubfieldData {
        std::vector<FieldElem> kappa;      // F_q-basis of F_{q^d}
        std::vector<FieldElem> zeta_pows;  // 1, zeta, ..., zeta^{rn/d - 1}
        std::vector<u32> coord_mat_inv;    // rn x rn over F_q, row-major
    };
    std::map<u32, SubfieldData> sub_;
    std::vector<u32> stored_ds_;

    // lazy caches behind one mutex so the tower stays movable and safe for
    // concurrent readers
    struct Caches {
        std::mutex mu;
        std::map<u32, FieldElem> normal;
        std::map<u32, std::vector<FieldElem>> subfield_elems;
        std::vector<u32> log_table;  // indexed by radix code
        bool log_built = false;
    };
    std::unique_ptr<Caches> caches_;
};

// Helpers shared by modules doing F_q-linear algebra on raw coordinate rows.
namespace fqlin {
// Reduced row echelon form in place; returns rank. Rows are F_q index vectors.
// Zero rows are dropped. If pivots != nullptr it receives the pivot columns.
u32 rref(const SmallField& fq, std::vector<std::vector<u32>>& rows, std::vector<u32>* pivots = nullptr);
u32 rank(const SmallField& fq, std::vector<std::vector<u32>> rows);
}  // namespace fqlin

}  // namespace skewcyc
