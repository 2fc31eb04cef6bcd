#pragma once

#include "skewcyc/enumerate.hpp"
#include "skewcyc/lattice.hpp"

namespace skewcyc {

// dim over F_q of the span of the codeword's coordinates. Computed by the two
// textbook routes (coordinate span and basis expansion), asserted equal.
u32 rank_weight(const Tower& t, const Vec& v);

struct MinDistanceOptions {
    u64 cap = 1u << 20;
    int jobs = 0;  // 0: library default; 1 forces the serial reference
};
u32 min_rank_distance(const Tower& t, const Mat& gen, const MinDistanceOptions& opt = {});
u32 min_rank_distance(const Tower& t, const SkewCyclicCode& c, const MinDistanceOptions& opt = {});

// ---------------------------------------------------------------------------
// certificates (designed-distance semantics, checked exactly as stated)

struct BchCertificate {
    FieldElem alpha;
    u32 delta = 1;  // chain alpha, alpha^{[r]}, ..., alpha^{[(delta-2)r]} in T
};
bool verify_bch_certificate(const Tower& t, const Subspace& T, const BchCertificate& c);

struct HTCertificate {
    FieldElem alpha;
    u32 c = 1;
    u32 delta = 1;
    u32 s = 0;
    u32 value() const { return delta + s; }
};
// grid {alpha^{[(i+jc)r]} : i <= delta-2, j <= s} inside T, independent over
// F_{q^r}, with delta+s <= min(m,n) and gcd(c,n) < delta. (delta,s) = (1,0)
// is accepted as the vacuous certificate.
bool verify_ht_certificate(const Tower& t, const Subspace& T, const HTCertificate& c);

struct SearchBudget {
    u64 max_candidates = 4096;  // per-level candidate tests
    u64 max_combos = 4096;      // (delta, s, c) combinations in the HT search
    u64 max_nodes = 100000;     // BFS expansions
    u64 max_supersets = 4096;   // root-space superset enumeration
};

BchCertificate rank_bch_bound(const Tower& t, const Subspace& T, const SearchBudget& budget = {});
HTCertificate rank_ht_bound(const Tower& t, const Subspace& T, const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// independent sequences with re-verifiable provenance

struct SequenceStep {
    char rule = 'a';  // 'a': I_i = I_from + <beta>, 'b': I_i = I_from^{[b r]}
    u32 from = 0;
    FieldElem beta;  // rule a
    u32 b = 0;       // rule b
};

struct IndependentSequence {
    std::vector<Subspace> spaces;     // spaces[0] = {0}
    std::vector<SequenceStep> steps;  // steps[i-1] produced spaces[i]
    u32 final_dim() const { return spaces.empty() ? 0 : spaces.back().dim(); }
};

bool verify_independent_sequence(const Tower& t, const IndependentSequence& seq, const Subspace& S,
                                 std::string* diagnostic = nullptr);

// the constructive conversion: completes the certificate to a maximal one
// w.r.t. S, then builds the two-stage sequence ending in a space of dimension
// (completed) delta + s. CertificateInvalid if the certificate does not hold
// for S or completion exceeds min(m, n).
IndependentSequence ht_to_independent_sequence(const Tower& t, HTCertificate cert, const Subspace& S);

// ---------------------------------------------------------------------------
// shift bound

struct ShiftWeightResult {
    u32 value = 0;
    IndependentSequence witness;
};

// per-polynomial bound: max dim of a subspace independent w.r.t. S found by a
// budgeted, deterministic BFS (valid for wt_R(F) whenever S = Z(F)).
ShiftWeightResult shift_bound_weight(const Tower& t, const Subspace& S, const SearchBudget& budget = {},
                                     const std::vector<FieldElem>& extra_pool = {},
                                     const std::vector<IndependentSequence>& seeds = {});

// proper root spaces containing T (closure of T under adding cyclotomic
// spaces); the possible zero sets of nonzero codewords of rho^{-1}(T).
std::vector<Subspace> root_space_supersets(const Tower& t, const Subspace& T,
                                           const SearchBudget& budget = {});

struct ShiftBoundResult {
    u32 value = 0;
    IndependentSequence witness;  // witness for the binding superset
    Subspace binding_space;       // the S the witness verifies against
    bool zero_code = false;       // T was the full space: nothing to bound
};

// code-level shift bound: min over all proper root-space supersets T' of T of
// the per-space search, each seeded with the certificate-derived sequences.
// This is a valid lower bound on d_R(rho^{-1}(T)).
ShiftBoundResult shift_bound(const Tower& t, const Subspace& T, const SearchBudget& budget = {});

// all three bounds with the same superset sweep. bch/ht "sound" values are
// the sequence-backed code-level bounds (min over supersets of the dimension
// reached from the respective certificate); they satisfy
//   bch_sound <= ht_sound <= shift <= d_R <= n - k + 1.
// The per-T certificates carry the designed values alongside.
struct CodeBoundReport {
    bool zero_code = false;
    u32 bch_sound = 0;
    u32 ht_sound = 0;
    u32 shift = 0;
    BchCertificate bch_cert;  // designed-value certificate for T
    HTCertificate ht_cert;
    ShiftBoundResult shift_detail;
};
CodeBoundReport code_bounds(const Tower& t, const Subspace& T, const SearchBudget& budget = {});

}  // namespace skewcyc
