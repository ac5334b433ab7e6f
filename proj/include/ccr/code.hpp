#ifndef CCR_CODE_HPP
#define CCR_CODE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccr/linalg.hpp"
#include "ccr/poly.hpp"

namespace ccr {

// Degrees of the 2k tower ideals C_1..C_2k of a cyclic code, together with
// their monic generators. Degenerate layers use the conventions
// g = x^n - 1 (zero ideal, t = n) and g = 1 (full ideal, t = 0).
struct TowerProfile {
    int n = 0;
    std::vector<FpPoly> g;   // g[i] = g_{i+1}
    std::vector<int> t;      // t[i] = deg g_{i+1}
    std::vector<int> tprime; // tprime[i] = t'_{i+1} = min(t_{i+2}, t_{k+i+1}), size k-1
};

class SpanBasis;

// The canonical generators A_1..A_2k, with tail degrees below the next tower
// degree. Tail polynomials are recovered from the coefficient slots of A.
struct GeneratorSet {
    RingParams rp;
    int n = 0;
    TowerProfile tower;
    std::vector<RingPoly> A;  // A[i] = A_{i+1}, size 2k

    // tail polynomial g_{ij} in paper indexing, 1 <= i <= 2k, i <= j <= 2k-1
    FpPoly tail(int i, int j) const;
    // leading g_i of A_i (from the tower)
    const FpPoly& lead(int i) const { return tower.g[i - 1]; }
};

struct ConditionResult {
    int condition;  // numbered as in the structure theorem's proof (2..9)
    std::string what;
    bool pass;
};

struct StructureReport {
    std::vector<ConditionResult> results;
    bool all_pass() const;
};

// A cyclic code of length n over R, held as the reduced F_p row basis of its
// image in F_p^{2kn}. Rows are codewords flattened coordinate-major: ambient
// index = coordinate * 2k + monomial slot.
class SpanBasis {
   public:
    SpanBasis(const RingParams& rp, int n);

    const RingParams& params() const { return rp_; }
    int n() const { return n_; }
    int ambient_dim() const { return n_ * rp_.slots(); }
    int dimension() const { return basis_.rank(); }
    const RrefBasis& basis() const { return basis_; }

    std::vector<int> flatten(const RingPoly& f) const;
    RingPoly unflatten(const std::vector<int>& v) const;
    RingPoly row_poly(int r) const { return unflatten(basis_.rows()[r]); }

    bool contains(const RingPoly& f) const { return basis_.contains(flatten(f)); }
    bool contains_vec(const std::vector<int>& v) const { return basis_.contains(v); }
    bool operator==(const SpanBasis& o) const { return rp_ == o.rp_ && n_ == o.n_ && basis_ == o.basis_; }

    // multiplication by x / u / v on a flattened codeword
    std::vector<int> act_x(const std::vector<int>& v) const;
    std::vector<int> act_u(const std::vector<int>& v) const;
    std::vector<int> act_v(const std::vector<int>& v) const;
    // true iff the row space is closed under all three actions
    bool is_closed() const;

   private:
    RingParams rp_;
    int n_;
    RrefBasis basis_;
    friend SpanBasis span_closure(const RingParams&, int, const std::vector<RingPoly>&);
    friend SpanBasis span_closure_vectors(const RingParams&, int, const std::vector<std::vector<int>>&);
};

// Smallest F_p-row space containing gens and closed under x, u, v.
SpanBasis span_closure(const RingParams& rp, int n, const std::vector<RingPoly>& gens);
SpanBasis span_closure_vectors(const RingParams& rp, int n, const std::vector<std::vector<int>>& seeds);

TowerProfile tower(const SpanBasis& C);

GeneratorSet canonical_generators(const SpanBasis& C);

StructureReport verify_structure(const GeneratorSet& G);

// free-module test: flag iff g_1 = g_2k; witness is A_1 for nonzero free codes
std::pair<bool, std::optional<RingPoly>> is_free(const SpanBasis& C);

// two-generator form for gcd(n, p) = 1
std::pair<RingPoly, RingPoly> coprime_form(const SpanBasis& C);

// write a codeword as sum q_i(x) A_i; throws std::domain_error if c is not in
// the code spanned by G
std::vector<FpPoly> express_in_generators(const RingPoly& c, const GeneratorSet& G);

}  // namespace ccr

#endif
