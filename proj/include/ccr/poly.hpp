#ifndef CCR_POLY_HPP
#define CCR_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccr/ring.hpp"

namespace ccr {

// Dense polynomial over F_p. Normalized: no trailing zero above the degree.
// The zero polynomial has an empty coefficient vector and no degree.
class FpPoly {
   public:
    FpPoly() = default;
    explicit FpPoly(int p) : p_(p) {}
    FpPoly(int p, std::vector<int> coeffs);

    static FpPoly zero(int p) { return FpPoly(p); }
    static FpPoly one(int p) { return FpPoly(p, {1}); }
    static FpPoly monomial(int p, int deg, int a = 1);
    // x^n - 1
    static FpPoly xn_minus_1(int p, int n);

    int p() const { return p_; }
    const std::vector<int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const;
    int coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    int leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    bool operator==(const FpPoly&) const = default;
    std::string to_string(const std::string& var = "x") const;

   private:
    int p_ = 2;
    std::vector<int> c_;
    void normalize();
};

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_neg(const FpPoly& a);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpPoly& a, int s);
FpPoly fp_monic(const FpPoly& a);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
bool fp_divides(const FpPoly& a, const FpPoly& b);  // a | b (zero divisible by anything)
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);
FpPoly fp_pow_mod(const FpPoly& base, long long e, const FpPoly& mod);
FpPoly fp_mod_xn1(const FpPoly& a, int n);  // reduce mod x^n - 1

// Complete factorization of x^n - 1 over F_p: (irreducible, multiplicity) pairs,
// ordered by degree then lexicographically by coefficients.
std::vector<std::pair<FpPoly, int>> factor_xn_minus_1(int n, int p);

// Dense polynomial over the ring R, coefficientwise in x. Normalized on the
// literal last nonzero coefficient; the paper-degree is deg of the image under
// the residue map mu (all nilpotent parts dropped).
class RingPoly {
   public:
    RingPoly() = default;
    explicit RingPoly(const RingParams& rp) : rp_(rp) {}
    RingPoly(const RingParams& rp, std::vector<RingElement> coeffs);

    static RingPoly zero(const RingParams& rp) { return RingPoly(rp); }
    static RingPoly one(const RingParams& rp);
    // lift an F_p polynomial into the u^ui v^vj layer
    static RingPoly lift(const RingParams& rp, const FpPoly& f, int ui = 0, int vj = 0);

    const RingParams& params() const { return rp_; }
    const std::vector<RingElement>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<int> literal_degree() const;
    std::optional<int> paper_degree() const;  // deg(mu(f))
    RingElement coeff(int i) const;
    // the F_p polynomial sitting in slot u^ui v^vj
    FpPoly slot_poly(int ui, int vj) const;
    FpPoly mu() const { return slot_poly(0, 0); }

    bool operator==(const RingPoly&) const = default;
    std::string to_string() const;

   private:
    RingParams rp_;
    std::vector<RingElement> c_;
    void normalize();
};

RingPoly rp_add(const RingPoly& a, const RingPoly& b);
RingPoly rp_sub(const RingPoly& a, const RingPoly& b);
RingPoly rp_neg(const RingPoly& a);
RingPoly rp_mul(const RingPoly& a, const RingPoly& b);
RingPoly rp_scale(const RingPoly& a, const RingElement& s);
RingPoly rp_mul_fp(const RingPoly& a, const FpPoly& f);
RingPoly rp_mod_xn1(const RingPoly& a, int n);
RingPoly rp_xn_minus_1(const RingParams& rp, int n);

bool poly_is_regular(const RingPoly& f);
// Division with remainder in R[x]: f = g*q + r, paper-degree(r) < paper-degree(g).
// Requires g regular.
std::pair<RingPoly, RingPoly> poly_divmod(const RingPoly& f, const RingPoly& g);

// Classification of the p-adic expansion of m with l digits (Definition-style:
// zero / non-zero / full expansion, with the run length q of nonzero high digits).
struct PadicProfile {
    enum class Kind { ZeroExpansion, NonZeroExpansion, FullExpansion };
    long long m;
    std::vector<int> digits;  // digits[i] = b_i (b_0 lowest)
    Kind kind;
    int q;  // run length of nonzero digits from the top; q = l for full expansions
};

PadicProfile padic_classify(long long m, int p, int l);

}  // namespace ccr

#endif
