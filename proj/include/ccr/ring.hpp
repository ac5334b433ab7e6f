#ifndef CCR_RING_HPP
#define CCR_RING_HPP

#include <string>
#include <vector>

#include "ccr/fp.hpp"

namespace ccr {

// Parameters of the local ring F_p[u,v]/<u^k, v^2, uv-vu>.
struct RingParams {
    int p = 2;
    int k = 1;

    RingParams() = default;
    RingParams(int p_, int k_);

    bool operator==(const RingParams&) const = default;

    // number of monomial slots u^i v^j, 0 <= i < k, j in {0,1}
    int slots() const { return 2 * k; }
};

// One ring element, stored as 2k residues in the fixed monomial order
// 1, u, ..., u^{k-1}, v, uv, ..., u^{k-1}v.
class RingElement {
   public:
    RingElement() = default;
    explicit RingElement(const RingParams& rp) : rp_(rp), c_(rp.slots(), 0) {}
    RingElement(const RingParams& rp, std::vector<int> coeffs);

    static RingElement zero(const RingParams& rp) { return RingElement(rp); }
    static RingElement one(const RingParams& rp);
    static RingElement scalar(const RingParams& rp, int a);
    // the monomial u^i v^j
    static RingElement monomial(const RingParams& rp, int ui, int vj, int a = 1);

    const RingParams& params() const { return rp_; }
    const std::vector<int>& coeffs() const { return c_; }

    // coefficient of u^i v^j
    int at(int ui, int vj) const { return c_[vj * rp_.k + ui]; }
    void set(int ui, int vj, int a) { c_[vj * rp_.k + ui] = ((a % rp_.p) + rp_.p) % rp_.p; }

    bool is_zero() const;
    bool operator==(const RingElement&) const = default;

    std::string to_string() const;

   private:
    RingParams rp_;
    std::vector<int> c_;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_mul(const RingElement& a, const RingElement& b);
bool ring_is_unit(const RingElement& a);
RingElement ring_inverse(const RingElement& a);

}  // namespace ccr

#endif
