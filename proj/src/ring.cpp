#include "ccr/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace ccr {

RingParams::RingParams(int p_, int k_) : p(p_), k(k_) {
    if (!fp::is_prime(p)) throw std::invalid_argument("RingParams: p must be prime");
    if (k < 1) throw std::invalid_argument("RingParams: k must be >= 1");
}

RingElement::RingElement(const RingParams& rp, std::vector<int> coeffs) : rp_(rp), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != rp.slots())
        throw std::invalid_argument("RingElement: expected 2k coefficients");
    for (int& a : c_) a = ((a % rp_.p) + rp_.p) % rp_.p;
}

RingElement RingElement::one(const RingParams& rp) { return scalar(rp, 1); }

RingElement RingElement::scalar(const RingParams& rp, int a) {
    RingElement r(rp);
    r.set(0, 0, a);
    return r;
}

RingElement RingElement::monomial(const RingParams& rp, int ui, int vj, int a) {
    if (ui < 0 || ui >= rp.k || vj < 0 || vj > 1)
        throw std::invalid_argument("RingElement::monomial: exponent out of range");
    RingElement r(rp);
    r.set(ui, vj, a);
    return r;
}

bool RingElement::is_zero() const {
    for (int a : c_)
        if (a != 0) return false;
    return true;
}

std::string RingElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= 1; ++j)
        for (int i = 0; i < rp_.k; ++i) {
            int a = at(i, j);
            if (a == 0) continue;
            if (!first) os << "+";
            first = false;
            bool mono = i > 0 || j > 0;
            if (a != 1 || !mono) os << a;
            if (a != 1 && mono) os << "*";
            if (i == 1) os << "u";
            if (i > 1) os << "u^" << i;
            if (j == 1) {
                if (i > 0) os << "*";
                os << "v";
            }
        }
    if (first) os << "0";
    return os.str();
}

static void check_params(const RingElement& a, const RingElement& b) {
    if (!(a.params() == b.params()))
        throw std::invalid_argument("ring op: mismatched RingParams");
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
    check_params(a, b);
    const RingParams& rp = a.params();
    RingElement r(rp);
    for (int s = 0; s < rp.slots(); ++s)
        r.set(s % rp.k, s / rp.k, fp::add(a.coeffs()[s], b.coeffs()[s], rp.p));
    return r;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) { return ring_add(a, ring_neg(b)); }

RingElement ring_neg(const RingElement& a) {
    const RingParams& rp = a.params();
    RingElement r(rp);
    for (int s = 0; s < rp.slots(); ++s)
        r.set(s % rp.k, s / rp.k, fp::neg(a.coeffs()[s], rp.p));
    return r;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    check_params(a, b);
    const RingParams& rp = a.params();
    RingElement r(rp);
    for (int j1 = 0; j1 <= 1; ++j1)
        for (int i1 = 0; i1 < rp.k; ++i1) {
            int ca = a.at(i1, j1);
            if (ca == 0) continue;
            for (int j2 = 0; j2 <= 1; ++j2) {
                if (j1 + j2 > 1) continue;  // v^2 = 0
                for (int i2 = 0; i2 < rp.k; ++i2) {
                    if (i1 + i2 >= rp.k) continue;  // u^k = 0
                    int cb = b.at(i2, j2);
                    if (cb == 0) continue;
                    int i = i1 + i2, j = j1 + j2;
                    r.set(i, j, fp::add(r.at(i, j), fp::mul(ca, cb, rp.p), rp.p));
                }
            }
        }
    return r;
}

bool ring_is_unit(const RingElement& a) { return a.at(0, 0) != 0; }

RingElement ring_inverse(const RingElement& a) {
    if (!ring_is_unit(a)) throw std::domain_error("ring_inverse: element is not a unit");
    const RingParams& rp = a.params();
    // a = c(1 - m) with m nilpotent; a^{-1} = c^{-1}(1 + m + m^2 + ...),
    // the series stops since m^{2k} = 0.
    int cinv = fp::inv(a.at(0, 0), rp.p);
    RingElement m = ring_sub(RingElement::one(rp), [&] {
        RingElement t(rp);
        for (int s = 0; s < rp.slots(); ++s)
            t.set(s % rp.k, s / rp.k, fp::mul(a.coeffs()[s], cinv, rp.p));
        return t;
    }());
    RingElement sum = RingElement::one(rp);
    RingElement pw = m;
    while (!pw.is_zero()) {
        sum = ring_add(sum, pw);
        pw = ring_mul(pw, m);
    }
    RingElement r(rp);
    for (int s = 0; s < rp.slots(); ++s)
        r.set(s % rp.k, s / rp.k, fp::mul(sum.coeffs()[s], cinv, rp.p));
    return r;
}

}  // namespace ccr
