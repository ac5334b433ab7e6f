#include "ccr/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ccr {

// ---------------------------------------------------------------------------
// FpPoly

FpPoly::FpPoly(int p, std::vector<int> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (int& a : c_) a = ((a % p_) + p_) % p_;
    normalize();
}

void FpPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monomial(int p, int deg, int a) {
    std::vector<int> c(deg + 1, 0);
    c[deg] = a;
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::xn_minus_1(int p, int n) {
    std::vector<int> c(n + 1, 0);
    c[0] = p - 1;
    c[n] = 1;
    return FpPoly(p, std::move(c));
}

std::optional<int> FpPoly::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

int FpPoly::leading() const {
    if (c_.empty()) throw std::domain_error("FpPoly::leading: zero polynomial");
    return c_.back();
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (c_[i] != 1 || i == 0) os << c_[i];
        if (c_[i] != 1 && i > 0) os << "*";
        if (i == 1) os << var;
        if (i > 1) os << var << "^" << i;
    }
    return os.str();
}

static void check_p(const FpPoly& a, const FpPoly& b) {
    if (a.p() != b.p()) throw std::invalid_argument("FpPoly op: mismatched modulus");
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    check_p(a, b);
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = fp::add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), a.p());
    return FpPoly(a.p(), std::move(c));
}

FpPoly fp_neg(const FpPoly& a) {
    std::vector<int> c = a.coeffs();
    for (int& x : c) x = fp::neg(x, a.p());
    return FpPoly(a.p(), std::move(c));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) { return fp_add(a, fp_neg(b)); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    check_p(a, b);
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p());
    std::vector<int> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = fp::add(c[i + j], fp::mul(a.coeffs()[i], b.coeffs()[j], a.p()), a.p());
    }
    return FpPoly(a.p(), std::move(c));
}

FpPoly fp_scale(const FpPoly& a, int s) {
    std::vector<int> c = a.coeffs();
    for (int& x : c) x = fp::mul(x, ((s % a.p()) + a.p()) % a.p(), a.p());
    return FpPoly(a.p(), std::move(c));
}

FpPoly fp_monic(const FpPoly& a) {
    if (a.is_zero()) return a;
    return fp_scale(a, fp::inv(a.leading(), a.p()));
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    check_p(a, b);
    if (b.is_zero()) throw std::domain_error("fp_divmod: division by zero");
    const int p = a.p();
    int db = *b.degree();
    int linv = fp::inv(b.leading(), p);
    std::vector<int> r = a.coeffs();
    std::vector<int> q(r.size() > static_cast<size_t>(db) ? r.size() - db : 0, 0);
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        if (r[i] == 0) continue;
        int f = fp::mul(r[i], linv, p);
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = fp::sub(r[i - db + j], fp::mul(f, b.coeff(j), p), p);
    }
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

bool fp_divides(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) return true;
    if (a.is_zero()) return false;
    return fp_divmod(b, a).second.is_zero();
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
    check_p(a, b);
    if (a.is_zero() && b.is_zero()) throw std::domain_error("fp_gcd: gcd(0, 0) undefined");
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = fp_divmod(x, y).second;
        x = y;
        y = r;
    }
    return fp_monic(x);
}

FpPoly fp_pow_mod(const FpPoly& base, long long e, const FpPoly& mod) {
    FpPoly r = FpPoly::one(base.p());
    FpPoly b = fp_divmod(base, mod).second;
    while (e > 0) {
        if (e & 1) r = fp_divmod(fp_mul(r, b), mod).second;
        b = fp_divmod(fp_mul(b, b), mod).second;
        e >>= 1;
    }
    return r;
}

FpPoly fp_mod_xn1(const FpPoly& a, int n) {
    std::vector<int> c(n, 0);
    for (int i = 0; i < static_cast<int>(a.coeffs().size()); ++i)
        c[i % n] = fp::add(c[i % n], a.coeffs()[i], a.p());
    return FpPoly(a.p(), std::move(c));
}

// ---------------------------------------------------------------------------
// Factorization of x^n - 1

namespace {

// Equal-degree splitting (Cantor-Zassenhaus); f is a product of r >= 2 distinct
// irreducibles of degree d.
void edf(const FpPoly& f, int d, std::vector<FpPoly>& out, std::mt19937& rng) {
    const int p = f.p();
    int deg = *f.degree();
    if (deg == d) {
        out.push_back(fp_monic(f));
        return;
    }
    FpPoly g = f;  // placeholder until a proper factor is found
    for (;;) {
        std::vector<int> rc(deg);
        for (int& x : rc) x = static_cast<int>(rng() % p);
        FpPoly a(p, rc);
        if (a.is_zero()) continue;
        FpPoly h;
        if (p == 2) {
            // trace map a + a^2 + ... + a^{2^{d-1}}
            FpPoly t = fp_divmod(a, f).second;
            FpPoly acc = t;
            for (int i = 1; i < d; ++i) {
                t = fp_divmod(fp_mul(t, t), f).second;
                acc = fp_add(acc, t);
            }
            h = acc;
        } else {
            long long e = 1;
            for (int i = 0; i < d; ++i) e *= p;
            h = fp_sub(fp_pow_mod(a, (e - 1) / 2, f), FpPoly::one(p));
        }
        if (h.is_zero()) continue;
        g = fp_gcd(h, f);
        if (!g.is_zero() && *g.degree() > 0 && *g.degree() < deg) break;
    }
    edf(g, d, out, rng);
    edf(fp_divmod(f, g).first, d, out, rng);
}

// Distinct-degree factorization of a squarefree f.
std::vector<FpPoly> factor_squarefree(FpPoly f, std::mt19937& rng) {
    const int p = f.p();
    std::vector<FpPoly> irreducibles;
    FpPoly x = FpPoly::monomial(p, 1);
    FpPoly xq = x;
    int d = 0;
    while (!f.is_zero() && *f.degree() > 0) {
        ++d;
        if (2 * d > *f.degree()) {  // remainder is irreducible
            irreducibles.push_back(fp_monic(f));
            break;
        }
        xq = fp_pow_mod(xq, p, f);
        FpPoly g = fp_gcd(fp_sub(xq, x), f);
        if (!g.is_zero() && *g.degree() > 0) {
            edf(g, d, irreducibles, rng);
            f = fp_divmod(f, g).first;
            xq = fp_divmod(xq, f.is_zero() || *f.degree() == 0 ? FpPoly::one(p) : f).second;
        }
    }
    return irreducibles;
}

}  // namespace

std::vector<std::pair<FpPoly, int>> factor_xn_minus_1(int n, int p) {
    if (n < 1) throw std::invalid_argument("factor_xn_minus_1: n must be >= 1");
    if (!fp::is_prime(p)) throw std::invalid_argument("factor_xn_minus_1: p must be prime");
    int n0 = n, mult = 1;
    while (n0 % p == 0) {
        n0 /= p;
        mult *= p;
    }
    std::mt19937 rng(0x9e3779b9u ^ (static_cast<unsigned>(n) << 8) ^ static_cast<unsigned>(p));
    std::vector<FpPoly> irr = factor_squarefree(FpPoly::xn_minus_1(p, n0), rng);
    std::sort(irr.begin(), irr.end(), [](const FpPoly& a, const FpPoly& b) {
        if (*a.degree() != *b.degree()) return *a.degree() < *b.degree();
        return a.coeffs() < b.coeffs();
    });
    std::vector<std::pair<FpPoly, int>> out;
    out.reserve(irr.size());
    for (auto& f : irr) out.emplace_back(std::move(f), mult);
    return out;
}

// ---------------------------------------------------------------------------
// RingPoly

RingPoly::RingPoly(const RingParams& rp, std::vector<RingElement> coeffs) : rp_(rp), c_(std::move(coeffs)) {
    for (const auto& e : c_)
        if (!(e.params() == rp)) throw std::invalid_argument("RingPoly: coefficient params mismatch");
    normalize();
}

void RingPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RingPoly RingPoly::one(const RingParams& rp) {
    return RingPoly(rp, {RingElement::one(rp)});
}

RingPoly RingPoly::lift(const RingParams& rp, const FpPoly& f, int ui, int vj) {
    if (f.p() != rp.p) throw std::invalid_argument("RingPoly::lift: modulus mismatch");
    std::vector<RingElement> c;
    c.reserve(f.coeffs().size());
    for (int a : f.coeffs()) c.push_back(RingElement::monomial(rp, ui, vj, a));
    return RingPoly(rp, std::move(c));
}

std::optional<int> RingPoly::literal_degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

std::optional<int> RingPoly::paper_degree() const { return mu().degree(); }

RingElement RingPoly::coeff(int i) const {
    if (i < static_cast<int>(c_.size())) return c_[i];
    return RingElement::zero(rp_);
}

FpPoly RingPoly::slot_poly(int ui, int vj) const {
    std::vector<int> c;
    c.reserve(c_.size());
    for (const auto& e : c_) c.push_back(e.at(ui, vj));
    return FpPoly(rp_.p, std::move(c));
}

std::string RingPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].to_string() << ")";
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    return os.str();
}

static void check_rp(const RingPoly& a, const RingPoly& b) {
    if (!(a.params() == b.params())) throw std::invalid_argument("RingPoly op: mismatched params");
}

RingPoly rp_add(const RingPoly& a, const RingPoly& b) {
    check_rp(a, b);
    size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<RingElement> c;
    c.reserve(n);
    for (size_t i = 0; i < n; ++i)
        c.push_back(ring_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i))));
    return RingPoly(a.params(), std::move(c));
}

RingPoly rp_neg(const RingPoly& a) {
    std::vector<RingElement> c;
    c.reserve(a.coeffs().size());
    for (const auto& e : a.coeffs()) c.push_back(ring_neg(e));
    return RingPoly(a.params(), std::move(c));
}

RingPoly rp_sub(const RingPoly& a, const RingPoly& b) { return rp_add(a, rp_neg(b)); }

RingPoly rp_mul(const RingPoly& a, const RingPoly& b) {
    check_rp(a, b);
    if (a.is_zero() || b.is_zero()) return RingPoly::zero(a.params());
    std::vector<RingElement> c(a.coeffs().size() + b.coeffs().size() - 1, RingElement::zero(a.params()));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = ring_add(c[i + j], ring_mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return RingPoly(a.params(), std::move(c));
}

RingPoly rp_scale(const RingPoly& a, const RingElement& s) {
    std::vector<RingElement> c;
    c.reserve(a.coeffs().size());
    for (const auto& e : a.coeffs()) c.push_back(ring_mul(e, s));
    return RingPoly(a.params(), std::move(c));
}

RingPoly rp_mul_fp(const RingPoly& a, const FpPoly& f) {
    return rp_mul(a, RingPoly::lift(a.params(), f));
}

RingPoly rp_mod_xn1(const RingPoly& a, int n) {
    std::vector<RingElement> c(n, RingElement::zero(a.params()));
    for (int i = 0; i < static_cast<int>(a.coeffs().size()); ++i)
        c[i % n] = ring_add(c[i % n], a.coeffs()[i]);
    return RingPoly(a.params(), std::move(c));
}

RingPoly rp_xn_minus_1(const RingParams& rp, int n) {
    return RingPoly::lift(rp, FpPoly::xn_minus_1(rp.p, n));
}

bool poly_is_regular(const RingPoly& f) {
    for (const auto& e : f.coeffs())
        if (ring_is_unit(e)) return true;
    return false;
}

std::pair<RingPoly, RingPoly> poly_divmod(const RingPoly& f, const RingPoly& g) {
    check_rp(f, g);
    if (g.is_zero() || !poly_is_regular(g))
        throw std::domain_error("poly_divmod: divisor must be regular");
    const RingParams& rp = f.params();
    int d = *g.paper_degree();
    // normalize so the coefficient of x^d is exactly 1; that coefficient is a
    // unit since mu(g) has degree d
    RingElement lead = g.coeff(d);
    RingElement leadInv = ring_inverse(lead);
    RingPoly gn = rp_scale(g, leadInv);

    RingPoly r = f;
    std::vector<RingElement> q;
    // eliminate from the top; contributions re-created above the eliminated
    // position pick up an extra nilpotent factor each round, so this stops
    while (true) {
        int m = -1;
        for (int i = static_cast<int>(r.coeffs().size()) - 1; i >= d; --i)
            if (!r.coeffs()[i].is_zero()) {
                m = i;
                break;
            }
        if (m < 0) break;
        RingElement c = r.coeff(m);
        if (static_cast<int>(q.size()) < m - d + 1) q.resize(m - d + 1, RingElement::zero(rp));
        q[m - d] = ring_add(q[m - d], c);
        // r -= c x^{m-d} gn
        std::vector<RingElement> sub(m - d + gn.coeffs().size(), RingElement::zero(rp));
        for (size_t j = 0; j < gn.coeffs().size(); ++j) sub[m - d + j] = ring_mul(c, gn.coeffs()[j]);
        r = rp_sub(r, RingPoly(rp, std::move(sub)));
    }
    RingPoly quotient = rp_scale(RingPoly(rp, std::move(q)), leadInv);
    return {quotient, r};
}

// ---------------------------------------------------------------------------
// p-adic expansion classes

PadicProfile padic_classify(long long m, int p, int l) {
    if (l < 1) throw std::domain_error("padic_classify: l must be >= 1");
    long long pl = 1;
    for (int i = 0; i < l; ++i) pl *= p;
    if (m <= 0 || m >= pl) throw std::domain_error("padic_classify: need 0 < m < p^l");
    PadicProfile prof;
    prof.m = m;
    prof.digits.resize(l);
    long long t = m;
    for (int i = 0; i < l; ++i) {
        prof.digits[i] = static_cast<int>(t % p);
        t /= p;
    }
    int q = 0;
    while (q < l && prof.digits[l - 1 - q] != 0) ++q;
    prof.q = q;
    if (q == l) {
        prof.kind = PadicProfile::Kind::FullExpansion;
    } else {
        bool lower_nonzero = false;
        for (int i = 0; i < l - q - 1; ++i)
            if (prof.digits[i] != 0) lower_nonzero = true;
        prof.kind = lower_nonzero ? PadicProfile::Kind::NonZeroExpansion : PadicProfile::Kind::ZeroExpansion;
    }
    return prof;
}

}  // namespace ccr
