#include "ccr/rankdist.hpp"

#include <stdexcept>

namespace ccr {

namespace {

// p^e, saturating just above the cap
std::uint64_t pow_capped(int p, int e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / p) return cap + 1;
        r *= p;
    }
    return r;
}

long long ipow(int p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

FpPoly x_minus_1_pow(int p, int e) {
    FpPoly b(p, {p - 1, 1});
    FpPoly r = FpPoly::one(p);
    while (e-- > 0) r = fp_mul(r, b);
    return r;
}

}  // namespace

int hamming_weight(const RingPoly& f, int n) {
    RingPoly g = rp_mod_xn1(f, n);
    int w = 0;
    for (const auto& c : g.coeffs())
        if (!c.is_zero()) ++w;
    return w;
}

namespace {

RankReport layer_count_report(const SpanBasis& C) {
    const RingParams& rp = C.params();
    const int k = rp.k, n = C.n();
    RankReport R;
    R.formula_inputs = tower(C);
    const auto& t = R.formula_inputs.t;
    const auto& tp = R.formula_inputs.tprime;
    R.free_rank = n - t[0];
    std::vector<int> count(2 * k, 0);
    count[0] = n - t[0];
    for (int i = 2; i <= k; ++i) count[i - 1] = t[i - 2] - t[i - 1];
    count[k] = t[0] - t[k];
    for (int i = 2; i <= k; ++i) count[k + i - 1] = tp[i - 2] - t[k + i - 1];
    R.rank = 0;
    for (int i = 1; i <= 2 * k; ++i) {
        R.rank += count[i - 1];
        for (int s = 0; s < count[i - 1]; ++s) R.spanning_set.emplace_back(i, s);
    }
    return R;
}

}  // namespace

RankReport rank(const SpanBasis& C) {
    if (C.dimension() == 0) throw std::domain_error("rank: zero code");
    const RingParams& rp = C.params();
    const int n = C.n();
    if (n % rp.p != 0) {
        RankReport R;
        R.formula_inputs = tower(C);
        const auto& t = R.formula_inputs.t;
        R.free_rank = n - t[0];
        R.coprime_path = true;
        R.rank = n - t[rp.k];
        for (int s = 0; s < n - t[0]; ++s) R.spanning_set.emplace_back(1, s);
        for (int s = 0; s < t[0] - t[rp.k]; ++s) R.spanning_set.emplace_back(2, s);
        return R;
    }
    return layer_count_report(C);
}

RankReport rank_generic(const SpanBasis& C) {
    if (C.dimension() == 0) throw std::domain_error("rank_generic: zero code");
    return layer_count_report(C);
}

namespace {

// flattened spanning elements x^s A_i per the report's (generator, shift) list
std::vector<std::vector<int>> spanning_vectors(const SpanBasis& C, const RankReport& R) {
    const RingParams& rp = C.params();
    const int n = C.n();
    std::vector<RingPoly> gens;
    if (R.coprime_path) {
        auto [F, G] = coprime_form(C);
        gens = {F, G};
    } else {
        gens = canonical_generators(C).A;
    }
    std::vector<std::vector<int>> B;
    for (auto [gi, s] : R.spanning_set) {
        RingPoly e = rp_mod_xn1(rp_mul(gens[gi - 1], RingPoly::lift(rp, FpPoly::monomial(rp.p, s))), n);
        B.push_back(C.flatten(e));
    }
    return B;
}

// R-span of a set of flattened codewords = F_p span of monomial multiples
RrefBasis monomial_closure(const SpanBasis& C, const std::vector<std::vector<int>>& elems, int skip) {
    const RingParams& rp = C.params();
    RrefBasis span(rp.p, C.ambient_dim());
    for (int e = 0; e < static_cast<int>(elems.size()); ++e) {
        if (e == skip) continue;
        std::vector<int> cur = elems[e];
        for (int ui = 0; ui < rp.k; ++ui) {
            std::vector<int> uv = cur;
            span.insert(uv);
            span.insert(C.act_v(uv));
            cur = C.act_u(cur);
        }
    }
    return span;
}

}  // namespace

bool spanning_set_verify(const SpanBasis& C, const RankReport& R) {
    std::vector<std::vector<int>> B = spanning_vectors(C, R);
    RrefBasis full = monomial_closure(C, B, -1);
    if (full.rank() != C.dimension()) return false;
    for (const auto& b : B)
        if (!C.contains_vec(b)) return false;
    return true;
}

bool spanning_set_minimal(const SpanBasis& C, const RankReport& R) {
    std::vector<std::vector<int>> B = spanning_vectors(C, R);
    for (int e = 0; e < static_cast<int>(B.size()); ++e) {
        RrefBasis part = monomial_closure(C, B, e);
        if (part.contains(B[e])) return false;
    }
    return true;
}

DistanceReport distance_bruteforce(const SpanBasis& C, std::uint64_t budget) {
    if (C.dimension() == 0) throw std::domain_error("distance_bruteforce: zero code");
    if (pow_capped(C.params().p, C.dimension(), budget) > budget)
        throw std::runtime_error("distance_bruteforce: codeword count exceeds budget; use distance_torsion");
    const int s = C.params().slots(), n = C.n();
    auto weigh = [&](const std::vector<int>& v) {
        int w = 0;
        for (int c = 0; c < n; ++c)
            for (int p = 0; p < s; ++p)
                if (v[c * s + p] != 0) {
                    ++w;
                    break;
                }
        return w;
    };
    auto [w, best] = min_weight_enumerate(C.basis().rows(), C.params().p, weigh);
    return {w, DistanceMethod::FullBruteforce, C.unflatten(best)};
}

std::pair<int, FpPoly> fp_cyclic_min_weight(const FpPoly& g, int n, std::uint64_t budget) {
    int p = g.p();
    int t = *g.degree();
    int dim = n - t;
    if (dim <= 0) throw std::domain_error("fp_cyclic_min_weight: zero code");
    if (pow_capped(p, dim, budget) > budget)
        throw std::runtime_error("fp_cyclic_min_weight: codeword count exceeds budget");
    std::vector<std::vector<int>> rows;
    for (int s = 0; s < dim; ++s) {
        FpPoly r = fp_mul(g, FpPoly::monomial(p, s));
        std::vector<int> v(n, 0);
        for (int i = 0; i < n; ++i) v[i] = r.coeff(i);
        rows.push_back(std::move(v));
    }
    auto weigh = [&](const std::vector<int>& v) {
        int w = 0;
        for (int a : v)
            if (a != 0) ++w;
        return w;
    };
    auto [w, best] = min_weight_enumerate(rows, p, weigh);
    return {w, FpPoly(p, best)};
}

DistanceReport distance_torsion(const SpanBasis& C, std::uint64_t budget) {
    const RingParams& rp = C.params();
    TowerProfile tp = tower(C);
    if (tp.t.back() == C.n()) throw std::domain_error("distance_torsion: zero code");
    auto [w, witness] = fp_cyclic_min_weight(tp.g.back(), C.n(), budget);
    RingPoly cert = RingPoly::lift(rp, witness, rp.k - 1, 1);
    return {w, DistanceMethod::TorsionBruteforce, cert};
}

DistanceReport distance_closed_form(const TowerProfile& tp, const RingParams& rp, int l) {
    const int k = rp.k, p = rp.p, n = tp.n;
    if (l < 1 || ipow(p, l) != n)
        throw std::domain_error("distance_closed_form: n must equal p^l; use distance_torsion");
    for (int i = 0; i < 2 * k; ++i)
        if (!(tp.g[i] == x_minus_1_pow(p, tp.t[i])))
            throw std::domain_error("distance_closed_form: generators must be powers of x-1; use distance_torsion");
    auto strict = [&](int a, int b) { return tp.t[a] > tp.t[b]; };
    bool hyp = tp.t[k - 1] > 0 && tp.t[2 * k - 1] > 0;
    for (int i = 0; i + 1 < k; ++i) hyp = hyp && strict(i, i + 1) && strict(k + i, k + i + 1);
    for (int i = 0; i < k; ++i) hyp = hyp && strict(i, k + i);
    if (!hyp)
        throw std::domain_error("distance_closed_form: strict tower hypothesis violated; use distance_torsion");

    int t2k = tp.t[2 * k - 1];
    // Minimum weight of the bottom torsion code <(x-1)^m> at length p^l.
    // Every (x-1)^j with m <= j < p^l lies in the ideal, and by Lucas'
    // theorem its weight is the product of (digit + 1) over the p-adic
    // digits of j; the minimum over this family is the code's minimum
    // weight (radical-power codes of a cyclic p-group attain it on the
    // pure powers of x-1).
    int d = -1, jstar = t2k;
    for (int j = t2k; j < n; ++j) {
        int w = 1, q = j;
        for (int i = 0; i < l; ++i) {
            w *= q % p + 1;
            q /= p;
        }
        if (d < 0 || w < d) {
            d = w;
            jstar = j;
        }
    }
    FpPoly cert = fp_mod_xn1(x_minus_1_pow(p, jstar), n);
    RingPoly rcert = RingPoly::lift(rp, cert, k - 1, 1);
    if (hamming_weight(rcert, n) != d)
        throw std::logic_error("distance_closed_form: certificate weight mismatch");
    return {d, DistanceMethod::ClosedForm, rcert};
}

}  // namespace ccr
