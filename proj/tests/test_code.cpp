#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccr/code.hpp"
#include "ccr/parse.hpp"

using namespace ccr;

namespace {

std::mt19937 rng(424242);

RingPoly random_rp(const RingParams& rp, int n) {
    std::vector<RingElement> c(1 + rng() % n, RingElement::zero(rp));
    for (auto& e : c)
        for (int s = 0; s < rp.slots(); ++s) e.set(s % rp.k, s / rp.k, static_cast<int>(rng() % rp.p));
    return RingPoly(rp, c);
}

// independent ideal oracle: F_p-span of all monomial multiples x^a u^b v^c g_i
RrefBasis ideal_span_oracle(const SpanBasis& C, const std::vector<RingPoly>& gens) {
    const RingParams& rp = C.params();
    RrefBasis span(rp.p, C.ambient_dim());
    for (const auto& g : gens)
        for (int a = 0; a < C.n(); ++a)
            for (int b = 0; b < rp.k; ++b)
                for (int c = 0; c < 2; ++c) {
                    RingPoly m = RingPoly::lift(rp, FpPoly::monomial(rp.p, a));
                    m = rp_mul(m, RingPoly(rp, {RingElement::monomial(rp, b, c)}));
                    span.insert(C.flatten(rp_mod_xn1(rp_mul(g, m), C.n())));
                }
    return span;
}

// independent tower oracle: scan all residue polynomials of degree < n
FpPoly tower_layer_oracle(const SpanBasis& C, int layer) {  // layer 1..2k
    const RingParams& rp = C.params();
    const int p = rp.p, k = rp.k, n = C.n();
    int i = layer <= k ? layer : layer - k;
    bool vpart = layer > k;
    // quotient by the modulus ideal: adjoin its monomial slots to C
    RrefBasis Q = C.basis();
    for (int coord = 0; coord < n; ++coord)
        for (int ui = 0; ui < k; ++ui)
            for (int vj = 0; vj < 2; ++vj) {
                bool in_mod = vpart ? (vj == 1 && ui >= i) : (vj == 1 || ui >= i);
                if (!in_mod) continue;
                std::vector<int> e(C.ambient_dim(), 0);
                e[coord * rp.slots() + vj * k + ui] = 1;
                Q.insert(e);
            }
    long long total = 1;
    for (int d = 0; d < n; ++d) total *= p;
    std::vector<FpPoly> members;
    for (long long m = 1; m < total; ++m) {
        std::vector<int> c(n);
        long long q = m;
        for (int d = 0; d < n; ++d) {
            c[d] = static_cast<int>(q % p);
            q /= p;
        }
        FpPoly f(p, c);
        RingPoly lifted = RingPoly::lift(rp, f, i - 1, vpart ? 1 : 0);
        if (Q.contains(C.flatten(lifted))) members.push_back(f);
    }
    if (members.empty()) return FpPoly::xn_minus_1(p, n);
    FpPoly g = members[0];
    for (const auto& f : members) g = fp_gcd(g, f);
    // the member set must be exactly the multiples of g
    long long count = 0;
    for (const auto& f : members) {
        CHECK(fp_divmod(f, g).second.is_zero());
        ++count;
    }
    long long expect = 1;
    for (int d = 0; d < n - *g.degree(); ++d) expect *= p;
    CHECK(count == expect - 1);
    return g;
}

}  // namespace

TEST_CASE("span closure equals the monomial-multiple span") {
    for (int p : {2, 3}) {
        for (int k = 1; k <= 2; ++k) {
            RingParams rp(p, k);
            for (int n : {1, 2, 3, 4}) {
                for (int it = 0; it < 10; ++it) {
                    std::vector<RingPoly> gens = {random_rp(rp, n), random_rp(rp, n)};
                    SpanBasis C = span_closure(rp, n, gens);
                    CHECK(C.is_closed());
                    CHECK(C.basis() == ideal_span_oracle(C, gens));
                }
            }
        }
    }
}

TEST_CASE("tower layers match the exhaustive membership oracle") {
    for (int p : {2, 3}) {
        for (int k = 1; k <= 3; ++k) {
            RingParams rp(p, k);
            for (int n : {2, 4}) {
                for (int it = 0; it < 6; ++it) {
                    SpanBasis C = span_closure(rp, n, {random_rp(rp, n)});
                    TowerProfile tp = tower(C);
                    REQUIRE(static_cast<int>(tp.g.size()) == 2 * k);
                    for (int layer = 1; layer <= 2 * k; ++layer) {
                        FpPoly expect = tower_layer_oracle(C, layer);
                        CHECK(tp.g[layer - 1] == fp_monic(expect));
                        CHECK(tp.t[layer - 1] == *expect.degree());
                    }
                    // chains: g_{i+1} | g_i within each block, g_{k+i} | g_i
                    for (int i = 0; i + 1 < k; ++i) {
                        CHECK(fp_divides(tp.g[i + 1], tp.g[i]));
                        CHECK(fp_divides(tp.g[k + i + 1], tp.g[k + i]));
                    }
                    for (int i = 0; i < k; ++i) CHECK(fp_divides(tp.g[k + i], tp.g[i]));
                    CHECK(fp_divides(tp.g[0], FpPoly::xn_minus_1(p, n)));
                }
            }
        }
    }
}

TEST_CASE("known towers") {
    {
        RingParams rp(2, 1);
        SpanBasis C = span_closure(rp, 2, {RingPoly::lift(rp, FpPoly::one(2), 0, 1)});  // <v>
        TowerProfile tp = tower(C);
        CHECK(tp.t == std::vector<int>{2, 0});
    }
    {
        RingParams rp(2, 3);
        SpanBasis C = span_closure(rp, 4, {parse_poly_expr("v*u^2*(x+1)^3", rp, 4)});
        TowerProfile tp = tower(C);
        CHECK(tp.t == std::vector<int>{4, 4, 4, 4, 4, 3});
    }
}

TEST_CASE("canonical generators: shape, span, fixpoint") {
    for (int p : {2, 3}) {
        for (int k = 1; k <= 3; ++k) {
            RingParams rp(p, k);
            for (int n : {2, 3, 4, 6}) {
                for (int it = 0; it < 8; ++it) {
                    std::vector<RingPoly> gens = {random_rp(rp, n), random_rp(rp, n)};
                    SpanBasis C = span_closure(rp, n, gens);
                    GeneratorSet G = canonical_generators(C);
                    const TowerProfile& tp = G.tower;
                    std::vector<RingPoly> nz;
                    for (int i = 1; i <= 2 * k; ++i) {
                        if (tp.t[i - 1] == n) {
                            CHECK(G.A[i - 1].is_zero());
                            continue;
                        }
                        const RingPoly& A = G.A[i - 1];
                        nz.push_back(A);
                        CHECK(C.contains(A));
                        // lead slot carries g_i exactly
                        int ui = i <= k ? i - 1 : i - k - 1;
                        int vj = i <= k ? 0 : 1;
                        CHECK(A.slot_poly(ui, vj) == tp.g[i - 1]);
                        // tail degrees below the next tower degrees
                        for (int j = i; j <= 2 * k - 1; ++j) {
                            FpPoly tail = G.tail(i, j);
                            if (!tail.is_zero()) CHECK(*tail.degree() < tp.t[j]);
                        }
                    }
                    SpanBasis C2 = span_closure(rp, n, nz);
                    CHECK(C2 == C);
                    GeneratorSet G2 = canonical_generators(C2);
                    CHECK(G2.A == G.A);
                }
            }
        }
    }
}

TEST_CASE("structure conditions pass on generated codes, fail on corrupted sets") {
    RingParams rp(2, 2);
    SpanBasis C = span_closure(rp, 4, {parse_poly_expr("(x+1)^2+u*(x+1)", rp, 4),
                                       parse_poly_expr("v*(x+1)", rp, 4)});
    GeneratorSet G = canonical_generators(C);
    StructureReport R = verify_structure(G);
    CHECK(R.all_pass());
    CHECK(!R.results.empty());

    // negative control: lie about a lead polynomial
    GeneratorSet bad = G;
    int idx = -1;
    for (int i = 1; i <= 4; ++i)
        if (!bad.A[i - 1].is_zero()) idx = i;
    REQUIRE(idx > 0);
    bad.tower.g[idx - 1] = fp_mul(bad.tower.g[idx - 1], FpPoly(2, {1, 1}));
    bad.tower.t[idx - 1] += 1;
    CHECK(!verify_structure(bad).all_pass());
}

TEST_CASE("free codes") {
    {
        RingParams rp(2, 1);
        // (x+1+v)^2 = x^2+1, so <x+1+v> is free of free rank 1
        RingPoly A = rp_add(RingPoly::lift(rp, FpPoly(2, {1, 1})), RingPoly::lift(rp, FpPoly::one(2), 0, 1));
        SpanBasis C = span_closure(rp, 2, {A});
        auto [flag, witness] = is_free(C);
        CHECK(flag);
        REQUIRE(witness.has_value());
        auto [q, r] = poly_divmod(rp_sub(RingPoly::lift(rp, FpPoly::monomial(2, 2)), RingPoly::one(rp)), *witness);
        CHECK(r.is_zero());
    }
    {
        RingParams rp(2, 2);
        SpanBasis full = span_closure(rp, 3, {RingPoly::one(rp)});
        CHECK(is_free(full).first);
        SpanBasis v_only = span_closure(rp, 3, {RingPoly::lift(rp, FpPoly::one(2), 0, 1)});
        CHECK(!is_free(v_only).first);
        SpanBasis zero = span_closure(rp, 3, {});
        CHECK(is_free(zero).first);
    }
}

TEST_CASE("two-generator form at coprime length") {
    RingParams rp(2, 2);
    for (int it = 0; it < 20; ++it) {
        SpanBasis C = span_closure(rp, 3, {random_rp(rp, 3), random_rp(rp, 3)});
        auto [F, G] = coprime_form(C);  // asserts span equality internally
        TowerProfile tp = tower(C);
        if (tp.t[0] < 3) CHECK(F.mu() == tp.g[0]);
        CHECK(C.contains(F));
        CHECK(C.contains(G));
        SpanBasis C2 = span_closure(rp, 3, {F, G});
        CHECK(C2 == C);
    }
    SpanBasis even = span_closure(rp, 4, {RingPoly::one(rp)});
    CHECK_THROWS_AS(coprime_form(even), std::domain_error);
}

TEST_CASE("expressing codewords in the canonical generators") {
    RingParams rp(2, 2);
    for (int n : {3, 4}) {
        for (int it = 0; it < 10; ++it) {
            SpanBasis C = span_closure(rp, n, {random_rp(rp, n), random_rp(rp, n)});
            if (C.dimension() == 0) continue;
            GeneratorSet G = canonical_generators(C);
            // random codeword: combination of basis rows
            std::vector<int> w(C.ambient_dim(), 0);
            for (const auto& row : C.basis().rows()) {
                int c = rng() % rp.p;
                for (size_t i = 0; i < w.size(); ++i) w[i] = fp::add(w[i], fp::mul(c, row[i], rp.p), rp.p);
            }
            RingPoly cw = C.unflatten(w);
            std::vector<FpPoly> q = express_in_generators(cw, G);
            RingPoly rebuilt = RingPoly::zero(rp);
            for (int i = 0; i < 2 * rp.k; ++i)
                rebuilt = rp_add(rebuilt, rp_mul(RingPoly::lift(rp, q[i]), G.A[i]));
            CHECK(rp_mod_xn1(rebuilt, n) == rp_mod_xn1(cw, n));

            // non-members are rejected
            RingPoly outside = RingPoly::one(rp);
            if (!C.contains(outside)) CHECK_THROWS_AS(express_in_generators(outside, G), std::domain_error);
        }
    }
}
