#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccr/gray.hpp"
#include "ccr/parse.hpp"

using namespace ccr;

namespace {

std::mt19937 rng(31337);

RingPoly random_rp(const RingParams& rp, int n) {
    std::vector<RingElement> c(1 + rng() % n, RingElement::zero(rp));
    for (auto& e : c)
        for (int s = 0; s < rp.slots(); ++s) e.set(s % rp.k, s / rp.k, static_cast<int>(rng() % rp.p));
    return RingPoly(rp, c);
}

RingElement random_elem(const RingParams& rp) {
    RingElement e = RingElement::zero(rp);
    for (int s = 0; s < rp.slots(); ++s) e.set(s % rp.k, s / rp.k, static_cast<int>(rng() % rp.p));
    return e;
}

int vec_weight(const std::vector<int>& v) {
    int w = 0;
    for (int x : v) w += x != 0 ? 1 : 0;
    return w;
}

}  // namespace

TEST_CASE("window-sum map examples") {
    // k=3: windows over a = (a1,a2,a3) shrink alternately; a = 1 + u + u^2
    CHECK(phi({1, 1, 1}, 2) == std::vector<int>{1, 0, 1});
    // k=2, p=3: a = 1 + 2u
    CHECK(phi({1, 2}, 3) == std::vector<int>{0, 2});
    // k=1 is the identity
    CHECK(phi({2}, 3) == std::vector<int>{2});
}

TEST_CASE("phi_L is linear") {
    for (int p : {2, 3, 5}) {
        for (int k = 1; k <= 4; ++k) {
            RingParams rp(p, k);
            for (int it = 0; it < 30; ++it) {
                RingElement a = random_elem(rp), b = random_elem(rp);
                int c = static_cast<int>(rng() % p);
                std::vector<int> lhs = phi_L(ring_add(a, ring_mul(RingElement::scalar(rp, c), b)));
                std::vector<int> pa = phi_L(a), pb = phi_L(b);
                REQUIRE(lhs.size() == pa.size());
                for (size_t i = 0; i < lhs.size(); ++i)
                    CHECK(lhs[i] == fp::add(pa[i], fp::mul(c, pb[i], p), p));
            }
        }
    }
}

TEST_CASE("phi_L matrix is invertible") {
    for (int p : {2, 3, 5}) {
        for (int k = 1; k <= 8; ++k) {
            RingParams rp(p, k);
            auto M = phi_L_matrix(rp);
            REQUIRE(static_cast<int>(M.size()) == 2 * k);
            RrefBasis B(p, 2 * k);
            for (const auto& row : M) CHECK(B.insert(row));
            CHECK(B.rank() == 2 * k);
            // columns agree with phi_L on the slot basis elements
            for (int s = 0; s < 2 * k; ++s) {
                RingElement e = RingElement::monomial(rp, s % k, s / k);
                std::vector<int> img = phi_L(e);
                for (int r = 0; r < 2 * k; ++r) CHECK(M[r][s] == img[r]);
            }
        }
    }
}

TEST_CASE("lee weight is the weight of the gray image") {
    for (int p : {2, 3}) {
        for (int k = 1; k <= 3; ++k) {
            RingParams rp(p, k);
            for (int it = 0; it < 50; ++it) {
                RingElement e = random_elem(rp);
                CHECK(lee_weight(e) == vec_weight(phi_L(e)));
            }
        }
    }
}

TEST_CASE("gray image of a code: parameters and distance oracle") {
    for (int p : {2, 3}) {
        for (int k = 1; k <= 2; ++k) {
            RingParams rp(p, k);
            for (int n : {2, 3, 4}) {
                int done = 0;
                while (done < 6) {
                    SpanBasis C = span_closure(rp, n, {random_rp(rp, n)});
                    if (C.dimension() == 0 || C.dimension() > (p == 2 ? 12 : 8)) continue;
                    ++done;
                    GrayImage G = gray_image(C, std::uint64_t(1) << 26);
                    CHECK(G.length == 2 * k * n);
                    CHECK(G.dimension == C.dimension());
                    // oracle: min Lee weight over all nonzero codewords, by a
                    // plain counter walk over basis combinations
                    const auto& rows = C.basis().rows();
                    std::vector<int> digit(rows.size(), 0);
                    int best = -1;
                    for (;;) {
                        size_t i = 0;
                        while (i < rows.size() && digit[i] == p - 1) digit[i++] = 0;
                        if (i == rows.size()) break;
                        ++digit[i];
                        std::vector<int> w(C.ambient_dim(), 0);
                        for (size_t r = 0; r < rows.size(); ++r)
                            for (int a = 0; a < C.ambient_dim(); ++a)
                                w[a] = fp::add(w[a], fp::mul(digit[r], rows[r][a], p), p);
                        int lw = lee_weight(C.unflatten(w), n);
                        if (best < 0 || lw < best) best = lw;
                    }
                    REQUIRE(G.d.has_value());
                    CHECK(*G.d == best);
                }
            }
        }
    }
}

TEST_CASE("worked example: [24,1] image with distance 16") {
    RingParams rp(2, 3);
    SpanBasis C = span_closure(rp, 4, {parse_poly_expr("v*u^2*(x+1)^3", rp, 4)});
    GrayImage G = gray_image(C);
    CHECK(G.length == 24);
    CHECK(G.dimension == 1);
    REQUIRE(G.d.has_value());
    CHECK(*G.d == 16);
}
