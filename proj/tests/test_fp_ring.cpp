#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccr/ring.hpp"

using namespace ccr;

TEST_CASE("prime field basics") {
    CHECK(fp::is_prime(2));
    CHECK(fp::is_prime(3));
    CHECK(fp::is_prime(5));
    CHECK(fp::is_prime(97));
    CHECK(!fp::is_prime(1));
    CHECK(!fp::is_prime(4));
    CHECK(!fp::is_prime(91));

    for (int p : {2, 3, 5, 7}) {
        for (int a = 0; a < p; ++a) {
            for (int b = 0; b < p; ++b) {
                CHECK(fp::add(a, b, p) == (a + b) % p);
                CHECK(fp::sub(a, b, p) == ((a - b) % p + p) % p);
                CHECK(fp::mul(a, b, p) == a * b % p);
            }
            CHECK(fp::add(a, fp::neg(a, p), p) == 0);
            if (a != 0) CHECK(fp::mul(a, fp::inv(a, p), p) == 1);
        }
    }
    CHECK(fp::pow(2, 10, 1009) == 1024 % 1009);
    CHECK_THROWS_AS(fp::inv(0, 5), std::domain_error);
}

TEST_CASE("ring parameter validation") {
    CHECK_THROWS(RingParams(4, 2));
    CHECK_THROWS(RingParams(2, 0));
    CHECK(RingParams(3, 2).slots() == 4);
}

TEST_CASE("ring arithmetic axioms, exhaustive at p=2 k=2") {
    RingParams rp(2, 2);
    int s = rp.slots();
    int total = 1 << s;
    auto elem = [&](int m) {
        std::vector<int> c(s);
        for (int i = 0; i < s; ++i) c[i] = (m >> i) & 1;
        return RingElement(rp, c);
    };
    for (int i = 0; i < total; ++i) {
        RingElement a = elem(i);
        CHECK(ring_add(a, ring_neg(a)) == RingElement::zero(rp));
        CHECK(ring_mul(a, RingElement::one(rp)) == a);
        for (int j = 0; j < total; ++j) {
            RingElement b = elem(j);
            CHECK(ring_mul(a, b) == ring_mul(b, a));
            for (int l = 0; l < total; ++l) {
                RingElement c = elem(l);
                CHECK(ring_mul(a, ring_mul(b, c)) == ring_mul(ring_mul(a, b), c));
                CHECK(ring_mul(a, ring_add(b, c)) == ring_add(ring_mul(a, b), ring_mul(a, c)));
            }
        }
    }
}

TEST_CASE("nilpotency relations") {
    for (int p : {2, 3}) {
        for (int k = 1; k <= 3; ++k) {
            RingParams rp(p, k);
            RingElement u = RingElement::monomial(rp, k > 1 ? 1 : 0, 0, k > 1 ? 1 : 0);
            RingElement v = RingElement::monomial(rp, 0, 1);
            // u^k = 0, v^2 = 0
            RingElement uk = RingElement::one(rp);
            for (int i = 0; i < k; ++i) uk = ring_mul(uk, k > 1 ? u : RingElement::zero(rp));
            if (k > 1) CHECK(uk == RingElement::zero(rp));
            CHECK(ring_mul(v, v) == RingElement::zero(rp));
        }
    }
}

TEST_CASE("units are exactly the elements with nonzero constant slot") {
    for (int p : {2, 3}) {
        for (int k = 1; k <= 2; ++k) {
            RingParams rp(p, k);
            int s = rp.slots();
            int total = 1;
            for (int i = 0; i < s; ++i) total *= p;
            for (int m = 0; m < total; ++m) {
                std::vector<int> c(s);
                int q = m;
                for (int i = 0; i < s; ++i) {
                    c[i] = q % p;
                    q /= p;
                }
                RingElement a(rp, c);
                CHECK(ring_is_unit(a) == (c[0] != 0));
                if (c[0] != 0) {
                    CHECK(ring_mul(a, ring_inverse(a)) == RingElement::one(rp));
                } else if (!a.is_zero()) {
                    // nonunits are zero divisors: some nonzero b with ab = 0
                    bool found = false;
                    for (int mb = 1; mb < total && !found; ++mb) {
                        std::vector<int> cb(s);
                        int qb = mb;
                        for (int i = 0; i < s; ++i) {
                            cb[i] = qb % p;
                            qb /= p;
                        }
                        found = ring_mul(a, RingElement(rp, cb)).is_zero();
                    }
                    CHECK(found);
                }
            }
        }
    }
}

TEST_CASE("element printing") {
    RingParams rp(3, 3);
    RingElement a = RingElement::zero(rp);
    a.set(0, 0, 1);
    a.set(2, 0, 2);
    a.set(0, 1, 1);
    CHECK(a.to_string() == "1+2*u^2+v");
    CHECK(RingElement::zero(rp).to_string() == "0");
}
