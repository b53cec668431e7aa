#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "ecclink/galois.hpp"

using ecclink::GaloisField;
using ecclink::Symbol;

TEST_CASE("GF(8) power table matches the x^3 + x + 1 construction") {
    // alpha^i worked out by hand: 1, 2, 4, 3, 6, 7, 5, then back to 1
    const GaloisField gf(3);
    const Symbol expected[7] = {1, 2, 4, 3, 6, 7, 5};
    for (int i = 0; i < 7; ++i) CHECK(gf.pow_alpha(i) == expected[i]);
    CHECK(gf.pow_alpha(7) == 1);
    CHECK(gf.pow_alpha(-1) == 5);
}

TEST_CASE("multiplication agrees with carry-less polynomial multiplication") {
    // independent bitwise model: multiply, then reduce by the field polynomial
    auto slow_mul = [](unsigned a, unsigned b, unsigned poly, unsigned m) {
        unsigned acc = 0;
        for (unsigned i = 0; i < m; ++i)
            if (b & (1u << i)) acc ^= a << i;
        for (int d = 2 * m - 2; d >= static_cast<int>(m); --d)
            if (acc & (1u << d)) acc ^= poly << (d - m);
        return acc;
    };

    for (unsigned m : {3u, 5u}) {
        const GaloisField gf(m);
        const unsigned q = gf.order();
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b)
                CHECK(gf.mul(static_cast<Symbol>(a), static_cast<Symbol>(b)) ==
                      slow_mul(a, b, gf.primitive_poly(), m));
    }
}

TEST_CASE("every nonzero element has a working inverse") {
    for (unsigned m : {2u, 3u, 5u, 8u}) {
        const GaloisField gf(m);
        for (unsigned a = 1; a < gf.order(); ++a) {
            const Symbol inv = gf.inv(static_cast<Symbol>(a));
            CHECK(gf.mul(static_cast<Symbol>(a), inv) == 1);
            CHECK(gf.div(1, static_cast<Symbol>(a)) == inv);
        }
    }
}

TEST_CASE("log and exp round-trip") {
    const GaloisField gf(5);
    for (unsigned a = 1; a < gf.order(); ++a)
        CHECK(gf.pow_alpha(gf.log_alpha(static_cast<Symbol>(a))) == a);
}

TEST_CASE("division by zero and log of zero are rejected") {
    const GaloisField gf(3);
    CHECK_THROWS_AS(gf.div(3, 0), std::domain_error);
    CHECK_THROWS_AS(gf.inv(0), std::domain_error);
    CHECK_THROWS_AS(gf.log_alpha(0), std::domain_error);
}

TEST_CASE("irreducible but non-primitive polynomial is rejected") {
    // x^4 + x^3 + x^2 + x + 1 divides x^5 + 1, so x has order 5, not 15
    CHECK_THROWS_AS(GaloisField(4, 0b11111), std::invalid_argument);
}

TEST_CASE("degree mismatch and unsupported sizes are rejected") {
    CHECK_THROWS_AS(GaloisField(4, 0b1011), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(1), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(13), std::invalid_argument);
}
