#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf2trace/bitpoly.hpp"

using gf2trace::BitPoly;

TEST_CASE("hex round trip and degree") {
    CHECK(BitPoly::zero().to_hex() == "0x0");
    CHECK(!BitPoly::zero().degree().has_value());
    CHECK(BitPoly::one().degree() == 0);

    // X^3 + X + 1 encodes as 0b1011
    auto p = BitPoly::from_hex("0xb");
    CHECK(p.degree() == 3);
    CHECK(p.bit(0));
    CHECK(p.bit(1));
    CHECK(!p.bit(2));
    CHECK(p.to_hex() == "0xb");

    auto big = BitPoly::monomial(130) + BitPoly::one();
    CHECK(BitPoly::from_hex(big.to_hex()) == big);
    CHECK(big.degree() == 130);

    CHECK_THROWS_AS((void)BitPoly::from_hex("zz"), std::invalid_argument);
    CHECK_THROWS_AS((void)BitPoly::from_hex(""), std::invalid_argument);
}

TEST_CASE("ring laws") {
    auto a = BitPoly::from_hex("0x1b3");
    auto b = BitPoly::from_hex("0x2c");
    auto c = BitPoly::from_hex("0x7");

    CHECK(a + a == BitPoly::zero());             // characteristic 2
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * BitPoly::one() == a);
    CHECK((a << 3) == a * BitPoly::monomial(3));
}

TEST_CASE("divmod and gcd") {
    auto p = BitPoly::from_hex("0x1b3");
    auto q = BitPoly::from_hex("0x2c");
    auto [quot, rem] = BitPoly::divmod(p, q);
    CHECK(quot * q + rem == p);
    CHECK(rem.degree().value_or(0) < q.degree().value());
    CHECK(p % q == rem);
    CHECK_THROWS_AS((void)BitPoly::divmod(p, BitPoly::zero()), std::invalid_argument);

    auto g = BitPoly::from_hex("0xb");
    CHECK(BitPoly::gcd(g * p, g * q) % g == BitPoly::zero());
    CHECK(BitPoly::gcd(p, BitPoly::zero()) == p);
}

TEST_CASE("irreducibility") {
    CHECK(gf2trace::is_irreducible(BitPoly::from_hex("0x7")));    // X^2+X+1
    CHECK(!gf2trace::is_irreducible(BitPoly::from_hex("0x5")));   // X^2+1 = (X+1)^2
    CHECK(gf2trace::is_irreducible(BitPoly::from_hex("0x11b")));  // X^8+X^4+X^3+X+1
    CHECK(!gf2trace::is_irreducible(BitPoly::from_hex("0xf")));   // X^3+X^2+X+1
    CHECK_THROWS_AS((void)gf2trace::is_irreducible(BitPoly::one()), std::invalid_argument);
}

TEST_CASE("canonical irreducible moduli") {
    CHECK(gf2trace::canonical_irreducible(2).to_hex() == "0x7");
    CHECK(gf2trace::canonical_irreducible(3).to_hex() == "0xb");
    CHECK(gf2trace::canonical_irreducible(4).to_hex() == "0x13");
    CHECK(gf2trace::canonical_irreducible(8).to_hex() == "0x11b");
    for (std::size_t m : {1u, 5u, 12u, 24u, 64u, 128u}) {
        auto p = gf2trace::canonical_irreducible(m);
        CHECK(p.degree() == m);
        CHECK(gf2trace::is_irreducible(p));
    }
    CHECK_THROWS_AS((void)gf2trace::canonical_irreducible(0), std::invalid_argument);
}
