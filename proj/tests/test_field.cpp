#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gf2trace/field.hpp"

using namespace gf2trace;
using field::Elt;

TEST_CASE("context construction and validation") {
    auto ctx = field::make_ctx(8);
    CHECK(ctx->m() == 8);
    CHECK(ctx->modulus().to_hex() == "0x11b");

    auto custom = field::make_ctx(4, BitPoly::from_hex("0x19"));  // X^4+X^3+1
    CHECK(custom->modulus().to_hex() == "0x19");

    CHECK_THROWS_AS((void)field::make_ctx(4, BitPoly::from_hex("0x11")), std::invalid_argument);
    CHECK_THROWS_AS((void)field::make_ctx(4, BitPoly::from_hex("0x7")), std::invalid_argument);

    CHECK(field::ambient_ctx(3, 2).get() == field::ambient_ctx(2, 3).get());  // cached
    CHECK(field::ambient_ctx(3, 2)->m() == 12);
}

TEST_CASE("element arithmetic") {
    auto ctx = field::make_ctx(8);
    auto a = Elt::from_hex(ctx, "0x57");
    auto b = Elt::from_hex(ctx, "0x83");
    CHECK((a * b).to_hex() == "0xc1");  // classic GF(2^8)/0x11b product
    CHECK(a * a.inv() == Elt::one(ctx));
    CHECK(a.pow(255) == Elt::one(ctx));       // multiplicative group order
    CHECK(a.pow(3) == a * a * a);
    CHECK(a + a == Elt::zero(ctx));
    CHECK_THROWS_AS((void)Elt::zero(ctx).inv(), std::invalid_argument);
    CHECK_THROWS_AS((void)Elt::from_hex(ctx, "0x100"), std::invalid_argument);
}

TEST_CASE("frobenius and partial traces") {
    auto ctx = field::make_ctx(12);
    auto x = field::sample_subfield(ctx, 12, 1);
    auto y = field::sample_subfield(ctx, 12, 2);

    CHECK(field::frob(x + y, 1) == field::frob(x, 1) + field::frob(y, 1));
    CHECK(field::frob(x * y, 5) == field::frob(x, 5) * field::frob(y, 5));
    CHECK(field::frob(x, 12) == x);  // full Frobenius orbit closes

    // tmap(x, l, k) = sum of x^(2^(l*i)) for i < k/l
    auto t = field::tmap(x, 2, 6);
    CHECK(t == x + field::frob(x, 2) + field::frob(x, 4));
    CHECK_THROWS_AS((void)field::tmap(x, 4, 6), std::invalid_argument);  // l must divide k

    // relative trace lands in the subfield, and is onto it
    CHECK(field::in_subfield(field::rel_trace(x, 4), 4));
    CHECK(field::in_subfield(field::rel_trace(x, 3), 3));
}

TEST_CASE("subfield basis, membership, enumeration") {
    auto ctx = field::make_ctx(12);
    for (unsigned n : {1u, 2u, 3u, 4u, 6u, 12u}) {
        auto basis = field::subfield_basis(ctx, n);
        REQUIRE(basis.size() == n);
        CHECK(basis[0] == Elt::one(ctx));
        for (const auto& e : basis) CHECK(field::in_subfield(e, n));

        auto all = field::enumerate_subfield(ctx, n);
        CHECK(all.size() == (std::size_t{1} << n));
        CHECK(std::is_sorted(all.begin(), all.end()));
        for (const auto& e : all) CHECK(field::in_subfield(e, n));
    }
    CHECK_THROWS_AS((void)field::subfield_basis(ctx, 5), std::invalid_argument);  // 5 does not divide 12

    CHECK(field::in_subfield(Elt::one(ctx), 1));
    auto x = field::sample_subfield(ctx, 4, 9);
    CHECK(field::in_subfield(x, 4));
    CHECK(field::in_subfield(x, 12));

    // deterministic sampling
    CHECK(field::sample_subfield(ctx, 6, 11) == field::sample_subfield(ctx, 6, 11));
}

TEST_CASE("mu_xi lands in mu_{2^M+1} minus 1") {
    auto ctx = field::make_ctx(12);
    for (unsigned M : {1u, 2u, 3u, 6u}) {
        for (unsigned choice : {0u, 1u, 2u, 7u}) {
            auto xi = field::mu_xi(ctx, M, choice);
            CHECK(xi.pow((std::uint64_t{1} << M) + 1) == Elt::one(ctx));
            CHECK(xi != Elt::one(ctx));
        }
    }
    CHECK_THROWS_AS((void)field::mu_xi(ctx, 5, 0), std::invalid_argument);  // 10 does not divide 12
}
