#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gf2trace/field.hpp"
#include "gf2trace/oracle.hpp"
#include "gf2trace/serialize.hpp"
#include "gf2trace/solver.hpp"

using namespace gf2trace;
using field::Elt;

namespace {

std::vector<Elt> sorted(std::vector<Elt> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void check_against_brute(unsigned n, unsigned k, unsigned l, const Elt& a, unsigned xi_choice = 0) {
    auto inst = solver::Instance::make(n, k, l, a);
    auto sol = solver::solve_tlk(inst, xi_choice);
    auto brute = oracle::brute_solve(n, k, l, a);
    CHECK(sol.solvable == !brute.empty());
    CHECK(solver::solvable_tlk(inst) == !brute.empty());
    if (sol.solvable) {
        CHECK(sol.count() == brute.size());
        CHECK(sorted(sol.enumerate()) == brute);
    }
}

}  // namespace

TEST_CASE("instance validation") {
    auto ctx = field::ambient_ctx(4, 2);
    auto a = field::sample_subfield(ctx, 4, 1);
    CHECK_THROWS_AS((void)solver::Instance::make(4, 6, 2, a), std::invalid_argument);  // wrong ambient
    CHECK_THROWS_AS((void)solver::Instance::make(4, 2, 3, a), std::invalid_argument);  // l does not divide k
    auto outside = field::sample_subfield(ctx, 8, 3);
    if (!field::in_subfield(outside, 4))
        CHECK_THROWS_AS((void)solver::Instance::make(4, 2, 1, outside), std::invalid_argument);

    auto inst = solver::Instance::make(4, 2, 1, a);
    CHECK(inst.d == 2);
    CHECK(inst.g == 1);
    CHECK(inst.lnk == 4);
}

TEST_CASE("kernel dimensions match the classification") {
    struct Case { unsigned n, k, l, dim; };
    // dim = d - gcd(d,l) when k/lcm(d,l) is odd, else d, with d = gcd(n,k)
    for (auto [n, k, l, dim] : std::vector<Case>{{4, 2, 1, 1},
                                                 {4, 4, 1, 3},
                                                 {4, 4, 2, 2},
                                                 {6, 4, 2, 2},
                                                 {6, 6, 3, 3},
                                                 {6, 3, 1, 2},
                                                 {5, 3, 1, 0},
                                                 {8, 6, 2, 0}}) {
        auto ctx = field::ambient_ctx(n, k);
        auto kernel = solver::kernel_tlk(ctx, n, k, l);
        CHECK(kernel.size() == dim);
        for (const auto& b : kernel) {
            CHECK(field::in_subfield(b, n));
            CHECK(field::tmap(b, l, k).is_zero());
        }
        CHECK(solver::classify(n, k, l).kernel_dim == dim);
    }
}

TEST_CASE("closed form vs brute force on mixed instances") {
    // covers all three theorem branches: k/d odd and even, k/lcm(d,l) even
    struct Case { unsigned n, k, l; };
    for (auto [n, k, l] : std::vector<Case>{{5, 3, 1},   // q odd, k/d odd
                                            {6, 4, 2},   // q odd, k/d even
                                            {4, 4, 2},   // q even
                                            {6, 6, 2},
                                            {8, 4, 1},
                                            {7, 7, 7}}) {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            auto ctx = field::ambient_ctx(n, k);
            auto a = field::sample_subfield(ctx, n, seed);
            check_against_brute(n, k, l, a);
        }
    }
}

TEST_CASE("a = 0 returns exactly the kernel") {
    auto ctx = field::ambient_ctx(6, 4);
    auto inst = solver::Instance::make(6, 4, 2, Elt::zero(ctx));
    auto sol = solver::solve_tlk(inst);
    REQUIRE(sol.solvable);
    CHECK(sol.particular->is_zero());
    CHECK(sorted(sol.enumerate()) == oracle::brute_solve(6, 4, 2, Elt::zero(ctx)));
}

TEST_CASE("solution sets do not depend on the xi choice") {
    auto ctx = field::ambient_ctx(6, 4);
    auto a = field::tmap(field::sample_subfield(ctx, 6, 5), 2, 4);  // solvable by construction
    auto inst = solver::Instance::make(6, 4, 2, a);
    auto base = solver::solve_tlk(inst, 0).enumerate();
    for (unsigned choice : {1u, 2u, 3u}) CHECK(solver::solve_tlk(inst, choice).enumerate() == base);
}

TEST_CASE("quadratic and Artin-Schreier specializations") {
    for (unsigned n : {2u, 3u, 5u, 8u}) {
        auto ctx = field::ambient_ctx(n, 1);
        auto x = field::sample_subfield(ctx, n, n);
        auto a = x * x + x;
        auto sol = solver::solve_quadratic(n, a);
        REQUIRE(sol.solvable);
        CHECK(sol.count() == 2);
        CHECK(sorted(sol.enumerate()) == oracle::brute_solve(n, 2, 1, a));
    }
    for (unsigned n : {5u, 6u, 9u}) {
        for (unsigned k = 1; k < n; ++k) {
            auto ctx = field::ambient_ctx(n, k);
            auto x = field::sample_subfield(ctx, n, k + 1);
            auto a = field::frob(x, k) + x;
            auto sol = solver::solve_artin_schreier(n, k, a);
            REQUIRE(sol.solvable);
            CHECK(field::frob(*sol.particular, k) + *sol.particular == a);
            CHECK(sol.count() == (std::uint64_t{1} << field::gcd_u(n, k)));
        }
    }
}

TEST_CASE("T_k specialization matches the general solver") {
    for (unsigned n : {4u, 6u}) {
        for (unsigned k = 1; k <= n; ++k) {
            auto ctx = field::ambient_ctx(n, k);
            auto a = field::tmap(field::sample_subfield(ctx, n, 3), 1, k);
            auto inst = solver::Instance::make(n, k, 1, a);
            CHECK(solver::solve_tk(n, k, a).enumerate() == solver::solve_tlk(inst).enumerate());
        }
    }
}

TEST_CASE("closure roots: count 2^(k-l) and restriction to GF(2^n)") {
    struct Case { unsigned n, k, l; };
    for (auto [n, k, l] : std::vector<Case>{{4, 4, 1}, {6, 4, 2}, {5, 3, 1}, {3, 3, 3}}) {
        auto ctx = field::ambient_ctx(n, k);
        auto a = field::tmap(field::sample_subfield(ctx, n, 2), l, k);
        auto inst = solver::Instance::make(n, k, l, a);
        auto closure = solver::solve_closure(inst);
        REQUIRE(closure.solvable);
        CHECK(closure.count() == (std::uint64_t{1} << (k - l)));
        std::vector<Elt> restricted;
        for (const auto& x : closure.enumerate()) {
            CHECK(field::tmap(x, l, k) == a);
            if (field::in_subfield(x, n)) restricted.push_back(x);
        }
        CHECK(sorted(std::move(restricted)) == oracle::brute_solve(n, k, l, a));
    }
}

TEST_CASE("classification spot checks") {
    using solver::MapKind;
    CHECK(solver::classify(2, 3, 1).tag == MapKind::Permutation);  // k > n allowed
    CHECK(solver::classify(2, 4, 1).tag != MapKind::Permutation);
    CHECK(solver::classify(5, 3, 1).tag == MapKind::Permutation);
    CHECK(solver::classify(4, 2, 1).tag == MapKind::TwoToOne);   // d=2, l odd, k/(2l) odd
    CHECK(solver::classify(5, 2, 1).tag == MapKind::TwoToOne);   // d=1, k/l even
    CHECK(solver::classify(4, 4, 1).tag == MapKind::Other);
    CHECK(std::string(solver::to_string(MapKind::Permutation)) == "permutation");
    CHECK(std::string(solver::to_string(MapKind::TwoToOne)) == "2-to-1");
    CHECK(std::string(solver::to_string(MapKind::Other)) == "other");
}

TEST_CASE("k > n is delegated to the linear-algebra path") {
    auto ctx = field::ambient_ctx(2, 4);
    auto a = field::sample_subfield(ctx, 2, 1);
    auto inst = solver::Instance::make(2, 4, 1, a);
    CHECK_THROWS_AS((void)solver::solve_tlk(inst), std::invalid_argument);
}

TEST_CASE("solution set JSON") {
    auto ctx = field::ambient_ctx(4, 2);
    auto a = field::tmap(field::sample_subfield(ctx, 4, 8), 1, 2);
    auto sol = solver::solve_tlk(solver::Instance::make(4, 2, 1, a));
    auto j = to_json(sol, ctx);
    CHECK(j["solvable"] == true);
    CHECK(j["count"] == sol.count());
    CHECK(j["particular"] == sol.particular->to_hex());
    CHECK(j["kernel_basis"].size() == sol.kernel_basis.size());
    CHECK(j["ambient"]["m"] == ctx->m());

    auto none = to_json(solver::SolutionSet::unsolvable(), ctx);
    CHECK(none["solvable"] == false);
    CHECK(none["count"] == 0);
}
