#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supalg/borel.hpp"

using namespace supalg;

TEST_CASE("phi images of the basic generators") {
    BbarContext b1 = BbarContext::make(1);
    CHECK(phi_image(b1, GenKind::X, 1, 1) == mul(b1.a(1, 1), b1.d(1, 1)));
    CHECK(phi_image(b1, GenKind::Y, 1, 1) == mul(b1.a(1, 1), b1.c(1, 1)).scaled(2));

    BbarContext b2 = BbarContext::make(2);
    CHECK(phi_image(b2, GenKind::Z, 1, 2) == mul(b2.d(1, 1), b2.b(1, 2)));
    // X12 = a11 d12 + c11 b12
    SuperPoly x12 = mul(b2.a(1, 1), b2.d(1, 2)) + mul(b2.c(1, 1), b2.b(1, 2));
    CHECK(phi_image(b2, GenKind::X, 1, 2) == x12);
}

TEST_CASE("phi image symmetries") {
    BbarContext b3 = BbarContext::make(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            CHECK(phi_image(b3, GenKind::Y, i, j) == phi_image(b3, GenKind::Y, j, i));
            SuperPoly zij = phi_image(b3, GenKind::Z, i, j);
            SuperPoly zji = phi_image(b3, GenKind::Z, j, i);
            CHECK(zij == -zji);
        }
}

TEST_CASE("leading terms of the generator images") {
    BbarContext b2 = BbarContext::make(2);
    MonomialOrder ord(b2);
    auto lt = [&](GenKind k, int i, int j) {
        return SuperPoly::monomial(b2.table, leading_term(ord, phi_image(b2, k, i, j)), 1);
    };
    CHECK(lt(GenKind::X, 1, 2) == mul(b2.a(1, 1), b2.d(1, 2)));
    CHECK(lt(GenKind::X, 2, 1) == mul(b2.a(1, 2), b2.d(1, 1)));
    CHECK(lt(GenKind::Y, 1, 2) == mul(b2.a(1, 1), b2.c(1, 2)));
    CHECK(lt(GenKind::Z, 1, 2) == mul(b2.d(1, 1), b2.b(1, 2)));
    // the full table at n = 3
    BbarContext b3 = BbarContext::make(3);
    MonomialOrder ord3(b3);
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) {
            auto ltm = [&](GenKind k, int a, int b) {
                return SuperPoly::monomial(b3.table, leading_term(ord3, phi_image(b3, k, a, b)), 1);
            };
            CHECK(ltm(GenKind::X, i, j) == mul(b3.a(i, i), b3.d(i, j)));
            if (i < j) CHECK(ltm(GenKind::X, j, i) == mul(b3.a(i, j), b3.d(i, i)));
            CHECK(ltm(GenKind::Y, i, j) == mul(b3.a(i, i), b3.c(i, j)));
            if (i < j) CHECK(ltm(GenKind::Z, i, j) == mul(b3.d(i, i), b3.b(i, j)));
        }
}

TEST_CASE("leading term requires a nonzero argument") {
    BbarContext b1 = BbarContext::make(1);
    MonomialOrder ord(b1);
    CHECK_THROWS_AS(leading_term(ord, b1.zero()), PreconditionError);
}

TEST_CASE("monomial order is total and multiplicative on a sample") {
    BbarContext b2 = BbarContext::make(2);
    MonomialOrder ord(b2);
    BasisQuery q;
    q.central_degree = 2;
    auto deg2 = graded_basis(b2.table, q);
    // totality: exactly one of <, ==, > holds
    for (const auto& m1 : deg2)
        for (const auto& m2 : deg2) {
            int rel = (m1 == m2) + ord.less(m1, m2) + ord.less(m2, m1);
            CHECK(rel == 1);
        }
    // multiplication by a fixed monomial preserves the order
    SuperMonomial fixed;
    fixed.evens.emplace_back(b2.a_index(1, 2), 1);
    for (const auto& m1 : deg2)
        for (const auto& m2 : deg2) {
            if (!ord.less(m1, m2)) continue;
            SuperPoly p1 = mul(SuperPoly::monomial(b2.table, m1, 1),
                               SuperPoly::monomial(b2.table, fixed, 1));
            SuperPoly p2 = mul(SuperPoly::monomial(b2.table, m2, 1),
                               SuperPoly::monomial(b2.table, fixed, 1));
            if (p1.is_zero() || p2.is_zero()) continue;
            CHECK(ord.less(p1.terms().begin()->first, p2.terms().begin()->first));
        }
}

TEST_CASE("phi is multiplicative, randomized") {
    BbarContext b2 = BbarContext::make(2);
    RankContext t2 = RankContext::make(2);
    std::mt19937_64 rng(17);
    BasisQuery q;
    q.central_degree = 2;
    auto basis = graded_basis(t2.table, q);
    auto rand_poly = [&]() {
        SuperPoly p = t2.zero();
        for (int t = 0; t < 2; ++t)
            p += SuperPoly::monomial(t2.table, basis[rng() % basis.size()],
                                     static_cast<int>(rng() % 5) - 2);
        return p;
    };
    for (int t = 0; t < 40; ++t) {
        SuperPoly p = rand_poly(), q2 = rand_poly();
        CHECK(phi_map(b2, t2, mul(p, q2)) == mul(phi_map(b2, t2, p), phi_map(b2, t2, q2)));
    }
}

TEST_CASE("injectivity scans") {
    CHECK(injectivity_scan(BbarContext::make(1), 3).pass);
    CHECK(injectivity_scan(BbarContext::make(2), 3).pass);
    CHECK_THROWS_AS(injectivity_scan(BbarContext::make(2), 9), GuardExceeded);
    // negative control: a planted duplicate generator must be caught
    CHECK(!injectivity_scan(BbarContext::make(1), 2, true).pass);
}

TEST_CASE("t invariance") {
    for (int n = 1; n <= 3; ++n) CHECK(t_invariance_check(BbarContext::make(n)).pass);
    // explicit weights
    BbarContext b2 = BbarContext::make(2);
    auto w = mul(b2.a(1, 1), b2.d(1, 2)).weight();
    REQUIRE(w);
    CHECK(*w == std::vector<int>{0, 0});
    auto w2 = mul(b2.a(1, 1), b2.c(2, 2)).weight();
    REQUIRE(w2);
    CHECK(*w2 == std::vector<int>{-1, 1});
}

TEST_CASE("localization identities") {
    for (int n = 1; n <= 3; ++n)
        CHECK(localization_identities_check(BbarContext::make(n)).pass);
}

TEST_CASE("extension and contraction agree with the residue") {
    BbarContext b1 = BbarContext::make(1);
    RankContext t1 = RankContext::make(1);
    CHECK(extension_contraction_check(b1, t1, 4).pass);

    BbarContext b2 = BbarContext::make(2);
    RankContext t2 = RankContext::make(2);
    CHECK(extension_contraction_check(b2, t2, 4).pass);

    // spot values
    std::vector<Rat> nu(b2.table->size(), Rat(0));
    for (int i = 1; i <= 2; ++i) {
        nu[b2.a_index(i, i)] = 1;
        nu[b2.d_index(i, i)] = 1;
    }
    CHECK(phi_map(b2, t2, t2.x(1, 1)).evaluate(nu) == 1);
    CHECK(phi_map(b2, t2, t2.y_sym(1, 1)).evaluate(nu) == 0);
    CHECK(phi_map(b2, t2, t2.x(1, 2)).evaluate(nu) == 0);
}
