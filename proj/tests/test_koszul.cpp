#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supalg/koszul.hpp"

using namespace supalg;

TEST_CASE("ext in degree zero is the identity pairing") {
    for (const char* s : {"-", "2", "3,1", "2,2,1"}) {
        Partition lam = Partition::parse(s);
        ExtReport r = ext_dim({Side::Sym, 0, lam, lam});
        CHECK(r.multiplicity == 1);
        CHECK(r.stable);
        ExtReport rw = ext_dim({Side::Wedge, 0, lam, lam});
        CHECK(rw.multiplicity == 1);
        Partition other = Partition::parse("1,1");
        if (!(other == lam)) CHECK(ext_dim({Side::Sym, 0, lam, other}).multiplicity == 0);
    }
}

TEST_CASE("first wedge-side pairings") {
    CHECK(ext_dim({Side::Wedge, 1, Partition(), Partition({2})}).multiplicity == 1);
    CHECK(ext_dim({Side::Wedge, 2, Partition(), Partition({4})}).multiplicity == 1);
    CHECK(ext_dim({Side::Wedge, 2, Partition(), Partition({2, 2})}).multiplicity == 1);
    CHECK(ext_dim({Side::Wedge, 2, Partition(), Partition({3, 1})}).multiplicity == 0);
    CHECK(ext_dim({Side::Sym, 2, Partition(), Partition({3, 1})}).multiplicity == 1);
    CHECK(ext_dim({Side::Sym, 2, Partition(), Partition({2, 1, 1})}).multiplicity == 0);
}

TEST_CASE("size mismatches force zero") {
    CHECK(ext_dim({Side::Sym, 1, Partition({1}), Partition({1})}).multiplicity == 0);
    CHECK(ext_dim({Side::Wedge, 1, Partition(), Partition({3})}).multiplicity == 0);
}

TEST_CASE("the query guard") {
    CHECK_THROWS_AS(ext_dim({Side::Sym, 8, Partition(), Partition()}), GuardExceeded);
}

TEST_CASE("pairing objects are rank-stable") {
    for (int i = 0; i <= 4; ++i) {
        int rank_sym = 0, rank_wedge = 0;
        const SchurVector& ps = pairing_object(Side::Sym, i, &rank_sym);
        const SchurVector& pw = pairing_object(Side::Wedge, i, &rank_wedge);
        CHECK(ps == wedge_of_sym2(i, rank_sym + 1));
        CHECK(pw == sym_of_sym2(i, rank_wedge + 1));
        for (const auto& [p, c] : ps.entries()) CHECK(c == 1);
        for (const auto& [p, c] : pw.entries()) CHECK(c == 1);
    }
}

TEST_CASE("transpose duality of the two pairings") {
    // mult of mu in lambda (x) wedge^i(sym^2) equals mult of mu^T in
    // lambda^T (x) sym^i(wedge^2)
    for (int i = 1; i <= 3; ++i) {
        const SchurVector& pi = pairing_object(Side::Sym, i);
        for (int m = 0; m + 2 * i <= 10; ++m)
            for (const Partition& lam : partitions_of(m))
                for (const Partition& mu : partitions_of(m + 2 * i)) {
                    long long direct = 0;
                    for (const auto& [kappa, c] : pi.entries())
                        direct += c * lr_coefficient(lam, kappa, mu);
                    long long dual = 0;
                    for (const auto& [kappa, c] : pi.entries())
                        dual += c * lr_coefficient(transpose(lam), transpose(kappa), transpose(mu));
                    CHECK(direct == dual);
                }
    }
}

TEST_CASE("solution enumeration branches") {
    auto sols = ext_solutions(Side::Wedge, 2, Partition(), 0);
    CHECK(sols.lower.empty());
    REQUIRE(sols.upper.size() == 2);
    CHECK(sols.upper[0] == Partition({4}));
    CHECK(sols.upper[1] == Partition({2, 2}));

    auto sym_sols = ext_solutions(Side::Sym, 2, Partition(), 0);
    REQUIRE(sym_sols.upper.size() == 1);
    CHECK(sym_sols.upper[0] == Partition({3, 1}));

    auto id0 = ext_solutions(Side::Sym, 0, Partition({2, 1}), 3);
    REQUIRE(id0.lower.size() == 1);
    CHECK(id0.lower[0] == Partition({2, 1}));
    REQUIRE(id0.upper.size() == 1);
    CHECK(id0.upper[0] == Partition({2, 1}));
}

TEST_CASE("remark report") {
    RemarkReport rep = remark_report(4);
    CHECK(rep.pass);
    CHECK(rep.failures.empty());
    bool saw_transpose_flag = false;
    bool saw_asymmetry = false;
    for (const auto& line : rep.lines) {
        if (line.label == "wedge2_of_sym2") {
            CHECK(line.discrepancy);  // the cited 2,1,1 vs computed 3,1
            saw_transpose_flag = true;
        }
        if (line.label == "asymmetry_mu_empty_i2") saw_asymmetry = true;
    }
    CHECK(saw_transpose_flag);
    CHECK(saw_asymmetry);
}
