#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "supalg/partition.hpp"

using namespace supalg;

TEST_CASE("parse and print round trip") {
    CHECK(Partition::parse("3,1").str() == "3,1");
    CHECK(Partition::parse("-").empty());
    CHECK(Partition::parse("").str() == "-");
    CHECK_THROWS_AS(Partition::parse("1,3"), PreconditionError);
    CHECK(Partition::parse("0").empty());  // trailing zeros drop
    CHECK_THROWS_AS(Partition::parse("-1"), PreconditionError);
    CHECK(Partition(std::vector<int>{3, 1, 0, 0}).length() == 2);
}

TEST_CASE("transpose basics") {
    CHECK(transpose(Partition()) == Partition());
    CHECK(transpose(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(transpose(rectangle(2, 3)) == rectangle(3, 2));
}

TEST_CASE("transpose is an involution up to size 20") {
    for (int m = 0; m <= 20; ++m)
        for (const Partition& p : partitions_of(m)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("diagonal hook condition") {
    CHECK(q1_contains(Partition({2})));
    CHECK(!q1_contains(Partition({2, 1})));
    CHECK(q1_contains(Partition({3, 3})));
    // against the literal box-counting oracle
    for (int m = 0; m <= 14; ++m)
        for (const Partition& p : partitions_of(m)) CHECK(q1_contains(p) == oracles::q1_by_grid(p));
}

TEST_CASE("q1 lists of small sizes") {
    CHECK(q1_of_size(0).items == std::vector<Partition>{Partition()});
    CHECK(q1_of_size(2).items == std::vector<Partition>{Partition({2})});
    CHECK(q1_of_size(4).items == std::vector<Partition>{Partition({3, 1})});
    auto six = q1_of_size(6).items;
    REQUIRE(six.size() == 2);
    CHECK(six[0] == Partition({4, 1, 1}));
    CHECK(six[1] == Partition({3, 3}));
}

TEST_CASE("every q1 partition has even size") {
    for (int m = 1; m <= 19; m += 2) {
        auto odd = q1_of_size(m);
        CHECK(odd.items.empty());
        CHECK(odd.odd_size_warning);
    }
    CHECK(!q1_of_size(4).odd_size_warning);
}

TEST_CASE("brace examples") {
    CHECK(brace(Partition(), 1) == Partition({2}));
    CHECK(brace(Partition(), 2) == Partition({3, 3}));
    CHECK(brace(Partition({1}), 1) == Partition({3, 1}));
    CHECK_THROWS_AS(brace(Partition({1, 1}), 1), PreconditionError);
}

TEST_CASE("brace always contains the n x (n+1) rectangle") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 8; ++m)
            for (const Partition& lam : partitions_of(m, n))
                CHECK(brace(lam, n).contains(rectangle(n, n + 1)));
}

TEST_CASE("unbrace inverts brace") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 6; ++m)
            for (const Partition& lam : partitions_of(m, n)) {
                bool found = false;
                for (auto& [mu, np] : unbrace(brace(lam, n)))
                    if (mu == lam && np == n) found = true;
                CHECK(found);
            }
}

TEST_CASE("complement in rectangle") {
    CHECK(complement_in_rect(Partition({2}), 2, 2) == Partition({2}));
    CHECK(complement_in_rect(Partition(), 2, 3) == rectangle(2, 3));
    CHECK(!complement_in_rect(Partition({3, 1}), 2, 2).has_value());
}

TEST_CASE("complement is an involution on the box") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k)
            for (const Partition& lam : partitions_in_rect(n, k)) {
                auto c = complement_in_rect(lam, n, k);
                REQUIRE(c.has_value());
                CHECK(complement_in_rect(*c, n, k) == lam);
            }
}

TEST_CASE("enumeration is descending lexicographic") {
    auto ps = partitions_of(4);
    REQUIRE(ps.size() == 5);
    CHECK(ps[0] == Partition({4}));
    CHECK(ps[1] == Partition({3, 1}));
    CHECK(ps[4] == Partition({1, 1, 1, 1}));
    for (size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i + 1] < ps[i]);
}
