#include "doctest.h"

#include "test_support.hpp"

using namespace branchkit;

TEST_SUITE("weights") {

TEST_CASE("partition canonical form strips trailing zeros") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition({0, 0}).empty());
    CHECK(Partition({3, 3, 1}).boxes() == 7);
    CHECK(Partition({2, 1})[5] == 0);
    CHECK_THROWS_AS(Partition({1, 2}), InvalidInput);
    CHECK_THROWS_AS(Partition({2, -1}), InvalidInput);
}

TEST_CASE("omega_to_partition") {
    CHECK(omega_to_partition(DominantWeight(4, {0, 2, 1})) == Partition({3, 3, 1}));
    CHECK(omega_to_partition(DominantWeight(6)) == Partition{});
    CHECK(omega_to_partition(DominantWeight(5, {2, 0, 1, 0})) == Partition({3, 1, 1}));
}

TEST_CASE("partition_to_omega") {
    CHECK(partition_to_omega(Partition({3, 3, 1}), 4) == DominantWeight(4, {0, 2, 1}));
    CHECK(partition_to_omega(Partition{}, 7).is_zero());
    CHECK(partition_to_omega(Partition({2, 2}), 4) == DominantWeight(4, {0, 2, 0}));
    CHECK_THROWS_AS(partition_to_omega(Partition({1, 1, 1, 1}), 4), RankMismatch);
}

TEST_CASE("weight validation") {
    CHECK_THROWS_AS(DominantWeight(4, {1, 0}), RankMismatch);
    CHECK_THROWS_AS(DominantWeight(4, {1, -1, 0}), InvalidInput);
    CHECK_THROWS_AS(DominantWeight(1), InvalidInput);
    CHECK_THROWS_AS(DominantWeight::fundamental(5, 5), RangeError);
    CHECK(DominantWeight(5, {2, 0, 1, 0}).to_string() == "2w1+w3");
}

TEST_CASE("lex_compare") {
    CHECK(lex_compare(Partition({3, 1}), Partition({2, 2})) > 0);
    CHECK(lex_compare(Partition({3, 1, 1}), Partition({3, 1, 1})) == 0);
    CHECK(lex_compare(Partition({3}), Partition({3, 1})) < 0);

    // total order on a grid: antisymmetric and transitive
    const auto grid = partitions_up_to(6, 4);
    for (const auto& p : grid)
        for (const auto& q : grid) {
            const auto pq = lex_compare(p, q);
            CHECK((pq == 0) == (p == q));
            CHECK((pq < 0) == (lex_compare(q, p) > 0));
            if (pq < 0)
                for (const auto& r : grid)
                    if (lex_compare(q, r) < 0)
                        CHECK(lex_compare(p, r) < 0);
        }
}

TEST_CASE("dual_weight") {
    CHECK(dual_weight(DominantWeight::fundamental(5, 1)) == DominantWeight::fundamental(5, 4));
    CHECK(dual_weight(DominantWeight(5, {2, 0, 1, 0})) == DominantWeight(5, {0, 1, 0, 2}));
    const DominantWeight w(6, {0, 1, 0, 0, 3});
    CHECK(dual_weight(dual_weight(w)) == w);
}

TEST_CASE("dim_irrep") {
    CHECK(dim_irrep(DominantWeight::fundamental(5, 2)) == 10);
    CHECK(dim_irrep(DominantWeight::fundamental(7, 3)) == 35);
    // 126 confirmed independently by counting tableaux of shape (3,1,1), entries <= 5
    CHECK(ssyt_count(Partition({3, 1, 1}), 5) == 126);
    CHECK(dim_irrep(DominantWeight(5, {2, 0, 1, 0})) == 126);
    CHECK(dim_irrep(DominantWeight(9)) == 1);

    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(dim_irrep(DominantWeight::fundamental(n, k)) == binomial(n, k));

    // exceeds 64 bits
    const BigInt big = dim_irrep(DominantWeight(12, {40, 0, 30, 0, 0, 20, 0, 0, 0, 0, 10}));
    CHECK(big > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("round trip and duality invariants") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& p : partitions_up_to(6, n - 1)) {
            const auto w = partition_to_omega(p, n);
            CHECK(omega_to_partition(w) == p);
            CHECK(partition_to_omega(omega_to_partition(w), n) == w);
            CHECK(dim_irrep(w) == dim_irrep(dual_weight(w)));
        }
    }
}

TEST_CASE("partitions_of counts") {
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n)
        CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
}

} // TEST_SUITE
