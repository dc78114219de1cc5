#include "doctest.h"

#include <set>

#include "test_support.hpp"

using namespace branchkit;
using branchkit::testing::brute_subset_sums;

namespace {

WeightMultiset from_list(std::initializer_list<int> values) {
    WeightMultiset w;
    for (int v : values)
        w.add(v);
    return w;
}

MultVector mv(std::map<int, Count> m) { return MultVector(m); }

} // namespace

TEST_SUITE("fundamental") {

TEST_CASE("revolving door visits every subset once, one swap at a time") {
    for (int n = 0; n <= 9; ++n)
        for (int t = 0; t <= n; ++t) {
            std::set<std::vector<int>> seen;
            std::vector<int> previous;
            bool swaps_ok = true;
            revolving_door(n, t, [&](std::span<const int> combo, int removed, int added) {
                std::vector<int> now(combo.begin(), combo.end());
                if (!previous.empty() || removed >= 0) {
                    std::vector<int> expected = previous;
                    std::erase(expected, removed);
                    expected.push_back(added);
                    std::sort(expected.begin(), expected.end());
                    swaps_ok = swaps_ok && expected == now && removed != added;
                }
                swaps_ok = swaps_ok && std::is_sorted(now.begin(), now.end());
                seen.insert(now);
                previous = std::move(now);
            });
            CHECK(swaps_ok);
            CHECK(BigInt(seen.size()) == binomial(n, t));
        }
}

TEST_CASE("k_subset_sums matches bitmask enumeration") {
    for (int n = 2; n <= 9; ++n)
        for (const auto& t : subalgebra_types(n)) {
            const auto h = h_diagonal(t);
            for (int k = 1; k < n; ++k) {
                const auto got = lambda_k_multiset(t, k);
                CHECK(got.counts() == brute_subset_sums(h, k));
            }
        }
}

TEST_CASE("weight multiset of omega_3 for [4,3]") {
    const auto expected = from_list({3,  1,  6, 4, 2, -1, 4, 2,  0,  2,  0,  -2, 5,  3,  1,  -3, 2, 0,
                                     -2, 0, -2, -4, 3, 1, -1, -2, -4, -6, 1, -1, -3, -1, -3, -5, 0});
    const auto got = lambda_k_multiset(SubalgebraType(7, {4, 3}), 3);
    CHECK(got.total() == 35);
    CHECK(got == expected);
    CHECK(mult_from_multiset(got) == mv({{0, 1}, {1, 1}, {2, 2}, {3, 2}, {4, 1}, {5, 1}, {6, 1}}));
}

TEST_CASE("weight multiset of omega_2 for [5]") {
    const auto expected = from_list({6, 4, 2, 0, 2, 0, -2, -2, -4, -6});
    CHECK(lambda_k_multiset(SubalgebraType::principal(5), 2) == expected);
    CHECK(lambda_k_multiset(SubalgebraType::principal(5), 3) == expected);
}

TEST_CASE("weight multiset of omega_2 for [3,2]") {
    const auto expected = from_list({2, 0, 3, 1, -2, 1, -1, -1, -3, 0});
    CHECK(lambda_k_multiset(SubalgebraType(5, {3, 2}), 2) == expected);
    CHECK(lambda_k_multiset(SubalgebraType(5, {3, 2}), 3) == expected);
}

TEST_CASE("principal closed-form examples") {
    CHECK(principal_fundamental(5, 2, PrincipalRule::prop31) == mv({{2, 1}, {6, 1}}));
    CHECK(principal_fundamental(5, 2, PrincipalRule::cayley_sylvester) == mv({{2, 1}, {6, 1}}));
    CHECK(principal_fundamental(5, 2, PrincipalRule::macdonald) == mv({{2, 1}, {6, 1}}));
    CHECK(principal_fundamental(5, 1, PrincipalRule::prop31) == mv({{4, 1}}));
    CHECK(principal_fundamental(4, 2, PrincipalRule::cayley_sylvester) == mv({{0, 1}, {4, 1}}));
    CHECK(mult_prop31(5, 2, 3) == 0);
    CHECK_THROWS_AS(mult_macdonald(6, 4, 0), UnsupportedError);
    CHECK_THROWS_AS(mult_prop31(5, 5, 0), RangeError);
}

TEST_CASE("principal closed forms agree with the weight multiset") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k) {
            const auto t = SubalgebraType::principal(n);
            const auto ref = mult_from_multiset(lambda_k_multiset(t, k));
            CHECK(principal_fundamental(n, k, PrincipalRule::prop31) == ref);
            CHECK(principal_fundamental(n, k, PrincipalRule::cayley_sylvester) == ref);
            if ((k == 2 || k == 3) && n >= k + 1)
                CHECK(principal_fundamental(n, k, PrincipalRule::macdonald) == ref);
            for (int j = 0; j <= k * (n - k) + 2; ++j) {
                CHECK(mult_prop31(n, k, j) == ref[j]);
                CHECK(mult_cayley_sylvester(n, k, j) == ref[j]);
            }
        }
}

TEST_CASE("structured closed-form examples") {
    const SubalgebraType t43(7, {4, 3});
    const auto expected = mv({{0, 1}, {1, 1}, {2, 2}, {3, 2}, {4, 1}, {5, 1}, {6, 1}});
    CHECK(fundamental_branching(t43, 3) == expected);
    CHECK(branching_two_blocks(t43, 3) == expected);

    const SubalgebraType t32(5, {3, 2});
    CHECK(fundamental_branching(t32, 1) == mv({{1, 1}, {2, 1}}));
    CHECK(fundamental_branching(t32, 2) == mv({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    CHECK(branching_two_blocks(t32, 2) == mv({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    CHECK(branching_k2_general(t32) == mv({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));

    for (int r = 2; r <= 7; ++r)
        CHECK(branching_hook(SubalgebraType(r + 1, {r, 1}), 1) == mv({{0, 1}, {r - 1, 1}}));
}

TEST_CASE("structured closed forms agree with the weight multiset") {
    for (int n = 3; n <= 9; ++n)
        for (const auto& t : subalgebra_types(n)) {
            CHECK(branching_k2_general(t) == mult_from_multiset(lambda_k_multiset(t, 2)));
            for (int k = 1; k <= n / 2; ++k) {
                const auto ref = mult_from_multiset(lambda_k_multiset(t, k));
                if (is_hook(t))
                    CHECK(branching_hook(t, k) == ref);
                if (t.blocks().length() == 2)
                    CHECK(branching_two_blocks(t, k) == ref);
            }
        }
}

TEST_CASE("verify mode cross-checks without complaint") {
    FundamentalOptions opts;
    opts.verify = true;
    for (int n = 2; n <= 8; ++n)
        for (const auto& t : subalgebra_types(n))
            for (int k = 1; k < n; ++k)
                CHECK_NOTHROW(fundamental_branching(t, k, opts));
}

TEST_CASE("dimension and summand count") {
    for (int n = 2; n <= 10; ++n)
        for (const auto& t : subalgebra_types(n))
            for (int k = 1; k < n; ++k) {
                const auto w = lambda_k_multiset(t, k);
                const auto m = mult_from_multiset(w);
                CHECK(m.dimension() == binomial(n, k));
                CHECK(m.summands() == w.count(0) + w.count(1));
            }
}

TEST_CASE("Hermite reciprocity for the principal type") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(fundamental_branching(SubalgebraType::principal(n), k) ==
                  fundamental_branching(SubalgebraType::principal(n), n - k));
}

TEST_CASE("k and n-k agree for every type up to n = 9") {
    for (int n = 2; n <= 9; ++n)
        for (const auto& t : subalgebra_types(n))
            for (int k = 1; k < n; ++k)
                CHECK(fundamental_branching(t, k) == fundamental_branching(t, n - k));
}

TEST_CASE("principal fundamentals are pairwise distinct below n/2") {
    for (int n = 2; n <= 12; ++n)
        for (int i = 1; i <= n / 2; ++i)
            for (int j = i + 1; j <= n / 2; ++j)
                CHECK(fundamental_branching(SubalgebraType::principal(n), i) !=
                      fundamental_branching(SubalgebraType::principal(n), j));
}

TEST_CASE("closed forms serve n beyond the rank guard") {
    FundamentalOptions opts;
    opts.max_rank = 6;
    const auto t = SubalgebraType::principal(9);
    CHECK(fundamental_branching(t, 3, opts) == fundamental_branching(t, 3));
    CHECK(fundamental_branching(SubalgebraType(9, {5, 4}), 4, opts) == fundamental_branching(SubalgebraType(9, {5, 4}), 4));
    CHECK_THROWS_AS(fundamental_branching(SubalgebraType(9, {4, 3, 2}), 3, opts), BudgetExceeded);
    CHECK_THROWS_AS(lambda_k_multiset(t, 3, 6), BudgetExceeded);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(branching_hook(SubalgebraType(7, {4, 3}), 2), ShapeError);
    CHECK_THROWS_AS(branching_two_blocks(SubalgebraType(7, {4, 2, 1}), 2), ShapeError);
    CHECK_THROWS_AS(branching_two_blocks(SubalgebraType(7, {4, 3}), 4), RangeError);
    CHECK_THROWS_AS(branching_hook(SubalgebraType(6, {4, 1, 1}), 4), RangeError);
    CHECK_THROWS_AS(fundamental_branching(SubalgebraType(5, {3, 2}), 5), RangeError);
    CHECK_THROWS_AS(fundamental_branching(SubalgebraType(5, {3, 2}), 0), RangeError);

    WeightMultiset lopsided;
    lopsided.add(2);
    lopsided.add(0);
    CHECK_THROWS_AS(mult_from_multiset(lopsided), CorruptMultiset);
    WeightMultiset hollow;
    hollow.add(2);
    hollow.add(-2);
    hollow.add(0, 2);
    hollow.add(4);
    hollow.add(-4);
    CHECK_NOTHROW(mult_from_multiset(hollow));
    WeightMultiset bad;
    bad.add(2, 2);
    bad.add(-2, 2);
    bad.add(0, 1);
    CHECK_THROWS_AS(mult_from_multiset(bad), CorruptMultiset);
}

} // TEST_SUITE
