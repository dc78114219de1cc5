#pragma once

#include <span>
#include <vector>

#include "branchkit/multiplicities.hpp"
#include "branchkit/subalgebra.hpp"

namespace branchkit {

/// Visits every t-subset of {0, ..., n-1} in revolving-door order: consecutive
/// subsets differ by exactly one element leaving and one entering.
/// `visit(combo, removed, added)` sees the subset ascending; on the first
/// visit `removed` and `added` are -1.
template <class Visit>
void revolving_door(int n, int t, Visit&& visit) {
    if (t < 0 || t > n)
        return;
    std::vector<int> c(static_cast<std::size_t>(t) + 2);
    for (int j = 1; j <= t; ++j)
        c[static_cast<std::size_t>(j)] = j - 1;
    c[static_cast<std::size_t>(t) + 1] = n;
    const std::span<const int> combo(c.data() + 1, static_cast<std::size_t>(t));
    visit(combo, -1, -1);
    if (t == 0 || t == n)
        return;
    if (t == 1) {
        for (int v = 1; v < n; ++v) {
            c[1] = v;
            visit(combo, v - 1, v);
        }
        return;
    }
    // Knuth, TAOCP 7.2.1.3, Algorithm R.
    auto at = [&c](int j) -> int& { return c[static_cast<std::size_t>(j)]; };
    for (;;) {
        int j = 2;
        bool try_decrease;
        if (t % 2 == 1) {
            if (at(1) + 1 < at(2)) {
                ++at(1);
                visit(combo, at(1) - 1, at(1));
                continue;
            }
            try_decrease = true;
        } else {
            if (at(1) > 0) {
                --at(1);
                visit(combo, at(1) + 1, at(1));
                continue;
            }
            try_decrease = false;
        }
        bool moved = false;
        while (j <= t) {
            if (try_decrease) {
                // here c_j == c_{j-1} + 1
                if (at(j) >= j) {
                    const int removed = at(j);
                    at(j) = at(j - 1);
                    at(j - 1) = j - 2;
                    visit(combo, removed, j - 2);
                    moved = true;
                    break;
                }
                ++j;
                try_decrease = false;
            } else {
                // here c_{j-1} == j - 2
                if (at(j) + 1 < at(j + 1)) {
                    const int removed = at(j - 1);
                    at(j - 1) = at(j);
                    ++at(j);
                    visit(combo, removed, at(j));
                    moved = true;
                    break;
                }
                ++j;
                try_decrease = true;
            }
        }
        if (!moved)
            return;
    }
}

/// Default guard on n for k-subset enumeration.
inline constexpr int kDefaultMaxRank = 30;

struct FundamentalOptions {
    /// Above this n the weight-multiset method is not run; a closed form must apply.
    int max_rank = kDefaultMaxRank;
    /// Cross-check every applicable closed form against the weight-multiset result.
    bool verify = false;
};

/// Multiset of all sums of k distinct entries of `values`. 0 <= k <= values.size().
WeightMultiset k_subset_sums(std::span<const int> values, int k);

/// Weights of L(omega_k) restricted to the type-t subalgebra. 1 <= k <= n-1;
/// BudgetExceeded if n > max_rank.
WeightMultiset lambda_k_multiset(const SubalgebraType& t, int k, int max_rank = kDefaultMaxRank);

/// Principal type, multiplicity of F_j in L(omega_k) via strict-tuple counts.
Count mult_prop31(int n, int k, int j);
/// Principal type, via restricted partition counts.
Count mult_cayley_sylvester(int n, int k, int j);
/// Principal type, plethysm closed forms for k = 2 and k = 3 only.
Count mult_macdonald(int n, int k, int j);

enum class PrincipalRule { prop31, cayley_sylvester, macdonald };
/// Full principal decomposition of L(omega_k) of sl_n, j = 0..k(n-k), by one closed-form rule.
MultVector principal_fundamental(int n, int k, PrincipalRule rule);

/// Restriction of L(omega_k) to t.
MultVector fundamental_branching(const SubalgebraType& t, int k, const FundamentalOptions& opts = {});

/// Closed form for L(omega_2) and an arbitrary type.
MultVector branching_k2_general(const SubalgebraType& t, const FundamentalOptions& opts = {});
/// Closed form for types [r,1,...,1], 1 <= k <= n/2.
MultVector branching_hook(const SubalgebraType& t, int k, const FundamentalOptions& opts = {});
/// Closed form for two-block types [r,s], 1 <= k <= n/2.
MultVector branching_two_blocks(const SubalgebraType& t, int k, const FundamentalOptions& opts = {});

bool is_hook(const SubalgebraType& t) noexcept;

} // namespace branchkit
