#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "branchkit/multiplicities.hpp"
#include "branchkit/subalgebra.hpp"
#include "branchkit/weights.hpp"

namespace branchkit {

/// Brute-force ground truth: enumerates the semistandard tableaux of lambda's
/// shape, which index a weight basis of L(lambda), and reads off the sl2
/// weights directly. Shares nothing with the recursion beyond h_diagonal and
/// mult_from_multiset.

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Calls visit(entries) for every semistandard filling of `shape` with values
/// 1..n; `entries` is row-major. Throws BudgetExceeded after `budget` tableaux.
/// Returns the number of tableaux visited.
template <class Visit>
std::uint64_t for_each_ssyt(const Partition& shape, int n, std::uint64_t budget, Visit&& visit);

/// Number of semistandard tableaux of `shape` with entries <= n.
BigInt ssyt_count(const Partition& shape, int n, std::uint64_t budget = kDefaultOracleBudget);

/// Weight multiset of L(lambda) restricted to t, by tableau enumeration.
WeightMultiset oracle_weights(const SubalgebraType& t, const DominantWeight& lambda,
                              std::uint64_t budget = kDefaultOracleBudget);

MultVector oracle_branch(const SubalgebraType& t, const DominantWeight& lambda,
                         std::uint64_t budget = kDefaultOracleBudget);

} // namespace branchkit

#include "branchkit/detail/ssyt.hpp"
