#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace branchkit {

using BigInt = boost::multiprecision::cpp_int;

/// A weakly decreasing tuple of nonnegative integers, stored without trailing
/// zeros. The same type serves as a Young diagram, as the partition form of a
/// dominant weight, and as an sl2-subalgebra type (Jordan block sizes).
class Partition {
public:
    Partition() = default;
    /// Throws InvalidInput if `parts` is not weakly decreasing or has a negative entry.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    /// Number of nonzero parts.
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    /// Part i (0-based); zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int boxes() const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Lexicographic comparison, absent parts read as zero.
std::strong_ordering lex_compare(const Partition& p, const Partition& q) noexcept;

/// Total order used for map keys; agrees with lex_compare.
inline bool operator<(const Partition& p, const Partition& q) noexcept { return lex_compare(p, q) < 0; }

/// Dominant integral weight of sl_n in fundamental-weight coordinates (a_1, ..., a_{n-1}).
class DominantWeight {
public:
    /// The zero weight of sl_rank.
    explicit DominantWeight(int rank);
    /// Throws RankMismatch if coeffs.size() != rank-1, InvalidInput on a negative entry or rank < 2.
    DominantWeight(int rank, std::vector<int> coeffs);

    /// omega_k of sl_rank, 1 <= k <= rank-1.
    static DominantWeight fundamental(int rank, int k);

    int rank() const noexcept { return rank_; }
    std::span<const int> coeffs() const noexcept { return coeffs_; }
    /// a_k with 1-based k, as in the usual notation.
    int coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k - 1)); }
    bool is_zero() const noexcept;

    /// Human readable, e.g. "2w1+w3"; "0" for the zero weight.
    std::string to_string() const;

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

private:
    int rank_;
    std::vector<int> coeffs_;
};

Partition omega_to_partition(const DominantWeight& w);
/// Throws RankMismatch if p has more than rank-1 nonzero parts.
DominantWeight partition_to_omega(const Partition& p, int rank);
/// a_i -> a_{n-i}.
DominantWeight dual_weight(const DominantWeight& w);

/// Weyl dimension formula, exact.
BigInt dim_irrep(const DominantWeight& w);

/// All partitions of `total`, lex-descending.
std::vector<Partition> partitions_of(int total);
/// All partitions with at most `max_parts` parts and at most `max_boxes` boxes,
/// grouped by size ascending, lex-descending within a size.
std::vector<Partition> partitions_up_to(int max_boxes, int max_parts);

BigInt binomial(int n, int k);

} // namespace branchkit
