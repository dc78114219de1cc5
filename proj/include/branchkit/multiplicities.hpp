#pragma once

#include <map>
#include <string>

#include "branchkit/checked.hpp"
#include "branchkit/weights.hpp"

namespace branchkit {

/// Multiset of H-eigenvalues (weights) of a representation restricted to an sl2.
class WeightMultiset {
public:
    void add(int weight, Count times = 1);

    const std::map<int, Count>& counts() const noexcept { return counts_; }
    Count count(int weight) const;
    Count total() const noexcept { return total_; }
    /// counts(j) == counts(-j) for every j.
    bool is_symmetric() const;

    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

private:
    std::map<int, Count> counts_;
    Count total_ = 0;
};

/// Sparse decomposition into sl2 irreducibles: j -> multiplicity of F_j.
/// Only positive multiplicities are stored.
class MultVector {
public:
    MultVector() = default;
    /// Zero entries are dropped; negative entries throw ConsistencyError.
    explicit MultVector(const std::map<int, Count>& mults);
    /// m copies of F_j.
    static MultVector single(int j, Count m = 1);

    /// Adds `times` copies of F_j. `times` may be negative as long as the
    /// result stays nonnegative; otherwise ConsistencyError.
    void add(int j, Count times = 1);

    const std::map<int, Count>& entries() const noexcept { return mults_; }
    Count operator[](int j) const;
    bool empty() const noexcept { return mults_.empty(); }

    /// Throws RangeError on an empty vector.
    int highest() const;
    int lowest() const;

    /// Number of irreducible summands.
    Count summands() const;
    /// Sum of m_j * (j + 1).
    BigInt dimension() const;

    /// "{0:1, 4:1, 8:1}"
    std::string to_string() const;

    friend bool operator==(const MultVector&, const MultVector&) = default;

private:
    std::map<int, Count> mults_;
};

inline int highest_component(const MultVector& m) { return m.highest(); }
inline int lowest_component(const MultVector& m) { return m.lowest(); }

/// m_j = dim V_j - dim V_{j+2}. Throws CorruptMultiset if the input is not
/// symmetric or a difference comes out negative.
MultVector mult_from_multiset(const WeightMultiset& w);

/// Clebsch-Gordan: F_j (x) F_j' = F_{|j-j'|} + F_{|j-j'|+2} + ... + F_{j+j'}, bilinearly extended.
MultVector cg_convolve(const MultVector& a, const MultVector& b);

/// Multiply every multiplicity by `factor` (>= 0).
MultVector scaled(const MultVector& m, Count factor);
/// Pointwise sum.
MultVector& operator+=(MultVector& a, const MultVector& b);

} // namespace branchkit
