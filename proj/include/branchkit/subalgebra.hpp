#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "branchkit/weights.hpp"

namespace branchkit {

/// Conjugacy class of an sl2-subalgebra of sl_n, recorded by the Jordan block
/// sizes of its nilpotent element.
class SubalgebraType {
public:
    /// Blocks may be given in any order; they are stored weakly decreasing.
    /// Throws InvalidInput unless the blocks are positive, sum to n, and at
    /// least one exceeds 1.
    SubalgebraType(int n, std::vector<int> blocks);
    /// Principal type [n].
    static SubalgebraType principal(int n);

    int n() const noexcept { return n_; }
    const Partition& blocks() const noexcept { return blocks_; }
    bool is_principal() const noexcept { return blocks_.length() == 1; }

    /// "[4,3]"
    std::string to_string() const;

    friend bool operator==(const SubalgebraType&, const SubalgebraType&) = default;

private:
    int n_;
    Partition blocks_;
};

inline bool is_principal(const SubalgebraType& t) noexcept { return t.is_principal(); }

/// Every sl2-subalgebra type of sl_n (partitions of n except all-ones), lex-descending.
std::vector<SubalgebraType> subalgebra_types(int n);

/// Diagonal of H: blocks concatenated, each (d-1, d-3, ..., -(d-1)).
std::vector<int> h_diagonal(const SubalgebraType& t);

class IntegerMatrix {
public:
    explicit IntegerMatrix(std::size_t size) : size_(size), data_(size * size, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * size_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * size_ + c]; }

    std::vector<std::vector<std::int64_t>> rows() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator*(std::int64_t s, const IntegerMatrix& a);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t size_;
    std::vector<std::int64_t> data_;
};

/// [a,b] = ab - ba
IntegerMatrix commutator(const IntegerMatrix& a, const IntegerMatrix& b);

struct Sl2Triple {
    IntegerMatrix h;
    IntegerMatrix x;
    IntegerMatrix y;
};

/// Block-diagonal standard triple. In a block of size r, Y carries i*(r-i) at (i+1, i).
Sl2Triple build_triple(const SubalgebraType& t);

/// [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H.
bool satisfies_sl2_relations(const Sl2Triple& triple);

} // namespace branchkit
