#include "branchkit/subalgebra.hpp"

#include <algorithm>
#include <functional>

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

Partition sorted_blocks(std::vector<int> blocks) {
    for (int b : blocks) {
        if (b < 1)
            throw InvalidInput("Jordan block sizes must be positive");
    }
    std::sort(blocks.begin(), blocks.end(), std::greater<>());
    return Partition(std::move(blocks));
}

} // namespace

SubalgebraType::SubalgebraType(int n, std::vector<int> blocks) : n_(n), blocks_(sorted_blocks(std::move(blocks))) {
    if (n_ < 2)
        throw InvalidInput("sl_n needs n >= 2");
    if (blocks_.boxes() != n_)
        throw InvalidInput("blocks " + to_string() + " do not form a partition of " + std::to_string(n_));
    if (blocks_[0] < 2)
        throw InvalidInput("all-ones type corresponds to the zero nilpotent and is not an sl2-subalgebra");
}

SubalgebraType SubalgebraType::principal(int n) { return SubalgebraType(n, {n}); }

std::string SubalgebraType::to_string() const {
    std::string out = "[";
    auto parts = blocks_.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts[i]);
    }
    return out + "]";
}

std::vector<SubalgebraType> subalgebra_types(int n) {
    std::vector<SubalgebraType> out;
    for (const auto& p : partitions_of(n)) {
        if (p[0] >= 2)
            out.emplace_back(n, std::vector<int>(p.parts().begin(), p.parts().end()));
    }
    return out;
}

std::vector<int> h_diagonal(const SubalgebraType& t) {
    std::vector<int> diag;
    diag.reserve(static_cast<std::size_t>(t.n()));
    for (int d : t.blocks().parts()) {
        for (int v = d - 1; v >= -(d - 1); v -= 2)
            diag.push_back(v);
    }
    return diag;
}

std::vector<std::vector<std::int64_t>> IntegerMatrix::rows() const {
    std::vector<std::vector<std::int64_t>> out(size_);
    for (std::size_t r = 0; r < size_; ++r)
        out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * size_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * size_));
    return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix out(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i)
        for (std::size_t k = 0; k < a.size_; ++k) {
            const std::int64_t aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < a.size_; ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix out(a.size_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

IntegerMatrix operator*(std::int64_t s, const IntegerMatrix& a) {
    IntegerMatrix out(a.size_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        out.data_[i] = s * a.data_[i];
    return out;
}

IntegerMatrix commutator(const IntegerMatrix& a, const IntegerMatrix& b) { return a * b - b * a; }

Sl2Triple build_triple(const SubalgebraType& t) {
    const auto n = static_cast<std::size_t>(t.n());
    Sl2Triple triple{IntegerMatrix(n), IntegerMatrix(n), IntegerMatrix(n)};
    std::size_t offset = 0;
    for (int r : t.blocks().parts()) {
        for (int i = 0; i < r; ++i) {
            const std::size_t p = offset + static_cast<std::size_t>(i);
            triple.h(p, p) = r - 1 - 2 * i;
            if (i + 1 < r) {
                triple.x(p, p + 1) = 1;
                // 1-based row i+2, column i+1 gets (i+1)(r-i-1)
                triple.y(p + 1, p) = static_cast<std::int64_t>(i + 1) * (r - i - 1);
            }
        }
        offset += static_cast<std::size_t>(r);
    }
    return triple;
}

bool satisfies_sl2_relations(const Sl2Triple& t) {
    return commutator(t.h, t.x) == 2 * t.x && commutator(t.h, t.y) == -2 * t.y && commutator(t.x, t.y) == t.h;
}

} // namespace branchkit
