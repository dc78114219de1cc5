#include "branchkit/weights.hpp"

#include <algorithm>
#include <functional>

#include "branchkit/errors.hpp"

namespace branchkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw InvalidInput("partition has a negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw InvalidInput("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

int Partition::boxes() const noexcept {
    int s = 0;
    for (int p : parts_)
        s += p;
    return s;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::strong_ordering lex_compare(const Partition& p, const Partition& q) noexcept {
    const std::size_t len = std::max(p.length(), q.length());
    for (std::size_t i = 0; i < len; ++i) {
        if (auto c = p[i] <=> q[i]; c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

DominantWeight::DominantWeight(int rank) : DominantWeight(rank, std::vector<int>(rank >= 2 ? rank - 1 : 0, 0)) {}

DominantWeight::DominantWeight(int rank, std::vector<int> coeffs) : rank_(rank), coeffs_(std::move(coeffs)) {
    if (rank_ < 2)
        throw InvalidInput("rank must be at least 2, got " + std::to_string(rank_));
    if (coeffs_.size() != static_cast<std::size_t>(rank_ - 1))
        throw RankMismatch("sl_" + std::to_string(rank_) + " weight needs " + std::to_string(rank_ - 1) +
                           " coefficients, got " + std::to_string(coeffs_.size()));
    if (std::any_of(coeffs_.begin(), coeffs_.end(), [](int a) { return a < 0; }))
        throw InvalidInput("weight is not dominant: negative fundamental-weight coefficient");
}

DominantWeight DominantWeight::fundamental(int rank, int k) {
    if (k < 1 || k > rank - 1)
        throw RangeError("fundamental weight index " + std::to_string(k) + " out of range for sl_" +
                         std::to_string(rank));
    std::vector<int> c(static_cast<std::size_t>(rank - 1), 0);
    c[static_cast<std::size_t>(k - 1)] = 1;
    return DominantWeight(rank, std::move(c));
}

bool DominantWeight::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int a) { return a == 0; });
}

std::string DominantWeight::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!out.empty())
            out += '+';
        if (coeffs_[i] != 1)
            out += std::to_string(coeffs_[i]);
        out += "w" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

Partition omega_to_partition(const DominantWeight& w) {
    auto c = w.coeffs();
    std::vector<int> parts(c.size(), 0);
    int suffix = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        suffix += c[i];
        parts[i] = suffix;
    }
    return Partition(std::move(parts));
}

DominantWeight partition_to_omega(const Partition& p, int rank) {
    if (rank < 2)
        throw InvalidInput("rank must be at least 2");
    if (p.length() > static_cast<std::size_t>(rank - 1))
        throw RankMismatch("partition " + p.to_string() + " has more than " + std::to_string(rank - 1) +
                           " nonzero parts");
    std::vector<int> c(static_cast<std::size_t>(rank - 1));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = p[i] - p[i + 1];
    return DominantWeight(rank, std::move(c));
}

DominantWeight dual_weight(const DominantWeight& w) {
    auto c = w.coeffs();
    return DominantWeight(w.rank(), std::vector<int>(c.rbegin(), c.rend()));
}

BigInt dim_irrep(const DominantWeight& w) {
    const int n = w.rank();
    const Partition p = omega_to_partition(w);
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // l_i - l_j with l_i = lambda_i + n - i
            num *= p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(j)] + (j - i);
            den *= j - i;
        }
    }
    return num / den;
}

std::vector<Partition> partitions_of(int total) {
    std::vector<Partition> out;
    if (total < 0)
        return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(total, total);
    return out;
}

std::vector<Partition> partitions_up_to(int max_boxes, int max_parts) {
    std::vector<Partition> out;
    for (int size = 0; size <= max_boxes; ++size) {
        for (auto& p : partitions_of(size)) {
            if (p.length() <= static_cast<std::size_t>(max_parts))
                out.push_back(std::move(p));
        }
    }
    return out;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace branchkit
