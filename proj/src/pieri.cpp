#include "branchkit/pieri.hpp"

#include <algorithm>

#include "branchkit/errors.hpp"

namespace branchkit {

namespace {

void check_k(const DominantWeight& w, int k) {
    if (k < 1 || k > w.rank() - 1)
        throw RangeError("Pieri strip size " + std::to_string(k) + " out of range 1.." +
                         std::to_string(w.rank() - 1));
}

} // namespace

std::vector<DominantWeight> pieri_set(const DominantWeight& w, int k) {
    check_k(w, k);
    const int n = w.rank();
    const Partition lambda = omega_to_partition(w);
    std::vector<int> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];

    std::vector<Partition> found;
    std::vector<int> mu = rows;
    // Row i may take a box only if row i-1 stays at least as long afterwards.
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (remaining == 0) {
            std::vector<int> shape = mu;
            const int full_columns = shape.back();
            for (int& v : shape)
                v -= full_columns;
            found.emplace_back(std::move(shape));
            return;
        }
        if (n - row < remaining)
            return;
        const auto r = static_cast<std::size_t>(row);
        if (row == 0 || mu[r - 1] >= rows[r] + 1) {
            ++mu[r];
            self(self, row + 1, remaining - 1);
            --mu[r];
        }
        self(self, row + 1, remaining);
    };
    rec(rec, 0, k);

    std::sort(found.begin(), found.end(), [](const Partition& a, const Partition& b) { return lex_compare(a, b) > 0; });
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<DominantWeight> out;
    out.reserve(found.size());
    for (const auto& p : found)
        out.push_back(partition_to_omega(p, n));
    return out;
}

DominantWeight lex_max_member(const DominantWeight& w, int k) {
    check_k(w, k);
    std::vector<int> c(w.coeffs().begin(), w.coeffs().end());
    ++c[static_cast<std::size_t>(k - 1)];
    return DominantWeight(w.rank(), std::move(c));
}

} // namespace branchkit
