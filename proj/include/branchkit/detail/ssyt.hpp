#pragma once

#include <string>

#include "branchkit/errors.hpp"

namespace branchkit {

template <class Visit>
std::uint64_t for_each_ssyt(const Partition& shape, int n, std::uint64_t budget, Visit&& visit) {
    if (shape.length() > static_cast<std::size_t>(n))
        throw RangeError("shape " + shape.to_string() + " has more than " + std::to_string(n) + " rows");

    // cells in row-major order, with the index of the cell above (or -1)
    struct Cell {
        int above;
        int left;
        int max_entry;
    };
    std::vector<Cell> cells;
    const auto parts = shape.parts();
    std::vector<int> row_start(parts.size(), 0);
    for (std::size_t r = 0; r < parts.size(); ++r) {
        row_start[r] = static_cast<int>(cells.size());
        for (int c = 0; c < parts[r]; ++c) {
            int height = 0; // rows of the shape that reach column c
            while (static_cast<std::size_t>(height) < parts.size() && parts[static_cast<std::size_t>(height)] > c)
                ++height;
            cells.push_back({r == 0 ? -1 : row_start[r - 1] + c, c == 0 ? -1 : static_cast<int>(cells.size()) - 1,
                             n - (height - 1 - static_cast<int>(r))});
        }
    }

    std::vector<int> entries(cells.size(), 0);
    std::uint64_t count = 0;
    const std::size_t total = cells.size();
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == total) {
            if (++count > budget)
                throw BudgetExceeded("tableau enumeration of shape " + shape.to_string() + " exceeded budget " +
                                     std::to_string(budget));
            visit(static_cast<const std::vector<int>&>(entries));
            return;
        }
        const Cell& cell = cells[i];
        int lo = 1;
        if (cell.left >= 0)
            lo = entries[static_cast<std::size_t>(cell.left)];
        if (cell.above >= 0)
            lo = std::max(lo, entries[static_cast<std::size_t>(cell.above)] + 1);
        for (int v = lo; v <= cell.max_entry; ++v) {
            entries[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace branchkit
