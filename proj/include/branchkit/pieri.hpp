#pragma once

#include <vector>

#include "branchkit/weights.hpp"

namespace branchkit {

/// Dominant weights of L(w) (x) L(omega_k): every way of adding a k-box vertical
/// strip to w's diagram, full columns of height n removed. Lex-descending, so
/// w + omega_k comes first. Throws RangeError unless 1 <= k <= n-1.
std::vector<DominantWeight> pieri_set(const DominantWeight& w, int k);

/// w + omega_k, the lex-maximal member of pieri_set(w, k).
DominantWeight lex_max_member(const DominantWeight& w, int k);

} // namespace branchkit
