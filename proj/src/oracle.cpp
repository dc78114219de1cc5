#include "branchkit/oracle.hpp"

namespace branchkit {

BigInt ssyt_count(const Partition& shape, int n, std::uint64_t budget) {
    return for_each_ssyt(shape, n, budget, [](const std::vector<int>&) {});
}

WeightMultiset oracle_weights(const SubalgebraType& t, const DominantWeight& lambda, std::uint64_t budget) {
    if (lambda.rank() != t.n())
        throw RankMismatch("weight rank does not match the subalgebra's n");
    const auto h = h_diagonal(t);
    WeightMultiset out;
    for_each_ssyt(omega_to_partition(lambda), t.n(), budget, [&](const std::vector<int>& entries) {
        int weight = 0;
        for (int e : entries)
            weight += h[static_cast<std::size_t>(e - 1)];
        out.add(weight);
    });
    return out;
}

MultVector oracle_branch(const SubalgebraType& t, const DominantWeight& lambda, std::uint64_t budget) {
    return mult_from_multiset(oracle_weights(t, lambda, budget));
}

} // namespace branchkit
