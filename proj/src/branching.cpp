#include "branchkit/branching.hpp"

#include <mutex>
#include <sstream>

#include "branchkit/errors.hpp"
#include "branchkit/pieri.hpp"

namespace branchkit {

namespace {

std::string join(std::span<const int> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<int> split_ints(const std::string& field) {
    std::vector<int> out;
    if (field.empty())
        return out;
    std::stringstream ss(field);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidInput("malformed integer '" + item + "' in key");
        }
        if (used != item.size())
            throw InvalidInput("malformed integer '" + item + "' in key");
        out.push_back(v);
    }
    return out;
}

} // namespace

BranchKey::BranchKey(const SubalgebraType& t, const DominantWeight& w)
    : n(t.n()), blocks(t.blocks()), lambda(omega_to_partition(w)) {}

std::string BranchKey::to_string() const {
    return std::to_string(n) + "|" + join(blocks.parts()) + "|" + join(lambda.parts());
}

BranchKey BranchKey::parse(const std::string& text) {
    const auto first = text.find('|');
    const auto second = first == std::string::npos ? std::string::npos : text.find('|', first + 1);
    if (second == std::string::npos || text.find('|', second + 1) != std::string::npos)
        throw InvalidInput("key '" + text + "' is not of the form n|blocks|lambda");
    const auto n_field = split_ints(text.substr(0, first));
    if (n_field.size() != 1)
        throw InvalidInput("key '" + text + "' has a malformed rank");
    BranchKey key(n_field[0], Partition(split_ints(text.substr(first + 1, second - first - 1))),
                  Partition(split_ints(text.substr(second + 1))));
    if (key.to_string() != text)
        throw InvalidInput("key '" + text + "' is not canonical");
    // validates the type and the weight
    (void)key.type();
    (void)key.weight();
    return key;
}

SubalgebraType BranchKey::type() const {
    return SubalgebraType(n, std::vector<int>(blocks.parts().begin(), blocks.parts().end()));
}

DominantWeight BranchKey::weight() const { return partition_to_omega(lambda, n); }

std::strong_ordering operator<=>(const BranchKey& a, const BranchKey& b) noexcept {
    if (auto c = a.n <=> b.n; c != 0)
        return c;
    if (auto c = lex_compare(a.blocks, b.blocks); c != 0)
        return c;
    return lex_compare(a.lambda, b.lambda);
}

int select_pivot(const DominantWeight& lambda, PivotRule rule) {
    const auto c = lambda.coeffs();
    if (rule == PivotRule::largest) {
        for (std::size_t i = c.size(); i-- > 0;)
            if (c[i] > 0)
                return static_cast<int>(i) + 1;
    } else {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] > 0)
                return static_cast<int>(i) + 1;
    }
    throw NoPivotError("the zero weight has no pivot");
}

long long highest_component_principal_formula(const DominantWeight& lambda) {
    const Partition p = omega_to_partition(lambda);
    const int n = lambda.rank();
    long long h = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            h += p[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(j)];
    return h;
}

BranchingEngine::BranchingEngine(PivotRule pivot, FundamentalOptions fundamental)
    : pivot_(pivot), fundamental_(fundamental) {}

std::optional<MultVector> BranchingEngine::find(const BranchKey& key) const {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    return std::nullopt;
}

MultVector BranchingEngine::branch(const SubalgebraType& t, const DominantWeight& lambda) {
    if (lambda.rank() != t.n())
        throw RankMismatch("weight of sl_" + std::to_string(lambda.rank()) + " restricted to a subalgebra of sl_" +
                           std::to_string(t.n()));
    if (lambda.is_zero())
        return MultVector::single(0);

    const BranchKey key(t, lambda);
    if (auto hit = find(key)) {
        hits_.fetch_add(1, std::memory_order_relaxed);
        return std::move(*hit);
    }
    MultVector result;
    try {
        result = compute(t, lambda, key);
    } catch (ConsistencyError& e) {
        e.push_context(key.to_string());
        throw;
    }
    computed_.fetch_add(1, std::memory_order_relaxed);
    std::unique_lock lock(mutex_);
    memo_.try_emplace(key, result);
    return result;
}

MultVector BranchingEngine::compute(const SubalgebraType& t, const DominantWeight& lambda, const BranchKey& key) {
    const int k = select_pivot(lambda, pivot_);
    std::vector<int> prev_coeffs(lambda.coeffs().begin(), lambda.coeffs().end());
    --prev_coeffs[static_cast<std::size_t>(k - 1)];
    const DominantWeight prev(lambda.rank(), std::move(prev_coeffs));
    if (prev.is_zero())
        return fundamental_branching(t, k, fundamental_);

    // Res(L(prev) (x) L(omega_k)) two ways: Clebsch-Gordan on the factors, and
    // Pieri followed by restriction. The lex-top Pieri summand is lambda itself.
    MultVector result = cg_convolve(branch(t, prev), branch(t, DominantWeight::fundamental(t.n(), k)));
    for (const auto& mu : pieri_set(prev, k)) {
        if (mu == lambda)
            continue;
        const MultVector lower = branch(t, mu);
        for (const auto& [d, m] : lower.entries()) {
            if (result[d] < m) {
                ConsistencyError err("recursion produced a negative multiplicity for F_" + std::to_string(d) +
                                     " at " + key.to_string() + " while subtracting " + mu.to_string());
                throw err;
            }
            result.add(d, -m);
        }
    }
    return result;
}

EngineStats BranchingEngine::stats() const noexcept {
    return {computed_.load(std::memory_order_relaxed), hits_.load(std::memory_order_relaxed)};
}

void BranchingEngine::reset_stats() noexcept {
    computed_ = 0;
    hits_ = 0;
}

std::vector<std::pair<BranchKey, MultVector>> BranchingEngine::snapshot() const {
    std::shared_lock lock(mutex_);
    return {memo_.begin(), memo_.end()};
}

void BranchingEngine::import_entries(const std::vector<std::pair<BranchKey, MultVector>>& entries) {
    std::unique_lock lock(mutex_);
    for (const auto& [key, value] : entries)
        memo_.try_emplace(key, value);
}

std::size_t BranchingEngine::memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

void BranchingEngine::clear() {
    std::unique_lock lock(mutex_);
    memo_.clear();
}

BranchingEngine& default_engine() {
    static BranchingEngine engine;
    return engine;
}

MultVector branch(const SubalgebraType& t, const DominantWeight& lambda) { return default_engine().branch(t, lambda); }

} // namespace branchkit
