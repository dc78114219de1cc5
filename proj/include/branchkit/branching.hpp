#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "branchkit/fundamental.hpp"
#include "branchkit/multiplicities.hpp"
#include "branchkit/subalgebra.hpp"
#include "branchkit/weights.hpp"

namespace branchkit {

/// Memoization identity of one restriction problem.
struct BranchKey {
    int n = 0;
    Partition blocks;
    Partition lambda;

    BranchKey() = default;
    BranchKey(const SubalgebraType& t, const DominantWeight& w);
    BranchKey(int n_, Partition blocks_, Partition lambda_)
        : n(n_), blocks(std::move(blocks_)), lambda(std::move(lambda_)) {}

    /// "n|d_1,...,d_m|lambda_1,..."
    std::string to_string() const;
    /// Inverse of to_string; throws InvalidInput on malformed text.
    static BranchKey parse(const std::string& text);

    SubalgebraType type() const;
    DominantWeight weight() const;

    friend bool operator==(const BranchKey&, const BranchKey&) = default;
    friend std::strong_ordering operator<=>(const BranchKey& a, const BranchKey& b) noexcept;
};

enum class PivotRule { largest, smallest };

/// Index k such that lambda - omega_k is the recursion's predecessor.
/// Throws NoPivotError on the zero weight.
int select_pivot(const DominantWeight& lambda, PivotRule rule = PivotRule::largest);

/// Sum over 1 <= i < j <= n of (lambda_i - lambda_j): the top F_j for the principal type.
long long highest_component_principal_formula(const DominantWeight& lambda);

struct EngineStats {
    /// Restriction problems actually computed (not served from the memo).
    std::uint64_t computed = 0;
    std::uint64_t memo_hits = 0;
};

/// Memoized restriction of irreducible sl_n representations to sl2-subalgebras.
/// Thread-safe: lookups are shared, insertions serialized. Results do not depend
/// on call order.
class BranchingEngine {
public:
    explicit BranchingEngine(PivotRule pivot = PivotRule::largest, FundamentalOptions fundamental = {});

    BranchingEngine(const BranchingEngine&) = delete;
    BranchingEngine& operator=(const BranchingEngine&) = delete;

    /// Throws RankMismatch if the weight's rank differs from t.n().
    MultVector branch(const SubalgebraType& t, const DominantWeight& lambda);

    PivotRule pivot_rule() const noexcept { return pivot_; }
    const FundamentalOptions& fundamental_options() const noexcept { return fundamental_; }

    EngineStats stats() const noexcept;
    void reset_stats() noexcept;

    /// Copy of every memoized entry, key-ordered.
    std::vector<std::pair<BranchKey, MultVector>> snapshot() const;
    /// Seed the memo (e.g. from a cache file). Existing entries win.
    void import_entries(const std::vector<std::pair<BranchKey, MultVector>>& entries);
    std::size_t memo_size() const;
    void clear();

private:
    MultVector compute(const SubalgebraType& t, const DominantWeight& lambda, const BranchKey& key);
    std::optional<MultVector> find(const BranchKey& key) const;

    PivotRule pivot_;
    FundamentalOptions fundamental_;
    mutable std::shared_mutex mutex_;
    std::map<BranchKey, MultVector> memo_;
    std::atomic<std::uint64_t> computed_{0};
    mutable std::atomic<std::uint64_t> hits_{0};
};

/// Process-wide engine with the default pivot rule.
BranchingEngine& default_engine();

/// branch() on the process-wide engine.
MultVector branch(const SubalgebraType& t, const DominantWeight& lambda);

} // namespace branchkit
