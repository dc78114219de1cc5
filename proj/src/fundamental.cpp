#include "branchkit/fundamental.hpp"

#include <algorithm>
#include <limits>

#include "branchkit/errors.hpp"
#include "branchkit/qcomb.hpp"

namespace branchkit {

namespace {

void check_k(const SubalgebraType& t, int k) {
    if (k < 1 || k > t.n() - 1)
        throw RangeError("k = " + std::to_string(k) + " out of range 1.." + std::to_string(t.n() - 1));
}

void check_half_range(const SubalgebraType& t, int k) {
    if (k < 1 || k > t.n() / 2)
        throw RangeError("closed form needs 1 <= k <= " + std::to_string(t.n() / 2) + ", got " + std::to_string(k));
}

/// Res L(omega_k) of sl_r to its principal subalgebra, with the k = 0 and
/// k = r ends (and r = 1) read as the trivial representation.
MultVector principal_piece(int r, int k, const FundamentalOptions& opts) {
    if (k < 0 || k > r)
        throw RangeError("principal piece index out of range");
    if (k == 0 || k == r)
        return MultVector::single(0);
    return fundamental_branching(SubalgebraType::principal(r), k, opts);
}

Count small_binomial(int n, int k) {
    const BigInt b = binomial(n, k);
    if (b > std::numeric_limits<Count>::max())
        throw ArithmeticOverflow("binomial coefficient exceeds 63 bits");
    return static_cast<Count>(b);
}

void expect_equal(const MultVector& reference, const MultVector& candidate, const SubalgebraType& t, int k,
                  const char* rule) {
    if (reference != candidate)
        throw ConsistencyError(std::string(rule) + " disagrees with weight multiset for " + t.to_string() +
                               ", k=" + std::to_string(k) + ": " + candidate.to_string() + " vs " +
                               reference.to_string());
}

/// Every closed form that applies to (t,k), for verification or for n beyond the enumeration guard.
std::vector<std::pair<const char*, MultVector>> closed_forms(const SubalgebraType& t, int k,
                                                             const FundamentalOptions& opts) {
    std::vector<std::pair<const char*, MultVector>> out;
    const int n = t.n();
    if (t.is_principal()) {
        out.emplace_back("cayley-sylvester", principal_fundamental(n, k, PrincipalRule::cayley_sylvester));
        out.emplace_back("prop31", principal_fundamental(n, k, PrincipalRule::prop31));
        if (k == 2 || k == 3)
            out.emplace_back("macdonald", principal_fundamental(n, k, PrincipalRule::macdonald));
        return out;
    }
    if (k == 1) {
        MultVector m;
        for (int d : t.blocks().parts())
            m.add(d - 1);
        out.emplace_back("k1", std::move(m));
    }
    if (k == 2)
        out.emplace_back("k2-general", branching_k2_general(t, opts));
    if (k <= n / 2) {
        if (is_hook(t))
            out.emplace_back("hook", branching_hook(t, k, opts));
        if (t.blocks().length() == 2)
            out.emplace_back("two-blocks", branching_two_blocks(t, k, opts));
    }
    return out;
}

} // namespace

WeightMultiset k_subset_sums(std::span<const int> values, int k) {
    const int n = static_cast<int>(values.size());
    if (k < 0 || k > n)
        throw RangeError("subset size out of range");
    WeightMultiset out;
    long long sum = 0;
    revolving_door(n, k, [&](std::span<const int> combo, int removed, int added) {
        if (removed < 0) {
            for (int i : combo)
                sum += values[static_cast<std::size_t>(i)];
        } else {
            sum += values[static_cast<std::size_t>(added)] - values[static_cast<std::size_t>(removed)];
        }
        out.add(static_cast<int>(sum));
    });
    return out;
}

WeightMultiset lambda_k_multiset(const SubalgebraType& t, int k, int max_rank) {
    check_k(t, k);
    if (t.n() > max_rank)
        throw BudgetExceeded("k-subset enumeration for n = " + std::to_string(t.n()) + " exceeds the rank guard " +
                             std::to_string(max_rank));
    const auto diag = h_diagonal(t);
    return k_subset_sums(diag, k);
}

Count mult_prop31(int n, int k, int j) {
    if (k < 1 || k > n - 1 || j < 0)
        throw RangeError("mult_prop31 needs 1 <= k <= n-1 and j >= 0");
    const int twice = k * n - j + k;
    if (twice % 2 != 0)
        return 0;
    const int d = twice / 2;
    const Count m = p_k_n(k, n, d) - p_k_n(k, n, d - 1);
    if (m < 0)
        throw ConsistencyError("negative multiplicity from strict-tuple counts");
    return m;
}

Count mult_cayley_sylvester(int n, int k, int j) {
    if (k < 1 || k > n - 1 || j < 0)
        throw RangeError("mult_cayley_sylvester needs 1 <= k <= n-1 and j >= 0");
    const int top = k * (n - k);
    if (j > top || (top - j) % 2 != 0)
        return 0;
    const int e = (top - j) / 2;
    const Count m = pi(n - k, k, e) - pi(n - k, k, e - 1);
    if (m < 0)
        throw ConsistencyError("negative multiplicity from restricted partition counts");
    return m;
}

Count mult_macdonald(int n, int k, int j) {
    if (k != 2 && k != 3)
        throw UnsupportedError("plethysm closed form only covers k = 2 and k = 3");
    if (n < k + 1 || j < 0)
        throw RangeError("mult_macdonald needs n >= k+1 and j >= 0");
    if (k == 2) {
        // s_(2) o s_(n-2) = sum over even i of s_(2n-4-i, i); F_j <-> lambda_1 - lambda_2 = j
        const int twice_l2 = 2 * n - j - 4;
        if (twice_l2 < 0 || twice_l2 % 2 != 0)
            return 0;
        return (twice_l2 / 2) % 2 == 0 ? 1 : 0;
    }
    // k == 3: mu = (mu1, mu2, 0) a partition of 3n-9 with mu1 - mu2 = j
    const int twice_mu2 = 3 * n - j - 9;
    if (twice_mu2 < 0 || twice_mu2 % 2 != 0)
        return 0;
    const int mu2 = twice_mu2 / 2;
    const int mu1 = mu2 + j;
    const int mu3 = 0;
    const int m = std::min(mu1 - mu2, mu2 - mu3);
    const bool eps = (m % 2 == 0 && mu2 % 2 == 0) || m % 6 == 3 || m % 6 == 5;
    return m / 6 + (eps ? 1 : 0);
}

MultVector principal_fundamental(int n, int k, PrincipalRule rule) {
    if (n < 2 || k < 1 || k > n - 1)
        throw RangeError("principal_fundamental needs 1 <= k <= n-1");
    MultVector out;
    for (int j = 0; j <= k * (n - k); ++j) {
        switch (rule) {
        case PrincipalRule::prop31: out.add(j, mult_prop31(n, k, j)); break;
        case PrincipalRule::cayley_sylvester: out.add(j, mult_cayley_sylvester(n, k, j)); break;
        case PrincipalRule::macdonald: out.add(j, mult_macdonald(n, k, j)); break;
        }
    }
    return out;
}

bool is_hook(const SubalgebraType& t) noexcept {
    auto parts = t.blocks().parts();
    return std::all_of(parts.begin() + 1, parts.end(), [](int d) { return d == 1; });
}

MultVector branching_k2_general(const SubalgebraType& t, const FundamentalOptions& opts) {
    if (t.n() < 3)
        throw RangeError("L(omega_2) needs n >= 3");
    auto blocks = t.blocks().parts();
    MultVector out;
    Count twos = 0;
    for (int d : blocks) {
        if (d >= 3)
            out += principal_piece(d, 2, opts);
        else if (d == 2)
            ++twos;
    }
    out.add(0, twos);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            out += cg_convolve(MultVector::single(blocks[i] - 1), MultVector::single(blocks[j] - 1));
    return out;
}

MultVector branching_hook(const SubalgebraType& t, int k, const FundamentalOptions& opts) {
    if (!is_hook(t))
        throw ShapeError("type " + t.to_string() + " is not of the form [r,1,...,1]");
    check_half_range(t, k);
    const int n = t.n();
    const int r = t.blocks()[0];
    const int ones = n - r;
    const int alpha = std::min(k, r);
    const int beta = std::min(k - 1, ones);
    MultVector out;
    for (int j = k - alpha; j <= beta; ++j)
        out += scaled(principal_piece(r, k - j, opts), small_binomial(ones, j));
    out.add(0, small_binomial(ones, k));
    return out;
}

MultVector branching_two_blocks(const SubalgebraType& t, int k, const FundamentalOptions& opts) {
    if (t.blocks().length() != 2)
        throw ShapeError("type " + t.to_string() + " does not have exactly two blocks");
    check_half_range(t, k);
    const int r = t.blocks()[0];
    const int s = t.blocks()[1];
    const int beta = std::min(k, s);
    MultVector out;
    for (int j = 0; j <= beta; ++j)
        out += cg_convolve(principal_piece(r, k - j, opts), principal_piece(s, j, opts));
    return out;
}

MultVector fundamental_branching(const SubalgebraType& t, int k, const FundamentalOptions& opts) {
    check_k(t, k);
    if (t.n() > opts.max_rank) {
        auto forms = closed_forms(t, k, opts);
        if (forms.empty())
            throw BudgetExceeded("no closed form for " + t.to_string() + ", k=" + std::to_string(k) +
                                 " and n exceeds the enumeration guard " + std::to_string(opts.max_rank));
        return std::move(forms.front().second);
    }
    MultVector result = mult_from_multiset(lambda_k_multiset(t, k, opts.max_rank));
    if (opts.verify) {
        for (const auto& [rule, m] : closed_forms(t, k, opts))
            expect_equal(result, m, t, k, rule);
    }
    return result;
}

} // namespace branchkit
