// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "branchkit/branchkit.hpp"

using namespace branchkit;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    std::size_t checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            detail << what;
        }
    }
};

MultVector mv(std::map<int, Count> m) { return MultVector(m); }

/// Grid shared by criteria 5, 7, 8 and 9.
std::vector<std::pair<SubalgebraType, DominantWeight>> oracle_grid() {
    std::vector<std::pair<SubalgebraType, DominantWeight>> grid;
    for (int n = 3; n <= 5; ++n)
        for (const auto& t : subalgebra_types(n))
            for (const auto& p : partitions_up_to(8, n - 1))
                grid.emplace_back(t, partition_to_omega(p, n));
    for (const auto& t : {SubalgebraType::principal(7), SubalgebraType(7, {4, 3})})
        for (const auto& p : partitions_up_to(4, 6))
            grid.emplace_back(t, partition_to_omega(p, 7));
    return grid;
}

void criterion1(Outcome& o) {
    const auto got = pieri_set(DominantWeight(4, {0, 2, 1}), 2);
    const std::vector<DominantWeight> expected = {DominantWeight(4, {0, 3, 1}), DominantWeight(4, {1, 1, 2}),
                                                  DominantWeight(4, {1, 2, 0}), DominantWeight(4, {0, 1, 1})};
    o.expect(got == expected, "pieri_set(2w2+w3, 2) differs");
}

void criterion2(Outcome& o) {
    const SubalgebraType t(7, {4, 3});
    const auto expected = mv({{0, 1}, {1, 1}, {2, 2}, {3, 2}, {4, 1}, {5, 1}, {6, 1}});
    const auto fb = fundamental_branching(t, 3);
    o.expect(fb == expected, "fundamental_branching([4,3],3) = " + fb.to_string());
    o.expect(branching_two_blocks(t, 3) == expected, "branching_two_blocks([4,3],3) differs");
    o.expect(oracle_branch(t, DominantWeight::fundamental(7, 3)) == expected, "oracle differs");
}

void criterion3(Outcome& o) {
    const auto t = SubalgebraType::principal(5);
    o.expect(fundamental_branching(t, 2) == mv({{2, 1}, {6, 1}}), "fundamental_branching([5],2)");
    o.expect(branch(t, DominantWeight(5, {2, 0, 0, 0})) == mv({{0, 1}, {4, 1}, {8, 1}}), "branch([5],2w1)");
    o.expect(branch(t, DominantWeight(5, {1, 0, 0, 1}))[0] == 0, "m_0(w1+w4)");
    o.expect(branch(t, DominantWeight(5, {2, 0, 1, 0}))[0] == 0, "m_0(2w1+w3)");
}

void criterion4(Outcome& o) {
    const SubalgebraType t(5, {3, 2});
    o.expect(fundamental_branching(t, 1) == mv({{1, 1}, {2, 1}}), "fundamental_branching([3,2],1)");
    o.expect(fundamental_branching(t, 2) == mv({{0, 1}, {1, 1}, {2, 1}, {3, 1}}), "fundamental_branching([3,2],2)");
    o.expect(branch(t, DominantWeight(5, {1, 0, 0, 1}))[1] == 2, "m_1(w1+w4)");
    o.expect(branch(t, DominantWeight(5, {2, 0, 0, 0})) == mv({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}),
             "branch([3,2],2w1)");
    o.expect(branch(t, DominantWeight(5, {2, 0, 1, 0}))[1] == 5, "m_1(2w1+w3)");
}

void criterion5(Outcome& o, BranchingEngine& engine) {
    for (const auto& [t, w] : oracle_grid()) {
        const auto got = engine.branch(t, w);
        const auto want = oracle_branch(t, w);
        o.expect(got == want, "mismatch at " + BranchKey(t, w).to_string() + ": " + got.to_string() + " vs " +
                                  want.to_string());
    }
}

void criterion6(Outcome& o) {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k) {
            const auto t = SubalgebraType::principal(n);
            const auto ref = mult_from_multiset(lambda_k_multiset(t, k));
            const std::string at = " at n=" + std::to_string(n) + ", k=" + std::to_string(k);
            for (int j = 0; j <= k * (n - k) + 1; ++j) {
                o.expect(mult_prop31(n, k, j) == ref[j], "prop31" + at);
                o.expect(mult_cayley_sylvester(n, k, j) == ref[j], "cayley-sylvester" + at);
                if ((k == 2 || k == 3) && n >= k + 1)
                    o.expect(mult_macdonald(n, k, j) == ref[j], "macdonald" + at);
            }
        }
}

void criterion7(Outcome& o, BranchingEngine& engine) {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k)
            o.expect(fundamental_branching(SubalgebraType::principal(n), k) ==
                         fundamental_branching(SubalgebraType::principal(n), n - k),
                     "Hermite reciprocity at n=" + std::to_string(n));

    for (int n = 2; n <= 12; ++n)
        for (int i = 1; i <= n / 2; ++i)
            for (int j = i + 1; j <= n / 2; ++j)
                o.expect(gaussian_binomial(n, i) != gaussian_binomial(n, j), "Gaussian binomials coincide");

    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= 7; ++k) {
            const auto g = gaussian_binomial(n + k, k);
            for (int d = 0; d <= n * k; ++d) {
                o.expect(pi(n, k, d) == pi(k, n, d) && pi(n, k, d) == pi(n, k, n * k - d), "pi symmetry");
                o.expect(g.coefficient(d) == pi(n, k, d), "Gaussian coefficient differs from pi");
            }
        }

    for (const auto& [t, w] : oracle_grid()) {
        const auto lambda = engine.branch(t, w);
        o.expect(lambda.dimension() == dim_irrep(w), "dimension of " + BranchKey(t, w).to_string());
        for (int k = 1; k < t.n(); ++k) {
            BigInt total = 0;
            for (const auto& mu : pieri_set(w, k))
                total += dim_irrep(mu);
            o.expect(total == dim_irrep(w) * binomial(t.n(), k),
                     "Pieri dimension additivity at " + BranchKey(t, w).to_string());
        }
    }
    // every vector the engine ever produced, intermediates included
    for (const auto& [key, m] : engine.snapshot())
        o.expect(m.dimension() == dim_irrep(key.weight()), "memoized dimension of " + key.to_string());
}

void criterion8(Outcome& o, BranchingEngine& engine) {
    for (const auto& [t, w] : oracle_grid()) {
        if (!t.is_principal())
            continue;
        const auto m = engine.branch(t, w);
        o.expect(highest_component(m) == highest_component_principal_formula(w),
                 "highest component at " + BranchKey(t, w).to_string());
        o.expect(lowest_component(m) < t.n(), "lowest component at " + BranchKey(t, w).to_string());
    }
}

void criterion9(Outcome& o, BranchingEngine& engine) {
    BranchingEngine smallest(PivotRule::smallest);
    for (const auto& [t, w] : oracle_grid())
        o.expect(engine.branch(t, w) == smallest.branch(t, w), "pivot rules differ at " + BranchKey(t, w).to_string());
}

void criterion10(Outcome& o) {
    for (int n = 2; n <= 8; ++n)
        for (const auto& t : subalgebra_types(n)) {
            const auto tr = build_triple(t);
            o.expect(commutator(tr.h, tr.x) == 2 * tr.x && commutator(tr.h, tr.y) == -2 * tr.y &&
                         commutator(tr.x, tr.y) == tr.h,
                     "brackets fail for " + t.to_string());
        }
}

} // namespace

int main() {
    BranchingEngine engine;
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"Pieri set of 2w2+w3, k=2 in sl_4", criterion1},
        {"[4,3] in sl_7, omega_3: multiset, two-block form and oracle", criterion2},
        {"principal sl_5 worked example", criterion3},
        {"type [3,2] in sl_5 worked example", criterion4},
        {"oracle equivalence sweep", [&](Outcome& o) { criterion5(o, engine); }},
        {"principal closed forms agree with the weight multiset, n <= 10", criterion6},
        {"structural identities", [&](Outcome& o) { criterion7(o, engine); }},
        {"principal highest and lowest components", [&](Outcome& o) { criterion8(o, engine); }},
        {"pivot independence", [&](Outcome& o) { criterion9(o, engine); }},
        {"sl2 triple brackets, n <= 8", criterion10},
    };

    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << (o.detail.tellp() > 0 ? "; " : "") << "exception: " << e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << index << ". " << name << " (" << o.checks << " checks, " << ms
                  << " ms)";
        if (!o.ok) {
            std::cout << ": " << o.detail.str();
            ++failures;
        }
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "acceptance: all criteria pass" : "acceptance: failures present") << '\n';
    return failures == 0 ? 0 : 1;
}
