// branchkit: restrict irreducible sl_n representations to sl2-subalgebras.
//
// Exit codes:
//   0  success
//   1  unexpected failure (including arithmetic overflow)
//   2  invalid input (bad partition, non-dominant weight, malformed flags or cache)
//   3  internal consistency failure (negative multiplicity, oracle mismatch)
//   4  enumeration budget exceeded

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "branchkit/branchkit.hpp"

namespace bk = branchkit;
using nlohmann::json;

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kInvalidInput = 2,
    kInconsistent = 3,
    kBudget = 4,
};

std::vector<int> parse_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            out.push_back(std::stoi(item, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw bk::InvalidInput(std::string("malformed ") + what + " '" + text + "'");
    }
    return out;
}

struct WeightArgs {
    std::string weight;
    std::string partition;
    CLI::Option* weight_opt = nullptr;
    CLI::Option* partition_opt = nullptr;

    void attach(CLI::App* cmd, bool required) {
        weight_opt = cmd->add_option("--weight", weight, "Highest weight in fundamental-weight coordinates, e.g. 2,0,1,0");
        partition_opt = cmd->add_option("--partition", partition, "Highest weight in partition form, e.g. 3,1,1");
        weight_opt->excludes(partition_opt);
        if (required)
            cmd->callback([this] {
                if (weight_opt->count() == 0 && partition_opt->count() == 0)
                    throw CLI::ValidationError("one of --weight or --partition is required");
            });
    }

    bk::DominantWeight resolve(int n) const {
        if (weight_opt->count() > 0)
            return bk::DominantWeight(n, parse_ints(weight, "weight"));
        return bk::partition_to_omega(bk::Partition(parse_ints(partition, "partition")), n);
    }
};

bk::SubalgebraType parse_type(int n, const std::string& text) { return bk::SubalgebraType(n, parse_ints(text, "type")); }

std::vector<bk::SubalgebraType> parse_types(int n, const std::string& text) {
    if (text == "all")
        return bk::subalgebra_types(n);
    std::vector<bk::SubalgebraType> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        out.push_back(parse_type(n, item));
    if (out.empty())
        throw bk::InvalidInput("no subalgebra types given");
    return out;
}

std::optional<std::string> resolve_cache_path(const CLI::Option* opt, const std::string& value) {
    const char* env = std::getenv("BRANCHKIT_CACHE");
    if (opt->count() > 0) {
        if (!value.empty())
            return value;
        if (env && *env)
            return std::string(env);
        throw bk::InvalidInput("--cache given without a path and BRANCHKIT_CACHE is not set");
    }
    if (env && *env)
        return std::string(env);
    return std::nullopt;
}

void print_stats(const bk::BranchingEngine& engine) {
    const auto s = engine.stats();
    std::cerr << "stats: computed=" << s.computed << " memo_hits=" << s.memo_hits << " memo_size=" << engine.memo_size()
              << '\n';
}

int emit_report(const bk::BranchReport& report, bk::OutputFormat format) {
    std::cout << bk::render(report, format);
    if (!report.dimension_ok()) {
        std::cerr << "error: dimension check failed: sum m_j(j+1) = " << report.mults.dimension()
                  << " but dim L(lambda) = " << report.dimension << '\n';
        return kInconsistent;
    }
    return kOk;
}

struct VerifyOutcome {
    bk::Partition lambda;
    bool match = false;
    bk::MultVector recursion;
    bk::MultVector oracle;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"branchkit: branching of sl_n irreducibles to sl2-subalgebras"};
    app.require_subcommand(1);

    int max_rank = bk::kDefaultMaxRank;
    app.add_option("--max-rank", max_rank, "Largest n for which k-subset weight enumeration is run")
        ->capture_default_str();

    // branch
    auto* branch_cmd = app.add_subcommand("branch", "Decompose Res L(lambda) into sl2 irreducibles");
    int branch_n = 0;
    std::string branch_type, branch_format = "pretty", branch_cache, branch_pivot = "largest";
    bool branch_stats = false;
    WeightArgs branch_weight;
    branch_cmd->add_option("--n", branch_n, "Rank: the algebra is sl_n")->required();
    branch_cmd->add_option("--type", branch_type, "Jordan block sizes, e.g. 3,2")->required();
    branch_weight.attach(branch_cmd, true);
    branch_cmd->add_option("--format", branch_format, "pretty|json|csv|latex")->capture_default_str();
    auto* cache_opt = branch_cmd->add_option("--cache", branch_cache, "Persistent memo file (default: $BRANCHKIT_CACHE)")
                          ->expected(0, 1);
    branch_cmd->add_option("--pivot", branch_pivot, "Recursion pivot: largest|smallest")->capture_default_str();
    branch_cmd->add_flag("--stats", branch_stats, "Print memo statistics to stderr");

    // fundamental
    auto* fund_cmd = app.add_subcommand("fundamental", "Decompose Res L(omega_k)");
    int fund_n = 0, fund_k = 0;
    std::string fund_type, fund_format = "pretty";
    bool fund_verify = false;
    fund_cmd->add_option("--n", fund_n, "Rank")->required();
    fund_cmd->add_option("--type", fund_type, "Jordan block sizes")->required();
    fund_cmd->add_option("--k", fund_k, "Which fundamental weight")->required();
    fund_cmd->add_option("--format", fund_format, "pretty|json|csv|latex")->capture_default_str();
    fund_cmd->add_flag("--verify", fund_verify, "Cross-check every applicable closed form");

    // pieri
    auto* pieri_cmd = app.add_subcommand("pieri", "List the Pieri set P(lambda, k)");
    int pieri_n = 0, pieri_k = 0;
    WeightArgs pieri_weight;
    pieri_cmd->add_option("--n", pieri_n, "Rank")->required();
    pieri_weight.attach(pieri_cmd, true);
    pieri_cmd->add_option("--k", pieri_k, "Strip size")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Compare the recursion with the tableau oracle over a grid");
    int verify_n = 0, verify_boxes = 6;
    unsigned verify_jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string verify_types = "all";
    std::uint64_t verify_budget = bk::kDefaultOracleBudget;
    verify_cmd->add_option("--n", verify_n, "Rank")->required();
    verify_cmd->add_option("--max-boxes", verify_boxes, "Largest |lambda| in the grid")->capture_default_str();
    verify_cmd->add_option("--types", verify_types, "'all' or ';'-separated types, e.g. '5;3,2'")->capture_default_str();
    verify_cmd->add_option("--jobs", verify_jobs, "Worker threads")->capture_default_str();
    verify_cmd->add_option("--budget", verify_budget, "Oracle tableau budget per weight")->capture_default_str();

    // table
    auto* table_cmd = app.add_subcommand("table", "Fundamental-representation table for every k");
    int table_n = 0;
    std::string table_type, table_format = "pretty";
    table_cmd->add_option("--n", table_n, "Rank")->required();
    table_cmd->add_option("--type", table_type, "Jordan block sizes")->required();
    table_cmd->add_option("--format", table_format, "pretty|json|csv|latex")->capture_default_str();

    // triple
    auto* triple_cmd = app.add_subcommand("triple", "Export the H, X, Y matrices of the subalgebra as JSON");
    int triple_n = 0;
    std::string triple_type;
    triple_cmd->add_option("--n", triple_n, "Rank")->required();
    triple_cmd->add_option("--type", triple_type, "Jordan block sizes")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }

    const bk::FundamentalOptions fopts{max_rank, false};

    try {
        if (*branch_cmd) {
            const auto format = bk::parse_format(branch_format);
            const auto t = parse_type(branch_n, branch_type);
            const auto lambda = branch_weight.resolve(branch_n);
            if (branch_pivot != "largest" && branch_pivot != "smallest")
                throw bk::InvalidInput("--pivot must be largest or smallest");
            bk::BranchingEngine engine(branch_pivot == "largest" ? bk::PivotRule::largest : bk::PivotRule::smallest,
                                       fopts);
            const auto cache_path = resolve_cache_path(cache_opt, branch_cache);
            if (cache_path)
                bk::load_cache(*cache_path, engine);
            auto mults = engine.branch(t, lambda);
            if (cache_path)
                bk::save_cache(*cache_path, engine);
            if (branch_stats)
                print_stats(engine);
            return emit_report(bk::make_report(t, lambda, std::move(mults)), format);
        }

        if (*fund_cmd) {
            const auto format = bk::parse_format(fund_format);
            const auto t = parse_type(fund_n, fund_type);
            auto opts = fopts;
            opts.verify = fund_verify;
            auto mults = bk::fundamental_branching(t, fund_k, opts);
            return emit_report(bk::make_report(t, bk::DominantWeight::fundamental(fund_n, fund_k), std::move(mults)),
                               format);
        }

        if (*pieri_cmd) {
            const auto lambda = pieri_weight.resolve(pieri_n);
            for (const auto& mu : bk::pieri_set(lambda, pieri_k)) {
                std::string coords;
                for (int a : mu.coeffs())
                    coords += (coords.empty() ? "" : ",") + std::to_string(a);
                std::cout << coords << "  " << mu.to_string() << "  " << bk::omega_to_partition(mu).to_string()
                          << '\n';
            }
            return kOk;
        }

        if (*table_cmd) {
            const auto format = bk::parse_format(table_format);
            const auto t = parse_type(table_n, table_type);
            json rows = json::array();
            if (format == bk::OutputFormat::csv)
                std::cout << "k,j,multiplicity\n";
            for (int k = 1; k < table_n; ++k) {
                const auto m = bk::fundamental_branching(t, k, fopts);
                switch (format) {
                case bk::OutputFormat::pretty:
                    std::cout << "L(w" << k << ")  " << bk::to_plain(m) << '\n';
                    break;
                case bk::OutputFormat::latex:
                    std::cout << "L(\\omega_{" << k << "}) &\\cong " << bk::to_latex(m) << " \\\\\n";
                    break;
                case bk::OutputFormat::csv:
                    for (const auto& [j, c] : m.entries())
                        std::cout << k << ',' << j << ',' << c << '\n';
                    break;
                case bk::OutputFormat::json:
                    rows.push_back(bk::to_json(bk::make_report(t, bk::DominantWeight::fundamental(table_n, k), m)));
                    break;
                }
            }
            if (format == bk::OutputFormat::json)
                std::cout << rows.dump() << '\n';
            return kOk;
        }

        if (*triple_cmd) {
            const auto t = parse_type(triple_n, triple_type);
            const auto triple = bk::build_triple(t);
            json out;
            out["n"] = t.n();
            const auto blocks = t.blocks().parts();
            out["type"] = std::vector<int>(blocks.begin(), blocks.end());
            out["H"] = triple.h.rows();
            out["X"] = triple.x.rows();
            out["Y"] = triple.y.rows();
            out["relations_ok"] = bk::satisfies_sl2_relations(triple);
            std::cout << out.dump() << '\n';
            return out["relations_ok"].get<bool>() ? kOk : kInconsistent;
        }

        if (*verify_cmd) {
            const auto types = parse_types(verify_n, verify_types);
            if (verify_jobs == 0)
                verify_jobs = 1;
            auto grid = bk::partitions_up_to(verify_boxes, verify_n - 1);
            std::sort(grid.begin(), grid.end(), [](const auto& a, const auto& b) { return bk::lex_compare(a, b) < 0; });
            bk::BranchingEngine engine(bk::PivotRule::largest, fopts);
            bool all_ok = true;
            for (const auto& t : types) {
                std::vector<VerifyOutcome> outcomes(grid.size());
                std::atomic<std::size_t> next{0};
                std::exception_ptr failure;
                std::mutex failure_mutex;
                auto worker = [&] {
                    for (std::size_t i = next++; i < grid.size(); i = next++) {
                        try {
                            const auto lambda = bk::partition_to_omega(grid[i], verify_n);
                            auto& o = outcomes[i];
                            o.lambda = grid[i];
                            o.recursion = engine.branch(t, lambda);
                            o.oracle = bk::oracle_branch(t, lambda, verify_budget);
                            o.match = o.recursion == o.oracle;
                        } catch (const bk::BudgetExceeded& e) {
                            const bk::BranchKey key(verify_n, t.blocks(), grid[i]);
                            std::lock_guard lock(failure_mutex);
                            if (!failure)
                                failure = std::make_exception_ptr(bk::BudgetExceeded(key.to_string() + ": " + e.what()));
                            next = grid.size();
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure)
                                failure = std::current_exception();
                            next = grid.size();
                        }
                    }
                };
                std::vector<std::thread> pool;
                const unsigned workers = std::min<unsigned>(verify_jobs, static_cast<unsigned>(grid.size()));
                for (unsigned w = 1; w < workers; ++w)
                    pool.emplace_back(worker);
                worker();
                for (auto& th : pool)
                    th.join();
                if (failure)
                    std::rethrow_exception(failure);

                std::size_t mismatches = 0;
                for (const auto& o : outcomes) {
                    if (o.match)
                        continue;
                    ++mismatches;
                    const bk::BranchKey key(verify_n, t.blocks(), o.lambda);
                    std::cout << "MISMATCH " << key.to_string() << "  recursion " << o.recursion.to_string()
                              << "  oracle " << o.oracle.to_string() << '\n';
                }
                std::cout << "type " << t.to_string() << ": " << grid.size() << " weights, "
                          << (mismatches == 0 ? std::string("OK") : std::to_string(mismatches) + " mismatches")
                          << '\n';
                all_ok = all_ok && mismatches == 0;
            }
            std::cout << (all_ok ? "OK" : "FAILED") << '\n';
            return all_ok ? kOk : kInconsistent;
        }
    } catch (const bk::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const bk::ConsistencyError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        for (const auto& key : e.trace())
            std::cerr << "  at " << key << '\n';
        return kInconsistent;
    } catch (const bk::CorruptMultiset& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInconsistent;
    } catch (const bk::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const bk::CacheError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
