#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "branchkit/branching.hpp"

namespace branchkit {

enum class OutputFormat { pretty, json, csv, latex };

/// Throws InvalidInput on an unknown name.
OutputFormat parse_format(std::string_view name);

/// One computed restriction together with the checks printed alongside it.
struct BranchReport {
    SubalgebraType type;
    DominantWeight lambda;
    MultVector mults;
    /// Weyl dimension of L(lambda).
    BigInt dimension;

    /// Sum of m_j (j+1) equals the Weyl dimension.
    bool dimension_ok() const { return mults.dimension() == dimension; }
};

BranchReport make_report(const SubalgebraType& t, const DominantWeight& lambda, MultVector mults);

/// {"n", "type", "lambda_omega", "lambda_partition", "multiplicities", "dimension", "highest", "lowest"}
nlohmann::json to_json(const BranchReport& r);
nlohmann::json to_json(const MultVector& m);

/// "2F_{2}\oplus F_{6}"
std::string to_latex(const MultVector& m);
/// "F_2 + 2F_4"
std::string to_plain(const MultVector& m);

std::string render(const BranchReport& r, OutputFormat format);

// Cache file: {"version": 1, "entries": {"n|d_1,...|lambda_1,...": {"j": m, ...}}}

inline constexpr int kCacheVersion = 1;

class CacheError : public Error {
public:
    using Error::Error;
};

nlohmann::json cache_to_json(const BranchingEngine& engine);
/// Validates and returns the entries; throws CacheError on any malformed content.
std::vector<std::pair<BranchKey, MultVector>> cache_entries_from_json(const nlohmann::json& doc);

/// Missing file is not an error (returns 0). Returns the number of entries loaded.
std::size_t load_cache(const std::filesystem::path& path, BranchingEngine& engine);
/// Writes atomically (temporary file, then rename).
void save_cache(const std::filesystem::path& path, const BranchingEngine& engine);

} // namespace branchkit
