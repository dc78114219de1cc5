#include "branchkit/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "branchkit/errors.hpp"

namespace branchkit {

using nlohmann::json;

OutputFormat parse_format(std::string_view name) {
    if (name == "pretty")
        return OutputFormat::pretty;
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "latex")
        return OutputFormat::latex;
    throw InvalidInput("unknown format '" + std::string(name) + "' (pretty|json|csv|latex)");
}

BranchReport make_report(const SubalgebraType& t, const DominantWeight& lambda, MultVector mults) {
    return BranchReport{t, lambda, std::move(mults), dim_irrep(lambda)};
}

json to_json(const MultVector& m) {
    json out = json::object();
    for (const auto& [j, c] : m.entries())
        out[std::to_string(j)] = c;
    return out;
}

json to_json(const BranchReport& r) {
    const auto blocks = r.type.blocks().parts();
    const auto omega = r.lambda.coeffs();
    const Partition lambda_part = omega_to_partition(r.lambda);
    const auto part = lambda_part.parts();
    json out;
    out["n"] = r.type.n();
    out["type"] = std::vector<int>(blocks.begin(), blocks.end());
    out["lambda_omega"] = std::vector<int>(omega.begin(), omega.end());
    out["lambda_partition"] = std::vector<int>(part.begin(), part.end());
    out["multiplicities"] = to_json(r.mults);
    out["dimension"] = r.dimension.str();
    out["highest"] = r.mults.highest();
    out["lowest"] = r.mults.lowest();
    return out;
}

std::string to_latex(const MultVector& m) {
    std::string out;
    for (const auto& [j, c] : m.entries()) {
        if (!out.empty())
            out += "\\oplus ";
        if (c != 1)
            out += std::to_string(c);
        out += "F_{" + std::to_string(j) + "}";
    }
    return out;
}

std::string to_plain(const MultVector& m) {
    std::string out;
    for (const auto& [j, c] : m.entries()) {
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += std::to_string(c);
        out += "F_" + std::to_string(j);
    }
    return out;
}

std::string render(const BranchReport& r, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
    case OutputFormat::json: os << to_json(r).dump() << '\n'; break;
    case OutputFormat::csv:
        os << "j,multiplicity\n";
        for (const auto& [j, c] : r.mults.entries())
            os << j << ',' << c << '\n';
        break;
    case OutputFormat::latex: os << to_latex(r.mults) << '\n'; break;
    case OutputFormat::pretty: {
        os << "sl_" << r.type.n() << "  type " << r.type.to_string() << "  lambda = " << r.lambda.to_string() << " "
           << omega_to_partition(r.lambda).to_string() << '\n';
        os << std::setw(6) << "j" << std::setw(14) << "multiplicity" << '\n';
        for (const auto& [j, c] : r.mults.entries())
            os << std::setw(6) << j << std::setw(14) << c << '\n';
        os << "dimension  " << r.dimension << (r.dimension_ok() ? "  (check ok)" : "  (CHECK FAILED)") << '\n';
        os << "highest    " << r.mults.highest() << '\n';
        os << "lowest     " << r.mults.lowest() << '\n';
        os << "summands   " << r.mults.summands() << '\n';
        break;
    }
    }
    return os.str();
}

json cache_to_json(const BranchingEngine& engine) {
    json entries = json::object();
    for (const auto& [key, mults] : engine.snapshot())
        entries[key.to_string()] = to_json(mults);
    return json{{"version", kCacheVersion}, {"entries", std::move(entries)}};
}

std::vector<std::pair<BranchKey, MultVector>> cache_entries_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("version") || !doc.contains("entries"))
        throw CacheError("cache file lacks 'version' or 'entries'");
    if (!doc["version"].is_number_integer() || doc["version"].get<int>() != kCacheVersion)
        throw CacheError("unsupported cache version");
    const json& entries = doc["entries"];
    if (!entries.is_object())
        throw CacheError("cache 'entries' is not an object");

    std::vector<std::pair<BranchKey, MultVector>> out;
    out.reserve(entries.size());
    for (const auto& [key_text, mults_json] : entries.items()) {
        BranchKey key;
        try {
            key = BranchKey::parse(key_text);
        } catch (const InvalidInput& e) {
            throw CacheError(std::string("bad cache key: ") + e.what());
        }
        if (!mults_json.is_object())
            throw CacheError("cache entry " + key_text + " is not an object");
        MultVector m;
        for (const auto& [j_text, value] : mults_json.items()) {
            std::size_t used = 0;
            int j = -1;
            try {
                j = std::stoi(j_text, &used);
            } catch (const std::exception&) {
            }
            if (used != j_text.size() || j < 0 || std::to_string(j) != j_text)
                throw CacheError("cache entry " + key_text + " has a malformed index '" + j_text + "'");
            if (!value.is_number_integer() || value.get<Count>() <= 0)
                throw CacheError("cache entry " + key_text + " has a non-positive multiplicity");
            m.add(j, value.get<Count>());
        }
        if (m.dimension() != dim_irrep(key.weight()))
            throw CacheError("cache entry " + key_text + " fails the dimension check");
        out.emplace_back(std::move(key), std::move(m));
    }
    return out;
}

std::size_t load_cache(const std::filesystem::path& path, BranchingEngine& engine) {
    std::ifstream in(path);
    if (!in)
        return 0;
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw CacheError("cache file " + path.string() + " is not valid JSON: " + e.what());
    }
    auto entries = cache_entries_from_json(doc);
    engine.import_entries(entries);
    return entries.size();
}

void save_cache(const std::filesystem::path& path, const BranchingEngine& engine) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw CacheError("cannot write cache file " + tmp.string());
        out << cache_to_json(engine).dump(1) << '\n';
        if (!out)
            throw CacheError("failed writing cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace branchkit
